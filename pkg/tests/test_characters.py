import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hodgecover.algebra import Cyclotomic
from hodgecover.characters import (
    CharTableError,
    builtin_table,
    characters_abelian,
    galois_orbits,
    load_char_table,
    multiplicities_from_dimensions,
    phi_invariant,
    quaternion_table,
    rational_span,
    symmetric_group_table,
)
from hodgecover.cover import AbelianGroup

GROUPS = [(2,), (3,), (4,), (2, 2), (5,), (6,), (8,), (2, 4), (2, 2, 2), (9,), (3, 3), (10,), (12,), (2, 6)]


def cyclic(d):
    return characters_abelian(AbelianGroup.cyclic(d))


def test_small_abelian_values():
    assert [row[1] for row in cyclic(2).values] == [Cyclotomic.rational(1), Cyclotomic.rational(-1)]
    assert cyclic(3).values[1][1] == Cyclotomic.zeta(3)
    assert all(v.is_rational() for row in characters_abelian(AbelianGroup((2, 2))).values for v in row)


@pytest.mark.parametrize(
    "d,orbits",
    [(5, [[0], [1, 2, 3, 4]]), (4, [[0], [1, 3], [2]]), (6, [[0], [1, 5], [2, 4], [3]])],
)
def test_cyclic_orbits(d, orbits):
    assert [[c[0] for c in o.members] for o in galois_orbits(cyclic(d))] == orbits


@pytest.mark.parametrize("d", range(1, 13))
def test_phi_of_cyclic_characters(d):
    table = cyclic(d)
    assert [phi_invariant((i,), table) for i in range(d)] == [oracles.euler_phi(d // math.gcd(i, d)) for i in range(d)]


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetric_groups_are_rational(n):
    table = symmetric_group_table(n)
    assert sum(d * d for d in table.degrees) == math.factorial(n)
    assert {phi_invariant(c, table) for c in table.labels} == {1}


def test_s4_degrees():
    assert sorted(symmetric_group_table(4).degrees) == [1, 1, 2, 3, 3]


def test_quaternion():
    q8 = quaternion_table()
    assert phi_invariant("rho", q8) == 2
    assert rational_span({"rho": 1}, q8) == 4


def test_worked_spans():
    z3 = cyclic(3)
    assert rational_span({(1,): 1}, z3) == 2
    assert rational_span({(1,): 2, (2,): 1}, z3) == 4


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_span_matches_brute_force(orders, data):
    group = AbelianGroup(orders)
    mult = {c: data.draw(st.integers(0, 2)) for c in group.elements()}
    assert rational_span(mult, characters_abelian(group)) == oracles.rational_span_brute(mult, orders)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_span_monotone_and_zero(orders, data):
    group = AbelianGroup(orders)
    table = characters_abelian(group)
    small = {c: data.draw(st.integers(0, 3)) for c in group.elements()}
    big = {c: n + data.draw(st.integers(0, 2)) for c, n in small.items()}
    assert rational_span(small, table) <= rational_span(big, table)
    assert (rational_span(small, table) == 0) == (not any(small.values()))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_span_invariant_under_galois_relabelling(orders, data):
    group = AbelianGroup(orders)
    table = characters_abelian(group)
    e = group.exponent
    t = data.draw(st.sampled_from([u for u in range(1, e + 1) if math.gcd(u, e) == 1]))
    mult = {c: data.draw(st.integers(0, 3)) for c in group.elements()}
    moved = {group.scale(t, c): n for c, n in mult.items()}
    conj = {group.scale(-1, c): n for c, n in mult.items()}
    both = {c: mult[c] + conj[c] for c in mult}
    assert rational_span(mult, table) == rational_span(moved, table)
    assert rational_span(both, table) == rational_span({group.scale(t, c): n for c, n in both.items()}, table)


def test_load_round_trip_and_rejection(tmp_path):
    path = tmp_path / "q8.json"
    path.write_text(json.dumps(quaternion_table().to_json()))
    assert load_char_table(path).degrees == (1, 1, 1, 1, 2)
    broken = quaternion_table().to_json()
    broken["characters"][4]["values"][1] = "2"
    with pytest.raises(CharTableError, match="orthogonality"):
        load_char_table(broken)


def test_cyclotomic_values_in_json():
    doc = cyclic(4).to_json()
    assert load_char_table(doc).conductor((1,)) == 4


def test_division_by_degree_must_be_exact():
    q8 = quaternion_table()
    assert multiplicities_from_dimensions({"rho": 4}, q8) == {"rho": 2}
    with pytest.raises(CharTableError):
        multiplicities_from_dimensions({"rho": 3}, q8)


def test_builtin_names():
    assert builtin_table("S3").order == 6
    assert builtin_table("Z/2xZ/6").order == 12
    with pytest.raises(CharTableError):
        builtin_table("A5")
