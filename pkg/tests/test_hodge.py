import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hodgecover.arrangement import Arrangement, generic_arrangement
from hodgecover.cover import abelian_cover, cyclic_cover, product_cover, validate_cover
from hodgecover.hodge import (
    CohomologyClassPn,
    HodgeUnavailable,
    chi_log,
    chi_omega_pn,
    condition_b_check,
    eigen_hodge,
    exact_hodge_failures,
    hodge_product_p1,
    hodge_via_hrr,
    hrr_euler,
    hrr_table,
    todd_pn,
)


def generic(n, d):
    return cyclic_cover(generic_arrangement(n, d), d)


@pytest.mark.parametrize("n,k,t,value", [(2, 1, 0, -1), (2, 1, -3, 8), (2, 0, -3, 1), (1, 1, 0, -1), (3, 0, 1, 4)])
def test_chi_omega_values(n, k, t, value):
    assert chi_omega_pn(n, k, t) == value


@settings(max_examples=150)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(-8, 8))
def test_chi_omega_matches_euler_sequence(n, k, t):
    assert chi_omega_pn(n, k, t) == oracles.chi_twisted_forms(n, k, t)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(-6, 6))
def test_hrr_matches_generating_function(m, p, t):
    assert hrr_euler(m, p, t) == chi_omega_pn(m, p, t)


def test_chi_log_values():
    assert chi_log(2, 1, 5, -2) == -2
    assert chi_log(2, 2, 5, -1) == 3


def test_todd_class_integrates_to_one():
    for m in range(6):
        assert todd_pn(m).integrate() == 1


def test_cohomology_ring_truncates():
    h = CohomologyClassPn.hyperplane(2)
    assert (h**3).coeffs == (0, 0, 0)
    assert (h.exp() * (h * -1).exp()) == CohomologyClassPn.constant(2, 1)


def test_five_lines_worked_table():
    table = eigen_hodge(generic(2, 5))
    for i in range(1, 5):
        chi = (i,)
        assert table.h(0, 2, chi) == (i - 1) * (i - 2) // 2
        assert table.h(2, 0, chi) == (i - 3) * (i - 4) // 2
        assert table.h(1, 1, chi) == (i - 1) * (4 - i)
    assert table.entries[(0,)] == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_four_lines_worked_table():
    table = eigen_hodge(generic(2, 4))
    assert [table.h(0, 2, (i,)) for i in (1, 2, 3)] == [0, 0, 1]
    assert [table.h(2, 0, (i,)) for i in (1, 2, 3)] == [1, 0, 0]
    assert table.h(1, 1, (2,)) == 1


@pytest.mark.parametrize("n,d", [(1, 3), (2, 4), (2, 7), (3, 6), (4, 8)])
def test_generic_tables_match_oracle(n, d):
    table = eigen_hodge(generic(n, d))
    for i in range(1, d):
        assert [table.h(k, n - k, (i,)) for k in range(n + 1)] == oracles.hodge_cyclic_generic(n, d, i)


def test_six_lines_antidiagonal():
    assert eigen_hodge(generic(2, 6)).antidiagonal_totals() == [10, 10, 10]


def test_genus_one_fixture():
    spec = cyclic_cover(generic_arrangement(1, 4), 2)
    table = eigen_hodge(spec)
    assert table.h(1, 0, (1,)) == 1 and table.h(0, 1, (1,)) == 1
    assert hodge_via_hrr(spec, spec.characters()[1], 1) == 1


@pytest.mark.parametrize("d,mono", [(3, [1, 1, 1, 1, 2]), (4, [1, 3, 1, 3]), (6, [1, 2, 3, 1, 2, 3])])
def test_curve_genus_matches_riemann_hurwitz(d, mono):
    spec = validate_cover(cyclic_cover(generic_arrangement(1, len(mono)), d, mono))
    genus = eigen_hodge(spec).nontrivial_dimension(1) // 2
    assert 2 - 2 * genus == oracles.riemann_hurwitz_euler(d, mono)


@pytest.mark.parametrize(
    "n,k,orders,mono",
    [
        (2, 4, [2, 2], [[1, 0], [0, 1], [1, 1], [0, 0]]),
        (2, 6, [2, 2], [[1, 0], [0, 1], [1, 1], [1, 0], [0, 1], [1, 1]]),
        (3, 6, [3, 3], [[1, 0], [2, 0], [0, 1], [0, 2], [1, 1], [2, 2]]),
        (2, 5, [6], [[1], [1], [1], [3], [0]]),
    ],
)
def test_abelian_routes_agree(n, k, orders, mono):
    spec = validate_cover(abelian_cover(generic_arrangement(n, k), orders, mono))
    assert eigen_hodge(spec).same_numbers(hrr_table(spec))


@pytest.mark.parametrize("n,d", [(1, 4), (2, 3), (2, 5), (3, 4), (3, 5), (4, 3)])
def test_product_closed_form_matches_kunneth(n, d):
    spec = product_cover([d] * n, d)
    table = eigen_hodge(spec)
    assert table.same_numbers(hodge_product_p1(n, d))
    assert table.same_numbers(hrr_table(spec))
    assert table.nontrivial_dimension() == (d - 1) * (d - 2) ** n


def test_concurrent_lines_unavailable():
    arr = Arrangement.from_json(
        {"dim": 2, "hyperplanes": [{"normal": ["1", "0", "0"]}, {"normal": ["0", "1", "0"]}, {"normal": ["1", "1", "0"]}]}
    )
    spec = cyclic_cover(arr, 3)
    assert exact_hodge_failures(spec)
    with pytest.raises(HodgeUnavailable, match="only Euler characteristics"):
        eigen_hodge(spec)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(2, 9))
def test_hodge_symmetry_under_conjugation(n, d):
    table = eigen_hodge(generic(n, d))
    for chi in table.characters:
        bar = table.conjugates[chi]
        for p in range(n + 1):
            for q in range(n + 1):
                assert table.h(p, q, chi) == table.h(q, p, bar) >= 0
    assert table.concentrated()


@pytest.mark.parametrize("d,lhs", [(5, 12), (4, 2), (7, 60)])
def test_condition_b_values(d, lhs):
    b = condition_b_check(generic(2, d))
    assert (b.lhs, b.rhs) == (lhs, 3 * math.comb(d - 1, 3))
