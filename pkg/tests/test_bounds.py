import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hodgecover.arrangement import Arrangement, generic_arrangement
from hodgecover.bounds import (
    HypothesisFailure,
    default_level,
    dim_h_nt,
    euler_cover,
    hodge_cycle_bound,
    theorem_report,
)
from hodgecover.characters import characters_abelian
from hodgecover.cover import abelian_cover, cyclic_cover, product_cover, validate_cover
from hodgecover.hodge import eigen_hodge

CONCURRENT = Arrangement.from_json(
    {"dim": 2, "hyperplanes": [{"normal": ["1", "0", "0"]}, {"normal": ["0", "1", "0"]}, {"normal": ["1", "1", "0"]}]}
)


def generic(n, d):
    return cyclic_cover(generic_arrangement(n, d), d)


def bound(spec, i, k):
    return hodge_cycle_bound(eigen_hodge(spec), characters_abelian(spec.group), i, k)


def test_euler_worked_values():
    assert euler_cover(generic(2, 3)) == 3
    assert euler_cover(generic(2, 4)) == 6
    assert euler_cover(cyclic_cover(generic_arrangement(2, 3), 1)) == 3


@pytest.mark.parametrize("d,mono", [(2, [1, 1, 1, 1]), (4, [1, 2, 1]), (6, [2, 3, 1]), (5, [1, 1, 1, 1, 1])])
def test_euler_of_curves_matches_riemann_hurwitz(d, mono):
    spec = validate_cover(cyclic_cover(generic_arrangement(1, len(mono)), d, mono))
    assert euler_cover(spec) == oracles.riemann_hurwitz_euler(d, mono)


def test_dim_h_nt_values():
    assert dim_h_nt(generic(2, 4)) == 3
    assert dim_h_nt(generic(2, 3)) == 0


def test_dim_h_nt_refuses_without_weak_lefschetz():
    with pytest.raises(HypothesisFailure):
        dim_h_nt(cyclic_cover(CONCURRENT, 3))


@pytest.mark.parametrize("d", range(2, 9))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_euler_route_matches_hodge_route(n, d):
    spec = generic(n, d)
    assert dim_h_nt(spec) == eigen_hodge(spec).nontrivial_dimension()


def test_euler_route_on_abelian_and_product_covers():
    spec = validate_cover(
        abelian_cover(generic_arrangement(2, 6), [2, 2], [[1, 0], [0, 1], [1, 1], [1, 0], [0, 1], [1, 1]])
    )
    assert dim_h_nt(spec) == eigen_hodge(spec).nontrivial_dimension()
    for n, d in [(2, 4), (3, 5)]:
        p = product_cover([d] * n, d)
        assert dim_h_nt(p) == eigen_hodge(p).nontrivial_dimension() == (d - 1) * (d - 2) ** n


def test_bound_worked_examples():
    five = bound(generic(2, 5), 2, 0)
    assert (five.dim_nt, five.sigma, five.bound) == (12, 12, 0)
    assert five.contributions[0]["multiplicities"] == [3, 1, 1, 3]
    assert five.per_piece_value == -8
    four = bound(generic(2, 4), 2, 0)
    assert (four.dim_nt, four.sigma, four.bound) == (3, 2, 1)


def test_bound_rejects_overlapping_band():
    with pytest.raises(ValueError, match="overlaps its conjugate"):
        bound(generic(2, 4), 2, 1)


def test_zero_table_gives_zero():
    report = bound(generic(2, 3), 2, 0)
    assert report.dim_nt == 0 and report.bound == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 10), st.integers(2, 5))
def test_bound_is_monotone_in_level(d, n):
    spec = generic(n, d)
    values = [bound(spec, n, k).bound for k in range(0, (n + 1) // 2)]
    assert values == sorted(values, reverse=True)
    assert all(0 <= v <= dim_h_nt(spec) for v in values)


@pytest.mark.parametrize("d", [2, 3, 5, 7, 11, 13])
def test_prime_degree_lines_have_zero_bound(d):
    assert bound(generic(2, d), 2, 0).bound == 0


def test_default_level():
    assert [default_level(i) for i in range(1, 7)] == [0, 0, 0, 1, 1, 2]


def test_theorem_reports():
    five = theorem_report(generic(2, 5))
    assert five.beilinson_hodge.licensed and five.ghc.licensed
    assert "condition (b) equality" in five.ghc.reason
    four = theorem_report(generic(2, 4))
    assert four.beilinson_hodge.licensed and not four.ghc.licensed
    assert four.bound.bound == 1
    conc = theorem_report(cyclic_cover(CONCURRENT, 3))
    assert not conc.beilinson_hodge.licensed and conc.hypotheses_failed
    assert conc.cover_hypotheses.offending_incidences == (3,)


def test_condition_b_dichotomy_small():
    from hodgecover.algebra import is_prime

    for d in range(2, 10):
        for n in (1, 2, 3):
            report = theorem_report(generic(n, d))
            if is_prime(d):
                assert report.condition_b.equality
            elif math.comb(d - 1, n + 1) > 0:
                assert not report.condition_b.holds
