from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hodgecover.arrangement import generic_arrangement
from hodgecover.cover import (
    AbelianGroup,
    CoverError,
    InvariantViolation,
    abelian_cover,
    cyclic_cover,
    factor_twists,
    log_support,
    product_cover,
    residues,
    twist_integer,
    validate_cover,
)


def test_cyclic_twists_of_five_lines():
    spec = validate_cover(cyclic_cover(generic_arrangement(2, 5), 5))
    assert [twist_integer(spec, chi) for chi in spec.characters()] == [0, 1, 2, 3, 4]
    assert residues(spec, spec.characters()[2]) == (Fraction(2, 5),) * 5


def test_relation_failure():
    with pytest.raises(CoverError, match="not a cover of the stated base"):
        validate_cover(cyclic_cover(generic_arrangement(2, 3), 4))


def test_disconnected_cover():
    spec = cyclic_cover(generic_arrangement(2, 3), 3, [0, 0, 0])
    with pytest.raises(CoverError, match="disconnected"):
        validate_cover(spec)


def test_monodromy_count_checked():
    with pytest.raises(CoverError):
        cyclic_cover(generic_arrangement(2, 3), 3, [1, 1])


def test_default_monodromy_is_multiplicity():
    spec = cyclic_cover(generic_arrangement(2, 3, [1, 2, 3]), 3)
    assert spec.monodromy == ((1,), (2,), (0,))


def test_log_support_skips_unramified():
    spec = validate_cover(cyclic_cover(generic_arrangement(2, 4), 4, [1, 1, 2, 0]))
    assert log_support(spec, spec.characters()[2]) == frozenset({0, 1})


def test_abelian_cover_twists_are_integral():
    spec = validate_cover(
        abelian_cover(generic_arrangement(2, 6), [2, 2], [[1, 0], [0, 1], [1, 1], [1, 0], [0, 1], [1, 1]])
    )
    assert sorted(twist_integer(spec, chi) for chi in spec.characters()) == [0, 2, 2, 2]


def test_non_integral_twist_is_invariant_violation():
    spec = cyclic_cover(generic_arrangement(2, 3), 4, [1, 1, 1])
    with pytest.raises(InvariantViolation):
        twist_integer(spec, spec.characters()[1])


def test_product_cover_twists():
    spec = validate_cover(product_cover([3, 3], 3))
    assert factor_twists(spec, spec.characters()[1]) == (1, 1)
    with pytest.raises(CoverError):
        twist_integer(spec, spec.characters()[1])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_character_phase_is_additive(orders):
    group = AbelianGroup(tuple(orders))
    elems = group.elements()
    for chi in group.characters()[:4]:
        for g in elems[:4]:
            for h in elems[:4]:
                total = chi.phase(g) + chi.phase(h)
                assert chi.phase(group.add(g, h)) == total - int(total)


def test_subgroup_order():
    g = AbelianGroup((2, 6))
    assert g.subgroup_order([(0, 2)]) == 3
    assert g.subgroup_order([(1, 0), (0, 3)]) == 4
    assert g.subgroup_order([]) == 1
