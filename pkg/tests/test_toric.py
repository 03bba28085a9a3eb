import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hodgecover.algebra import determinant
from hodgecover.toric import (
    ExponentData,
    ToricError,
    local_abelian_model,
    reduce_exponents,
    saturation_hilbert_basis,
)


def test_reduction_examples():
    r = reduce_exponents(ExponentData((2, 2), 4))
    assert (r.components, r.reduced) == (2, ExponentData((1, 1), 2))
    r = reduce_exponents(ExponentData((1, 0, 1), 3))
    assert (r.reduced, r.smooth_factors) == (ExponentData((1, 1), 3), 1)
    assert reduce_exponents(ExponentData((1, 1), 2)).components == 1


def test_zero_degree_rejected():
    with pytest.raises(ToricError):
        ExponentData((1,), 0)


def test_node_is_already_normal():
    sg = saturation_hilbert_basis(ExponentData((1, 1), 2))
    assert sg.saturated and set(sg.hilbert_basis) == {(2, 0), (0, 2), (1, 1)}


def test_cusp_normalizes_to_a_line():
    sg = saturation_hilbert_basis(ExponentData((2,), 3))
    assert not sg.saturated and sg.hilbert_basis == ((1,),) and sg.smooth


@pytest.mark.parametrize("d", [1, 2, 5, 12])
def test_graph_is_smooth(d):
    assert saturation_hilbert_basis(ExponentData((1,), d)).hilbert_basis == ((1,),)


def test_scale_refused():
    with pytest.raises(ToricError, match="d <= 12"):
        saturation_hilbert_basis(ExponentData((1,), 13))
    with pytest.raises(ToricError, match="n <= 4"):
        saturation_hilbert_basis(ExponentData((1,) * 5, 3))


def test_requires_reduced_input():
    with pytest.raises(ToricError):
        saturation_hilbert_basis(ExponentData((2, 2), 4))
    with pytest.raises(ToricError):
        saturation_hilbert_basis(ExponentData((1, 0), 3))


reduced_data = st.builds(
    lambda a, d: reduce_exponents(ExponentData(tuple(a), d)).reduced,
    st.lists(st.integers(1, 7), min_size=1, max_size=3),
    st.integers(1, 7),
).filter(lambda e: e.exponents)


@settings(max_examples=60, deadline=None)
@given(reduced_data)
def test_hilbert_basis_matches_brute_force(e):
    assert set(saturation_hilbert_basis(e).hilbert_basis) == oracles.hilbert_basis_brute(e.exponents, e.degree)


@settings(max_examples=60, deadline=None)
@given(reduced_data)
def test_hilbert_basis_is_minimal(e):
    basis = set(saturation_hilbert_basis(e).hilbert_basis)
    for u, v in itertools.combinations_with_replacement(basis, 2):
        assert tuple(a + b for a, b in zip(u, v)) not in basis


@pytest.mark.parametrize("d", range(1, 13))
@pytest.mark.parametrize("n", range(1, 5))
def test_all_ones_saturated(d, n):
    assert saturation_hilbert_basis(ExponentData((1,) * n, d)).saturated


def test_abelian_models():
    assert all(d == 1 for d, _ in local_abelian_model([[1, 0], [0, 1]]).factors)
    model = local_abelian_model([[3, 0], [0, 3]])
    assert model.factors == ((3, (1, 0)), (3, (0, 1)))
    model = local_abelian_model([[2, 1], [0, 2]])
    assert [d for d, _ in model.nontrivial_factors] == [4] and model.index == 4
    with pytest.raises(ToricError):
        local_abelian_model([[1, 2], [2, 4]])


square = st.integers(1, 3).flatmap(
    lambda k: st.lists(st.lists(st.integers(-6, 6), min_size=k, max_size=k), min_size=k, max_size=k)
).filter(lambda m: determinant(tuple(map(tuple, m))) != 0)


@settings(max_examples=100)
@given(square)
def test_index_is_determinant(m):
    assert local_abelian_model(m).index == abs(determinant(tuple(map(tuple, m))))
