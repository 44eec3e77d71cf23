import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multihilb.errors import DomainError, MalformedInputError
from multihilb.geometry import PointSet
from multihilb.hilbert import hilbert_table, hilbert_value
from multihilb.lifting import (artinian_hilbert, eval_lifted_monomial, generators_vanish,
                               lift_staircase, lifted_hilbert_expected)
from multihilb.staircase import Staircase, complement, random_artinian_staircase

TRIANGLE = Staircase.of(2, [(2, 0), (1, 1), (0, 2)])


def pts(dims, raw):
    return PointSet.from_points(dims, raw)


def test_lift_examples():
    assert lift_staircase(TRIANGLE) == pts((1, 1), [[(1, 0), (1, 0)], [(1, 1), (1, 0)], [(1, 0), (1, 1)]])
    assert lift_staircase(Staircase.of(1, [(3,)])) == pts((1,), [[(1, 0)], [(1, 1)], [(1, 2)]])
    assert lift_staircase(Staircase.of(2, [(1, 0), (0, 1)])) == pts((1, 1), [[(1, 0), (1, 0)]])


def test_lift_rejects():
    with pytest.raises(DomainError):
        lift_staircase(Staircase.of(2, [(1, 0)]))
    with pytest.raises(DomainError):
        lift_staircase(Staircase.of(2, [(0, 0)]))
    with pytest.raises(MalformedInputError):
        lift_staircase(TRIANGLE, dims=(2, 1))


def test_eval_examples():
    assert eval_lifted_monomial((2,), (1,)) == 0
    assert eval_lifted_monomial((2,), (3,)) == 6
    assert eval_lifted_monomial((1, 1), (0, 5)) == 0
    assert eval_lifted_monomial(((1, 2), (1,)), ((3, 4), (2,))) == 3 * 12 * 2
    with pytest.raises(MalformedInputError):
        eval_lifted_monomial((1, 1), (1,))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_eval_vanishes_exactly_below(k):
    # literal product of the linear forms x_j - (l-1) x_0 at [1:b_j]
    for a, b in itertools.product(itertools.product(range(4), repeat=k), repeat=2):
        literal = 1
        for aj, bj in zip(a, b):
            for l in range(1, aj + 1):
                literal *= Fraction(bj) - (l - 1)
        assert eval_lifted_monomial(a, b) == literal
        assert (literal == 0) == any(bj < aj for aj, bj in zip(a, b))


def test_expected_tables():
    assert lifted_hilbert_expected(TRIANGLE, (2, 2)).tolist() == [[1, 2, 2], [2, 3, 3], [2, 3, 3]]
    assert hilbert_table(lift_staircase(TRIANGLE)).values.tolist() == [[1, 2, 2], [2, 3, 3], [2, 3, 3]]
    assert not (lifted_hilbert_expected(Staircase.of(2, [(1, 0), (0, 1)]), (3, 2)) - 1).any()
    assert lifted_hilbert_expected(Staircase.of(1, [(3,)]), (3,)).tolist() == [1, 2, 3, 3]
    with pytest.raises(DomainError):
        lifted_hilbert_expected(Staircase.of(2, [(1, 0)]), (2, 2))


@given(st.integers(1, 3), st.integers(1, 10), st.integers(0, 10**6))
def test_generators_vanish_and_cells_survive(k, n, seed):
    s = random_artinian_staircase(k, n, seed)
    assert generators_vanish(s)
    cells = complement(s).cells
    # a standard monomial is nonzero at its own point
    assert all(eval_lifted_monomial(c, c) != 0 for c in cells)
    assert len(lift_staircase(s)) == len(cells)


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 3), st.integers(1, 9), st.integers(0, 10**6))
def test_oracle_matches_partial_sums(k, n, seed):
    s = random_artinian_staircase(k, n, seed)
    x = lift_staircase(s)
    tbl = hilbert_table(x)
    assert np.array_equal(tbl.values, lifted_hilbert_expected(s, tbl.window))


@pytest.mark.parametrize("seed", range(6))
def test_grouped_variables(seed):
    # three variables grouped as P^2 x P^1
    s = random_artinian_staircase(3, 8, seed)
    dims = (2, 1)
    x = lift_staircase(s, dims)
    assert x.dims == dims and len(x) == len(complement(s).cells)
    window = (4, 4)
    expected = lifted_hilbert_expected(s, window, dims)
    for d in itertools.product(range(5), range(5)):
        assert hilbert_value(x, d) == expected[d]
    assert artinian_hilbert(s, dims, window).sum() == len(x)
