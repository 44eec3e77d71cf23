import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from multihilb.errors import InconsistencyError, MalformedInputError
from multihilb.geometry import PointSet, gen_depth_example, gen_grid, gen_random
from multihilb.hilbert import (HilbertTable, axis_sequence, dim_component, evaluation_matrix,
                               extend, format_table, hilbert_table, hilbert_value, monomials,
                               normalized_evaluation_rank, parse_table)

from conftest import sympy_rank

SINGLE = PointSet.from_points((1, 1), [[(1, 0), (1, 0)]])
DEPTH = gen_depth_example((1, 1), 1)


def test_dim_component():
    assert dim_component((1, 1), (2, 3)) == 12
    assert dim_component((3, 1, 2), (0, 0, 0)) == 1
    assert dim_component((2,), (3,)) == 10


@pytest.mark.parametrize("dims, d", [((1, 1), (2, 3)), ((2,), (3,)), ((2, 1, 3), (2, 1, 2))])
def test_monomials_enumerate_every_exponent(dims, d):
    mons = monomials(dims, d)
    assert len(mons) == len(set(mons)) == dim_component(dims, d)
    brute = [m for m in itertools.product(*(
        [e for e in itertools.product(range(i + 1), repeat=n + 1) if sum(e) == i]
        for n, i in zip(dims, d)))]
    assert set(mons) == set(brute)
    assert mons == sorted(mons, reverse=True)


def test_evaluation_matrix_examples():
    m = evaluation_matrix(SINGLE, (1, 1))
    assert m.to_lists() == [[1, 0, 0, 0]]
    grid = gen_random((2, 1), 5, 1)
    z = evaluation_matrix(grid, (0, 0))
    assert (z.rows, z.cols) == (5, 1) and all(v == 1 for v in z.entries)
    g = evaluation_matrix(gen_grid(2, 2), (1, 1))
    assert (g.rows, g.cols) == (4, 4)
    assert sympy_rank(g.to_lists()) == 4


def test_hilbert_value_examples():
    assert hilbert_value(SINGLE, (2, 3)) == 1
    assert hilbert_value(gen_grid(2, 2), (1, 1)) == 4
    assert hilbert_value(DEPTH, (1, 1)) == 2
    assert hilbert_value(DEPTH, (-1, 4)) == 0


@pytest.mark.parametrize("x, expected", [
    (DEPTH, [[1, 2, 2], [2, 2, 2], [2, 2, 2]]),
    (gen_grid(2, 2), [[1, 2, 2], [2, 4, 4], [2, 4, 4]]),
    (SINGLE, [[1, 1], [1, 1]]),
])
def test_table_examples(x, expected):
    tbl = hilbert_table(x)
    assert tbl.values.tolist() == expected
    assert tbl.window == tuple(len(r) - 1 for r in (expected, expected[0]))


def test_table_is_read_only():
    tbl = hilbert_table(SINGLE)
    with pytest.raises(ValueError):
        tbl.values[0, 0] = 5


def test_table_invariants_are_enforced():
    with pytest.raises(InconsistencyError):
        HilbertTable(np.array([[1, 2], [2, 2]]), (1, 1), 1)  # exceeds s
    with pytest.raises(InconsistencyError):
        HilbertTable(np.array([[1, 2, 1], [2, 2, 2], [2, 2, 2]]), (2, 2), 2)  # not monotone
    with pytest.raises(InconsistencyError):
        HilbertTable(np.array([[1, 1, 2], [1, 2, 2], [2, 2, 2]]), (2, 2), 2)  # no stabilization


def test_extend():
    assert extend(hilbert_table(DEPTH), (7, 9)) == 2
    assert extend(hilbert_table(gen_grid(2, 2)), (0, 5)) == 2
    assert extend(hilbert_table(gen_random((1, 2), 6, 2)), (0, 0)) == 1


def test_on_window_matches_oracle():
    x = gen_random((1, 1), 5, 4)
    vals = hilbert_table(x).on_window((7, 2))
    assert vals.shape == (8, 3)
    assert all(vals[d] == hilbert_value(x, d) for d in itertools.product(range(8), range(3)))


def test_axis_sequence():
    assert axis_sequence(gen_grid(2, 3), 2) == (1, 2, 3, 3)
    assert axis_sequence(SINGLE, 1) == axis_sequence(SINGLE, 2) == (1, 1)
    assert axis_sequence(DEPTH, 1) == (1, 2, 2)


def test_field_checks():
    with pytest.raises(MalformedInputError):
        hilbert_value(SINGLE, (1, 1), prime=9)
    with pytest.raises(MalformedInputError):
        hilbert_value(SINGLE, (1,))
    with pytest.raises(MalformedInputError):
        hilbert_table(PointSet((1, 1), ()))


def test_small_prime_can_collapse_points():
    # [1:0] and [1:3] coincide mod 3
    x = PointSet.from_points((1,), [[(1, 0)], [(1, 3)]])
    assert hilbert_value(x, (1,)) == 2
    assert hilbert_value(x, (1,), prime=3) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10_000), st.sampled_from([(1, 1), (2, 1), (1, 1, 1)]))
def test_fast_path_matches_normalized_matrix(s, seed, dims):
    x = gen_random(dims, s, seed)
    for d in itertools.product(range(3), repeat=len(dims)):
        assert hilbert_value(x, d) == normalized_evaluation_rank(x, d)
        assert hilbert_value(x, d, prime=1_000_003) == normalized_evaluation_rank(x, d, prime=1_000_003)


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10_000))
def test_matches_sympy_rank(s, seed):
    x = gen_random((1, 2), s, seed)
    for d in itertools.product(range(3), repeat=2):
        assert hilbert_value(x, d) == sympy_rank(evaluation_matrix(x, d).to_lists())


def test_representative_invariance():
    raw = [[(2, 4), (3, 0)], [(1, 5), (2, 7)], [(3, 1), (0, 2)]]
    scaled = [[[Fraction(-7, 3) * v for v in f] for f in p] for p in raw]
    a = PointSet.from_points((1, 1), raw)
    b = PointSet.from_points((1, 1), scaled)
    for d in itertools.product(range(3), repeat=2):
        assert hilbert_value(a, d) == hilbert_value(b, d)


@pytest.mark.parametrize("shape", [(4,), (3, 2), (2, 3, 2), (2, 2, 2, 2)])
def test_tsv_round_trip(shape):
    a = np.arange(np.prod(shape)).reshape(shape)
    assert np.array_equal(parse_table(format_table(a)), a)


def test_tsv_layout():
    assert format_table([[1, 1], [1, 1]]) == "H\t0\t1\n0\t1\t1\n1\t1\t1\n"
    assert format_table([1, 2, 3]) == "H\t0\t1\t2\n*\t1\t2\t3\n"
    assert format_table(np.ones((1, 1, 2), dtype=int)).splitlines()[0] == "slice i_3,...,i_k=0"
