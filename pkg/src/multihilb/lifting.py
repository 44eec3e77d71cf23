"""Lifting artinian monomial ideals to ACM point sets.

The monomial with exponents ``a_{i,j}`` lifts to the product of the linear
forms ``x_{i,j} - (l - 1) x_{i,0}`` for ``1 <= l <= a_{i,j}``.  The lifted
ideal is the ideal of the points ``[1 : b_{i,1} : ... : b_{i,n_i}]`` (one per
factor), where ``b`` runs over the exponent tuples of the standard monomials,
so the point set is written down directly.

Exponent tuples are flat: the first ``n_1`` entries belong to factor 1, the
next ``n_2`` to factor 2, and so on.  With every ``n_i = 1`` they are plain
k-tuples.
"""

from __future__ import annotations

import itertools
import math
from typing import Sequence

import numpy as np

from .combinat import cumulative_sum
from .errors import DomainError, MalformedInputError
from .geometry import PointSet
from .staircase import Staircase, complement, indicator_of


def _blocks(dims: Sequence[int]) -> list[slice]:
    out, start = [], 0
    for n in dims:
        out.append(slice(start, start + n))
        start += n
    return out


def _check_shape(st: Staircase, dims: Sequence[int]):
    if st.k != sum(dims):
        raise MalformedInputError(
            f"staircase has {st.k} variables but dims {tuple(dims)} need {sum(dims)}")


def lift_cell(cell: Sequence[int], dims: Sequence[int]):
    """The point attached to an exponent tuple."""
    return tuple((1,) + tuple(cell[b]) for b in _blocks(dims))


def lift_staircase(st: Staircase, dims: Sequence[int] | None = None) -> PointSet:
    """Point set whose ideal is the lifting of ``st``.

    ``dims`` defaults to ``(1, ..., 1)``.
    """
    dims = tuple(dims) if dims is not None else (1,) * st.k
    _check_shape(st, dims)
    if not st.is_artinian:
        raise DomainError("cannot lift a non-artinian staircase: the point set would be infinite")
    cells = complement(st, require_finite=True).cells
    if not cells:
        raise DomainError("the unit ideal lifts to the empty set")
    pts = [lift_cell(c, dims) for c in cells]
    x = PointSet.from_points(dims, pts)
    assert len(x) == len(cells)
    return x


def _flat(t) -> tuple[int, ...]:
    if all(isinstance(v, int) for v in t):
        return tuple(t)
    return tuple(v for block in t for v in block)


def eval_lifted_monomial(alpha, beta) -> int:
    """Value of the lifted monomial ``alpha`` at the lifted point of ``beta``.

    Equal to the product over all variables of ``b (b - 1) ... (b - a + 1)``,
    which vanishes exactly when some ``b < a``.  Both arguments may be flat
    tuples or per-factor tuples of tuples.
    """
    a, b = _flat(alpha), _flat(beta)
    if len(a) != len(b) or (not all(isinstance(v, int) for v in alpha)
                            and [len(x) for x in alpha] != [len(x) for x in beta]):
        raise MalformedInputError(f"shape mismatch between {alpha} and {beta}")
    return math.prod(bj - (l - 1) for aj, bj in zip(a, b) for l in range(1, aj + 1))


def artinian_hilbert(st: Staircase, dims: Sequence[int], window: Sequence[int]) -> np.ndarray:
    """N^k-graded Hilbert function of ``S/J`` on ``window``.

    Counts standard monomials by their per-factor degree.  With all
    ``n_i = 1`` this is :func:`~multihilb.staircase.indicator_of`.
    """
    dims = tuple(dims)
    _check_shape(st, dims)
    if all(n == 1 for n in dims):
        return indicator_of(st, window)
    h = np.zeros(tuple(w + 1 for w in window), dtype=np.int64)
    blocks = _blocks(dims)
    for c in complement(st, require_finite=True).cells:
        deg = tuple(sum(c[b]) for b in blocks)
        if all(d <= w for d, w in zip(deg, window)):
            h[deg] += 1
    return h


def lifted_hilbert_expected(st: Staircase, window: Sequence[int],
                            dims: Sequence[int] | None = None) -> np.ndarray:
    """Hilbert function of the lifted point set, from partial sums alone."""
    dims = tuple(dims) if dims is not None else (1,) * st.k
    if not st.is_artinian:
        raise DomainError("staircase is not artinian")
    if len(window) != len(dims):
        raise MalformedInputError(f"window {tuple(window)} does not match dims {dims}")
    return cumulative_sum(artinian_hilbert(st, dims, window))


def generators_vanish(st: Staircase) -> bool:
    """Every lifted minimal generator vanishes on every lifted point."""
    cells = complement(st, require_finite=True).cells
    return all(eval_lifted_monomial(g, c) == 0
               for g, c in itertools.product(st.generators, cells))
