"""ACM point sets in P^1 x P^1: borders, the ACM test and Betti numbers.

Everything here is computed twice where possible: once from the fiber
partitions ``alpha_X`` and ``beta_X`` and once from the rank oracle, and the
two are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .combinat import Partition, conjugate, delta_tuple
from .errors import DomainError, InconsistencyError, MalformedInputError
from .geometry import PointSet, alpha_beta, fibers
from .hilbert import HilbertTable, hilbert_table, hilbert_value
from .staircase import indicator_violation


def _trimmed(values) -> Partition:
    # Trailing zeros are dropped; anything else must already be a partition.
    v = [int(x) for x in values]
    while v and v[-1] == 0:
        v.pop()
    return Partition(tuple(v))


def _require_p1p1(x: PointSet):
    if x.dims != (1, 1):
        raise DomainError(f"expected a point set in P^1 x P^1, got dims {x.dims}")


@dataclass(frozen=True)
class Border:
    b_c: tuple[int, ...]
    b_r: tuple[int, ...]


def border_from_partitions(alpha: Partition, beta: Partition) -> Border:
    # sum_{l<=j+1} #{a_i >= l} is sum_i min(a_i, j+1)
    r, t = len(beta), len(alpha)
    b_c = tuple(sum(min(a, j + 1) for a in alpha) for j in range(r))
    b_r = tuple(sum(min(b, i + 1) for b in beta) for i in range(t))
    return Border(b_c, b_r)


def border(x: PointSet, prime: int | None = None, check: bool = True) -> Border:
    """Last row and last column of the stable part of ``H_X``.

    ``b_c[j] = H_X(t-1, j)`` and ``b_r[i] = H_X(i, r-1)``, computed from the
    fiber counts and, with ``check``, compared against the rank oracle.
    """
    if x.k != 2:
        raise DomainError("borders are defined for two factors")
    alpha, beta = alpha_beta(x)
    b = border_from_partitions(alpha, beta)
    if check:
        t, r = len(alpha), len(beta)
        oracle_c = tuple(hilbert_value(x, (t - 1, j), prime) for j in range(r))
        oracle_r = tuple(hilbert_value(x, (i, r - 1), prime) for i in range(t))
        if (oracle_c, oracle_r) != (b.b_c, b.b_r):
            raise InconsistencyError(
                f"border formula {b} disagrees with oracle ({oracle_c}, {oracle_r})")
    return b


@dataclass(frozen=True)
class AcmVerdict:
    is_acm: bool
    alpha: Partition
    beta: Partition
    alpha_conjugate: Partition
    delta_ok: bool
    delta: np.ndarray
    witness: tuple[str, tuple[int, ...]] | None

    def __post_init__(self):
        if not (self.is_acm == (self.alpha_conjugate == self.beta) == self.delta_ok):
            raise InconsistencyError(
                f"ACM criteria disagree: alpha*={self.alpha_conjugate} beta={self.beta} "
                f"staircase test={self.delta_ok}")


def _staircase_witness(delta: np.ndarray):
    v = indicator_violation(delta)
    if v is not None:
        return v
    t, r = delta.shape[0] - 1, delta.shape[1] - 1
    if delta[t, 0] != 0:
        return "iv", (t, 0)
    if delta[0, r] != 0:
        return "iv", (0, r)
    return None


def is_acm(x: PointSet, prime: int | None = None, table: HilbertTable | None = None) -> AcmVerdict:
    """Decide ACM-ness by ``alpha* == beta`` and by the shape of ``Delta H``.

    Both tests always run; if they disagree :class:`InconsistencyError` is
    raised.  The witness names the first broken staircase condition: ``i``
    (origin), ``ii`` (value not 0/1), ``iii`` (support not downward closed) or
    ``iv`` (an axis not terminating), with the offending cell.  A table
    already computed for ``x`` may be passed in to skip the oracle call.
    """
    _require_p1p1(x)
    alpha, beta = alpha_beta(x)
    astar = conjugate(alpha)
    delta = (table if table is not None else hilbert_table(x, prime)).delta()
    witness = _staircase_witness(delta)
    return AcmVerdict(
        is_acm=astar == beta, alpha=alpha, beta=beta, alpha_conjugate=astar,
        delta_ok=witness is None, delta=delta, witness=witness,
    )


@dataclass(frozen=True)
class BettiData:
    """Shifts of the generators (``c_set``) and syzygies (``v_set``) of I_X."""

    c_set: tuple[tuple[int, int], ...]
    v_set: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if set(self.c_set) & set(self.v_set):
            raise InconsistencyError("generator and syzygy shifts overlap")
        if len(self.v_set) != len(self.c_set) - 1:
            raise InconsistencyError("a height-two resolution needs one syzygy fewer than generators")


def betti(alpha: Partition) -> BettiData:
    """Shifts in the minimal free resolution of an ACM set with fibers ``alpha``."""
    a = tuple(alpha)
    if not a:
        raise DomainError("betti needs a non-empty partition")
    t = len(a)
    c = {(t, 0), (0, a[0])}
    v = {(t, a[-1])}
    # descents a_i < a_{i-1}, 1-based i in 2..t
    for i in range(2, t + 1):
        if a[i - 1] < a[i - 2]:
            c.add((i - 1, a[i - 1]))
            v.add((i - 1, a[i - 2]))
    return BettiData(tuple(sorted(c)), tuple(sorted(v)))


def _dim_r(a: int, b: int) -> int:
    return (a + 1) * (b + 1) if a >= 0 and b >= 0 else 0


def hilbert_from_resolution(b: BettiData, d: Sequence[int]) -> int:
    """``H_X(d)`` as the alternating sum of the resolution's free modules."""
    if len(d) != 2:
        raise MalformedInputError("degree must have two entries")
    i, j = d
    return (_dim_r(i, j) - sum(_dim_r(i - c1, j - c2) for c1, c2 in b.c_set)
            + sum(_dim_r(i - v1, j - v2) for v1, v2 in b.v_set))


def hilbert_from_alpha(alpha: Partition, d: Sequence[int]) -> int:
    """``H_X(i, j) = sum over the first i+1 fibers of min(j+1, alpha_m)``."""
    if len(d) != 2:
        raise MalformedInputError("degree must have two entries")
    i, j = d
    if i < 0 or j < 0:
        return 0
    return sum(min(j + 1, a) for a in tuple(alpha)[:i + 1])


def corners_vertices(delta) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Corners and vertices of a 0/1 staircase ``Delta H``.

    The window must reach past the staircase on both axes.
    """
    d = np.asarray(delta)
    if d.ndim != 2 or _staircase_witness(d) is not None:
        raise MalformedInputError("corners_vertices needs a finite 0/1 staircase table")
    t = int(d[:, 0].sum())
    r = int(d[0, :].sum())

    def at(i, j):
        return int(d[i, j]) if 0 <= i < d.shape[0] and 0 <= j < d.shape[1] else 0

    corners = {(t, 0), (0, r)}
    vertices = set()
    for i in range(1, d.shape[0]):
        for j in range(1, d.shape[1]):
            if at(i, j) == 0 and at(i - 1, j) == 0 and at(i, j - 1) == 0 and at(i - 1, j - 1) == 1:
                vertices.add((i, j))
            if at(i, j) == 0 and at(i - 1, j) == 1 and at(i, j - 1) == 1:
                corners.add((i, j))
    return tuple(sorted(corners)), tuple(sorted(vertices))


def row_column_sums(delta, t: int, r: int) -> tuple[Partition, Partition]:
    """(column sums over rows ``0..t-1``, row sums over columns ``0..r-1``).

    For any point set these are ``alpha*`` and ``beta*``.
    """
    d = np.asarray(delta)[:t, :r]
    return _trimmed(d.sum(axis=0)), _trimmed(d.sum(axis=1))


def peel(x: PointSet, prime: int | None = None) -> PointSet:
    """Remove one largest fiber over the first factor from an ACM set.

    Among fibers of maximal size the one over the smallest base point goes.
    """
    _require_p1p1(x)
    fib = fibers(x, 1)
    if len(fib) < 2:
        raise DomainError("cannot peel a set with a single first-coordinate fiber")
    if not is_acm(x, prime).is_acm:
        raise DomainError("peel needs an ACM point set")
    size = max(len(f) for f in fib.values())
    base = min(b for b, f in fib.items() if len(f) == size)
    return x.without(fib[base])


def format_betti(b: BettiData) -> str:
    lines = [f"C\t{c1}\t{c2}" for c1, c2 in b.c_set] + [f"V\t{v1}\t{v2}" for v1, v2 in b.v_set]
    return "\n".join(lines) + "\n"


def border_deltas(b: Border) -> tuple[Partition, Partition]:
    """``(Delta B_C, Delta B_R)`` with trailing zeros dropped."""
    return _trimmed(delta_tuple(b.b_c)), _trimmed(delta_tuple(b.b_r))
