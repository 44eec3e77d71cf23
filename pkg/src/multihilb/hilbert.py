"""Multigraded Hilbert functions of point sets via exact rank.

``H_X(d)`` is the rank of the evaluation map from degree-``d`` forms to
``k^s``, i.e. the rank of the matrix of all degree-``d`` monomials evaluated
at the points.  Tables are computed on the window ``(t_1, ..., t_k)``, one
step past the index where every axis is known to stabilize, so the
stabilization is checked rather than assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .combinat import first_difference
from .errors import InconsistencyError, MalformedInputError
from .exactalg import ExactMatrix, bareiss_rank, is_prime, modular_rank, rank
from .geometry import PointSet, projection, projection_counts


def dim_component(dims: Sequence[int], d: Sequence[int]) -> int:
    """Number of monomials of multidegree ``d``."""
    if len(dims) != len(d):
        raise MalformedInputError(f"degree {tuple(d)} does not match dims {tuple(dims)}")
    return math.prod(math.comb(n + i, i) for n, i in zip(dims, d))


@lru_cache(maxsize=None)
def _factor_exponents(n: int, deg: int) -> tuple[tuple[int, ...], ...]:
    # Exponent vectors of n+1 variables summing to deg, lex-largest first.
    if n == 0:
        return ((deg,),)
    return tuple((a,) + rest for a in range(deg, -1, -1) for rest in _factor_exponents(n - 1, deg - a))


def monomials(dims: Sequence[int], d: Sequence[int]) -> list[tuple[tuple[int, ...], ...]]:
    """Degree-``d`` monomials as per-factor exponent tuples, in lex order."""
    if len(dims) != len(d):
        raise MalformedInputError(f"degree {tuple(d)} does not match dims {tuple(dims)}")
    if any(i < 0 for i in d):
        return []
    return list(itertools.product(*(_factor_exponents(n, i) for n, i in zip(dims, d))))


def _eval_rows(points, dims, d):
    # One row per point; column order matches monomials(dims, d).
    blocks = [_factor_exponents(n, i) for n, i in zip(dims, d)]
    rows = []
    for p in points:
        per_factor = []
        for f, exps, deg in zip(p, blocks, d):
            pw = [[c ** e for e in range(deg + 1)] for c in f]
            per_factor.append([math.prod(pw[v][e] for v, e in enumerate(ex)) for ex in exps])
        rows.append([math.prod(vals) for vals in itertools.product(*per_factor)])
    return rows


def evaluation_matrix(x: PointSet, d: Sequence[int], prime: int | None = None) -> ExactMatrix:
    """``s x dim R_d`` matrix of monomials evaluated at normalized points."""
    if len(d) != x.k:
        raise MalformedInputError(f"degree {tuple(d)} does not match k={x.k}")
    return ExactMatrix.from_rows(_eval_rows(x.points, x.dims, d), prime=prime)


def _primitive(f) -> tuple[int, ...]:
    lcm = math.lcm(*(c.denominator for c in f))
    ints = [int(c * lcm) for c in f]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


def _integer_points(x: PointSet):
    # Primitive integer representatives: each row of the evaluation matrix is
    # rescaled by a nonzero constant, so the rank is unchanged.
    return [tuple(_primitive(f) for f in p) for p in x]


def _check_field(prime):
    if prime is not None and not is_prime(prime):
        raise MalformedInputError(f"{prime} is not prime")


def _rank_at(int_points, dims, d, prime):
    rows = _eval_rows(int_points, dims, d)
    if prime is None:
        return bareiss_rank(rows)
    return modular_rank([[v % prime for v in r] for r in rows], prime)


def hilbert_value(x: PointSet, d: Sequence[int], prime: int | None = None) -> int:
    """``H_X(d)``, the rank of the degree-``d`` evaluation matrix."""
    if len(d) != x.k:
        raise MalformedInputError(f"degree {tuple(d)} does not match k={x.k}")
    _check_field(prime)
    if any(i < 0 for i in d):
        return 0
    return _rank_at(_integer_points(x), x.dims, tuple(d), prime)


@dataclass(frozen=True)
class HilbertTable:
    """Values of ``H_X`` on the window ``[0..t_1] x ... x [0..t_k]``.

    Construction verifies that values lie in ``1..s``, grow along every
    axis, repeat across the last slice of every axis, and reach ``s`` at
    ``(t_1 - 1, ..., t_k - 1)``.  A violation raises
    :class:`InconsistencyError`.
    """

    values: np.ndarray
    t: tuple[int, ...]
    s: int

    def __post_init__(self):
        v = self.values
        v.setflags(write=False)
        if v.shape != tuple(ti + 1 for ti in self.t):
            raise InconsistencyError(f"table shape {v.shape} does not match t={self.t}")
        if v.min() < 1 or v.max() > self.s:
            raise InconsistencyError("Hilbert values outside 1..s")
        for axis in range(v.ndim):
            if (np.diff(v, axis=axis) < 0).any():
                raise InconsistencyError(f"Hilbert function decreases along axis {axis + 1}")
            last = np.take(v, self.t[axis], axis=axis)
            before = np.take(v, self.t[axis] - 1, axis=axis)
            if not np.array_equal(last, before):
                raise InconsistencyError(f"no stabilization along axis {axis + 1}")
        if v[tuple(ti - 1 for ti in self.t)] != self.s:
            raise InconsistencyError("H_X(t_1-1, ..., t_k-1) differs from |X|")

    @property
    def k(self) -> int:
        return len(self.t)

    @property
    def window(self) -> tuple[int, ...]:
        return self.t

    def __getitem__(self, d):
        return int(self.values[tuple(d)])

    def delta(self) -> np.ndarray:
        return first_difference(self.values)

    def on_window(self, window: Sequence[int]) -> np.ndarray:
        """Values on an arbitrary window, read through :func:`extend`."""
        window = tuple(window)
        if len(window) != self.k or any(w < 0 for w in window):
            raise MalformedInputError(f"bad window {window}")
        idx = np.ix_(*(np.minimum(np.arange(w + 1), ti - 1) for w, ti in zip(window, self.t)))
        return np.array(self.values[idx])


def hilbert_table(x: PointSet, prime: int | None = None) -> HilbertTable:
    """Rank-oracle Hilbert table of ``x`` on the window ``(t_1, ..., t_k)``."""
    if len(x) == 0:
        raise MalformedInputError("empty point set")
    _check_field(prime)
    t = projection_counts(x)
    ints = _integer_points(x)
    vals = np.zeros(tuple(ti + 1 for ti in t), dtype=np.int64)
    for d in itertools.product(*(range(ti + 1) for ti in t)):
        vals[d] = _rank_at(ints, x.dims, d, prime)
    return HilbertTable(vals, t, len(x))


def extend(tbl: HilbertTable, d: Sequence[int]) -> int:
    """``H_X(d)`` for any ``d``, using the stabilization of each axis."""
    if len(d) != tbl.k:
        raise MalformedInputError(f"degree {tuple(d)} does not match k={tbl.k}")
    return tbl[tuple(min(i, ti - 1) for i, ti in zip(d, tbl.t))]


def axis_sequence(x: PointSet, i: int, prime: int | None = None) -> tuple[int, ...]:
    """``(H_X(0), H_X(e_i), ..., H_X(t_i e_i))`` computed by the rank oracle."""
    if not 1 <= i <= x.k:
        raise MalformedInputError(f"factor index {i} outside 1..{x.k}")
    ti = len(projection(x, i))
    seq = []
    for j in range(ti + 1):
        d = [0] * x.k
        d[i - 1] = j
        seq.append(hilbert_value(x, d, prime))
    return tuple(seq)


# -- TSV ------------------------------------------------------------------

def _format_2d(a: np.ndarray) -> list[str]:
    lines = ["H\t" + "\t".join(str(j) for j in range(a.shape[1]))]
    lines += [f"{i}\t" + "\t".join(str(int(v)) for v in row) for i, row in enumerate(a)]
    return lines


def format_table(values) -> str:
    """TSV rendering: header row of second indices, one row per first index.

    A one-factor table is printed as a single row labelled ``*``; tables
    with three or more factors are printed one two-dimensional slice at a
    time, each preceded by ``slice i_3,...,i_k=...``.
    """
    a = np.asarray(values)
    if a.ndim == 1:
        lines = ["H\t" + "\t".join(str(j) for j in range(a.shape[0])),
                 "*\t" + "\t".join(str(int(v)) for v in a)]
    elif a.ndim == 2:
        lines = _format_2d(a)
    else:
        lines = []
        for rest in itertools.product(*(range(n) for n in a.shape[2:])):
            lines.append("slice i_3,...,i_k=" + ",".join(map(str, rest)))
            lines += _format_2d(a[(slice(None), slice(None)) + rest])
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> np.ndarray:
    """Inverse of :func:`format_table`."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInputError("empty table")

    def block(rows):
        try:
            return [[int(v) for v in r.split("\t")[1:]] for r in rows]
        except ValueError as exc:
            raise MalformedInputError(f"bad table entry: {exc}") from None

    if not lines[0].startswith("slice"):
        body = block(lines[1:])
        if len(lines) == 2 and lines[1].startswith("*"):
            return np.array(body[0], dtype=np.int64)
        return np.array(body, dtype=np.int64)
    slices: dict[tuple[int, ...], list[str]] = {}
    key = None
    for ln in lines:
        if ln.startswith("slice"):
            key = tuple(int(v) for v in ln.split("=", 1)[1].split(","))
            slices[key] = []
        elif not ln.startswith("H\t"):
            slices[key].append(ln)
    shape_rest = tuple(max(k[i] for k in slices) + 1 for i in range(len(key)))
    first = np.array(block(slices[key]))
    out = np.zeros(first.shape + shape_rest, dtype=np.int64)
    for k, rows in slices.items():
        out[(slice(None), slice(None)) + k] = block(rows)
    return out


def normalized_evaluation_rank(x: PointSet, d: Sequence[int], prime: int | None = None) -> int:
    """Rank of :func:`evaluation_matrix` itself (slow path, for checking)."""
    return rank(evaluation_matrix(x, d, prime))

