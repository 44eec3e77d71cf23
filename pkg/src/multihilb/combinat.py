"""Partitions, tuple differences and the k-dimensional first difference.

Integer tables are plain numpy integer arrays: an array of shape
``(w_1 + 1, ..., w_k + 1)`` holds a function on the window
``[0..w_1] x ... x [0..w_k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import MalformedInputError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    The raw constructor validates; :meth:`of` sorts and drops zeros.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise MalformedInputError(f"partition {parts} has a non-positive part")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise MalformedInputError(f"partition {parts} is not weakly decreasing")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Partition":
        return cls(tuple(sorted((v for v in values if v), reverse=True)))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def conjugate(p: Partition) -> Partition:
    """Column lengths of the Ferrers diagram of ``p``."""
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for part in p if part >= i) for i in range(1, p[0] + 1)))


def delta_tuple(p: Sequence[int]) -> tuple[int, ...]:
    """``(p_1, p_2 - p_1, ..., p_k - p_{k-1})``."""
    if not p:
        raise MalformedInputError("delta_tuple needs a non-empty tuple")
    p = tuple(p)
    return (p[0],) + tuple(b - a for a, b in zip(p, p[1:]))


def as_table(values) -> np.ndarray:
    a = np.asarray(values)
    if a.ndim == 0:
        raise MalformedInputError("a table needs at least one axis")
    if a.size and not np.issubdtype(a.dtype, np.integer):
        raise MalformedInputError(f"table values must be integers, got dtype {a.dtype}")
    return a.astype(np.int64)


def window_of(table: np.ndarray) -> tuple[int, ...]:
    """Inclusive upper bounds of the cells stored in ``table``."""
    return tuple(n - 1 for n in table.shape)


def first_difference(h) -> np.ndarray:
    """Alternating sum of ``h`` over the unit cube below each cell.

    Values below the window count as zero, which is exactly what a
    zero-prepended backward difference along every axis gives.
    """
    d = as_table(h)
    for axis in range(d.ndim):
        d = np.diff(d, axis=axis, prepend=0)
    return d


def cumulative_sum(d) -> np.ndarray:
    """Inverse of :func:`first_difference`: ``H(i) = sum of d(j) over j <= i``."""
    h = as_table(d)
    for axis in range(h.ndim):
        h = np.cumsum(h, axis=axis)
    return h


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise order on multidegrees."""
    return all(x <= y for x, y in zip(a, b))
