"""Exact scalars and dense matrices with rank over Q or a prime field.

Rational mode keeps entries as :class:`fractions.Fraction`; rank is computed
by fraction-free (Bareiss) elimination after clearing denominators row by
row.  Prime mode keeps entries as :class:`Mod` residues and eliminates with
modular inverses.  No floating point is used anywhere.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import MalformedInputError


@lru_cache(maxsize=64)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % f for f in range(3, math.isqrt(p) + 1, 2))


@dataclass(frozen=True, order=True)
class Mod:
    """A residue modulo the prime ``p``, stored in ``[0, p)``."""

    value: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise MalformedInputError(f"modulus {self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    @classmethod
    def of(cls, x: int | Fraction, p: int) -> "Mod":
        """Reduce an integer or rational modulo ``p``."""
        x = Fraction(x)
        if x.denominator % p == 0:
            raise MalformedInputError(f"{x} has no image modulo {p}")
        return cls(x.numerator * pow(x.denominator, -1, p), p)


def _as_rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise MalformedInputError(f"entry {x!r} is not an exact rational")
    return Fraction(x)


@dataclass(frozen=True)
class ExactMatrix:
    """Dense row-major matrix whose entries all live in the same field.

    ``prime`` is ``None`` for rational mode, otherwise the characteristic of
    the prime field.  Use :meth:`from_rows` rather than the raw constructor.
    """

    rows: int
    cols: int
    entries: tuple
    prime: int | None = None

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MalformedInputError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise MalformedInputError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        if self.prime is None:
            for e in self.entries:
                if not isinstance(e, Fraction):
                    raise MalformedInputError(f"mixed-mode entry {e!r} in rational matrix")
        else:
            for e in self.entries:
                if not isinstance(e, Mod) or e.p != self.prime:
                    raise MalformedInputError(
                        f"mixed-mode entry {e!r} in matrix over GF({self.prime})"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], prime: int | None = None) -> "ExactMatrix":
        """Build a matrix from nested rows of ints, Fractions or Mods.

        With ``prime`` given, integer and rational entries are reduced modulo
        it.  Without it, every entry must be an int or Fraction.
        """
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise MalformedInputError("ragged rows")
        flat = [e for r in rows for e in r]
        kinds = {isinstance(e, Mod) for e in flat}
        if len(kinds) > 1:
            raise MalformedInputError("matrix mixes prime residues and rationals")
        if prime is None:
            if kinds == {True}:
                moduli = {e.p for e in flat}
                if len(moduli) > 1:
                    raise MalformedInputError("matrix mixes residues of different primes")
                prime = moduli.pop()
            else:
                flat = [_as_rational(e) for e in flat]
        if prime is not None:
            if not is_prime(prime):
                raise MalformedInputError(f"modulus {prime} is not prime")
            flat = [e if isinstance(e, Mod) else Mod.of(_as_rational(e), prime) for e in flat]
        return cls(len(rows), ncols, tuple(flat), prime)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def reduce_mod(self, p: int) -> "ExactMatrix":
        """Image of a rational matrix over GF(p)."""
        if self.prime is not None:
            raise MalformedInputError("matrix is already over a prime field")
        return ExactMatrix.from_rows(self.to_lists(), prime=p)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
            self.prime,
        )


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    # Scaling a row by a nonzero constant leaves the rank unchanged.
    out = []
    for i in range(m.rows):
        r = m.row(i)
        lcm = math.lcm(*(e.denominator for e in r)) if r else 1
        out.append([e.numerator * (lcm // e.denominator) for e in r])
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so the floor divisions
    below are exact.  ``rows`` is consumed.
    """
    n = len(rows)
    if n == 0 or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank, prev = 0, 1
    for c in range(ncols):
        p = next((i for i in range(rank, n) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        top = rows[rank]
        piv = top[c]
        for i in range(rank + 1, n):
            r = rows[i]
            f = r[c]
            if f:
                rows[i] = [(piv * r[j] - f * top[j]) // prev for j in range(ncols)]
            elif piv != prev:
                rows[i] = [(piv * r[j]) // prev for j in range(ncols)]
        prev = piv
        rank += 1
        if rank == n:
            break
    return rank


def modular_rank(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) of a matrix of residues.  ``rows`` is consumed."""
    n = len(rows)
    if n == 0 or not rows[0]:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv_row = next((i for i in range(rank, n) if rows[i][c] % p), None)
        if piv_row is None:
            continue
        rows[rank], rows[piv_row] = rows[piv_row], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        top = [(v * inv) % p for v in rows[rank]]
        rows[rank] = top
        for i in range(rank + 1, n):
            f = rows[i][c] % p
            if f:
                r = rows[i]
                rows[i] = [(r[j] - f * top[j]) % p for j in range(ncols)]
        rank += 1
        if rank == n:
            break
    return rank


def rank(m: ExactMatrix) -> int:
    """Exact rank of ``m`` over its field."""
    if not isinstance(m, ExactMatrix):
        raise MalformedInputError(f"expected ExactMatrix, got {type(m).__name__}")
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.prime is None:
        return bareiss_rank(_integer_rows(m))
    rows = [[e.value for e in m.row(i)] for i in range(m.rows)]
    return modular_rank(rows, m.prime)


def integer_matrix(rows: Iterable[Iterable[int]], prime: int | None = None) -> ExactMatrix:
    """Shorthand used by tests and the evaluation-matrix builder."""
    return ExactMatrix.from_rows([list(r) for r in rows], prime=prime)
