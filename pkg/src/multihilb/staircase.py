"""Monomial ideals in k[x_1, ..., x_k] with deg x_i = e_i, as staircases.

Each multidegree holds exactly one monomial, so the Hilbert function of
``S/J`` is the 0/1 indicator of the cells not in ``J``.  A staircase is
stored by the exponent tuples of its minimal generators.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .combinat import as_table, leq
from .errors import DomainError, MalformedInputError
from .geometry import content_lines


def minimalize(gens: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Drop every generator divisible by another one."""
    uniq = sorted({tuple(g) for g in gens})
    return tuple(g for g in uniq if not any(h != g and leq(h, g) for h in uniq))


@dataclass(frozen=True)
class Staircase:
    """Monomial ideal in ``k`` variables given by minimal generators."""

    k: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 1:
            raise MalformedInputError("staircase needs k >= 1")
        for g in self.generators:
            if len(g) != self.k or any(e < 0 for e in g):
                raise MalformedInputError(f"bad generator {g} for k={self.k}")
        if tuple(self.generators) != minimalize(self.generators):
            raise MalformedInputError("generators are not a sorted antichain; use Staircase.of")

    @classmethod
    def of(cls, k: int, gens: Iterable[Sequence[int]]) -> "Staircase":
        return cls(k, minimalize(gens))

    def contains(self, cell: Sequence[int]) -> bool:
        """Is ``x^cell`` in the ideal?"""
        return any(leq(g, cell) for g in self.generators)

    def pure_powers(self) -> list[int | None]:
        """Smallest ``a`` with ``x_i^a`` in the ideal, per variable, or None."""
        out = []
        for i in range(self.k):
            pows = [g[i] for g in self.generators if all(e == 0 for j, e in enumerate(g) if j != i)]
            out.append(min(pows) if pows else None)
        return out

    @property
    def is_artinian(self) -> bool:
        return all(p is not None for p in self.pure_powers())


class Complement(NamedTuple):
    cells: tuple[tuple[int, ...], ...]
    finite: bool


def complement(st: Staircase, bound: Sequence[int] | None = None,
               require_finite: bool = False) -> Complement:
    """Exponent tuples within ``bound`` that lie outside the ideal.

    ``finite`` reports whether every axis is blocked by a pure power, i.e.
    whether the whole complement is finite.  Without ``bound`` the pure-power
    box is used, which requires the staircase to be artinian.
    """
    powers = st.pure_powers()
    finite = all(p is not None for p in powers)
    if require_finite and not finite:
        raise DomainError("staircase is not artinian: its complement is infinite")
    if bound is None:
        if not finite:
            raise DomainError("staircase is not artinian; pass an explicit bound")
        bound = [p - 1 for p in powers]
    if len(bound) != st.k:
        raise MalformedInputError(f"bound {tuple(bound)} does not match k={st.k}")
    cells = tuple(c for c in itertools.product(*(range(b + 1) for b in bound))
                  if not st.contains(c))
    return Complement(cells, finite)


def indicator_of(st: Staircase, window: Sequence[int]) -> np.ndarray:
    """Hilbert function of ``S/J`` on ``window``: 1 outside ``J``, else 0."""
    if len(window) != st.k:
        raise MalformedInputError(f"window {tuple(window)} does not match k={st.k}")
    h = np.ones(tuple(w + 1 for w in window), dtype=np.int64)
    for g in st.generators:
        if leq(g, window):
            h[tuple(slice(e, None) for e in g)] = 0
    return h


def _violation(h: np.ndarray):
    """First condition broken by ``h``, as ``(condition, cell)``, or None."""
    if h.flat[0] != 1:
        return "i", (0,) * h.ndim
    bad = np.argwhere((h != 0) & (h != 1))
    if len(bad):
        return "ii", tuple(int(v) for v in bad[0])
    # For 0/1 values, an upward-closed zero set is the same as h never
    # increasing along a unit step.
    for axis in range(h.ndim):
        up = np.argwhere(np.diff(h, axis=axis) > 0)
        if len(up):
            cell = [int(v) for v in up[0]]
            cell[axis] += 1
            return "iii", tuple(cell)
    return None


def indicator_violation(h) -> tuple[str, tuple[int, ...]] | None:
    return _violation(as_table(h))


def validate_indicator(h) -> bool:
    """True iff ``h`` is the Hilbert function of a quotient of S on its window.

    (i) value 1 at the origin, (ii) every value 0 or 1, (iii) once zero,
    zero at every cell above.
    """
    return _violation(as_table(h)) is None


def is_artinian(h) -> bool:
    """True iff every axis of a valid indicator reaches 0 inside the window."""
    h = as_table(h)
    if _violation(h) is not None:
        raise DomainError("not a valid staircase indicator")
    for axis in range(h.ndim):
        line = h[tuple(slice(None) if a == axis else 0 for a in range(h.ndim))]
        if line.min() != 0:
            return False
    return True


def zero_set_staircase(h) -> Staircase:
    """Monomial ideal generated by the cells where ``h`` vanishes."""
    h = as_table(h)
    zeros = [tuple(int(v) for v in c) for c in np.argwhere(h == 0)]
    return Staircase.of(h.ndim, zeros)


def outer_corners(cells: Iterable[Sequence[int]], k: int) -> list[tuple[int, ...]]:
    """Minimal cells outside a finite order ideal."""
    inside = {tuple(c) for c in cells}
    cand = {c[:i] + (c[i] + 1,) + c[i + 1:] for c in inside for i in range(k)}
    out = []
    for m in cand - inside:
        if all(m[i] == 0 or m[:i] + (m[i] - 1,) + m[i + 1:] in inside for i in range(k)):
            out.append(m)
    return sorted(out)


def random_artinian_staircase(k: int, max_cells: int, seed: int) -> Staircase:
    """Random artinian staircase whose complement has 1..max_cells cells.

    Grows an order ideal from the origin by adding uniformly chosen
    addable cells; the generators are its outer corners.
    """
    if k < 1 or max_cells < 1:
        raise DomainError("need k >= 1 and max_cells >= 1")
    rng = random.Random(seed)
    size = rng.randint(1, max_cells)
    cells = {(0,) * k}
    while len(cells) < size:
        cells.add(rng.choice(outer_corners(cells, k)))
    return Staircase.of(k, outer_corners(cells, k))


# -- text format ----------------------------------------------------------

def format_staircase(st: Staircase) -> str:
    lines = [f"staircase k={st.k}"] + [",".join(map(str, g)) for g in st.generators]
    return "\n".join(lines) + "\n"


def parse_staircase(text: str) -> Staircase:
    lines = list(content_lines(text))
    if not lines:
        raise MalformedInputError("empty staircase file")
    lineno, header = lines[0]
    words = header.split()
    if len(words) != 2 or words[0] != "staircase" or not words[1].startswith("k="):
        raise MalformedInputError(f"line {lineno}: expected 'staircase k=<k>', got {header!r}")
    try:
        k = int(words[1][2:])
    except ValueError:
        raise MalformedInputError(f"line {lineno}: bad k in {header!r}") from None
    if k < 1:
        raise MalformedInputError(f"line {lineno}: k must be positive")
    gens = []
    for lineno, line in lines[1:]:
        try:
            g = tuple(int(v) for v in line.split(","))
        except ValueError:
            raise MalformedInputError(f"line {lineno}: bad exponent tuple {line!r}") from None
        if len(g) != k or any(e < 0 for e in g):
            raise MalformedInputError(f"line {lineno}: generator {line!r} needs {k} non-negative exponents")
        gens.append(g)
    return Staircase.of(k, gens)
