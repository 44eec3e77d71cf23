"""Points and finite point sets in P^{n_1} x ... x P^{n_k}.

A point is stored as a tuple of factors, each factor a tuple of
:class:`~fractions.Fraction` homogeneous coordinates scaled so that the first
nonzero coordinate is 1.  Point sets keep their points sorted, so two sets
are equal exactly when they contain the same points.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .combinat import Partition
from .errors import DomainError, MalformedInputError

Factor = tuple[Fraction, ...]
Point = tuple[Factor, ...]


def normalize_factor(coords: Sequence) -> Factor:
    try:
        v = tuple(Fraction(c) for c in coords)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad coordinate in {list(coords)!r}") from exc
    lead = next((c for c in v if c != 0), None)
    if lead is None:
        raise MalformedInputError(f"zero vector [{':'.join(map(_fmt_coord, v))}] is not a projective point")
    return tuple(c / lead for c in v)


def normalize(point: Sequence[Sequence]) -> Point:
    """Canonical representative: each factor's first nonzero coordinate is 1."""
    if not point:
        raise MalformedInputError("a point needs at least one factor")
    return tuple(normalize_factor(f) for f in point)


@dataclass(frozen=True)
class PointSet:
    """A reduced finite set of points with a fixed ambient space.

    ``dims`` holds ``(n_1, ..., n_k)``; each point's i-th factor has
    ``n_i + 1`` coordinates.  Use :meth:`from_points` to build one from raw
    coordinates.
    """

    dims: tuple[int, ...]
    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.dims or any(n < 1 for n in self.dims):
            raise MalformedInputError(f"bad ambient dimensions {self.dims}")
        for p in self.points:
            if len(p) != len(self.dims) or any(len(f) != n + 1 for f, n in zip(p, self.dims)):
                raise MalformedInputError(f"point {format_point(p)} does not live in dims {self.dims}")
        if list(self.points) != sorted(set(self.points)):
            raise MalformedInputError("points must be distinct and sorted; use PointSet.from_points")

    @classmethod
    def from_points(cls, dims: Sequence[int], points: Iterable[Sequence[Sequence]],
                    allow_duplicates: bool = False) -> "PointSet":
        normed = [normalize(p) for p in points]
        uniq = set(normed)
        if len(uniq) != len(normed) and not allow_duplicates:
            dup = next(p for p, c in Counter(normed).items() if c > 1)
            raise MalformedInputError(f"duplicate point {format_point(dup)}")
        return cls(tuple(dims), tuple(sorted(uniq)))

    @property
    def k(self) -> int:
        return len(self.dims)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def without(self, drop: Iterable[Point]) -> "PointSet":
        drop = set(drop)
        return PointSet(self.dims, tuple(p for p in self.points if p not in drop))


def _check_factor(x: PointSet, i: int):
    if not 1 <= i <= x.k:
        raise MalformedInputError(f"factor index {i} outside 1..{x.k}")


def projection(x: PointSet, i: int) -> PointSet:
    """Image of ``x`` under the projection to the i-th factor (1-based)."""
    _check_factor(x, i)
    return PointSet((x.dims[i - 1],), tuple(sorted({(p[i - 1],) for p in x})))


def projection_counts(x: PointSet) -> tuple[int, ...]:
    """``(t_1, ..., t_k)``: number of distinct coordinates per factor."""
    return tuple(len({p[i] for p in x}) for i in range(x.k))


def fibers(x: PointSet, i: int = 1) -> dict[Factor, list[Point]]:
    """Points of ``x`` grouped by their i-th factor."""
    _check_factor(x, i)
    out: dict[Factor, list[Point]] = {}
    for p in x:
        out.setdefault(p[i - 1], []).append(p)
    return out


def alpha_beta(x: PointSet) -> tuple[Partition, Partition]:
    """Sorted fiber sizes over the first and second factor."""
    if x.k != 2:
        raise DomainError(f"alpha/beta are defined for two factors, not {x.k}")
    alpha = Partition.of(len(f) for f in fibers(x, 1).values())
    beta = Partition.of(len(f) for f in fibers(x, 2).values())
    return alpha, beta


def gen_grid(t: int, r: int) -> PointSet:
    """The complete intersection {[1:i] x [1:j] : 0 <= i < t, 0 <= j < r}."""
    if t < 1 or r < 1:
        raise DomainError("grid sides must be positive")
    return PointSet.from_points((1, 1), [((1, i), (1, j)) for i in range(t) for j in range(r)])


def gen_depth_example(dims: Sequence[int], l: int) -> PointSet:
    """Two points X_1 = P_1 x ... x P_k and X_2 = P_1 x ... x P_{l-1} x Q_l x ... x Q_k.

    ``P_i = [1:0:...:0]`` and ``Q_i = [0:1:0:...:0]``.  The coordinate ring
    has depth ``l``; it is ACM only for ``l = k``.
    """
    dims = tuple(dims)
    k = len(dims)
    if not 1 <= l <= k:
        raise DomainError(f"depth index {l} outside 1..{k}")

    def unit(n, j):
        return tuple(1 if c == j else 0 for c in range(n + 1))

    x1 = tuple(unit(n, 0) for n in dims)
    x2 = tuple(unit(n, 0) if h < l - 1 else unit(n, 1) for h, n in enumerate(dims))
    return PointSet.from_points(dims, [x1, x2])


def gen_random(dims: Sequence[int], s: int, seed: int) -> PointSet:
    """``s`` distinct points with integer coordinates in ``0..2s+2``.

    Draws are resampled until the normalized point is new and every factor
    is nonzero, so the output is deterministic in ``seed``.
    """
    if s < 1:
        raise DomainError("need at least one point")
    dims = tuple(dims)
    rng = random.Random(seed)
    top = 2 * s + 2
    seen: set[Point] = set()
    pts = []
    while len(pts) < s:
        raw = [[rng.randint(0, top) for _ in range(n + 1)] for n in dims]
        if any(not any(f) for f in raw):
            continue
        p = normalize(raw)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointSet.from_points(dims, pts)


# -- text format ----------------------------------------------------------

def _fmt_coord(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_point(p: Point) -> str:
    return " | ".join(",".join(_fmt_coord(c) for c in f) for f in p)


def format_pointset(x: PointSet) -> str:
    lines = [f"pointset k={x.k} n={','.join(map(str, x.dims))}"]
    lines += [format_point(p) for p in x]
    return "\n".join(lines) + "\n"


def _parse_header(line: str, tag: str, lineno: int) -> dict[str, str]:
    words = line.split()
    if not words or words[0] != tag:
        raise MalformedInputError(f"line {lineno}: expected '{tag}' header, got {line!r}")
    fields = {}
    for w in words[1:]:
        key, sep, val = w.partition("=")
        if not sep:
            raise MalformedInputError(f"line {lineno}: bad header field {w!r}")
        fields[key] = val
    return fields


def content_lines(text: str):
    """Yield ``(lineno, line)`` for non-blank, non-comment lines."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_int(s: str, what: str, lineno: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise MalformedInputError(f"line {lineno}: {what} {s!r} is not an integer") from None


def parse_pointset(text: str) -> PointSet:
    lines = list(content_lines(text))
    if not lines:
        raise MalformedInputError("empty point-set file")
    lineno, header = lines[0]
    fields = _parse_header(header, "pointset", lineno)
    if "k" not in fields or "n" not in fields:
        raise MalformedInputError(f"line {lineno}: header needs k= and n=")
    k = _parse_int(fields["k"], "k", lineno)
    dims = tuple(_parse_int(n, "dimension", lineno) for n in fields["n"].split(","))
    if len(dims) != k:
        raise MalformedInputError(f"line {lineno}: k={k} but {len(dims)} dimensions given")
    if any(n < 1 for n in dims):
        raise MalformedInputError(f"line {lineno}: dimensions must be positive")
    pts = []
    seen = {}
    for lineno, line in lines[1:]:
        factors = [f.strip() for f in line.split("|")]
        if len(factors) != k:
            raise MalformedInputError(f"line {lineno}: expected {k} factors, got {len(factors)}")
        point = []
        for f, n in zip(factors, dims):
            coords = [c.strip() for c in f.split(",")]
            if len(coords) != n + 1:
                raise MalformedInputError(
                    f"line {lineno}: factor {f!r} needs {n + 1} coordinates")
            try:
                point.append([Fraction(c) for c in coords])
            except (ValueError, ZeroDivisionError):
                raise MalformedInputError(f"line {lineno}: bad coordinate in {f!r}") from None
        try:
            p = normalize(point)
        except MalformedInputError as exc:
            raise MalformedInputError(f"line {lineno}: {exc}") from None
        if p in seen:
            raise MalformedInputError(f"line {lineno}: duplicate of the point on line {seen[p]}")
        seen[p] = lineno
        pts.append(p)
    return PointSet.from_points(dims, pts)
