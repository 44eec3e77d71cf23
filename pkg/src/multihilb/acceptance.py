"""Exit criteria for the library, runnable from pytest or ``multihilb selftest``.

Every criterion is an exact identity between integers; the only tolerances
are the wall-clock budgets.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .acm2 import (betti, border, border_deltas, corners_vertices, hilbert_from_alpha,
                   hilbert_from_resolution, is_acm, peel, row_column_sums)
from .combinat import Partition, conjugate, cumulative_sum, first_difference
from .geometry import PointSet, alpha_beta, gen_depth_example, gen_grid, gen_random, projection
from .hilbert import HilbertTable, axis_sequence, hilbert_table
from .lifting import lift_staircase
from .staircase import (Staircase, indicator_of, random_artinian_staircase, validate_indicator,
                        zero_set_staircase)

PRIME = 1_000_003


@dataclass
class Result:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  criterion {self.number:>2}: {self.title} [{self.seconds:.2f}s] {self.detail}"


# -- corpora --------------------------------------------------------------

@lru_cache(maxsize=None)
def staircases_2d() -> tuple[Staircase, ...]:
    return tuple(random_artinian_staircase(2, 12, seed) for seed in range(200))


@lru_cache(maxsize=None)
def staircases_3d() -> tuple[Staircase, ...]:
    return tuple(random_artinian_staircase(3, 10, 10_000 + seed) for seed in range(20))


def grid_subset(s: int, seed: int) -> PointSet:
    """``s`` random points of the 4 x 4 grid; a mix of ACM and non-ACM sets."""
    rng = random.Random(seed)
    cells = rng.sample([(i, j) for i in range(4) for j in range(4)], min(s, 16))
    return PointSet.from_points((1, 1), [((1, i), (1, j)) for i, j in cells])


@lru_cache(maxsize=None)
def random_p1p1() -> tuple[PointSet, ...]:
    out = []
    for seed in range(200):
        s = 1 + seed % 12
        out.append(gen_random((1, 1), s, seed) if seed % 2 == 0 else grid_subset(s, seed))
    return tuple(out)


@lru_cache(maxsize=None)
def lifted_2d() -> tuple[PointSet, ...]:
    return tuple(lift_staircase(st) for st in staircases_2d())


@lru_cache(maxsize=None)
def lifted_3d() -> tuple[PointSet, ...]:
    return tuple(lift_staircase(st) for st in staircases_3d())


_tables: dict[PointSet, HilbertTable] = {}


def table(x: PointSet) -> HilbertTable:
    if x not in _tables:
        _tables[x] = hilbert_table(x)
    return _tables[x]


def full_corpus() -> list[PointSet]:
    return list(lifted_2d()) + list(lifted_3d()) + list(random_p1p1())


# -- criteria -------------------------------------------------------------

def _random_partition(rng: random.Random) -> Partition:
    weight = rng.randint(0, 40)
    parts = []
    while weight:
        p = rng.randint(1, weight)
        parts.append(p)
        weight -= p
    return Partition.of(parts)


def criterion_1():
    if conjugate(Partition((4, 4, 3, 1, 1))) != Partition((5, 3, 3, 2)):
        return False, "conjugate((4,4,3,1,1)) wrong"
    rng = random.Random(1)
    for _ in range(1000):
        p = _random_partition(rng)
        c = conjugate(p)
        if conjugate(c) != p or c.weight != p.weight:
            return False, f"involution/weight fails on {p}"
    return True, "1000 random partitions"


def criterion_2():
    for t, r in itertools.product(range(1, 6), repeat=2):
        b = betti(Partition((r,) * t))
        if set(b.c_set) != {(t, 0), (0, r)} or set(b.v_set) != {(t, r)}:
            return False, f"betti wrong for t={t} r={r}: {b}"
        x = gen_grid(t, r)
        tbl = table(x)
        for d in itertools.product(*(range(w + 1) for w in tbl.window)):
            if hilbert_from_resolution(b, d) != tbl[d]:
                return False, f"resolution count differs from oracle on grid({t},{r}) at {d}"
    return True, "25 complete intersections"


def criterion_3():
    for st, x in zip(staircases_2d(), lifted_2d()):
        tbl = table(x)
        ind = indicator_of(st, tbl.window)
        verdict = is_acm(x, table=tbl)
        if not verdict.is_acm:
            return False, f"lift of {st.generators} not ACM"
        if not np.array_equal(tbl.values, cumulative_sum(ind)):
            return False, f"(b) oracle != partial sums for {st.generators}"
        if not np.array_equal(first_difference(tbl.values), ind):
            return False, f"(c) Delta H != indicator for {st.generators}"
        for d in itertools.product(*(range(w + 1) for w in tbl.window)):
            if hilbert_from_alpha(verdict.alpha, d) != tbl[d]:
                return False, f"(d) closed form differs at {d} for {st.generators}"
        cv = corners_vertices(verdict.delta)
        b = betti(verdict.alpha)
        if cv != (b.c_set, b.v_set):
            return False, f"(e) corners {cv} != betti {b} for {st.generators}"
    return True, f"{len(staircases_2d())} staircases in N^2"


def criterion_4():
    for st, x in zip(staircases_3d(), lifted_3d()):
        tbl = table(x)
        if not np.array_equal(tbl.values, cumulative_sum(indicator_of(st, tbl.window))):
            return False, f"oracle != 3-fold partial sums for {st.generators}"
    return True, f"{len(staircases_3d())} staircases in N^3"


def criterion_5():
    v = is_acm(gen_depth_example((1, 1), 1))
    if v.is_acm or v.alpha_conjugate != Partition((2,)) or v.beta != Partition((1, 1)):
        return False, f"depth-1 pair verdict wrong: {v.alpha_conjugate} vs {v.beta}"
    if v.delta[1, 1] != -1:
        return False, f"Delta H(1,1) = {v.delta[1, 1]}, expected -1"
    if not is_acm(gen_depth_example((1, 1), 2)).is_acm:
        return False, "depth-2 pair should be ACM"
    for l in (1, 2):
        delta = table(gen_depth_example((1, 1, 1), l)).delta()
        if delta.min() >= 0:
            return False, f"(P^1)^3 depth-{l} pair shows no negative Delta H"
    return True, "depth examples"


def criterion_6():
    acm = 0
    for x in random_p1p1():
        tbl = table(x)
        alpha, beta = alpha_beta(x)
        t, r = len(alpha), len(beta)
        b = border(x, check=False)
        if b.b_c != tuple(tbl[(t - 1, j)] for j in range(r)):
            return False, f"B_C formula != oracle on {len(x)}-point set"
        if b.b_r != tuple(tbl[(i, r - 1)] for i in range(t)):
            return False, f"B_R formula != oracle on {len(x)}-point set"
        if border_deltas(b) != (conjugate(alpha), conjugate(beta)):
            return False, f"Delta B != (alpha*, beta*) for alpha={alpha} beta={beta}"
        acm += conjugate(alpha) == beta
    return True, f"{len(random_p1p1())} sets ({acm} ACM)"


def criterion_7():
    for x in random_p1p1():
        alpha, beta = alpha_beta(x)
        sums = row_column_sums(table(x).delta(), len(alpha), len(beta))
        if sums != (conjugate(alpha), conjugate(beta)):
            return False, f"row/column sums {sums} for alpha={alpha} beta={beta}"
    return True, f"{len(random_p1p1())} sets"


def criterion_8():
    chains = 0
    for x in lifted_2d():
        alpha = alpha_beta(x)[0]
        while len(alpha) > 1:
            x = peel(x)
            a2, _ = alpha_beta(x)
            if a2 != Partition(alpha.parts[1:]):
                return False, f"peel left alpha={a2}, expected tail of {alpha}"
            if not is_acm(x, table=table(x)).is_acm:
                return False, "peeled set is not ACM"
            alpha = a2
            chains += 1
    return True, f"{chains} peel steps"


def criterion_9():
    for x in full_corpus():
        for i in range(1, x.k + 1):
            proj = table(projection(x, i)).values
            if axis_sequence(x, i) != tuple(int(v) for v in proj):
                return False, f"axis {i} sequence differs from projection"
    return True, f"{len(full_corpus())} sets"


def criterion_10():
    for x in full_corpus():
        tbl = table(x)
        modp = hilbert_table(x, prime=PRIME)
        if not np.array_equal(tbl.values, modp.values):
            return False, f"GF({PRIME}) table differs on a {len(x)}-point set"
    return True, f"{len(full_corpus())} tables over Q and GF({PRIME})"


def conditions(h: np.ndarray) -> tuple[bool, bool, bool]:
    """Literal check of the three staircase conditions over all cell pairs."""
    cells = list(itertools.product(*(range(n) for n in h.shape)))
    origin = h[(0,) * h.ndim] == 1
    values = all(h[c] in (0, 1) for c in cells if any(c))
    closed = all(h[bcell] == 0 for a in cells if h[a] == 0
                 for bcell in cells if all(x <= y for x, y in zip(a, bcell)))
    return bool(origin), bool(values), bool(closed)


def _random_indicator(rng: random.Random) -> np.ndarray:
    k = rng.randint(1, 3)
    shape = tuple(rng.randint(1, 5) for _ in range(k))
    h = np.ones(shape, dtype=np.int64)
    for _ in range(rng.randint(0, 4)):
        g = tuple(rng.randrange(n) for n in shape)
        if any(g):
            for c in itertools.product(*(range(n) for n in shape)):
                if all(x >= y for x, y in zip(c, g)):
                    h[c] = 0
    return h


def _mutate(h: np.ndarray, which: int, rng: random.Random):
    h = h.copy()
    cells = list(itertools.product(*(range(n) for n in h.shape)))
    if which == 0:
        h[(0,) * h.ndim] = rng.choice([0, 2, 3]) if h.size > 1 else rng.choice([2, 3])
        if h[(0,) * h.ndim] == 0:
            h[...] = 0
    elif which == 1:
        ones = [c for c in cells if any(c) and h[c] == 1]
        if not ones:
            return None
        h[rng.choice(ones)] = rng.choice([2, 3, -1])
    else:
        zeros = [c for c in cells if h[c] == 0]
        if not zeros:
            return None
        h[rng.choice(zeros)] = 1
    return h


def criterion_11():
    rng = random.Random(11)
    for _ in range(500):
        h = _random_indicator(rng)
        if conditions(h) != (True, True, True) or not validate_indicator(h):
            return False, f"generator produced an invalid indicator {h.tolist()}"
        if not np.array_equal(indicator_of(zero_set_staircase(h), tuple(n - 1 for n in h.shape)), h):
            return False, f"round trip fails on {h.tolist()}"
    rejected = 0
    while rejected < 500:
        which = rejected % 3
        m = _mutate(_random_indicator(rng), which, rng)
        if m is None:
            continue
        conds = conditions(m)
        if sum(conds) != 2 or conds[which]:
            continue
        if validate_indicator(m):
            return False, f"accepted a table breaking condition {which + 1}: {m.tolist()}"
        rejected += 1
    return True, "500 round trips, 500 single-condition mutants rejected"


CRITERIA: list[tuple[int, str, Callable, float | None]] = [
    (1, "partition calculus", criterion_1, 1.0),
    (2, "complete intersections", criterion_2, 5.0),
    (3, "lifting pipeline in N^2", criterion_3, 60.0),
    (4, "lifting pipeline in N^3", criterion_4, None),
    (5, "non-ACM detection", criterion_5, None),
    (6, "borders on arbitrary sets", criterion_6, 60.0),
    (7, "row and column sums", criterion_7, None),
    (8, "peel chains", criterion_8, None),
    (9, "projection consistency", criterion_9, None),
    (10, "prime vs rational oracle", criterion_10, None),
    (11, "staircase characterization", criterion_11, None),
]


def run(number: int) -> Result:
    num, title, fn, budget = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed criterion, reported as such
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    secs = time.perf_counter() - start
    if ok and budget is not None and secs >= budget:
        ok, detail = False, f"over the {budget:g}s budget; {detail}"
    return Result(num, title, ok, detail, secs)


def run_all(echo: Callable[[str], None] = print) -> list[Result]:
    results = []
    for num, *_ in CRITERIA:
        res = run(num)
        echo(res.line())
        results.append(res)
    return results
