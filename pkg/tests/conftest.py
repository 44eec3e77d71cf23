import itertools
from fractions import Fraction

import pytest
import sympy


def sympy_rank(rows):
    """Independent rank oracle."""
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in r]
                         for r in rows]).rank()


def brute_rank(rows):
    """Largest k with a nonzero k x k minor, via permutation expansion."""
    n, m = len(rows), len(rows[0]) if rows else 0

    def det(mat):
        k = len(mat)
        total = Fraction(0)
        for perm in itertools.permutations(range(k)):
            inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            prod = Fraction(1)
            for i, j in enumerate(perm):
                prod *= mat[i][j]
            total += -prod if inv % 2 else prod
        return total

    for k in range(min(n, m), 0, -1):
        for rs in itertools.combinations(range(n), k):
            for cs in itertools.combinations(range(m), k):
                if det([[Fraction(rows[i][j]) for j in cs] for i in rs]) != 0:
                    return k
    return 0


@pytest.fixture
def grid22():
    from multihilb import gen_grid
    return gen_grid(2, 2)
