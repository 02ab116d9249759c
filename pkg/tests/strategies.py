"""Hypothesis strategies and seeded generators shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from diagsum import Pattern, RatMatrix


@st.composite
def patterns(draw, min_n=1, max_n=6, square=True):
    n = draw(st.integers(min_n, max_n))
    m = n if square else draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * m, max_size=n * m))
    return Pattern([[int(bits[i * m + j]) for j in range(m)] for i in range(n)])


@st.composite
def rational_matrices(draw, min_n=1, max_n=6, lo=-9, hi=9, den=6):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(st.integers(lo, hi), min_size=n * n, max_size=n * n))
    dens = draw(st.lists(st.integers(1, den), min_size=n * n, max_size=n * n))
    return RatMatrix([[Fraction(vals[i * n + j], dens[i * n + j]) for j in range(n)]
                      for i in range(n)])


def random_ds(rng: random.Random, n: int, terms: int | None = None) -> RatMatrix:
    """Convex combination of at most ``n`` random permutation matrices."""
    k = terms if terms is not None else rng.randint(1, n)
    weights = [rng.randint(1, 9) for _ in range(k)]
    total = sum(weights)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for w in weights:
        perm = list(range(n))
        rng.shuffle(perm)
        for i, j in enumerate(perm):
            rows[i][j] += Fraction(w, total)
    return RatMatrix(rows)


@st.composite
def ds_matrices(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32))
    return random_ds(random.Random(seed), n)
