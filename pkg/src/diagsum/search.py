"""Seeded random search for RCDS patterns.

Random patterns go through the potential solver. A pattern whose potentials
are nonnegative on its support yields a doubly stochastic matrix with
constant restricted diagonal sums; cells where the potential sum is exactly
zero drop out, so the emitted support can be strictly smaller than the
drawn pattern.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .matrix import RatMatrix, diagonal_sum, support, to_rational
from .pattern import Pattern
from .potentials import potential_matrix, solve_potentials
from .structure import find_support_diagonal, is_fully_indecomposable

MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64 generator; identical streams on every platform."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def bernoulli(self, p: Fraction) -> bool:
        return Fraction(self.next() >> 11, 1 << 53) < p


@dataclass(frozen=True)
class SearchConfig:
    n: int
    density: Fraction
    trials: int
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "density", to_rational(self.density))
        if self.n < 1:
            raise ValueError("n must be positive")
        if not 0 < self.density < 1:
            raise ValueError("density must lie strictly between 0 and 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def random_pattern(n: int, density, rng: SplitMix64) -> Pattern:
    """I.i.d. Bernoulli(density) entries drawn in row-major order."""
    p = to_rational(density)
    return Pattern([[rng.bernoulli(p) for _ in range(n)] for _ in range(n)])


def run_trial(config: SearchConfig, trial: int) -> tuple[Pattern, RatMatrix] | None:
    """One independent trial on the sub-stream seeded by ``seed ^ trial``."""
    rng = SplitMix64(config.seed ^ trial)
    A = random_pattern(config.n, config.density, rng)
    if not is_fully_indecomposable(A):
        return None
    pot = solve_potentials(A)
    if any(pot.u[i] + pot.v[j] < 0 for i, j in A.positions()):
        return None
    X = potential_matrix(A, pot)
    return support(X), X


def discover(config: SearchConfig, workers: int = 1) -> list[tuple[Pattern, RatMatrix]]:
    """Run every trial and collect the emitted ``(support, matrix)`` pairs.

    Output order is trial order regardless of ``workers``.
    """
    trials = range(config.trials)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_trial, [config] * config.trials, trials,
                                    chunksize=max(1, config.trials // (4 * workers))))
    else:
        results = [run_trial(config, t) for t in trials]
    return [r for r in results if r is not None]


def record(pattern: Pattern, X: RatMatrix) -> str:
    """One JSON line describing a discovered pair."""
    perm = find_support_diagonal(pattern)
    return json.dumps({
        "n": X.n_rows,
        "pattern": ["".join(map(str, r)) for r in pattern.rows],
        "rows": [[str(x) for x in r] for r in X.rows],
        "constant_sum": str(diagonal_sum(X, perm)),
    })
