import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagsum import (Pattern, RatMatrix, certificate_holds, diagonal_width,
                     extreme_diagonal_sums, is_rcds_matrix, uniform,
                     width_upper_bound)
from diagsum.structure import NoDiagonalError
import brute
import data
from strategies import ds_matrices, patterns, random_ds

F = Fraction


@given(ds_matrices(max_n=7))
def test_extremes_match_enumeration(X):
    sums = brute.diagonal_sums(X)
    lo, hi = extreme_diagonal_sums(X)
    assert (lo.value, hi.value) == (min(sums), max(sums))
    assert certificate_holds(X, lo) and certificate_holds(X, hi)


@given(patterns(min_n=2, max_n=6), st.integers(0, 2**32))
def test_restricted_to_arbitrary_allowed_pattern(A, seed):
    rng = random.Random(seed)
    X = RatMatrix([[F(rng.randint(-5, 9), rng.randint(1, 4)) for _ in range(A.n_cols)]
                   for _ in range(A.n_rows)])
    diags = brute.diagonals(A)
    if not diags:
        with pytest.raises(NoDiagonalError):
            extreme_diagonal_sums(X, allowed=A)
        return
    sums = [sum((X[i, p[i]] for i in range(A.n_rows)), F(0)) for p in diags]
    lo, hi = extreme_diagonal_sums(X, allowed=A)
    assert (lo.value, hi.value) == (min(sums), max(sums))
    assert certificate_holds(X, lo, A) and certificate_holds(X, hi, A)


@given(ds_matrices(max_n=6), st.integers(0, 2**32))
def test_weak_duality(X, seed):
    """Any feasible lower dual is below the min, any upper dual above the max."""
    lo, hi = extreme_diagonal_sums(X)
    rng = random.Random(seed)
    n = X.n_rows
    shift = F(rng.randint(0, 5), 7)
    u = [a - shift for a in lo.potentials_u]
    assert sum(u, F(0)) + sum(lo.potentials_v, F(0)) <= lo.value
    u = [a + shift for a in hi.potentials_u]
    assert sum(u, F(0)) + sum(hi.potentials_v, F(0)) >= hi.value
    assert n == len(lo.potentials_u) == len(hi.potentials_v)


def test_certificate_rejects_tampering():
    X = RatMatrix([[F(1, 4), F(3, 4)], [F(3, 4), F(1, 4)]])
    lo, hi = extreme_diagonal_sums(X)
    assert lo.value == F(1, 2) and hi.value == F(3, 2)
    bad = type(lo)(lo.perm, lo.value, tuple(a + 1 for a in lo.potentials_u),
                   lo.potentials_v, "min")
    assert not certificate_holds(X, bad)


def test_no_diagonal():
    X = RatMatrix([[1, 1], [0, 0]])
    with pytest.raises(NoDiagonalError):
        extreme_diagonal_sums(X)
    assert not is_rcds_matrix(X)


def test_rcds_examples():
    for X in [uniform(4), data.ARROW_X, data.LOOPY6_X, data.FIVE_X,
              data.SIMPLEX_A, data.SIMPLEX_B, data.CORNER_326, data.STAIRCASE6,
              data.BLOCK10, data.CLASS1_322, *data.STAR.values()]:
        assert is_rcds_matrix(X)
        assert diagonal_width(X) == 0


def test_non_ds_is_not_rcds():
    assert not is_rcds_matrix(RatMatrix([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        diagonal_width(RatMatrix([[1, 1], [1, 1]]))


def test_width_two_by_two():
    X = RatMatrix([[F(1, 4), F(3, 4)], [F(3, 4), F(1, 4)]])
    assert diagonal_width(X) == 1


def test_loopy8_normalized_extremes():
    X = data.LOOPY8_HAT / 8
    lo, hi = extreme_diagonal_sums(X)
    assert (lo.value, hi.value) == (F(29, 8), F(30, 8))
    assert diagonal_width(X) == F(1, 8)


@given(ds_matrices(max_n=6))
def test_width_bound_from_certificates_is_tight(X):
    lo, hi = extreme_diagonal_sums(X)
    bound = width_upper_bound(X, lo.potentials_u, lo.potentials_v,
                              hi.potentials_u, hi.potentials_v)
    assert bound == diagonal_width(X)


def test_width_bound_from_trivial_potentials():
    rng = random.Random(5)
    for _ in range(20):
        X = random_ds(rng, 5)
        n = X.n_rows
        # 0 <= x_ij <= 1 gives the bound n
        bound = width_upper_bound(X, [0] * n, [0] * n, [1] * n, [0] * n)
        assert bound == n >= diagonal_width(X)


def test_width_bound_rejects_infeasible_potentials():
    X = uniform(2)
    with pytest.raises(ValueError):
        width_upper_bound(X, [1, 1], [0, 0], [1, 1], [0, 0])
    with pytest.raises(ValueError):
        width_upper_bound(X, [0, 0], [0, 0], [0, 0], [0, 0])


def test_identity_restricted_to_its_support():
    X = RatMatrix.identity(3)
    lo, hi = extreme_diagonal_sums(X)
    assert lo.value == hi.value == 3
    assert lo.perm == (0, 1, 2)
    assert is_rcds_matrix(X)
    assert extreme_diagonal_sums(X, allowed=Pattern.ones(3))[0].value == 0
