from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagsum import (Pattern, ZigZagSpec, brute_diagonal_stats, class1, corner_block,
                     decide_rcds_pattern, derangement_rcds, gale_ryser,
                     is_doubly_stochastic, is_rcds_matrix, regular_rcds, star_rcds,
                     support, tridiagonal_rcds, two_by_two_block, uniform, zigzag)
from diagsum.constructors import (circulant_pattern, conjugate, corner_block_spec,
                                  majorized, tridiagonal_system, zigzag_dimension_ok)
import data

F = Fraction


def assert_rcds(X, oracle_max=8):
    assert is_doubly_stochastic(X)
    assert is_rcds_matrix(X)
    if X.n_rows <= oracle_max:
        assert brute_diagonal_stats(X).all_equal


def test_uniform_and_regular():
    assert_rcds(uniform(5))
    X = regular_rcds(data.TWO_REGULAR_4, 2)
    assert_rcds(X)
    assert X == data.mat([[1, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]], 2)
    with pytest.raises(ValueError):
        regular_rcds(data.TWO_REGULAR_4, 3)


def test_tridiagonal_small_cases_by_hand():
    assert tridiagonal_rcds(2) == data.mat([[1, 1], [1, 1]], 2)
    assert tridiagonal_rcds(3) == data.mat([[3, 2, 0], [2, 1, 2], [0, 2, 3]], 5)
    x, h = tridiagonal_system(5)
    assert h[:3] == [4, F(15, 4), F(56, 15)]


@pytest.mark.parametrize("n", range(2, 9))
def test_tridiagonal_matches_potential_solver(n):
    X = tridiagonal_rcds(n)
    assert_rcds(X)
    d = decide_rcds_pattern(data.tridiagonal_pattern(n))
    assert d.is_rcds_pattern and d.realization == X


def test_tridiagonal_constant_sums():
    sums = [decide_rcds_pattern(data.tridiagonal_pattern(n)).constant_sum
            for n in range(2, 6)]
    assert sums == [1, F(7, 5), F(12, 7), F(39, 19)]


def test_star_family():
    for n, X in data.STAR.items():
        assert star_rcds(n) == X
        assert_rcds(X)
        d = decide_rcds_pattern(support(X))
        assert d.is_rcds_pattern and d.realization == X
    # the n = 4 matrix already loses its corner
    assert support(data.STAR[4]) == data.ARROW_TRIMMED
    for n in range(5, 12):
        assert star_rcds(n) is None
        assert not decide_rcds_pattern(data.star_pattern(n)).is_rcds_pattern


def test_corner_block_example():
    X = corner_block(3, 2, 6)
    assert X == data.CORNER_326
    assert_rcds(X)
    # two of the first rows take 1/3, the third 1/12, the rest 1/4 each
    assert brute_diagonal_stats(X)[:2] == (F(3, 2), F(3, 2))


@pytest.mark.parametrize("n", range(3, 8))
def test_corner_block_family(n):
    for r in range(2, n):
        for s in range(1, r):
            X = corner_block(r, s, n)
            assert_rcds(X)
            assert zigzag(corner_block_spec(r, s, n)) == X


def test_corner_block_rejects():
    with pytest.raises(ValueError):
        corner_block(2, 2, 4)


STAIRCASE_SPEC = ZigZagSpec(((2, 1), (2, 2), (2, 2), (2, 2), (2, 2), (2, 1)),
                            (F(1, 2), F(1, 4), F(1, 4), F(1, 4), F(1, 4), F(1, 2)))


def test_zigzag_example():
    X = zigzag(STAIRCASE_SPEC)
    assert X == data.STAIRCASE6
    assert_rcds(X)


def test_zigzag_rejections():
    assert zigzag_dimension_ok([2, 2, 2], [1, 2, 2, 1])
    assert not zigzag_dimension_ok([2, 2], [2, 2])
    with pytest.raises(ValueError):
        zigzag(ZigZagSpec(((2, 2), (2, 2)), (F(1, 4), F(1, 4))))
    with pytest.raises(ValueError):
        zigzag(ZigZagSpec(((2, 1), (2, 2), (2, 2)), (1, 1, 1), last_block_void=False))
    with pytest.raises(ValueError):
        zigzag(ZigZagSpec(STAIRCASE_SPEC.block_dims, (F(1, 2),) * 6))


def test_two_by_two_block_example():
    subs = data.block_sub_patterns(data.BLOCK10)
    X = two_by_two_block(1, 2, 3, 4, 5, subs)
    assert X == data.BLOCK10
    assert_rcds(X, oracle_max=10)
    Y = two_by_two_block(1, 2, 3, 4, 5)
    assert_rcds(Y, oracle_max=10)


def test_two_by_two_block_rejects():
    with pytest.raises(ValueError):
        two_by_two_block(1, 2, 3, 3, 5)
    with pytest.raises(ValueError):
        two_by_two_block(1, 1, 1, 1, 3, [circulant_pattern(3, 2)] * 4)


def test_class1_example():
    X = class1(3, 2, 2)
    assert_rcds(X)
    # any (0,1) bottom block with these line sums works; the printed one is
    # a different choice but the same class
    assert X.rows[:3] == data.CLASS1_322.rows[:3]
    assert_rcds(data.CLASS1_322)


@pytest.mark.parametrize("k,t,p", [(2, 1, 2), (3, 1, 2), (3, 3, 2), (2, 2, 3),
                                   (4, 2, 2), (3, 1, 1)])
def test_class1_family(k, t, p):
    assert_rcds(class1(k, t, p))


@pytest.mark.parametrize("n", range(2, 7))
def test_derangement(n):
    X = derangement_rcds(n)
    assert_rcds(X)
    assert brute_diagonal_stats(X).min == F(n, n - 1)


def test_simplex_matrices():
    assert brute_diagonal_stats(data.SIMPLEX_A).min == F(13, 4)
    # every diagonal of the second one sums to 31/9, e.g. 3+1+6+6+3+6+6
    st = brute_diagonal_stats(data.SIMPLEX_B)
    assert st.all_equal and st.min == F(31, 9)


def _gr_exists(R, S):
    m, n = len(R), len(S)
    for bits in product((0, 1), repeat=m * n):
        rows = [bits[i * n:(i + 1) * n] for i in range(m)]
        if [sum(r) for r in rows] == list(R) and \
                [sum(r[j] for r in rows) for j in range(n)] == list(S):
            return True
    return False


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3),
       st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_gale_ryser_matches_exhaustive_search(R, S):
    if sum(R) != sum(S):
        with pytest.raises(ValueError):
            gale_ryser(R, S)
        return
    P = gale_ryser(R, S)
    assert (P is not None) == _gr_exists(R, S)
    if P is not None:
        assert P.row_sums() == R and P.col_sums() == S


def test_majorization_helpers():
    assert conjugate([3, 1, 1], 3) == [3, 1, 1]
    assert conjugate([2, 2], 3) == [2, 2, 0]
    assert majorized([2, 1, 1], [3, 1, 0])
    assert not majorized([3, 1, 0], [2, 1, 1])


def test_circulant():
    P = circulant_pattern(5, 2)
    assert P.row_sums() == [2] * 5 == P.col_sums()
    assert support(regular_rcds(P, 2)) == P
    assert isinstance(Pattern.ones(2), Pattern)


def test_tridiagonal_bounds_close_only_at_the_start():
    for n in range(2, 51):
        x, h = tridiagonal_system(n)
        assert all(F(37, 10) < p <= F(15, 4) for p in h[1:])
        assert [p for p in h[1:] if p == F(15, 4)] == h[1:2]
        assert all(F(1, 5) < t <= F(1, 2) for t in x)
        assert (F(1, 2) in x) == (n == 2)
