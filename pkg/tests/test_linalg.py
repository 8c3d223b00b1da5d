import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from derivators import linalg


def matrices(max_side=6):
    return st.tuples(
        st.sampled_from([2, 3, 7]),
        st.integers(0, max_side),
        st.integers(0, max_side),
        st.integers(0, 2**31),
    ).map(lambda t: (t[0], linalg.random_matrix(np.random.default_rng(t[3]), t[1], t[2], t[0])))


@given(matrices())
def test_rank_matches_plain_elimination(pm):
    p, a = pm
    assert linalg.rank(a, p) == linalg.rank_bruteforce(a, p)


@given(matrices())
def test_nullspace_is_kernel_of_full_dimension(pm):
    p, a = pm
    n = linalg.nullspace(a, p)
    assert n.shape[1] == a.shape[1] - linalg.rank(a, p)
    if n.size:
        assert not linalg.matmul(a, n, p).any()
        assert linalg.rank(n, p) == n.shape[1]


@given(matrices())
def test_left_nullspace(pm):
    p, a = pm
    w = linalg.left_nullspace(a, p)
    assert w.shape[0] == a.shape[0] - linalg.rank(a, p)
    if w.size and a.size:
        assert not linalg.matmul(w, a, p).any()


@given(matrices(), st.integers(0, 2**31))
def test_solve_consistent_systems(pm, seed):
    p, a = pm
    rng = np.random.default_rng(seed)
    x0 = linalg.random_matrix(rng, a.shape[1], 2, p)
    b = linalg.matmul(a, x0, p)
    x = linalg.solve(a, b, p)
    assert x is not None
    assert np.array_equal(linalg.matmul(a, x, p), b)


def test_solve_inconsistent():
    a = np.array([[1, 0], [0, 0]])
    assert linalg.solve(a, np.array([[0], [1]]), 7) is None


def test_one_sided_inverses():
    p = 7
    a = np.array([[1, 2, 3], [0, 1, 4]])
    r = linalg.right_inverse(a, p)
    assert np.array_equal(linalg.matmul(a, r, p), linalg.eye(2))
    l = linalg.left_inverse(a.T.copy(), p)
    assert np.array_equal(linalg.matmul(l, a.T, p), linalg.eye(2))
    with pytest.raises(ValueError):
        linalg.right_inverse(np.array([[1, 1], [1, 1]]), p)


def test_row_reduce_small():
    r, piv = linalg.row_reduce(np.array([[2, 4], [1, 3]]), 5)
    assert piv == [0, 1]
    assert np.array_equal(r, linalg.eye(2))


def test_is_prime():
    assert [q for q in range(20) if linalg.is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19]
