import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from reltor.exactlinalg import (
    Inconsistent,
    PrimeField,
    RationalField,
    image_basis,
    in_span,
    intersect_columns,
    kernel_basis,
    quotient_basis,
    rank,
    rref,
    solve,
)

F5 = PrimeField(5)
Q = RationalField()


def matrices(p, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def brute_rank(p, rows):
    """log_p of the number of distinct vectors in the row space."""
    a = np.array(rows, dtype=np.int64)
    span = {tuple((np.array(c) @ a) % p) for c in itertools.product(range(p), repeat=a.shape[0])}
    return round(np.log(len(span)) / np.log(p))


def test_rref_identity_and_zero():
    R, piv = rref(F5, F5.eye(3))
    assert np.array_equal(R, F5.eye(3)) and piv == [0, 1, 2]
    R, piv = rref(F5, F5.zeros((2, 5)))
    assert not R.any() and piv == []


def test_rref_hand_example():
    R, piv = rref(F5, F5.array([[2, 4], [1, 2]]))
    assert R.tolist() == [[1, 2], [0, 0]] and piv == [0]


def test_kernel_examples():
    assert kernel_basis(F5, F5.eye(3)).shape == (3, 0)
    assert kernel_basis(F5, F5.zeros((2, 4))).shape == (4, 4)
    K = kernel_basis(Q, Q.array([[1, 1]]))
    assert K.shape == (2, 1) and K[0, 0] == -K[1, 0] != 0


def test_solve_examples():
    b = F5.array([1, 2, 3])
    assert np.array_equal(solve(F5, F5.eye(3), b), b)
    with pytest.raises(Inconsistent):
        solve(F5, F5.zeros((2, 2)), F5.array([1, 0]))
    m = Q.array([[1, 2], [2, 4]])
    x = solve(Q, m, Q.array([1, 2]))
    assert list(Q.matmul(m, x.reshape(-1, 1)).ravel()) == [1, 2]


def test_quotient_and_intersection():
    e = F5.eye(3)
    proj, reps = quotient_basis(F5, 3, e[:, [0]])
    assert proj.shape == (2, 3) and not F5.matmul(proj, e[:, [0]]).any()
    assert np.array_equal(F5.matmul(proj, reps), F5.eye(2))
    inter = intersect_columns(F5, e[:, [0, 1]], e[:, [1, 2]])
    assert inter.shape[1] == 1 and in_span(F5, e[:, [1]], inter)


def test_rational_entries_stay_exact():
    m = Q.array([[Fraction(1, 3), Fraction(1, 2)], [Fraction(2, 3), 1]])
    assert rank(Q, m) == 1
    R, _ = rref(Q, m)
    assert R[0, 1] == Fraction(3, 2)


@pytest.mark.parametrize("p", [2, 3])
@given(data=st.data())
def test_rank_matches_brute_force(p, data):
    rows = data.draw(matrices(p, 4, 4))
    assert rank(PrimeField(p), PrimeField(p).array(rows)) == brute_rank(p, rows)


@given(rows=matrices(7, 6, 6))
def test_rank_nullity(rows):
    F = PrimeField(7)
    m = F.array(rows)
    K = kernel_basis(F, m)
    assert rank(F, m) + K.shape[1] == m.shape[1]
    assert not F.matmul(m, K).any()


@given(rows=matrices(5))
def test_rref_idempotent(rows):
    R, piv = rref(F5, F5.array(rows))
    R2, piv2 = rref(F5, R)
    assert np.array_equal(R, R2) and piv == piv2 == sorted(piv)


@given(rows=matrices(5), seed=st.integers(0, 10_000))
def test_solve_verifies(rows, seed):
    m = F5.array(rows)
    x0 = F5.random(np.random.default_rng(seed), (m.shape[1],))
    b = F5.matmul(m, x0.reshape(-1, 1)).ravel()
    x = solve(F5, m, b)
    assert np.array_equal(F5.matmul(m, x.reshape(-1, 1)).ravel(), b)


@given(rows=st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rational_rank_matches_float(rows):
    # small integer matrices: the float rank is reliable
    assert rank(Q, Q.array(rows)) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@given(x=st.integers(1, 12))
def test_fermat_inverse(x):
    F = PrimeField(13)
    assert F.inv(x) == pow(x, 11, 13)
    assert (x * F.inv(x)) % 13 == 1


@given(rows=matrices(5))
def test_image_basis_spans(rows):
    m = F5.array(rows)
    B = image_basis(F5, m)
    assert B.shape[1] == rank(F5, m)
    assert in_span(F5, B, m)
