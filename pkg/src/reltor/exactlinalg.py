"""Exact dense linear algebra over a prime field F_p or the rationals.

Matrices are plain numpy arrays.  Over F_p they are ``int64`` arrays holding
residues in ``[0, p)``; over Q they are ``object`` arrays of
:class:`fractions.Fraction`.  Every routine takes the field as its first
argument so that the arithmetic is unambiguous.

Pivoting is deterministic: columns are scanned left to right and the first
row with a nonzero entry is used.  Reduced row echelon forms are canonical,
so bases derived from them (kernels, complements) depend only on the
subspaces involved, not on the route taken to build the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.sparse as sp

__all__ = [
    "Inconsistent",
    "ShapeMismatch",
    "PrimeField",
    "RationalField",
    "rref",
    "rank",
    "sparse_rank",
    "kernel_basis",
    "solve",
    "image_basis",
    "intersect_columns",
    "quotient_basis",
    "echelon_basis",
    "in_span",
]


class Inconsistent(ValueError):
    """The right-hand side is not in the column space."""


class ShapeMismatch(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p with ``p < 2**31``."""

    p: int

    def __post_init__(self):
        if not (isinstance(self.p, (int, np.integer)) and _is_prime(int(self.p))):
            raise ValueError(f"p={self.p!r} is not prime")
        if self.p >= 2**31:
            raise ValueError("p must be below 2**31")

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def scalar(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.scalar(Fraction(x))
        return int(x) % self.p

    def array(self, data) -> np.ndarray:
        a = np.asarray(data)
        if a.dtype == object or a.dtype.kind in "US":
            flat = [self.scalar(x) for x in a.ravel()]
            return np.array(flat, dtype=np.int64).reshape(a.shape)
        return np.mod(a.astype(np.int64), self.p)

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return np.mod(a, self.p)

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in " + self.name)
        return pow(x, -1, self.p)

    def neg(self, a: np.ndarray) -> np.ndarray:
        return np.mod(-a, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
        inner = a.shape[1]
        bound = max(inner, 1) * (self.p - 1) ** 2
        if bound < 2**53:
            # BLAS in double precision is exact below 2**53
            out = a.astype(np.float64) @ b.astype(np.float64)
            return np.mod(out.astype(np.int64), self.p)
        if bound < 2**63:
            return np.mod(a @ b, self.p)
        out = a.astype(object) @ b.astype(object)
        return np.mod(out, self.p).astype(np.int64)

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return rng.integers(0, self.p, size=shape, dtype=np.int64)

    def to_json(self, x):
        return int(x)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class RationalField:
    """The rationals, with exact :class:`~fractions.Fraction` entries."""

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def scalar(self, x) -> Fraction:
        return Fraction(x)

    def array(self, data) -> np.ndarray:
        a = np.asarray(data, dtype=object)
        flat = [Fraction(x) for x in a.ravel()]
        out = np.empty(len(flat), dtype=object)
        out[:] = flat
        return out.reshape(a.shape)

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out

    def eye(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def reduce(self, a: np.ndarray) -> np.ndarray:
        return a

    def inv(self, x) -> Fraction:
        return 1 / Fraction(x)

    def neg(self, a: np.ndarray) -> np.ndarray:
        return -a

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")
        if a.shape[1] == 0:
            return self.zeros((a.shape[0], b.shape[1]))
        return np.dot(a, b)

    def random(self, rng: np.random.Generator, shape) -> np.ndarray:
        return self.array(rng.integers(-3, 4, size=shape))

    def to_json(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __str__(self):
        return "Q"


Field = PrimeField | RationalField


def _eliminate(F, a: np.ndarray, reduced: bool = True):
    """Row reduce a copy of ``a``; returns (matrix, pivot columns)."""
    A = np.array(a, copy=True)
    if A.ndim != 2:
        raise ShapeMismatch("expected a 2-d matrix")
    m, n = A.shape
    modp = isinstance(F, PrimeField)
    p = F.p if modp else None
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = A[r, c]
        if modp:
            if lead != 1:
                A[r, c:] = (A[r, c:] * pow(int(lead), -1, p)) % p
        elif lead != 1:
            A[r, c:] = A[r, c:] / lead
        if reduced:
            rows = np.flatnonzero(A[:, c])
            rows = rows[rows != r]
        else:
            rows = r + 1 + np.flatnonzero(A[r + 1:, c])
        if rows.size:
            cols = c + np.flatnonzero(A[r, c:])
            factors = A[rows, c]
            if cols.size * 2 < n - c:
                block = A[np.ix_(rows, cols)] - np.outer(factors, A[r, cols])
                A[np.ix_(rows, cols)] = block % p if modp else block
            else:
                block = A[rows, c:] - np.outer(factors, A[r, c:])
                A[rows, c:] = block % p if modp else block
        pivots.append(c)
        r += 1
    return A, pivots


def rref(F, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the strictly increasing pivot columns."""
    return _eliminate(F, m, reduced=True)


def _strip(m):
    """Drop all-zero rows and columns (they never affect rank)."""
    if sp.issparse(m):
        m = m.tocsr()
        m.eliminate_zeros()
        rows = np.flatnonzero(np.diff(m.indptr))
        m = m[rows].tocsc()
        cols = np.flatnonzero(np.diff(m.indptr))
        return m[:, cols].toarray()
    rows = np.flatnonzero(np.any(m != 0, axis=1))
    cols = np.flatnonzero(np.any(m != 0, axis=0))
    return m[np.ix_(rows, cols)]


def rank(F, m) -> int:
    if m.shape[0] == 0 or m.shape[1] == 0:
        return 0
    a = _strip(m)
    if a.size == 0:
        return 0
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(_eliminate(F, a, reduced=False)[1])


def sparse_rank(F, m) -> int:
    """Rank of a scipy.sparse matrix with entries already reduced mod p."""
    if m.shape[0] == 0 or m.shape[1] == 0 or m.nnz == 0:
        return 0
    a = _strip(m)
    if isinstance(F, PrimeField):
        a = np.mod(a.astype(np.int64), F.p)
    return rank(F, a)


def kernel_basis(F, m: np.ndarray) -> np.ndarray:
    """Columns spanning the null space, in canonical (rref-derived) form."""
    n = m.shape[1]
    if m.shape[0] == 0:
        return F.eye(n)
    R, piv = rref(F, m)
    pivset = set(piv)
    free = [c for c in range(n) if c not in pivset]
    K = F.zeros((n, len(free)))
    if free:
        K[free, range(len(free))] = F.scalar(1)
        if piv:
            K[np.ix_(piv, range(len(free)))] = F.neg(R[: len(piv)][:, free])
    return K


def solve(F, m: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Some ``x`` with ``m @ x == b``; raises :class:`Inconsistent` otherwise."""
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    if m.shape[0] != b.shape[0]:
        raise ShapeMismatch(f"row counts differ: {m.shape} vs {b.shape}")
    n = m.shape[1]
    if m.shape[0] == 0:
        x = F.zeros((n, b.shape[1]))
        return x.ravel() if vec else x
    aug = np.concatenate([m, b], axis=1)
    R, piv = rref(F, aug)
    if piv and piv[-1] >= n:
        raise Inconsistent("right-hand side is not in the column space")
    x = F.zeros((n, b.shape[1]))
    for i, pc in enumerate(piv):
        x[pc] = R[i, n:]
    return x.ravel() if vec else x


def image_basis(F, m: np.ndarray) -> np.ndarray:
    """Independent columns of ``m`` spanning its column space."""
    if m.shape[1] == 0:
        return m
    _, piv = _eliminate(F, m, reduced=False)
    return m[:, piv]


def echelon_basis(F, s: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Canonical basis ``E`` of the column span of ``s`` and its pivot rows.

    ``E[P]`` is the identity, so the coordinates of any ``v`` in the span are
    simply ``v[P]``.
    """
    n = s.shape[0]
    if s.shape[1] == 0:
        return F.zeros((n, 0)), []
    R, piv = rref(F, s.T)
    return R[: len(piv)].T.copy(), piv


def in_span(F, s: np.ndarray, v: np.ndarray) -> bool:
    E, P = echelon_basis(F, s)
    v = v.reshape(s.shape[0], -1)
    residue = v - F.matmul(E, v[P]) if P else v
    return not np.any(F.reduce(residue) != 0)


def intersect_columns(F, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Basis of span(a) ∩ span(b)."""
    if a.shape[0] != b.shape[0]:
        raise ShapeMismatch(f"ambient dimensions differ: {a.shape[0]} vs {b.shape[0]}")
    if a.shape[1] == 0 or b.shape[1] == 0:
        return F.zeros((a.shape[0], 0))
    K = kernel_basis(F, np.concatenate([a, F.neg(b)], axis=1))
    inter = F.matmul(a, K[: a.shape[1]])
    return image_basis(F, inter)


def quotient_basis(F, n: int, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Projection ``k^n -> k^n / span(s)`` and coset representatives.

    Returns ``(proj, reps)`` with ``proj @ s == 0`` and ``proj @ reps == I``.
    Representatives are standard basis vectors.
    """
    if s.shape[0] != n:
        raise ShapeMismatch(f"subspace lives in k^{s.shape[0]}, not k^{n}")
    E, P = echelon_basis(F, s)
    rest = [j for j in range(n) if j not in set(P)]
    proj = F.zeros((len(rest), n))
    reps = F.zeros((n, len(rest)))
    for t, j in enumerate(rest):
        proj[t, j] = F.scalar(1)
        reps[j, t] = F.scalar(1)
    if P:
        proj[:, P] = F.neg(E[rest])
    return proj, reps
