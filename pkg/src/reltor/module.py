"""Finitely generated modules over a finite local algebra, as matrix representations.

A module is a k-space ``k^d`` with one ``d x d`` action matrix per ring basis
element.  Homomorphisms are k-matrices (target x source) commuting with every
action.  Subquotients, Hom, tensor products and duals are built by exact
linear algebra and always come with the maps that identify them.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .algebra import FiniteLocalAlgebra, load_ring, ring_to_json, ring_from_json
from .exactlinalg import (
    PrimeField,
    RationalField,
    echelon_basis,
    kernel_basis,
    quotient_basis,
    rank,
    rref,
    solve,
)


class RingMismatch(ValueError):
    pass


class InvalidModule(ValueError):
    pass


class NotAHom(ValueError):
    pass


class FDModule:
    """A finite-dimensional R-module given by its action matrices."""

    def __init__(self, ring: FiniteLocalAlgebra, actions, check: bool = True, name: str | None = None):
        self.ring = ring
        self.field = ring.field
        F = self.field
        acts = np.asarray(actions)
        if acts.ndim == 1 and acts.size == 0:
            acts = F.zeros((ring.dim, 0, 0))
        if acts.ndim != 3 or acts.shape[0] != ring.dim or acts.shape[1] != acts.shape[2]:
            raise InvalidModule(f"need {ring.dim} square action matrices, got shape {acts.shape}")
        self.actions = F.array(acts) if acts.dtype == object or isinstance(F, RationalField) else F.reduce(acts.astype(np.int64))
        self.actions.setflags(write=False)
        self.dim = acts.shape[1]
        self.name = name
        self._fp = None
        if check:
            self.validate()

    def validate(self) -> None:
        F, R, d = self.field, self.ring, self.dim
        A = self.actions
        if np.any(A[R.unit_index] != F.eye(d)):
            raise InvalidModule("the unit does not act as the identity")
        if d == 0:
            return
        n = R.dim
        flat = A.reshape(n, d * d)
        for i in range(n):
            for j in range(i, n):
                lhs = F.matmul(A[i], A[j])
                rhs = F.matmul(R.mult[i, j].reshape(1, -1), flat).reshape(d, d)
                if np.any(F.reduce(lhs) != rhs):
                    raise InvalidModule(f"action breaks b{i}*b{j} = sum c[{i}][{j}][l] b_l")

    def action(self, element) -> np.ndarray:
        """Matrix of multiplication by a ring element (coefficient vector)."""
        F = self.field
        e = F.array(element)
        if self.dim == 0:
            return F.zeros((0, 0))
        return F.matmul(e.reshape(1, -1), self.actions.reshape(self.ring.dim, -1)).reshape(self.dim, self.dim)

    def max_ideal_actions(self) -> list[np.ndarray]:
        """Actions of the maximal-ideal basis elements."""
        m = self.ring.max_ideal
        return [self.action(m[:, s]) for s in range(m.shape[1])]

    def fingerprint(self) -> str:
        if self._fp is None:
            h = hashlib.sha1()
            h.update(repr((self.field, self.ring.dim, self.dim)).encode())
            h.update(self.ring.mult.astype(str).tobytes() if self.ring.mult.dtype == object else self.ring.mult.tobytes())
            a = self.actions
            h.update(a.astype(str).tobytes() if a.dtype == object else np.ascontiguousarray(a).tobytes())
            self._fp = h.hexdigest()
        return self._fp

    def is_zero(self) -> bool:
        return self.dim == 0

    def same_as(self, other: "FDModule") -> bool:
        return self.dim == other.dim and self.ring.same_as(other.ring) and np.array_equal(self.actions, other.actions)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FDModule{label} dim={self.dim} over {self.ring.name}>"


@dataclass
class ModuleHom:
    source: FDModule
    target: FDModule
    matrix: np.ndarray

    def __post_init__(self):
        shape = (self.target.dim, self.source.dim)
        if self.matrix.shape != shape:
            raise NotAHom(f"matrix shape {self.matrix.shape} does not match {shape}")

    @property
    def field(self):
        return self.source.field

    def is_valid(self) -> bool:
        F = self.field
        if self.matrix.size == 0:
            return True
        for l in range(self.source.ring.dim):
            lhs = F.matmul(self.matrix, self.source.actions[l])
            rhs = F.matmul(self.target.actions[l], self.matrix)
            if np.any(lhs != rhs):
                return False
        return True

    def check(self) -> "ModuleHom":
        if not self.is_valid():
            raise NotAHom("matrix does not commute with the ring action")
        return self

    def __matmul__(self, other: "ModuleHom") -> "ModuleHom":
        return ModuleHom(other.source, self.target, self.field.matmul(self.matrix, other.matrix))

    def rank(self) -> int:
        return rank(self.field, self.matrix)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()

    def is_zero(self) -> bool:
        return not np.any(self.matrix != 0)


def identity(M: FDModule) -> ModuleHom:
    return ModuleHom(M, M, M.field.eye(M.dim))


def zero_hom(M: FDModule, N: FDModule) -> ModuleHom:
    return ModuleHom(M, N, M.field.zeros((N.dim, M.dim)))


def _same_ring(*mods: FDModule) -> None:
    R = mods[0].ring
    for M in mods[1:]:
        if not M.ring.same_as(R):
            raise RingMismatch("modules live over different rings")


# -- subquotients ---------------------------------------------------------


class Subquotient:
    """The module ``top / bottom`` for R-stable subspaces ``bottom <= top <= M``.

    ``reps`` lifts the chosen basis back into ``M``; ``coords`` sends vectors
    of ``top`` to coordinates in that basis.
    """

    def __init__(self, ambient: FDModule, top: np.ndarray | None = None, bottom: np.ndarray | None = None):
        F = ambient.field
        n = ambient.dim
        self.ambient = ambient
        top = F.eye(n) if top is None else top
        bottom = F.zeros((n, 0)) if bottom is None else bottom
        if bottom.shape[1] and np.any(bottom != 0):
            self._proj, _ = quotient_basis(F, n, bottom)
        else:
            self._proj = None
        img = self._project(top)
        if img.shape[1]:
            _, piv = rref(F, img)
        else:
            piv = []
        B = img[:, piv]
        E, P = echelon_basis(F, B)
        self._P = P
        q = len(P)
        if q:
            change = solve(F, B[P], F.eye(q))
            self.reps = F.matmul(top[:, piv], change)
        else:
            self.reps = F.zeros((n, 0))
        acts = F.zeros((ambient.ring.dim, q, q))
        for l in range(ambient.ring.dim):
            if q:
                acts[l] = self.coords(F.matmul(ambient.actions[l], self.reps))
        self.module = FDModule(ambient.ring, acts, check=False)

    def _project(self, v: np.ndarray) -> np.ndarray:
        if self._proj is None:
            return v
        return self.ambient.field.matmul(self._proj, v)

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of vectors of ``top`` modulo ``bottom``."""
        vec = v.ndim == 1
        v = v.reshape(self.ambient.dim, -1)
        out = self._project(v)[self._P]
        return out.ravel() if vec else out

    @property
    def dim(self) -> int:
        return self.module.dim

    def inclusion(self) -> ModuleHom:
        """Valid when ``bottom`` is zero."""
        return ModuleHom(self.module, self.ambient, self.reps)

    def projection(self) -> ModuleHom:
        """Valid when ``top`` is everything."""
        F = self.ambient.field
        return ModuleHom(self.ambient, self.module, self.coords(F.eye(self.ambient.dim)))


def submodule(M: FDModule, vectors: np.ndarray) -> Subquotient:
    """The submodule generated by the given columns."""
    return Subquotient(M, _generated(M, vectors))


def _generated(M: FDModule, vectors: np.ndarray) -> np.ndarray:
    F = M.field
    span = vectors
    acts = M.max_ideal_actions()
    # closing under the maximal ideal suffices: R = k + m
    while True:
        E, _ = echelon_basis(F, span) if span.shape[1] else (span, [])
        new = [F.matmul(A, E) for A in acts if E.shape[1]]
        cand = np.concatenate([E] + new, axis=1) if new else E
        if rank(F, cand) == E.shape[1]:
            return E
        span = cand


def kernel(f: ModuleHom) -> Subquotient:
    return Subquotient(f.source, kernel_basis(f.field, f.matrix))


def image(f: ModuleHom) -> Subquotient:
    return Subquotient(f.target, f.matrix)


def cokernel(f: ModuleHom) -> Subquotient:
    return Subquotient(f.target, None, f.matrix)


def quotient(M: FDModule, sub: np.ndarray) -> Subquotient:
    return Subquotient(M, None, _generated(M, sub))


# -- basic constructions --------------------------------------------------


def free_module(R: FiniteLocalAlgebra, n: int) -> FDModule:
    """R^n with basis index ``j * dim R + l`` for ``b_l`` in summand ``j``."""
    F = R.field
    acts = F.zeros((R.dim, n * R.dim, n * R.dim))
    for l in range(R.dim):
        for j in range(n):
            s = slice(j * R.dim, (j + 1) * R.dim)
            acts[l, s, s] = R.left[l]
    return FDModule(R, acts, check=False, name=f"R^{n}" if n != 1 else "R")


def residue_field_module(R: FiniteLocalAlgebra) -> FDModule:
    F = R.field
    acts = F.array(R.residue).reshape(R.dim, 1, 1)
    return FDModule(R, acts, check=False, name="k")


def zero_module(R: FiniteLocalAlgebra) -> FDModule:
    return FDModule(R, R.field.zeros((R.dim, 0, 0)), check=False, name="0")


def maximal_ideal_module(R: FiniteLocalAlgebra) -> FDModule:
    return Subquotient(free_module(R, 1), R.max_ideal).module


def matlis_dual(M: FDModule) -> FDModule:
    acts = np.ascontiguousarray(np.transpose(M.actions, (0, 2, 1)))
    return FDModule(M.ring, acts, check=False, name=f"{M.name}^v" if M.name else None)


def dual_hom(f: ModuleHom, source_dual: FDModule | None = None, target_dual: FDModule | None = None) -> ModuleHom:
    """The Matlis dual ``f^v : N^v -> M^v`` (transpose)."""
    return ModuleHom(
        target_dual or matlis_dual(f.target),
        source_dual or matlis_dual(f.source),
        np.ascontiguousarray(f.matrix.T),
    )


@dataclass
class DirectSum:
    module: FDModule
    injections: list[ModuleHom]
    projections: list[ModuleHom]


def direct_sum(*mods: FDModule) -> DirectSum:
    if not mods:
        raise ValueError("need at least one summand")
    _same_ring(*mods)
    R, F = mods[0].ring, mods[0].field
    d = sum(M.dim for M in mods)
    acts = F.zeros((R.dim, d, d))
    off = 0
    for M in mods:
        acts[:, off : off + M.dim, off : off + M.dim] = M.actions
        off += M.dim
    S = FDModule(R, acts, check=False)
    inj, pro = [], []
    off = 0
    for M in mods:
        e = F.zeros((d, M.dim))
        e[off : off + M.dim] = F.eye(M.dim)
        inj.append(ModuleHom(M, S, e))
        pro.append(ModuleHom(S, M, np.ascontiguousarray(e.T)))
        off += M.dim
    return DirectSum(S, inj, pro)


def direct_power(M: FDModule, n: int) -> FDModule:
    if n == 0:
        return zero_module(M.ring)
    return direct_sum(*([M] * n)).module


def annihilator(M: FDModule) -> np.ndarray:
    """Basis (columns, ring coordinates) of ``{r : r M = 0}``."""
    F, R = M.field, M.ring
    if M.dim == 0:
        return F.eye(R.dim)
    mat = np.ascontiguousarray(M.actions.reshape(R.dim, -1).T)
    return kernel_basis(F, mat)


def ideal_contains(F, big: np.ndarray, small: np.ndarray) -> bool:
    if small.shape[1] == 0:
        return True
    if big.shape[1] == 0:
        return not np.any(small != 0)
    return rank(F, np.concatenate([big, small], axis=1)) == rank(F, big)


def minimal_generators(M: FDModule) -> tuple[int, np.ndarray]:
    """``beta_0(M)`` and columns of ``M`` lifting a basis of ``M / mM``."""
    F = M.field
    if M.dim == 0:
        return 0, F.zeros((0, 0))
    mM = np.concatenate(M.max_ideal_actions() or [F.zeros((M.dim, 0))], axis=1)
    _, reps = quotient_basis(F, M.dim, mM)
    return reps.shape[1], reps


def radical_quotient(M: FDModule) -> np.ndarray:
    """Projection ``M -> M / mM`` as a k-matrix."""
    F = M.field
    mM = np.concatenate(M.max_ideal_actions() or [F.zeros((M.dim, 0))], axis=1)
    proj, _ = quotient_basis(F, M.dim, mM)
    return proj


# -- Hom ---------------------------------------------------------------------


class HomSpace:
    """``Hom_R(M, N)`` as a subspace of ``Hom_k(M, N)`` plus its module structure.

    Maps are vectorised row-major: entry ``(a, b)`` of a ``dN x dM`` matrix
    sits at index ``a * dM + b``.
    """

    def __init__(self, M: FDModule, N: FDModule):
        _same_ring(M, N)
        F = M.field
        self.source, self.target = M, N
        dM, dN = M.dim, N.dim
        n = dM * dN
        if n == 0:
            self.basis, self.pivots = F.zeros((0, 0)), []
        else:
            blocks = []
            IM, IN = F.eye(dM), F.eye(dN)
            for l in range(M.ring.dim):
                if l == M.ring.unit_index:
                    continue
                blocks.append(F.reduce(np.kron(N.actions[l], IM) - np.kron(IN, M.actions[l].T)))
            system = np.concatenate(blocks, axis=0) if blocks else F.zeros((0, n))
            K = kernel_basis(F, system)
            self.basis, self.pivots = echelon_basis(F, K)
        h = self.basis.shape[1]
        acts = F.zeros((M.ring.dim, h, h))
        for l in range(M.ring.dim):
            for s in range(h):
                acts[l][:, s] = self.coords_of(F.matmul(N.actions[l], self.matrix(s)))
        self.module = FDModule(M.ring, acts, check=False)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def matrix(self, s: int) -> np.ndarray:
        return self.basis[:, s].reshape(self.target.dim, self.source.dim)

    def to_map(self, coords) -> ModuleHom:
        F = self.source.field
        c = F.array(coords).reshape(-1, 1)
        vec = F.matmul(self.basis, c).ravel() if self.dim else F.zeros(self.target.dim * self.source.dim)
        return ModuleHom(self.source, self.target, vec.reshape(self.target.dim, self.source.dim))

    def coords_of(self, f) -> np.ndarray:
        mat = f.matrix if isinstance(f, ModuleHom) else f
        return mat.reshape(-1)[self.pivots]

    def maps(self) -> list[ModuleHom]:
        return [ModuleHom(self.source, self.target, self.matrix(s)) for s in range(self.dim)]


def hom_module(M: FDModule, N: FDModule) -> tuple[FDModule, HomSpace]:
    H = HomSpace(M, N)
    return H.module, H


def hom_postcompose(L: FDModule, f: ModuleHom, src: HomSpace | None = None, tgt: HomSpace | None = None) -> ModuleHom:
    """``Hom(L, f) : Hom(L, M) -> Hom(L, M')``."""
    F = f.field
    src = src or HomSpace(L, f.source)
    tgt = tgt or HomSpace(L, f.target)
    cols = [tgt.coords_of(F.matmul(f.matrix, src.matrix(s))) for s in range(src.dim)]
    mat = np.stack(cols, axis=1) if cols else F.zeros((tgt.dim, 0))
    return ModuleHom(src.module, tgt.module, mat)


def hom_precompose(f: ModuleHom, N: FDModule, src: HomSpace | None = None, tgt: HomSpace | None = None) -> ModuleHom:
    """``Hom(f, N) : Hom(M', N) -> Hom(M, N)`` for ``f : M -> M'``."""
    F = f.field
    src = src or HomSpace(f.target, N)
    tgt = tgt or HomSpace(f.source, N)
    cols = [tgt.coords_of(F.matmul(src.matrix(s), f.matrix)) for s in range(src.dim)]
    mat = np.stack(cols, axis=1) if cols else F.zeros((tgt.dim, 0))
    return ModuleHom(src.module, tgt.module, mat)


# -- tensor ------------------------------------------------------------------


class TensorProduct:
    """``M (x)_R N`` as a quotient of ``M (x)_k N`` (index ``i * dN + j``)."""

    def __init__(self, M: FDModule, N: FDModule):
        _same_ring(M, N)
        F = M.field
        self.left, self.right = M, N
        dM, dN = M.dim, N.dim
        self.ambient = _kron_module(M, N, side="left")
        rels = []
        if dM * dN:
            IM, IN = F.eye(dM), F.eye(dN)
            for l in range(M.ring.dim):
                if l != M.ring.unit_index:
                    rels.append(F.reduce(np.kron(M.actions[l], IN) - np.kron(IM, N.actions[l])))
        rel = np.concatenate(rels, axis=1) if rels else F.zeros((dM * dN, 0))
        self._sq = Subquotient(self.ambient, None, rel)
        self.module = self._sq.module
        self.projection_matrix = self._sq.coords(F.eye(dM * dN)) if dM * dN else F.zeros((0, 0))
        self.reps = self._sq.reps

    @property
    def dim(self) -> int:
        return self.module.dim

    def pure(self, i: int, j: int) -> np.ndarray:
        """Class of ``m_i (x) n_j``."""
        return self.projection_matrix[:, i * self.right.dim + j]


def _kron_module(M: FDModule, N: FDModule, side: str) -> FDModule:
    F = M.field
    acts = F.zeros((M.ring.dim, M.dim * N.dim, M.dim * N.dim))
    for l in range(M.ring.dim):
        acts[l] = np.kron(M.actions[l], F.eye(N.dim)) if side == "left" else np.kron(F.eye(M.dim), N.actions[l])
    return FDModule(M.ring, acts, check=False)


def tensor_module(M: FDModule, N: FDModule) -> tuple[FDModule, TensorProduct]:
    T = TensorProduct(M, N)
    return T.module, T


def tensor_map(f: ModuleHom, g: ModuleHom, src: TensorProduct | None = None, tgt: TensorProduct | None = None) -> ModuleHom:
    """``f (x) g`` between tensor products."""
    F = f.field
    src = src or TensorProduct(f.source, g.source)
    tgt = tgt or TensorProduct(f.target, g.target)
    big = F.reduce(np.kron(f.matrix, g.matrix))
    mat = F.matmul(tgt.projection_matrix, F.matmul(big, src.reps)) if src.dim and tgt.dim else F.zeros((tgt.dim, src.dim))
    return ModuleHom(src.module, tgt.module, mat)


def swap_map(M: FDModule, N: FDModule) -> ModuleHom:
    """The isomorphism ``M (x) N -> N (x) M``."""
    F = M.field
    A, B = TensorProduct(M, N), TensorProduct(N, M)
    perm = F.zeros((M.dim * N.dim, M.dim * N.dim))
    for i in range(M.dim):
        for j in range(N.dim):
            perm[j * M.dim + i, i * N.dim + j] = F.scalar(1)
    mat = F.matmul(B.projection_matrix, F.matmul(perm, A.reps)) if A.dim else F.zeros((B.dim, A.dim))
    return ModuleHom(A.module, B.module, mat)


# -- natural maps --------------------------------------------------------------


def evaluation_map(C: FDModule, M: FDModule) -> ModuleHom:
    """``C (x) Hom(C, M) -> M``, ``c (x) phi -> phi(c)``."""
    F = C.field
    H = HomSpace(C, M)
    T = TensorProduct(C, H.module)
    h = H.dim
    big = F.zeros((M.dim, C.dim * h))
    for i in range(C.dim):
        for s in range(h):
            big[:, i * h + s] = H.matrix(s)[:, i]
    mat = F.matmul(big, T.reps) if T.dim else F.zeros((M.dim, 0))
    return ModuleHom(T.module, M, mat)


def biduality_map(C: FDModule, M: FDModule) -> ModuleHom:
    """``M -> Hom(C, C (x) M)``, ``m -> (c -> c (x) m)``."""
    F = C.field
    T = TensorProduct(C, M)
    H = HomSpace(C, T.module)
    cols = []
    for j in range(M.dim):
        X = F.zeros((T.dim, C.dim))
        for i in range(C.dim):
            X[:, i] = T.pure(i, j)
        cols.append(H.coords_of(X))
    mat = np.stack(cols, axis=1) if cols else F.zeros((H.dim, 0))
    return ModuleHom(M, H.module, mat)


def homothety_map(C: FDModule) -> ModuleHom:
    """``R -> Hom(C, C)``, ``r -> multiplication by r``."""
    R = C.ring
    H = HomSpace(C, C)
    mat = np.stack([H.coords_of(C.actions[l]) for l in range(R.dim)], axis=1)
    return ModuleHom(free_module(R, 1), H.module, mat)


# -- isomorphism testing -------------------------------------------------------

EXHAUST_LIMIT = 2**20
RANDOM_DRAWS_FP = 64
RANDOM_DRAWS_Q = 8


@dataclass
class IsoVerdict:
    status: str  # "YES", "NO" or "NO-UNCERTIFIED"
    witness: ModuleHom | None = None
    reason: str = ""

    def __bool__(self):
        return self.status == "YES"


def _batched_nonsingular(p: int, mats: np.ndarray) -> np.ndarray:
    """Which of a stack of square matrices over F_p are invertible."""
    a = np.mod(mats, p)
    N, b, _ = a.shape
    ok = np.ones(N, dtype=bool)
    idx = np.arange(N)
    for c in range(b):
        nz = a[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        r = c + nz.argmax(axis=1)
        rc, rr = a[idx, c].copy(), a[idx, r].copy()
        a[idx, c], a[idx, r] = rr, rc
        piv = a[idx, c, c]
        inv = np.zeros(N, dtype=np.int64)
        for v in np.unique(piv):
            if v:
                inv[piv == v] = pow(int(v), -1, p)
        a[:, c] = np.mod(a[:, c] * inv[:, None], p)
        factors = a[:, :, c].copy()
        factors[:, c] = 0
        a = np.mod(a - factors[:, :, None] * a[:, c][:, None, :], p)
    return ok


def is_isomorphic(M: FDModule, N: FDModule, seed: int = 0) -> IsoVerdict:
    _same_ring(M, N)
    F = M.field
    if M.dim != N.dim:
        return IsoVerdict("NO", reason=f"dimensions differ: {M.dim} vs {N.dim}")
    b0, gens = minimal_generators(M)
    b0N, _ = minimal_generators(N)
    if b0 != b0N:
        return IsoVerdict("NO", reason=f"minimal generator counts differ: {b0} vs {b0N}")
    if M.dim == 0:
        return IsoVerdict("YES", ModuleHom(M, N, F.zeros((0, 0))), "both zero")
    H = HomSpace(M, N)
    if H.dim == 0:
        return IsoVerdict("NO", reason="Hom(M, N) = 0")
    # f is bijective iff it induces a bijection M/mM -> N/mN (Nakayama)
    topN = radical_quotient(N)
    tops = np.stack(
        [F.matmul(topN, F.matmul(H.matrix(s), gens)).reshape(-1) for s in range(H.dim)], axis=1
    )
    _, piv = rref(F, tops)
    r = len(piv)
    if r == 0:
        return IsoVerdict("NO", reason="every map M -> N lands in mN")
    sub = tops[:, piv]

    def witness(c) -> ModuleHom:
        full = F.zeros(H.dim)
        full[piv] = c
        f = H.to_map(full)
        assert f.is_iso()
        return f

    if isinstance(F, PrimeField) and F.p**r <= EXHAUST_LIMIT:
        total = F.p**r
        chunk = 1 << 14
        for start in range(0, total, chunk):
            ids = np.arange(start, min(total, start + chunk), dtype=np.int64)
            digits = np.stack([(ids // F.p**t) % F.p for t in range(r)], axis=1)
            mats = np.mod(digits @ sub.T, F.p).reshape(-1, b0, b0)
            good = np.flatnonzero(_batched_nonsingular(F.p, mats))
            if good.size:
                return IsoVerdict("YES", witness(digits[good[0]]), "exhaustive search")
        return IsoVerdict("NO", reason=f"exhaustive search over {total} top maps found no bijection")
    rng = np.random.default_rng(seed)
    draws = RANDOM_DRAWS_Q if isinstance(F, RationalField) else RANDOM_DRAWS_FP
    for _ in range(draws):
        c = F.random(rng, r)
        top = F.reduce(F.matmul(sub, c.reshape(-1, 1))).reshape(b0, b0)
        if rank(F, top) == b0:
            return IsoVerdict("YES", witness(c), "random search")
    return IsoVerdict("NO-UNCERTIFIED", reason=f"{draws} random draws found no bijection")


# -- JSON ------------------------------------------------------------------------


def module_to_json(M: FDModule, ring_ref=None) -> dict:
    F = M.field
    return {
        "ring": ring_ref if ring_ref is not None else ring_to_json(M.ring),
        "dim": M.dim,
        "actions": [[[F.to_json(x) for x in row] for row in A] for A in M.actions],
    }


def module_from_json(doc: dict, ring: FiniteLocalAlgebra | None = None, field=None) -> FDModule:
    if ring is None:
        ref = doc.get("ring")
        if isinstance(ref, dict):
            ring = ring_from_json(ref)
        elif isinstance(ref, str):
            ring = load_ring(ref, field)
        else:
            raise InvalidModule("module file does not name its ring")
    d = int(doc["dim"])
    F = ring.field
    acts = doc["actions"]
    if d == 0:
        arr = F.zeros((ring.dim, 0, 0))
    else:
        arr = F.array(np.array(acts, dtype=object))
    if arr.shape != (ring.dim, d, d):
        raise InvalidModule(f"actions have shape {arr.shape}, expected {(ring.dim, d, d)}")
    return FDModule(ring, arr, check=True)


def dumps_module(M: FDModule) -> str:
    return json.dumps(module_to_json(M))
