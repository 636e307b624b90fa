"""Minimal free resolutions, Tor and Ext, homology, and long exact sequences.

A free module ``R^b`` uses the basis index ``j * dim R + l`` (summand ``j``,
ring basis element ``b_l``).  A differential between free modules is stored
as its ring matrix: an array ``D`` of shape ``(dim R, b_out, b_in)`` with
``D[l, a, j]`` the coefficient of ``b_l`` in entry ``(a, j)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field as dc_field

import numpy as np
import scipy.sparse as sp

from .algebra import FiniteLocalAlgebra
from .exactlinalg import (
    PrimeField,
    RationalField,
    kernel_basis,
    quotient_basis,
    rank,
    rref,
    solve,
    sparse_rank,
)
from .module import (
    FDModule,
    ModuleHom,
    Subquotient,
    free_module,
    minimal_generators,
    zero_module,
)


class NotExact(ValueError):
    pass


class IndexOutOfRange(IndexError):
    pass


# -- free-module helpers -------------------------------------------------------


def act_on_free(R: FiniteLocalAlgebra, l: int, v: np.ndarray) -> np.ndarray:
    """``b_l * v`` for columns ``v`` of ``R^b``."""
    F = R.field
    r = R.dim
    n, c = v.shape
    b = n // r
    blocks = v.reshape(b, r, c)
    out = np.matmul(R.left[l][None], blocks)
    return F.reduce(out).reshape(n, c)


def ring_matrix_to_k(R: FiniteLocalAlgebra, D: np.ndarray) -> np.ndarray:
    """k-matrix ``R^b_in -> R^b_out`` of a ring matrix."""
    F = R.field
    r, bo, bi = D.shape
    # column j*r + m is b_m * (column j), row a*r + t
    out = F.zeros((bo, r, bi, r))
    for m in range(r):
        # (b_m * sum_l D[l] b_l) in coordinates = sum_l D[l] * left[m] e_l
        out[:, :, :, m] = np.einsum("lab,tl->atb", D, R.left[m]) if isinstance(F, RationalField) else np.tensordot(D, R.left[m].T, axes=([0], [0])).transpose(0, 2, 1)
    return F.reduce(out).reshape(bo * r, bi * r)


def vectors_to_ring_matrix(R: FiniteLocalAlgebra, G: np.ndarray) -> np.ndarray:
    """Ring matrix whose columns are the given vectors of ``R^b``."""
    r = R.dim
    n, c = G.shape
    return np.ascontiguousarray(G.reshape(n // r, r, c).transpose(1, 0, 2))


def tensor_ring_matrix(N: FDModule, D: np.ndarray, sparse: bool = True):
    """``D (x) N : N^b_in -> N^b_out`` as the k-matrix ``sum_l D_l (x) A_l``."""
    F = N.field
    r, bo, bi = D.shape
    d = N.dim
    if sparse and isinstance(F, PrimeField):
        acc = sp.csr_matrix((bo * d, bi * d), dtype=np.int64)
        for l in range(r):
            if np.any(D[l]) and np.any(N.actions[l]):
                acc = acc + sp.kron(sp.csr_matrix(D[l]), sp.csr_matrix(N.actions[l]), format="csr")
        acc.data %= F.p
        acc.eliminate_zeros()
        return acc
    out = F.zeros((bo * d, bi * d))
    for l in range(r):
        if np.any(D[l] != 0) and np.any(N.actions[l] != 0):
            out = out + np.kron(D[l], N.actions[l])
    return F.reduce(out)


def hom_ring_matrix(N: FDModule, D: np.ndarray, sparse: bool = True):
    """``Hom(D, N) : N^b_out -> N^b_in``, ``sum_l D_l^T (x) A_l``."""
    return tensor_ring_matrix(N, np.ascontiguousarray(D.transpose(0, 2, 1)), sparse)


def _rank_any(F, m) -> int:
    if sp.issparse(m):
        return sparse_rank(F, m)
    return rank(F, m)


def _dense(m):
    return m.toarray() if sp.issparse(m) else m


def power_module(N: FDModule, b: int) -> FDModule:
    """``N^b`` (summand-major)."""
    F = N.field
    acts = F.zeros((N.ring.dim, b * N.dim, b * N.dim))
    for l in range(N.ring.dim):
        acts[l] = np.kron(F.eye(b), N.actions[l])
    return FDModule(N.ring, acts, check=False)


# -- resolutions -------------------------------------------------------------------


@dataclass
class FreeResolution:
    """Minimal free resolution ``... -> R^b1 -> R^b0 -> M``.

    ``diffs[i]`` (``i >= 1``) is the ring matrix of ``d_i : R^b_i -> R^b_(i-1)``;
    ``augmentation`` is the k-matrix ``R^b0 -> M``.
    """

    target: FDModule
    betti: list[int]
    diffs: list[np.ndarray | None]
    augmentation: np.ndarray
    generators: np.ndarray
    complete: bool = False
    _kernel_gens: np.ndarray | None = dc_field(default=None, repr=False)

    @property
    def ring(self) -> FiniteLocalAlgebra:
        return self.target.ring

    @property
    def length(self) -> int:
        return len(self.betti) - 1

    def term(self, i: int) -> FDModule:
        return free_module(self.ring, self.betti[i] if i < len(self.betti) else 0)

    def ring_diff(self, i: int) -> np.ndarray:
        """Ring matrix of ``d_i`` (zero outside the computed range)."""
        r = self.ring.dim
        F = self.ring.field
        if i <= 0:
            return F.zeros((r, 0, self.betti[0] if self.betti else 0))
        if i < len(self.diffs) and self.diffs[i] is not None:
            return self.diffs[i]
        b_in = self.betti[i] if i < len(self.betti) else 0
        b_out = self.betti[i - 1] if i - 1 < len(self.betti) else 0
        if not self.complete and i >= len(self.betti):
            raise IndexOutOfRange(f"resolution computed only to length {self.length}")
        return F.zeros((r, b_out, b_in))

    def k_diff(self, i: int) -> np.ndarray:
        return ring_matrix_to_k(self.ring, self.ring_diff(i))

    def augmentation_hom(self) -> ModuleHom:
        return ModuleHom(self.term(0), self.target, self.augmentation)


def _augmentation(M: FDModule, gens: np.ndarray) -> np.ndarray:
    F = M.field
    r = M.ring.dim
    b = gens.shape[1]
    out = F.zeros((M.dim, b * r))
    for l in range(r):
        out[:, l::r] = F.matmul(M.actions[l], gens) if M.dim else out[:, l::r]
    return out


def _minimal_gens_of_subspace(R: FiniteLocalAlgebra, K: np.ndarray) -> np.ndarray:
    """Columns of ``K`` (an R-stable subspace of a free module) lifting a basis mod mK."""
    F = R.field
    if K.shape[1] == 0:
        return K
    m = R.max_ideal
    mK = []
    for s in range(m.shape[1]):
        acc = None
        for l in range(R.dim):
            if m[l, s] != 0:
                t = F.reduce(act_on_free(R, l, K) * m[l, s])
                acc = t if acc is None else F.reduce(acc + t)
        if acc is not None:
            mK.append(acc)
    S = np.concatenate(mK, axis=1) if mK else F.zeros((K.shape[0], 0))
    S = S[:, np.any(S != 0, axis=0)]
    if S.shape[1] == 0:
        _, piv = rref(F, K)
        return K[:, piv]
    proj, _ = quotient_basis(F, K.shape[0], S)
    img = F.matmul(proj, K)
    _, piv = rref(F, img)
    return K[:, piv]


class _ResolutionCache:
    """Memo of resolutions keyed by module fingerprint; lock-protected."""

    def __init__(self):
        self._lock = threading.Lock()
        self._store: dict[str, FreeResolution] = {}

    def get(self, key):
        with self._lock:
            return self._store.get(key)

    def put(self, key, res):
        with self._lock:
            cur = self._store.get(key)
            if cur is None or cur.length < res.length or res.complete:
                self._store[key] = res

    def clear(self):
        with self._lock:
            self._store.clear()


RESOLUTION_CACHE = _ResolutionCache()


def minimal_free_resolution(M: FDModule, n: int, cache: bool = True) -> FreeResolution:
    """Minimal free resolution of ``M`` through ``R^b_n``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    key = M.fingerprint()
    res = RESOLUTION_CACHE.get(key) if cache else None
    if res is not None and (res.length >= n or res.complete):
        return _truncate(res, n)
    if res is None:
        res = _start_resolution(M)
    while res.length < n and not res.complete:
        res = _extend(res)
    if cache:
        RESOLUTION_CACHE.put(key, res)
    return _truncate(res, n)


def _truncate(res: FreeResolution, n: int) -> FreeResolution:
    if res.length <= n:
        return res
    return FreeResolution(
        res.target, res.betti[: n + 1], res.diffs[: n + 1], res.augmentation, res.generators, False, None
    )


def _start_resolution(M: FDModule) -> FreeResolution:
    F = M.field
    b0, gens = minimal_generators(M)
    aug = _augmentation(M, gens)
    K = kernel_basis(F, aug) if b0 else F.zeros((0, 0))
    nxt = _minimal_gens_of_subspace(M.ring, K)
    return FreeResolution(M, [b0], [None], aug, gens, complete=(b0 == 0), _kernel_gens=nxt)


def _extend(res: FreeResolution) -> FreeResolution:
    R = res.ring
    F = R.field
    G = res._kernel_gens
    b = G.shape[1]
    D = vectors_to_ring_matrix(R, G) if b else F.zeros((R.dim, res.betti[-1], 0))
    betti = res.betti + [b]
    diffs = res.diffs + [D]
    if b == 0:
        return FreeResolution(res.target, betti, diffs, res.augmentation, res.generators, True, None)
    K = kernel_basis(F, ring_matrix_to_k(R, D))
    nxt = _minimal_gens_of_subspace(R, K)
    return FreeResolution(res.target, betti, diffs, res.augmentation, res.generators, False, nxt)


def betti_numbers(M: FDModule, n: int) -> list[int]:
    res = minimal_free_resolution(M, n)
    return res.betti + [0] * (n + 1 - len(res.betti))


# -- Tor and Ext ------------------------------------------------------------------


def tor_dims(M: FDModule, N: FDModule, n: int) -> list[int]:
    """``dim Tor_i(M, N)`` for ``0 <= i <= n``."""
    res = minimal_free_resolution(M, n + 1)
    return [tor_dim_from(res, N, i) for i in range(n + 1)]


def tor_dim_from(res: FreeResolution, N: FDModule, i: int) -> int:
    F = N.field
    b = res.betti[i] if i < len(res.betti) else 0
    if b == 0 or N.dim == 0:
        return 0
    r_in = _rank_any(F, tensor_ring_matrix(N, res.ring_diff(i))) if i >= 1 else 0
    r_out = _rank_any(F, tensor_ring_matrix(N, res.ring_diff(i + 1)))
    return b * N.dim - r_in - r_out


def tor_dim(M: FDModule, N: FDModule, i: int) -> int:
    return tor_dim_from(minimal_free_resolution(M, i + 1), N, i)


def ext_dim(M: FDModule, N: FDModule, i: int) -> int:
    F = N.field
    res = minimal_free_resolution(M, i + 1)
    b = res.betti[i] if i < len(res.betti) else 0
    if b == 0 or N.dim == 0:
        return 0
    r_in = _rank_any(F, hom_ring_matrix(N, res.ring_diff(i))) if i >= 1 else 0
    r_out = _rank_any(F, hom_ring_matrix(N, res.ring_diff(i + 1)))
    return b * N.dim - r_in - r_out


def tensored_complex(res: FreeResolution, N: FDModule, n: int) -> "ChainComplex":
    """``P (x) N`` in degrees ``0..n+1`` as a complex of FDModules."""
    mods, diffs = {}, {}
    for i in range(n + 2):
        b = res.betti[i] if i < len(res.betti) else 0
        mods[i] = power_module(N, b)
    for i in range(1, n + 2):
        diffs[i] = ModuleHom(mods[i], mods[i - 1], _dense(tensor_ring_matrix(N, res.ring_diff(i), sparse=False)))
    return ChainComplex(mods, diffs)


def tor(M: FDModule, N: FDModule, i: int) -> FDModule:
    """``Tor_i(M, N)`` with its module structure."""
    res = minimal_free_resolution(M, i + 1)
    return homology(tensored_complex(res, N, i), i)


def hom_complex(res: FreeResolution, N: FDModule, n: int) -> "ChainComplex":
    """``Hom(P, N)`` reindexed homologically: degree ``-i`` holds ``N^b_i``."""
    mods, diffs = {}, {}
    for i in range(n + 2):
        b = res.betti[i] if i < len(res.betti) else 0
        mods[-i] = power_module(N, b)
    for i in range(1, n + 2):
        # Hom(d_i, N) : Hom(P_{i-1}, N) -> Hom(P_i, N), i.e. degree -(i-1) -> -i
        diffs[-(i - 1)] = ModuleHom(
            mods[-(i - 1)], mods[-i], _dense(hom_ring_matrix(N, res.ring_diff(i), sparse=False))
        )
    return ChainComplex(mods, diffs)


def ext(M: FDModule, N: FDModule, i: int) -> FDModule:
    res = minimal_free_resolution(M, i + 1)
    return homology(hom_complex(res, N, i), -i)


# -- complexes -------------------------------------------------------------------------


@dataclass
class ChainComplex:
    """Bounded complex; ``diffs[i] : modules[i] -> modules[i-1]``."""

    modules: dict[int, FDModule]
    diffs: dict[int, ModuleHom]

    @property
    def lo(self) -> int:
        return min(self.modules)

    @property
    def hi(self) -> int:
        return max(self.modules)

    def module(self, i: int) -> FDModule | None:
        return self.modules.get(i)

    def diff_matrix(self, i: int) -> np.ndarray:
        src = self.modules.get(i)
        tgt = self.modules.get(i - 1)
        ds = src.dim if src is not None else 0
        dt = tgt.dim if tgt is not None else 0
        f = self.diffs.get(i)
        if f is None or ds == 0 or dt == 0:
            F = next(iter(self.modules.values())).field
            return F.zeros((dt, ds))
        return f.matrix

    def composites_vanish(self) -> bool:
        F = next(iter(self.modules.values())).field
        for i in range(self.lo + 1, self.hi + 1):
            a, b = self.diff_matrix(i), self.diff_matrix(i + 1)
            if a.size and b.size and np.any(F.matmul(a, b) != 0):
                return False
        return True

    def homology_dim(self, i: int) -> int:
        F = next(iter(self.modules.values())).field
        M = self.modules.get(i)
        if M is None:
            raise IndexOutOfRange(i)
        return M.dim - rank(F, self.diff_matrix(i)) - rank(F, self.diff_matrix(i + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i % 2) * M.dim for i, M in self.modules.items())


def homology(X: ChainComplex, i: int) -> FDModule:
    return homology_subquotient(X, i).module


def homology_subquotient(X: ChainComplex, i: int) -> Subquotient:
    M = X.modules.get(i)
    if M is None:
        raise IndexOutOfRange(f"degree {i} outside [{X.lo}, {X.hi}]")
    F = M.field
    cycles = kernel_basis(F, X.diff_matrix(i)) if X.modules.get(i - 1) is not None else F.eye(M.dim)
    bounds = X.diff_matrix(i + 1)
    return Subquotient(M, cycles, bounds)


@dataclass
class ExactnessVerdict:
    exact: bool
    first_failure: int | None = None
    homology_dims: dict[int, int] = dc_field(default_factory=dict)

    def __bool__(self):
        return self.exact


def is_exact(X: ChainComplex, lo: int | None = None, hi: int | None = None) -> ExactnessVerdict:
    """Exactness at every spot strictly inside ``[lo, hi]`` (default: the complex range)."""
    lo = X.lo if lo is None else lo
    hi = X.hi if hi is None else hi
    dims = {}
    first = None
    for i in range(lo + 1, hi):
        if i not in X.modules:
            continue
        h = X.homology_dim(i)
        dims[i] = h
        if h and first is None:
            first = i
    return ExactnessVerdict(first is None, first, dims)


def augmented_complex(res: FreeResolution) -> ChainComplex:
    """``... -> P_1 -> P_0 -> M -> 0`` with ``M`` in degree -1."""
    mods = {-1: res.target}
    diffs = {}
    for i in range(res.length + 1):
        mods[i] = res.term(i)
    diffs[0] = ModuleHom(mods[0], mods[-1], res.augmentation)
    for i in range(1, res.length + 1):
        diffs[i] = ModuleHom(mods[i], mods[i - 1], res.k_diff(i))
    return ChainComplex(mods, diffs)


def is_minimal(res: FreeResolution) -> bool:
    """Every differential has entries in the maximal ideal."""
    R = res.ring
    F = R.field
    for i in range(1, res.length + 1):
        D = res.ring_diff(i)
        # residue of each entry: sum_l chi(b_l) D[l]
        res_entries = F.reduce(np.tensordot(R.residue, D, axes=1))
        if np.any(res_entries != 0):
            return False
    return True


# -- long exact sequences ---------------------------------------------------------


def connecting_les(A: ChainComplex, B: ChainComplex, C: ChainComplex, alpha: dict, beta: dict, n: int) -> ChainComplex:
    """LES of homology for ``0 -> A -> B -> C -> 0`` through degree ``n``.

    ``alpha[i]``, ``beta[i]`` are the k-matrices of the chain maps.  Terms
    are ``H_i(A)`` at ``3i+2``, ``H_i(B)`` at ``3i+1``, ``H_i(C)`` at ``3i``,
    a zero module at ``-1``, and ``H_(n+1)(C)`` on top at ``3n+3`` so that
    every degree-``n`` term sits strictly inside the range.  The complexes
    must reach degree ``n+2``.
    """
    F = next(iter(B.modules.values())).field
    HA = {i: homology_subquotient(A, i) for i in range(n + 1)}
    HB = {i: homology_subquotient(B, i) for i in range(n + 1)}
    HC = {i: homology_subquotient(C, i) for i in range(n + 2)}
    R = B.modules[0].ring
    mods: dict[int, FDModule] = {-1: zero_module(R), 3 * n + 3: HC[n + 1].module}
    diffs: dict[int, ModuleHom] = {}
    for i in range(n + 1):
        mods[3 * i + 2] = HA[i].module
        mods[3 * i + 1] = HB[i].module
        mods[3 * i] = HC[i].module
    for i in range(n + 1):
        a = HA[i].module.dim and HB[i].module.dim
        mat = HB[i].coords(F.matmul(alpha[i], HA[i].reps)) if a else F.zeros((HB[i].dim, HA[i].dim))
        diffs[3 * i + 2] = ModuleHom(HA[i].module, HB[i].module, mat)
        b = HB[i].module.dim and HC[i].module.dim
        mat = HC[i].coords(F.matmul(beta[i], HB[i].reps)) if b else F.zeros((HC[i].dim, HB[i].dim))
        diffs[3 * i + 1] = ModuleHom(HB[i].module, HC[i].module, mat)
        if i >= 1:
            diffs[3 * i] = ModuleHom(HC[i].module, HA[i - 1].module, _connecting(A, B, alpha, beta, HC[i], HA[i - 1], i))
    diffs[3 * n + 3] = ModuleHom(HC[n + 1].module, HA[n].module, _connecting(A, B, alpha, beta, HC[n + 1], HA[n], n + 1))
    diffs[0] = ModuleHom(HC[0].module, mods[-1], F.zeros((0, HC[0].dim)))
    return ChainComplex(mods, diffs)


def _connecting(A, B, alpha, beta, hc: Subquotient, ha: Subquotient, i: int) -> np.ndarray:
    F = hc.ambient.field
    q = hc.dim
    if q == 0 or ha.dim == 0:
        return F.zeros((ha.dim, q))
    # lift cycles of C to B, apply d, pull back along alpha
    b = solve(F, beta[i], hc.reps)
    db = F.matmul(B.diff_matrix(i), b)
    a = solve(F, alpha[i - 1], db)
    return ha.coords(a)


@dataclass
class ShortExactSequence:
    """``0 -> M' --f--> M --g--> M'' -> 0``."""

    f: ModuleHom
    g: ModuleHom

    @property
    def left(self) -> FDModule:
        return self.f.source

    @property
    def middle(self) -> FDModule:
        return self.f.target

    @property
    def right(self) -> FDModule:
        return self.g.target

    def exactness_failure(self) -> str | None:
        F = self.f.field
        if not (self.f.is_valid() and self.g.is_valid()):
            return "maps are not R-linear"
        if self.f.target.dim != self.g.source.dim:
            return "maps are not composable"
        if not self.f.is_injective():
            return "first map is not injective"
        if not self.g.is_surjective():
            return "second map is not surjective"
        if self.f.source.dim + self.g.target.dim != self.f.target.dim:
            return "not exact in the middle"
        if np.any(F.matmul(self.g.matrix, self.f.matrix) != 0):
            return "composite is not zero"
        return None

    def check(self) -> "ShortExactSequence":
        why = self.exactness_failure()
        if why:
            raise NotExact(why)
        return self


@dataclass
class Horseshoe:
    """Free resolution ``P = P' + P''`` of the middle term, compatible with the SES."""

    left: FreeResolution
    right: FreeResolution
    middle: FreeResolution


def horseshoe(ses: ShortExactSequence, n: int) -> Horseshoe:
    """Build ``P_i = P'_i + P''_i`` with ``d = [[d', theta], [0, d'']]`` through degree ``n``."""
    ses.check()
    Pl = minimal_free_resolution(ses.left, n)
    Pr = minimal_free_resolution(ses.right, n)
    R = ses.middle.ring
    F = R.field
    r = R.dim
    bl = [Pl.betti[i] if i < len(Pl.betti) else 0 for i in range(n + 1)]
    br = [Pr.betti[i] if i < len(Pr.betti) else 0 for i in range(n + 1)]
    # augmentation on P''_0: lift generators of M'' to M
    lifts = solve(F, ses.g.matrix, Pr.generators) if br[0] else F.zeros((ses.middle.dim, 0))
    gens = np.concatenate([F.matmul(ses.f.matrix, Pl.generators) if bl[0] else F.zeros((ses.middle.dim, 0)), lifts], axis=1)
    aug_mid = _augmentation(ses.middle, gens)
    diffs: list[np.ndarray | None] = [None]
    thetas: list[np.ndarray | None] = [None]
    for i in range(1, n + 1):
        Dl = Pl.ring_diff(i)
        Dr = Pr.ring_diff(i)
        # target of theta_i is P'_{i-1}; need d'(theta_i) = -theta_{i-1} d''_i (or aug analogue)
        if br[i] == 0:
            theta = F.zeros((r, bl[i - 1], 0))
        else:
            dr_k = ring_matrix_to_k(R, Dr)  # P''_i -> P''_{i-1}
            gens_r = F.zeros((br[i] * r, br[i]))
            for j in range(br[i]):
                gens_r[j * r + R.unit_index, j] = F.scalar(1)
            img = F.matmul(dr_k, gens_r)  # d'' of generators, in P''_{i-1}
            if i == 1:
                # x = aug_mid(0, img) lies in f(M'); pull back and lift through aug'
                x = F.matmul(aug_mid[:, bl[0] * r :], img)
                m_left = solve(F, ses.f.matrix, x)
                y = solve(F, Pl.augmentation, m_left)
            else:
                prev_theta = ring_matrix_to_k(R, thetas[i - 1])  # P''_{i-1} -> P'_{i-2}
                w = F.matmul(prev_theta, img)
                y = solve(F, Pl.k_diff(i - 1), w)
            theta = vectors_to_ring_matrix(R, F.neg(y))
        thetas.append(theta)
        D = F.zeros((r, bl[i - 1] + br[i - 1], bl[i] + br[i]))
        D[:, : bl[i - 1], : bl[i]] = Dl if Dl.size else D[:, : bl[i - 1], : bl[i]]
        D[:, : bl[i - 1], bl[i] :] = theta
        D[:, bl[i - 1] :, bl[i] :] = Dr if Dr.size else D[:, bl[i - 1] :, bl[i] :]
        diffs.append(D)
    mid = FreeResolution(ses.middle, [a + b for a, b in zip(bl, br)], diffs, aug_mid, gens)
    return Horseshoe(Pl, Pr, mid)


def horseshoe_les(ses: ShortExactSequence, N: FDModule, n: int) -> ChainComplex:
    """Tor long exact sequence of ``ses`` against ``N`` through degree ``n``."""
    hs = horseshoe(ses, n + 2)
    return _les_from_resolutions(hs.left, hs.middle, hs.right, N, n)


def _les_from_resolutions(Pl: FreeResolution, Pm: FreeResolution, Pr: FreeResolution, N: FDModule, n: int) -> ChainComplex:
    F = N.field
    A = tensored_complex(Pl, N, n + 1)
    B = tensored_complex(Pm, N, n + 1)
    C = tensored_complex(Pr, N, n + 1)
    alpha, beta = {}, {}
    for i in range(n + 3):
        bl = A.modules[i].dim
        br = C.modules[i].dim
        alpha[i] = F.zeros((bl + br, bl))
        alpha[i][:bl] = F.eye(bl)
        beta[i] = F.zeros((br, bl + br))
        beta[i][:, bl:] = F.eye(br)
    return connecting_les(A, B, C, alpha, beta, n)


def les_is_exact(les: ChainComplex) -> ExactnessVerdict:
    return is_exact(les)


def split_ses(M1: FDModule, M2: FDModule) -> ShortExactSequence:
    from .module import direct_sum

    S = direct_sum(M1, M2)
    return ShortExactSequence(S.injections[0], S.projections[1])
