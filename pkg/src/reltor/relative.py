"""Proper C-resolutions, relative Tor and Ext, and C-projective dimensions.

Over an artinian local ring flat and projective modules coincide, so one
constructor serves both the P_C and the F_C flavors.  A proper resolution of
``M`` is ``C (x) P`` for ``P`` a minimal free resolution of ``Hom(C, M)``; its
degree-``i`` term is identified with ``C^b_i`` and its differential is the
ring matrix of ``P`` acting blockwise on ``C``.

Every relative functor has a *direct* strategy (homology of the proper
resolution combined with the other module) and a *formula* strategy (an
absolute Tor or Ext computed from a different resolution).
"""

from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, field as dc_field

import numpy as np
import scipy.sparse as sp

from .exactlinalg import PrimeField
from .homalg import (
    RESOLUTION_CACHE,
    ChainComplex,
    ExactnessVerdict,
    ShortExactSequence,
    augmented_complex,
    connecting_les,
    ext_dim,
    homology,
    horseshoe_les,
    is_exact,
    minimal_free_resolution,
    power_module,
    tensor_ring_matrix,
    tensored_complex,
    _rank_any,
)
from .module import (
    FDModule,
    HomSpace,
    ModuleHom,
    TensorProduct,
    hom_postcompose,
    homothety_map,
    identity,
    matlis_dual,
    residue_field_module,
    tensor_map,
    zero_module,
)
from .semidualizing import is_free

FLAVORS = ("PC-M", "FC-M", "M-PC", "M-FC")


class CrossCheckMismatch(RuntimeError):
    pass


class NotHomCExact(ValueError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


class NotTensorCExact(ValueError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


def normalize_flavor(flavor: str) -> str:
    f = flavor.strip().upper().replace("_", "-")
    if f not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")
    return f


def resolves_first(flavor: str) -> bool:
    return normalize_flavor(flavor) in ("PC-M", "FC-M")


@dataclass(frozen=True)
class RelTorQuery:
    flavor: str
    C: FDModule
    M: FDModule
    N: FDModule
    degree: int

    def swapped(self) -> "RelTorQuery":
        """The same group read through flavor symmetry."""
        f = normalize_flavor(self.flavor)
        partner = {"PC-M": "M-PC", "M-PC": "PC-M", "FC-M": "M-FC", "M-FC": "FC-M"}[f]
        return RelTorQuery(partner, self.C, self.N, self.M, self.degree)


# -- proper resolutions ----------------------------------------------------------


class ProperResolution:
    """``C (x) P -> M`` with ``P`` a free resolution of ``Hom(C, M)``."""

    def __init__(self, C: FDModule, M: FDModule, n: int, _parts=None):
        self.C = C
        self.target = M
        self.length = n
        if _parts is None:
            self.hom = HomSpace(C, M)
            P = minimal_free_resolution(self.hom.module, n)
            self.free = P
            self.betti = [P.betti[i] if i < len(P.betti) else 0 for i in range(n + 1)]
            self._diffs = [None] + [P.ring_diff(i) for i in range(1, n + 1)]
            cols = [self.hom.to_map(P.generators[:, j]).matrix for j in range(self.betti[0])] if self.betti[0] else []
            F = C.field
            self.augmentation = np.concatenate(cols, axis=1) if cols else F.zeros((M.dim, 0))
            self.padding: tuple[int, ...] = ()
        else:
            self.hom, self.free, self.betti, self._diffs, self.augmentation, self.padding = _parts
        self.provenance = "C (x) minimal free resolution of Hom(C, M)"

    @property
    def ring(self):
        return self.C.ring

    def ring_diff(self, i: int) -> np.ndarray:
        """Ring matrix of ``C^b_i -> C^b_(i-1)`` (zero past a finished resolution)."""
        F = self.C.field
        if 1 <= i <= self.length:
            return self._diffs[i]
        if i > self.length and not self.free.complete:
            raise IndexError(f"proper resolution computed only to length {self.length}")
        b_in = self.betti[i] if 0 <= i < len(self.betti) else 0
        b_out = self.betti[i - 1] if 0 <= i - 1 < len(self.betti) else 0
        return F.zeros((self.ring.dim, b_out, b_in))

    def term(self, i: int) -> FDModule:
        return power_module(self.C, self.betti[i] if 0 <= i <= self.length else 0)

    def k_diff(self, i: int) -> np.ndarray:
        return tensor_ring_matrix(self.C, self.ring_diff(i), sparse=False)

    def augmented(self) -> ChainComplex:
        mods = {-1: self.target}
        diffs = {}
        for i in range(self.length + 1):
            mods[i] = self.term(i)
        diffs[0] = ModuleHom(mods[0], self.target, self.augmentation)
        for i in range(1, self.length + 1):
            diffs[i] = ModuleHom(mods[i], mods[i - 1], self.k_diff(i))
        return ChainComplex(mods, diffs)

    def padded(self, j: int) -> "ProperResolution":
        """Add a split summand ``C --1--> C`` in degrees ``j, j-1`` (non-minimal, still proper)."""
        if not 1 <= j <= self.length:
            raise ValueError("padding degree must lie in 1..length")
        F = self.C.field
        R = self.ring
        r = R.dim
        betti = list(self.betti)
        betti[j] += 1
        betti[j - 1] += 1
        diffs = [None]
        for i in range(1, self.length + 1):
            D = self._diffs[i]
            out = F.zeros((r, betti[i - 1], betti[i]))
            out[:, : D.shape[1], : D.shape[2]] = D
            if i == j:
                out[R.unit_index, -1, -1] = F.scalar(1)
            diffs.append(out)
        aug = self.augmentation
        if j == 1:
            aug = np.concatenate([aug, F.zeros((self.target.dim, self.C.dim))], axis=1)
        return ProperResolution(
            self.C, self.target, self.length, _parts=(self.hom, self.free, betti, diffs, aug, self.padding + (j,))
        )

    def is_proper(self, generic_limit: int = 240) -> "ProperVerdict":
        """Hom(C, -) exactness of the augmented complex.

        Small resolutions are checked by building every Hom module.  Larger
        ones use the homothety ``R = Hom(C, C)``, under which ``Hom(C, C^b)``
        is ``R^b`` and the Hom complex becomes the free resolution itself.
        """
        size = sum(self.betti) * self.C.dim
        if size <= generic_limit or self.padding:
            v = is_proper(self.C, self.augmented())
            return ProperVerdict(v.exact, v.first_failure, "Hom(C,-) complex")
        if not homothety_map(self.C).is_iso():
            return ProperVerdict(False, None, "homothety is not bijective")
        v = is_exact(augmented_complex(self.free))
        return ProperVerdict(v.exact, v.first_failure, "homothety identification")


@dataclass
class ProperVerdict:
    proper: bool
    first_failure: int | None
    method: str

    def __bool__(self):
        return self.proper


_PROPER_LOCK = threading.Lock()
_PROPER_CACHE: dict[tuple, ProperResolution] = {}


def proper_pc_resolution(C: FDModule, M: FDModule, n: int) -> ProperResolution:
    key = (C.fingerprint(), M.fingerprint())
    with _PROPER_LOCK:
        hit = _PROPER_CACHE.get(key)
    if hit is not None and hit.length >= n:
        return hit if hit.length == n else _shorten(hit, n)
    pr = ProperResolution(C, M, n)
    with _PROPER_LOCK:
        _PROPER_CACHE[key] = pr
    return pr


def _shorten(pr: ProperResolution, n: int) -> ProperResolution:
    return ProperResolution(
        pr.C, pr.target, n, _parts=(pr.hom, pr.free, pr.betti[: n + 1], pr._diffs[: n + 1], pr.augmentation, ())
    )


proper_fc_resolution = proper_pc_resolution


def is_proper(C: FDModule, X: ChainComplex, check_top: bool = False) -> ExactnessVerdict:
    """Exactness of ``Hom(C, X)`` at every spot of ``X`` (the top only if asked)."""
    R = C.ring
    spaces = {i: HomSpace(C, M) for i, M in X.modules.items()}
    mods = {i: H.module for i, H in spaces.items()}
    diffs = {}
    for i, f in X.diffs.items():
        if i in spaces and i - 1 in spaces:
            diffs[i] = hom_postcompose(C, f, spaces[i], spaces[i - 1])
    lo, hi = X.lo, X.hi
    mods[lo - 1] = zero_module(R)
    if check_top:
        mods[hi + 1] = zero_module(R)
    Y = ChainComplex(mods, diffs)
    return is_exact(Y, lo - 1, hi + 1 if check_top else hi)


# -- relative Tor ------------------------------------------------------------------


_BLOCK_CACHE: dict[tuple, tuple] = {}
_DIMS_CACHE: dict[tuple, list[int]] = {}


def clear_caches() -> None:
    """Drop every memo (resolutions, proper resolutions, Tor dimensions)."""
    RESOLUTION_CACHE.clear()
    with _PROPER_LOCK:
        _PROPER_CACHE.clear()
        _BLOCK_CACHE.clear()
        _DIMS_CACHE.clear()


def _induced_blocks(C: FDModule, other: FDModule, c_on_left: bool):
    key = (C.fingerprint(), other.fingerprint(), c_on_left)
    with _PROPER_LOCK:
        hit = _BLOCK_CACHE.get(key)
    if hit is None:
        hit = _compute_induced_blocks(C, other, c_on_left)
        with _PROPER_LOCK:
            _BLOCK_CACHE[key] = hit
    return hit


def _compute_induced_blocks(C: FDModule, other: FDModule, c_on_left: bool):
    """Action of ring basis elements on ``C (x) other`` induced through C alone."""
    if c_on_left:
        T = TensorProduct(C, other)
    else:
        T = TensorProduct(other, C)
    blocks = []
    for l in range(C.ring.dim):
        x = ModuleHom(C, C, C.actions[l])
        f = tensor_map(x, identity(other), T, T) if c_on_left else tensor_map(identity(other), x, T, T)
        blocks.append(f.matrix)
    return T, blocks


def _blockwise(D: np.ndarray, blocks: list[np.ndarray], F):
    r, bo, bi = D.shape
    d = blocks[0].shape[0] if blocks else 0
    if isinstance(F, PrimeField):
        acc = sp.csr_matrix((bo * d, bi * d), dtype=np.int64)
        for l in range(r):
            if np.any(D[l]) and np.any(blocks[l]):
                acc = acc + sp.kron(sp.csr_matrix(D[l]), sp.csr_matrix(blocks[l]), format="csr")
        acc.data %= F.p
        acc.eliminate_zeros()
        return acc
    out = F.zeros((bo * d, bi * d))
    for l in range(r):
        if np.any(D[l] != 0) and np.any(blocks[l] != 0):
            out = out + np.kron(D[l], blocks[l])
    return F.reduce(out)


def _dims_from_ranks(term_dims: list[int], ranks: list[int], n: int) -> list[int]:
    # ranks[i] = rank of d_i, with ranks[0] = 0
    return [term_dims[i] - ranks[i] - ranks[i + 1] for i in range(n + 1)]


def _direct_tor_dims(C: FDModule, resolved: FDModule, other: FDModule, n: int, c_on_left: bool) -> list[int]:
    return tor_dims_from_resolution(proper_pc_resolution(C, resolved, n + 1), other, n, c_on_left)


def tor_dims_from_resolution(pr: ProperResolution, other: FDModule, n: int, c_on_left: bool = True) -> list[int]:
    """Homology dimensions of ``pr (x) other`` in degrees ``0..n`` (needs ``pr.length > n``)."""
    C = pr.C
    F = C.field
    T, blocks = _induced_blocks(C, other, c_on_left)
    if T.dim == 0:
        return [0] * (n + 1)
    terms = [pr.betti[i] * T.dim for i in range(n + 1)]
    ranks = [0] + [_rank_any(F, _blockwise(pr.ring_diff(i), blocks, F)) for i in range(1, n + 2)]
    return _dims_from_ranks(terms, ranks, n)


def _formula_tor_dims(C: FDModule, resolved: FDModule, other: FDModule, n: int) -> list[int]:
    """``Tor_i(Hom(C, resolved), C (x) other)``, resolving ``C (x) other``."""
    X = HomSpace(C, resolved).module
    Y = TensorProduct(C, other).module
    P = minimal_free_resolution(Y, n + 1)
    F = C.field
    if X.dim == 0:
        return [0] * (n + 1)
    terms = [(P.betti[i] if i < len(P.betti) else 0) * X.dim for i in range(n + 1)]
    ranks = [0] + [_rank_any(F, tensor_ring_matrix(X, P.ring_diff(i))) for i in range(1, n + 2)]
    return _dims_from_ranks(terms, ranks, n)


def rel_tor_dims(flavor: str, C: FDModule, M: FDModule, N: FDModule, n: int, strategy: str = "cross-check") -> list[int]:
    """Dimensions of the relative Tor groups in degrees ``0..n``."""
    f = normalize_flavor(flavor)
    key = (f, C.fingerprint(), M.fingerprint(), N.fingerprint(), strategy)
    with _PROPER_LOCK:
        hit = _DIMS_CACHE.get(key)
    if hit is not None and len(hit) > n:
        return hit[: n + 1]
    dims = _rel_tor_dims(f, C, M, N, n, strategy)
    with _PROPER_LOCK:
        _DIMS_CACHE[key] = dims
    return list(dims)


def _rel_tor_dims(f: str, C: FDModule, M: FDModule, N: FDModule, n: int, strategy: str) -> list[int]:
    resolved, other = (M, N) if resolves_first(f) else (N, M)
    # in M-FC the resolution sits in the second slot, so C lands on the right of M
    c_on_left = resolves_first(f)
    if strategy == "direct":
        return _direct_tor_dims(C, resolved, other, n, c_on_left)
    if strategy == "formula":
        return _formula_tor_dims(C, resolved, other, n)
    if strategy != "cross-check":
        raise ValueError(f"unknown strategy {strategy!r}")
    a = _direct_tor_dims(C, resolved, other, n, c_on_left)
    b = _formula_tor_dims(C, resolved, other, n)
    if a != b:
        raise CrossCheckMismatch(f"{f}: direct {a} != formula {b}")
    return a


def rel_tor_dim(flavor: str, C: FDModule, M: FDModule, N: FDModule, i: int, strategy: str = "cross-check") -> int:
    return rel_tor_dims(flavor, C, M, N, i, strategy)[i]


def rel_tor(query: RelTorQuery, strategy: str = "cross-check") -> FDModule:
    """The relative Tor group with its module structure (from the direct complex)."""
    f = normalize_flavor(query.flavor)
    i = query.degree
    resolved, other = (query.M, query.N) if resolves_first(f) else (query.N, query.M)
    C = query.C
    pr = proper_pc_resolution(C, resolved, i + 1)
    T, blocks = _induced_blocks(C, other, resolves_first(f))
    F = C.field
    mods = {j: power_module(T.module, pr.betti[j] if j <= pr.length else 0) for j in range(max(0, i - 1), i + 2)}
    diffs = {}
    for j in range(max(1, i), i + 2):
        if j - 1 in mods:
            mat = _blockwise(pr.ring_diff(j), blocks, F)
            mat = mat.toarray() if sp.issparse(mat) else mat
            diffs[j] = ModuleHom(mods[j], mods[j - 1], mat)
    H = homology(ChainComplex(mods, diffs), i)
    if strategy in ("cross-check", "formula"):
        want = rel_tor_dims(f, C, query.M, query.N, i, "formula")[i]
        if want != H.dim:
            raise CrossCheckMismatch(f"{f} degree {i}: direct {H.dim} != formula {want}")
    return H


# -- relative Ext ----------------------------------------------------------------------


def _direct_ext_pc_dims(C: FDModule, M: FDModule, N: FDModule, n: int) -> list[int]:
    """Cohomology of ``Hom(C (x) P, N) = Hom(C, N)^b`` with precomposition maps."""
    F = C.field
    pr = proper_pc_resolution(C, M, n + 1)
    H = HomSpace(C, N)
    h = H.dim
    if h == 0:
        return [0] * (n + 1)
    blocks = []
    for l in range(C.ring.dim):
        cols = [H.coords_of(F.matmul(H.matrix(s), C.actions[l])) for s in range(h)]
        blocks.append(np.stack(cols, axis=1))
    terms = [pr.betti[i] * h for i in range(n + 1)]
    # delta^i : Hom(Q_{i-1}) -> Hom(Q_i) is the transpose pattern of d_i
    ranks = [0]
    for i in range(1, n + 2):
        D = np.ascontiguousarray(pr.ring_diff(i).transpose(0, 2, 1))
        ranks.append(_rank_any(F, _blockwise(D, blocks, F)))
    return _dims_from_ranks(terms, ranks, n)


def _formula_ext_pc_dims(C: FDModule, M: FDModule, N: FDModule, n: int) -> list[int]:
    """``Ext^i(Hom(C,M), Hom(C,N))`` computed as ``Ext^i(Hom(C,N)^v, Hom(C,M)^v)``."""
    X = matlis_dual(HomSpace(C, N).module)
    Y = matlis_dual(HomSpace(C, M).module)
    return [ext_dim(X, Y, i) for i in range(n + 1)]


def rel_ext_dims(flavor: str, C: FDModule, M: FDModule, N: FDModule, n: int, strategy: str = "cross-check") -> list[int]:
    """Relative Ext in degrees ``0..n`` for flavors ``PC-M`` and ``M-IC``.

    ``M-IC`` is computed by Matlis duality: an I_C-coresolution of ``N`` is the
    dual of a proper C-resolution of ``N^v``, so the group equals
    ``Ext_PC(N^v, M^v)``; the formula side is ``Ext(C (x) M, C (x) N)``.
    """
    f = flavor.strip().upper().replace("_", "-")
    if f == "PC-M":
        direct = lambda: _direct_ext_pc_dims(C, M, N, n)
        formula = lambda: _formula_ext_pc_dims(C, M, N, n)
    elif f == "M-IC":
        direct = lambda: _direct_ext_pc_dims(C, matlis_dual(N), matlis_dual(M), n)
        CM, CN = TensorProduct(C, M).module, TensorProduct(C, N).module
        formula = lambda: [ext_dim(CM, CN, i) for i in range(n + 1)]
    else:
        raise ValueError(f"relative Ext flavor must be PC-M or M-IC, not {flavor!r}")
    if strategy == "direct":
        return direct()
    if strategy == "formula":
        return formula()
    a, b = direct(), formula()
    if a != b:
        raise CrossCheckMismatch(f"Ext {f}: direct {a} != formula {b}")
    return a


def rel_ext_dim(flavor: str, C: FDModule, M: FDModule, N: FDModule, i: int, strategy: str = "cross-check") -> int:
    return rel_ext_dims(flavor, C, M, N, i, strategy)[i]


# -- homological dimensions ----------------------------------------------------------


@functools.total_ordering
@dataclass(frozen=True)
class HDim:
    """A bound-honest homological dimension: ``-inf < 0 < 1 < ... < ABOVE-BOUND``."""

    kind: str  # "neg-inf", "finite" or "above"
    value: int = 0
    bound: int | None = None
    witness: str = dc_field(default="", compare=False)

    def _key(self):
        return {"neg-inf": (0, 0), "finite": (1, self.value), "above": (2, 0)}[self.kind]

    def __eq__(self, other):
        return isinstance(other, HDim) and self._key() == other._key()

    def __lt__(self, other):
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def minus_one(self) -> "HDim":
        # infinity minus one stays infinite
        if self.kind == "finite":
            return HDim("finite", self.value - 1, self.bound) if self.value > 0 else HDim("finite", -1, self.bound)
        return self

    def __le__(self, other):
        return self._key() <= other._key()

    def le_int(self, n: int) -> bool:
        return self.kind == "neg-inf" or (self.kind == "finite" and self.value <= n)

    def __str__(self):
        if self.kind == "neg-inf":
            return "-inf"
        if self.kind == "above":
            return f"ABOVE-BOUND({self.bound})"
        return str(self.value)

    def to_json(self):
        return str(self)


NEG_INF = HDim("neg-inf")


def above(bound: int, witness: str = "") -> HDim:
    return HDim("above", 0, bound, witness)


def sup(*dims: HDim) -> HDim:
    return max(dims) if dims else NEG_INF


def fc_pd(C: FDModule, M: FDModule, bound: int = 6) -> HDim:
    """F_C-projective dimension as the flat dimension of ``Hom(C, M)``.

    The flat dimension is read off ``Tor_i(k, Hom(C,M))``: it is the least
    ``n`` with ``Tor_(n+1)`` zero.  Resolving k (cached) is far cheaper than
    resolving ``Hom(C,M)``.
    """
    if M.dim == 0:
        return NEG_INF
    X = HomSpace(C, M).module
    k = residue_field_module(C.ring)
    from .homalg import tor_dims

    dims = tor_dims(k, X, bound + 1)
    for n in range(bound + 1):
        if dims[n + 1] == 0:
            why = f"Hom(C,M) is free of rank {dims[0]}" if n == 0 and is_free(X) else f"Tor_{n + 1}(k,Hom(C,M)) = 0"
            return HDim("finite", n, bound, why)
    return above(bound, f"Tor_{bound + 1}(k,Hom(C,M)) has dimension {dims[bound + 1]}")


def pc_pd(C: FDModule, M: FDModule, bound: int = 6) -> HDim:
    """P_C-projective dimension as the length of the proper resolution."""
    if M.dim == 0:
        return NEG_INF
    pr = proper_pc_resolution(C, M, bound + 1)
    if pr.betti[bound + 1]:
        return above(bound, f"term {bound + 1} of the proper resolution is C^{pr.betti[bound + 1]}")
    last = max(i for i, b in enumerate(pr.betti) if b)
    return HDim("finite", last, bound, f"proper resolution stops at degree {last}")


@dataclass
class VanishingReport:
    n: int
    bound: int
    tor_vanishes: bool
    fc_pd_le_n: bool
    pc_pd_le_n: bool
    fc: HDim
    pc: HDim
    tor_dims: list[int]

    @property
    def agree(self) -> bool:
        return self.tor_vanishes == self.fc_pd_le_n == self.pc_pd_le_n and self.fc == self.pc


def vanishing_characterization(C: FDModule, M: FDModule, n: int, bound: int = 6) -> VanishingReport:
    """Tor^{FC-M}_i(M, k) = 0 for n < i <= bound  vs  fc_pd <= n  vs  pc_pd <= n."""
    k = residue_field_module(C.ring)
    dims = rel_tor_dims("FC-M", C, M, k, bound, strategy="direct")
    vanish = all(d == 0 for d in dims[n + 1 :])
    fc = fc_pd(C, M, bound)
    pc = pc_pd(C, M, bound)
    return VanishingReport(n, bound, vanish, fc.le_int(n), pc.le_int(n), fc, pc, dims)


# -- long exact sequences ------------------------------------------------------------


def hom_c_ses(C: FDModule, ses: ShortExactSequence) -> ShortExactSequence:
    """``Hom(C, ses)``; raises NotHomCExact when the right map is not onto."""
    f = hom_postcompose(C, ses.f)
    g = hom_postcompose(C, ses.g)
    if not g.is_surjective():
        raise NotHomCExact(
            f"Hom(C, M) -> Hom(C, M'') has rank {g.rank()} < {g.target.dim}", degree=0
        )
    return ShortExactSequence(f, g)


def tensor_c_ses(C: FDModule, ses: ShortExactSequence) -> ShortExactSequence:
    """``C (x) ses``; raises NotTensorCExact when the left map is not injective."""
    f = tensor_map(identity(C), ses.f)
    g = tensor_map(identity(C), ses.g)
    if not f.is_injective():
        raise NotTensorCExact(f"C (x) M' -> C (x) M has kernel of dimension {f.source.dim - f.rank()}", degree=0)
    return ShortExactSequence(f, g)


def rel_tor_les(C: FDModule, ses: ShortExactSequence, other: FDModule, n: int, variable: str = "first") -> ChainComplex:
    """Long exact sequence of Tor^{FC-M} through degree ``n``.

    ``variable="first"``: ``ses`` varies the resolved slot, ``other`` is N.
    ``variable="second"``: ``ses`` varies N, ``other`` is the resolved M.
    """
    ses.check()
    if variable == "first":
        hs = hom_c_ses(C, ses)
        return horseshoe_les(hs, TensorProduct(C, other).module, n)
    if variable != "second":
        raise ValueError("variable must be 'first' or 'second'")
    cs = tensor_c_ses(C, ses)
    X = HomSpace(C, other).module
    P = minimal_free_resolution(X, n + 2)
    F = C.field
    A = tensored_complex(P, cs.left, n + 1)
    B = tensored_complex(P, cs.middle, n + 1)
    Cc = tensored_complex(P, cs.right, n + 1)
    alpha, beta = {}, {}
    for i in range(n + 3):
        b = P.betti[i] if i < len(P.betti) else 0
        alpha[i] = F.reduce(np.kron(F.eye(b), cs.f.matrix)) if b else F.zeros((0, 0))
        beta[i] = F.reduce(np.kron(F.eye(b), cs.g.matrix)) if b else F.zeros((0, 0))
    return connecting_les(A, B, Cc, alpha, beta, n)


# -- balance ---------------------------------------------------------------------------

BALANCE_COLUMNS = ("FB-M(M,N)", "M-FC(M,N)", "FC-M(M,N)", "M-FC(N,M)", "Tor(M,N)")


@dataclass
class BalanceTable:
    degrees: list[int]
    rows: dict[int, tuple[int, ...]]
    flags: dict[int, list[tuple[str, str]]]

    def flagged_degrees(self) -> list[int]:
        return [i for i in self.degrees if self.flags[i]]


def balance_defect(C: FDModule, B: FDModule, M: FDModule, N: FDModule, degrees) -> BalanceTable:
    from .homalg import tor_dims

    degrees = list(degrees)
    n = max(degrees)
    cols = [
        rel_tor_dims("FC-M", B, M, N, n),
        rel_tor_dims("M-FC", C, M, N, n),
        rel_tor_dims("FC-M", C, M, N, n),
        rel_tor_dims("M-FC", C, N, M, n),
        tor_dims(M, N, n),
    ]
    rows, flags = {}, {}
    for i in degrees:
        row = tuple(c[i] for c in cols)
        rows[i] = row
        flags[i] = [
            (BALANCE_COLUMNS[a], BALANCE_COLUMNS[b])
            for a in range(5)
            for b in range(a + 1, 5)
            if row[a] != row[b]
        ]
    return BalanceTable(degrees, rows, flags)


def two_of_three(C: FDModule, ses: ShortExactSequence, bound: int = 6) -> dict:
    """The three F_C-pd inequalities on a Hom(C,-)-exact short exact sequence."""
    a, b, c = (fc_pd(C, X, bound) for X in (ses.left, ses.middle, ses.right))
    return {
        "fc_pd": (a, b, c),
        "left": a <= sup(b, c.minus_one()),
        "middle": b <= sup(a, c),
        "right": c <= _plus_one(sup(a, b)),
    }


def _plus_one(d: HDim) -> HDim:
    return HDim("finite", d.value + 1, d.bound) if d.kind == "finite" else d
