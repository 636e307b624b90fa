"""Semidualizing modules, the canonical module, and Auslander/Bass class tests."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import FiniteLocalAlgebra
from .homalg import ext_dim, tor_dim
from .module import (
    FDModule,
    HomSpace,
    TensorProduct,
    biduality_map,
    evaluation_map,
    free_module,
    homothety_map,
    is_isomorphic,
    matlis_dual,
    minimal_generators,
)

IN = "IN"
OUT = "OUT"
UNKNOWN = "UNKNOWN-AT-BOUND"


def canonical_module(R: FiniteLocalAlgebra) -> FDModule:
    """The k-dual of R, which is dualizing over an artinian local k-algebra."""
    w = matlis_dual(free_module(R, 1))
    w.name = "omega"
    return w


@dataclass
class SemidualizingCertificate:
    module: FDModule
    bound: int
    homothety_ok: bool
    ext_vanishing_checked_to: int

    def __bool__(self):
        return True


@dataclass
class Refusal:
    axiom: str
    witness: str
    degree: int | None = None

    def __bool__(self):
        return False


def is_semidualizing(C: FDModule, bound: int = 6) -> SemidualizingCertificate | Refusal:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    R = C.ring
    H = HomSpace(C, C)
    if H.dim != R.dim:
        return Refusal("homothety", f"dim Hom(C,C) = {H.dim} != {R.dim} = dim R")
    if not homothety_map(C).is_iso():
        return Refusal("homothety", "homothety map R -> Hom(C,C) is not injective")
    for i in range(1, bound + 1):
        e = ext_dim(C, C, i)
        if e:
            return Refusal("ext-vanishing", f"dim Ext^{i}(C,C) = {e}", degree=i)
    return SemidualizingCertificate(C, bound, True, bound)


def is_free(M: FDModule) -> bool:
    b0, _ = minimal_generators(M)
    return b0 * M.ring.dim == M.dim


def is_injective(M: FDModule) -> bool:
    return is_free(matlis_dual(M))


@dataclass
class ClassVerdict:
    status: str
    bound: int
    failed_check: str | None = None
    certificate: str | None = None
    checks: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.status != OUT


def _c_is_trivial(C: FDModule) -> bool:
    return bool(is_isomorphic(C, free_module(C.ring, 1)))


def in_auslander_class(C: FDModule, M: FDModule, bound: int = 6) -> ClassVerdict:
    """Tor_i(C,M) = 0 = Ext^i(C, C(x)M) for 1 <= i <= bound, and biduality bijective."""
    checks = {}
    CM = TensorProduct(C, M).module
    for i in range(1, bound + 1):
        t = tor_dim(C, M, i)
        checks[f"Tor_{i}(C,M)"] = t
        if t:
            return ClassVerdict(OUT, bound, f"dim Tor_{i}(C,M) = {t}", checks=checks)
        e = ext_dim(C, CM, i)
        checks[f"Ext^{i}(C,C(x)M)"] = e
        if e:
            return ClassVerdict(OUT, bound, f"dim Ext^{i}(C,C(x)M) = {e}", checks=checks)
    gamma = biduality_map(C, M)
    checks["biduality"] = gamma.is_iso()
    if not checks["biduality"]:
        return ClassVerdict(OUT, bound, "biduality map M -> Hom(C, C(x)M) is not bijective", checks=checks)
    if is_free(M):
        return ClassVerdict(IN, bound, certificate="M is free", checks=checks)
    if _c_is_trivial(C):
        return ClassVerdict(IN, bound, certificate="C is isomorphic to R", checks=checks)
    return ClassVerdict(UNKNOWN, bound, checks=checks)


def in_bass_class(C: FDModule, M: FDModule, bound: int = 6) -> ClassVerdict:
    """Ext^i(C,M) = 0 = Tor_i(C, Hom(C,M)) for 1 <= i <= bound, and evaluation bijective."""
    checks = {}
    HM = HomSpace(C, M).module
    for i in range(1, bound + 1):
        e = ext_dim(C, M, i)
        checks[f"Ext^{i}(C,M)"] = e
        if e:
            return ClassVerdict(OUT, bound, f"dim Ext^{i}(C,M) = {e}", checks=checks)
        t = tor_dim(C, HM, i)
        checks[f"Tor_{i}(C,Hom(C,M))"] = t
        if t:
            return ClassVerdict(OUT, bound, f"dim Tor_{i}(C,Hom(C,M)) = {t}", checks=checks)
    xi = evaluation_map(C, M)
    checks["evaluation"] = xi.is_iso()
    if not checks["evaluation"]:
        return ClassVerdict(OUT, bound, "evaluation map C(x)Hom(C,M) -> M is not bijective", checks=checks)
    if is_free(HM):
        return ClassVerdict(IN, bound, certificate="M is a direct sum of copies of C", checks=checks)
    if is_injective(M):
        return ClassVerdict(IN, bound, certificate="M is injective", checks=checks)
    if _c_is_trivial(C):
        return ClassVerdict(IN, bound, certificate="C is isomorphic to R", checks=checks)
    return ClassVerdict(UNKNOWN, bound, checks=checks)


def foxby_transport(C: FDModule, M: FDModule, direction: str) -> FDModule:
    """``down``: Hom(C, M); ``up``: C (x) M."""
    if direction == "down":
        return HomSpace(C, M).module
    if direction == "up":
        return TensorProduct(C, M).module
    raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")
