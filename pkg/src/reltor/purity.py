"""Purity of submodules of finite-length modules.

A finite-length submodule is pure exactly when it is a direct summand, so
purity is decided by solving for a retraction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactlinalg import Inconsistent, solve
from .module import FDModule, HomSpace, ModuleHom, cokernel, hom_postcompose
from .relative import HDim, fc_pd, sup


class NotInjective(ValueError):
    pass


@dataclass
class SplitCertificate:
    inclusion: ModuleHom
    retraction: ModuleHom

    def verify(self) -> bool:
        F = self.inclusion.field
        if not (self.inclusion.is_valid() and self.retraction.is_valid()):
            return False
        comp = F.matmul(self.retraction.matrix, self.inclusion.matrix)
        return bool(np.all(comp == F.eye(self.inclusion.source.dim)))

    def __bool__(self):
        return True


@dataclass
class NotPure:
    reason: str

    def __bool__(self):
        return False


def is_pure_submodule(inclusion: ModuleHom) -> SplitCertificate | NotPure:
    """Find ``r`` with ``r . inclusion = id`` in ``Hom(M, M')``, or report there is none."""
    if not inclusion.is_valid():
        raise NotInjective("inclusion is not R-linear")
    if not inclusion.is_injective():
        raise NotInjective(f"map has kernel of dimension {inclusion.source.dim - inclusion.rank()}")
    F = inclusion.field
    sub, amb = inclusion.source, inclusion.target
    if sub.dim == 0:
        return SplitCertificate(inclusion, ModuleHom(amb, sub, F.zeros((0, amb.dim))))
    H = HomSpace(amb, sub)
    if H.dim == 0:
        return NotPure("Hom(M, M') is zero")
    system = np.stack([F.matmul(H.matrix(s), inclusion.matrix).reshape(-1) for s in range(H.dim)], axis=1)
    try:
        c = solve(F, system, F.eye(sub.dim).reshape(-1))
    except Inconsistent:
        return NotPure("no retraction exists: the submodule is not a direct summand")
    cert = SplitCertificate(inclusion, H.to_map(c))
    assert cert.verify()
    return cert


def hom_purity_transport(L: FDModule, cert: SplitCertificate) -> SplitCertificate:
    """Apply ``Hom(L, -)`` to a split pair."""
    sub, amb = cert.inclusion.source, cert.inclusion.target
    Hs, Ha = HomSpace(L, sub), HomSpace(L, amb)
    inc = hom_postcompose(L, cert.inclusion, Hs, Ha)
    ret = hom_postcompose(L, cert.retraction, Ha, Hs)
    return SplitCertificate(inc, ret)


@dataclass
class PureDimensionReport:
    fc_pd_sub: HDim
    fc_pd_whole: HDim
    fc_pd_quotient: HDim
    lower_bound: HDim
    holds: bool
    strict: bool


def pure_fc_pd_check(C: FDModule, cert: SplitCertificate, bound: int = 6) -> PureDimensionReport:
    """``fc_pd(M) >= sup{fc_pd(M'), fc_pd(M/M') - 1}`` for a pure ``M' <= M``."""
    sub = cert.inclusion.source
    whole = cert.inclusion.target
    quo = cokernel(cert.inclusion).module
    a, b, c = fc_pd(C, sub, bound), fc_pd(C, whole, bound), fc_pd(C, quo, bound)
    lower = sup(a, c.minus_one())
    return PureDimensionReport(a, b, c, lower, b >= lower, b > lower)
