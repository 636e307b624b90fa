"""Relative Tor and friends over finite-dimensional commutative local algebras."""

from .algebra import FiniteLocalAlgebra, from_structure_constants, make_field, preset
from .corpus import corpus, named_module
from .homalg import betti_numbers, ext_dim, minimal_free_resolution, tor_dims
from .module import FDModule, ModuleHom, hom_module, is_isomorphic, matlis_dual, tensor_module
from .relative import fc_pd, pc_pd, rel_ext_dims, rel_tor_dims
from .semidualizing import canonical_module, is_semidualizing

__all__ = [
    "FiniteLocalAlgebra",
    "FDModule",
    "ModuleHom",
    "betti_numbers",
    "canonical_module",
    "corpus",
    "ext_dim",
    "fc_pd",
    "from_structure_constants",
    "hom_module",
    "is_isomorphic",
    "is_semidualizing",
    "make_field",
    "matlis_dual",
    "minimal_free_resolution",
    "named_module",
    "pc_pd",
    "preset",
    "rel_ext_dims",
    "rel_tor_dims",
    "tensor_module",
    "tor_dims",
]
