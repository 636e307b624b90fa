"""Named rings, modules and short exact sequences used by the tests and the CLI."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .algebra import PRESET_NAMES, FiniteLocalAlgebra, make_field, preset
from .homalg import ShortExactSequence, split_ses
from .module import (
    FDModule,
    Subquotient,
    cokernel,
    direct_power,
    direct_sum,
    free_module,
    maximal_ideal_module,
    module_from_json,
    quotient,
    residue_field_module,
    submodule,
    tensor_module,
)
from .semidualizing import canonical_module

MODULE_NAMES = ("R", "k", "m", "omega", "omega_tensor_omega")


class UnknownModule(KeyError):
    pass


def named_module(R: FiniteLocalAlgebra, name: str) -> FDModule:
    name = name.removeprefix("preset:")
    if name == "R":
        M = free_module(R, 1)
    elif name == "k":
        M = residue_field_module(R)
    elif name == "m":
        M = maximal_ideal_module(R)
    elif name in ("omega", "C"):
        M = canonical_module(R)
    elif name == "omega_tensor_omega":
        w = canonical_module(R)
        M = tensor_module(w, w)[0]
    elif name == "0":
        M = direct_power(residue_field_module(R), 0)
    else:
        raise UnknownModule(name)
    M.name = name
    return M


def corpus_modules(R: FiniteLocalAlgebra) -> dict[str, FDModule]:
    return {name: named_module(R, name) for name in MODULE_NAMES}


def corpus(field=None) -> dict[str, tuple[FiniteLocalAlgebra, dict[str, FDModule]]]:
    """Every preset ring with its named modules."""
    out = {}
    for name in PRESET_NAMES:
        R = preset(name, field)
        out[name] = (R, corpus_modules(R))
    return out


def load_module(ref: str, R: FiniteLocalAlgebra) -> FDModule:
    """A module from ``preset:<name>`` or a JSON file."""
    if ref.startswith("preset:") or ref in MODULE_NAMES:
        return named_module(R, ref)
    path = Path(ref)
    if not path.exists():
        raise UnknownModule(ref)
    doc = json.loads(path.read_text())
    return module_from_json(doc, ring=R if _ring_matches(doc, R) else None, field=R.field)


def _ring_matches(doc: dict, R: FiniteLocalAlgebra) -> bool:
    ref = doc.get("ring")
    return ref is None or ref == R.name or ref == f"preset:{R.name}"


# -- sequences ------------------------------------------------------------------


def residue_sequence(R: FiniteLocalAlgebra) -> ShortExactSequence:
    """0 -> m -> R -> k -> 0."""
    Rm = free_module(R, 1)
    sub = Subquotient(Rm, R.max_ideal)
    q = cokernel(sub.inclusion())
    return ShortExactSequence(sub.inclusion(), q.projection())


def cyclic_dual_sequence(R: FiniteLocalAlgebra, basis_name: str = "y") -> ShortExactSequence:
    """0 -> R f -> omega -> omega / R f -> 0 for ``f`` the dual of a basis element.

    Over k[X,Y]/(X,Y)^2 with ``f = y*`` the submodule is R/XR and the
    quotient is k.
    """
    w = canonical_module(R)
    idx = R.basis_names.index(basis_name)
    v = R.field.zeros((w.dim, 1))
    v[idx, 0] = R.field.scalar(1)
    sub = submodule(w, v)
    q = cokernel(sub.inclusion())
    return ShortExactSequence(sub.inclusion(), q.projection())


def principal_quotient(R: FiniteLocalAlgebra, basis_name: str) -> FDModule:
    """R / (b) for a basis element ``b``."""
    Rm = free_module(R, 1)
    idx = R.basis_names.index(basis_name)
    col = R.left[idx][:, [R.unit_index]]
    return quotient(Rm, col).module


def split_sequences(mods: dict[str, FDModule]) -> list[tuple[str, ShortExactSequence]]:
    out = []
    names = list(mods)
    for a in names:
        for b in names:
            if mods[a].dim + mods[b].dim <= 12:
                out.append((f"{a}+{b}", split_ses(mods[a], mods[b])))
    return out


# -- random modules --------------------------------------------------------------


def random_module(R: FiniteLocalAlgebra, rng: np.random.Generator, max_dim: int = 8) -> FDModule:
    """A small module: a corpus module, a sum of two, or a random subquotient."""
    F = R.field
    base = corpus_modules(R)
    small = [M for M in base.values() if 0 < M.dim <= max_dim]
    kind = rng.integers(0, 4)
    if kind == 0:
        return small[rng.integers(len(small))]
    if kind == 1:
        a, b = (small[rng.integers(len(small))] for _ in range(2))
        if a.dim + b.dim <= max_dim:
            return direct_sum(a, b).module
        return a
    ambient = free_module(R, int(rng.integers(1, 3))) if kind == 2 else canonical_module(R)
    vecs = F.random(rng, (ambient.dim, int(rng.integers(1, 3))))
    if kind == 2:
        # quotient by random elements of the maximal ideal times the free module
        m_acts = ambient.max_ideal_actions()
        if m_acts:
            vecs = F.reduce(m_acts[int(rng.integers(len(m_acts)))] @ vecs)
        M = quotient(ambient, vecs).module
    else:
        M = submodule(ambient, vecs).module
    return M if 0 < M.dim <= max_dim else base["k"]


def random_pairs(R: FiniteLocalAlgebra, count: int, seed: int = 0, max_dim: int = 8):
    rng = np.random.default_rng(seed)
    return [(random_module(R, rng, max_dim), random_module(R, rng, max_dim)) for _ in range(count)]


def field_from_args(kind: str = "Fp", p: int = 5):
    return make_field(kind, p)
