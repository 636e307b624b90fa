"""Finite-dimensional commutative local k-algebras given by structure constants."""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .exactlinalg import Inconsistent, PrimeField, RationalField, rank, solve


class AlgebraError(ValueError):
    """A ring axiom fails; ``axiom`` names it and ``witness`` pins it down."""

    axiom = "algebra"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCommutative(AlgebraError):
    axiom = "commutativity"


class NotAssociative(AlgebraError):
    axiom = "associativity"


class NoUnit(AlgebraError):
    axiom = "unit"


class NotLocal(AlgebraError):
    axiom = "locality"


class BadShape(AlgebraError):
    axiom = "shape"


class UnknownPreset(KeyError):
    pass


class FiniteLocalAlgebra:
    """A commutative local k-algebra ``(R, m, k)`` with a chosen k-basis.

    ``mult[i, j]`` is the coordinate vector of ``b_i * b_j``.  Construction
    validates every axiom exhaustively; use :func:`from_structure_constants`.
    """

    def __init__(self, field, mult, unit_index: int, basis_names=None, name: str = "R"):
        self.field = field
        mult = field.array(mult)
        if mult.ndim != 3 or len(set(mult.shape)) != 1:
            raise BadShape(f"structure constants must be dim x dim x dim, got {mult.shape}")
        self.dim = mult.shape[0]
        if not 0 <= unit_index < self.dim:
            raise NoUnit(f"unit index {unit_index} out of range", witness=(unit_index,))
        self.mult = mult
        self.unit_index = unit_index
        self.name = name
        self.basis_names = list(basis_names) if basis_names else [f"b{i}" for i in range(self.dim)]
        if len(self.basis_names) != self.dim:
            raise BadShape("basis_names has the wrong length")
        # left[i][l, j] = coefficient of b_l in b_i * b_j
        self.left = np.ascontiguousarray(np.transpose(mult, (0, 2, 1)))
        self._check_unit()
        self._check_commutative()
        self._check_associative()
        self.residue, self.max_ideal = self._locality()
        for a in (self.mult, self.left, self.residue, self.max_ideal):
            a.setflags(write=False)

    # -- validation -------------------------------------------------------

    def _check_unit(self):
        e = self.field.eye(self.dim)
        u = self.unit_index
        for i in range(self.dim):
            if np.any(self.mult[u, i] != e[i]) or np.any(self.mult[i, u] != e[i]):
                raise NoUnit(
                    f"b{u} is not a unit: b{u}*b{i} != b{i}", witness=(u, i, u)
                )

    def _check_commutative(self):
        diff = self.mult != np.transpose(self.mult, (1, 0, 2))
        if np.any(diff):
            i, j, _ = (int(t) for t in np.argwhere(diff)[0])
            raise NotCommutative(f"b{i}*b{j} != b{j}*b{i}", witness=(i, j, j))

    def _check_associative(self):
        F = self.field
        n = self.dim
        c = self.mult
        # (b_i b_j) b_l = sum_m c[i,j,m] c[m,l,:]
        lhs = F.reduce(F.matmul(c.reshape(n * n, n), c.reshape(n, n * n))).reshape(n, n, n, n)
        # b_i (b_j b_l) = sum_m c[j,l,m] c[i,m,:]
        rhs = np.stack([F.matmul(c.reshape(n * n, n), c[i]).reshape(n, n, n) for i in range(n)])
        rhs = F.reduce(rhs)
        bad = np.argwhere(np.any(lhs != rhs, axis=3))
        if bad.size:
            i, j, l = (int(t) for t in bad[0])
            raise NotAssociative(f"(b{i}*b{j})*b{l} != b{i}*(b{j}*b{l})", witness=(i, j, l))

    def _eigenvalue(self, i: int):
        """The unique eigenvalue of multiplication by b_i, if it exists in k."""
        F = self.field
        n = self.dim
        vecs = [F.eye(n)[:, self.unit_index]]
        coeffs = None
        for _ in range(n + 1):
            nxt = F.matmul(self.left[i], vecs[-1].reshape(-1, 1)).ravel()
            basis = np.stack(vecs, axis=1)
            try:
                coeffs = solve(F, basis, nxt)
                break
            except Inconsistent:
                vecs.append(nxt)
        e = len(vecs)
        char = F.characteristic
        s = 0
        while char and (e // char**s) % char == 0:
            s += 1
        q = char**s if char else 1
        e_prime = e // q
        # mu(t) = (t^q - lam)^e'; coefficient of t^{q(e'-1)} in t^e - sum a_k t^k
        a = coeffs[q * (e_prime - 1)]
        return F.reduce(F.array([a])[0] * F.inv(e_prime)) if char else a / e_prime

    def _locality(self):
        F = self.field
        n = self.dim
        lam = F.zeros(n)
        for i in range(n):
            lam[i] = self._eigenvalue(i)
        # residue map must be multiplicative: chi(b_i b_j) = chi(b_i) chi(b_j)
        chi_prod = F.reduce(F.matmul(self.mult.reshape(n * n, n), lam.reshape(-1, 1))).reshape(n, n)
        outer = F.reduce(np.outer(lam, lam))
        bad = np.argwhere(chi_prod != outer)
        if bad.size:
            i, j = (int(t) for t in bad[0])
            raise NotLocal(
                f"no residue map to k: b{i}*b{j} breaks multiplicativity",
                witness=(i, j, self.unit_index),
            )
        one = F.eye(n)[:, self.unit_index]
        cols = [F.reduce(F.eye(n)[:, i] - lam[i] * one) for i in range(n) if i != self.unit_index]
        m = np.stack(cols, axis=1) if cols else F.zeros((n, 0))
        power = m
        for _ in range(n + 1):
            if rank(F, power) == 0:
                break
            power = self._ideal_product(m, power)
        else:
            raise NotLocal("kernel of the residue map is not nilpotent", witness=(self.unit_index,))
        return lam, m

    def _ideal_product(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prods = [self.multiply(a[:, s], b[:, t]) for s in range(a.shape[1]) for t in range(b.shape[1])]
        if not prods:
            return self.field.zeros((self.dim, 0))
        return np.stack(prods, axis=1)

    # -- arithmetic -------------------------------------------------------

    @property
    def one(self) -> np.ndarray:
        return self.field.eye(self.dim)[:, self.unit_index].copy()

    def element(self, coeffs) -> np.ndarray:
        return self.field.array(coeffs)

    def basis_element(self, i: int) -> np.ndarray:
        return self.field.eye(self.dim)[:, i].copy()

    def multiply(self, a, b) -> np.ndarray:
        return self.field.matmul(self.multiplication_matrix(a), np.asarray(b).reshape(-1, 1)).ravel()

    def multiplication_matrix(self, element) -> np.ndarray:
        """Matrix of ``x -> element * x`` in the chosen basis."""
        F = self.field
        element = F.array(element)
        if element.shape != (self.dim,):
            raise BadShape(f"element must have length {self.dim}")
        return F.reduce(np.tensordot(element, self.left, axes=1))

    def maximal_ideal_basis(self) -> np.ndarray:
        return self.max_ideal

    def is_unit(self, element) -> bool:
        return self.residue_of(element) != 0

    def residue_of(self, element):
        F = self.field
        return F.reduce(F.matmul(F.array(element).reshape(1, -1), self.residue.reshape(-1, 1)))[0, 0]

    def maximal_ideal_power(self, k: int) -> np.ndarray:
        F = self.field
        if k == 0:
            return F.eye(self.dim)
        p = self.max_ideal
        for _ in range(k - 1):
            if p.shape[1] == 0:
                break
            p = self._ideal_product(self.max_ideal, p)
        return p

    def loewy_length(self) -> int:
        """Smallest ``t`` with ``m^t = 0``."""
        t = 0
        while rank(self.field, self.maximal_ideal_power(t)) > 0:
            t += 1
        return t

    def is_field(self) -> bool:
        return self.dim == 1

    def __repr__(self):
        return f"FiniteLocalAlgebra({self.name!r}, dim={self.dim}, field={self.field})"

    def same_as(self, other: "FiniteLocalAlgebra") -> bool:
        return (
            self is other
            or (
                self.field == other.field
                and self.dim == other.dim
                and self.unit_index == other.unit_index
                and np.array_equal(self.mult, other.mult)
            )
        )


def from_structure_constants(dim: int, mult, unit_index: int, field=None, basis_names=None, name="R"):
    field = field or PrimeField(5)
    arr = np.asarray(mult, dtype=object)
    if arr.shape != (dim, dim, dim):
        raise BadShape(f"expected mult of shape {(dim, dim, dim)}, got {arr.shape}")
    return FiniteLocalAlgebra(field, arr, unit_index, basis_names=basis_names, name=name)


# -- presets ---------------------------------------------------------------


def field_algebra(field=None) -> FiniteLocalAlgebra:
    return from_structure_constants(1, [[[1]]], 0, field, ["1"], name="field")


def truncated_poly(n: int, field=None) -> FiniteLocalAlgebra:
    """k[x]/(x^n) with basis 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    mult = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i + j < n:
                mult[i, j, i + j] = 1
    names = ["1"] + ["x" if i == 1 else f"x^{i}" for i in range(1, n)]
    return from_structure_constants(n, mult, 0, field, names, name=f"truncated_poly({n})")


def square_zero_2vars(field=None) -> FiniteLocalAlgebra:
    """k[X,Y]/(X,Y)^2 with basis 1, x, y."""
    mult = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        mult[0, i, i] = mult[i, 0, i] = 1
    return from_structure_constants(3, mult, 0, field, ["1", "x", "y"], name="square_zero_2vars")


PRESET_NAMES = ("square_zero_2vars", "truncated_poly(2)", "truncated_poly(3)", "truncated_poly(4)", "field")


def preset(name: str, field=None) -> FiniteLocalAlgebra:
    name = name.strip()
    if name.startswith("preset:"):
        name = name[len("preset:"):]
    if name == "square_zero_2vars":
        return square_zero_2vars(field)
    if name == "field":
        return field_algebra(field)
    m = re.fullmatch(r"truncated_poly[(_]?(\d+)\)?", name)
    if m:
        return truncated_poly(int(m.group(1)), field)
    raise UnknownPreset(name)


def make_field(kind: str = "Fp", p: int = 5):
    if kind.upper() in ("Q", "QQ"):
        return RationalField()
    return PrimeField(p)


# -- JSON ------------------------------------------------------------------


def field_to_json(field) -> dict:
    if isinstance(field, RationalField):
        return {"field": "Q"}
    return {"field": "Fp", "p": field.p}


def ring_to_json(R: FiniteLocalAlgebra) -> dict:
    F = R.field
    doc = field_to_json(F)
    doc.update(
        {
            "name": R.name,
            "dim": R.dim,
            "basis_names": list(R.basis_names),
            "mult": [[[F.to_json(x) for x in R.mult[i, j]] for j in range(R.dim)] for i in range(R.dim)],
            "unit": R.unit_index,
        }
    )
    return doc


def ring_from_json(doc: dict) -> FiniteLocalAlgebra:
    try:
        field = make_field(doc.get("field", "Fp"), int(doc.get("p", 5)))
        return from_structure_constants(
            int(doc["dim"]),
            doc["mult"],
            int(doc["unit"]),
            field,
            doc.get("basis_names"),
            name=doc.get("name", "R"),
        )
    except KeyError as exc:
        raise BadShape(f"ring file lacks field {exc}") from None


def load_ring(spec: str, field=None) -> FiniteLocalAlgebra:
    """Ring from a preset name or a JSON file path."""
    path = Path(spec)
    if path.suffix == ".json" or path.exists():
        return ring_from_json(json.loads(path.read_text()))
    return preset(spec, field)
