"""Order functions and star-product tables.

Given a basis w_1..w_n of GF(q)^n, rho(c) is the least i with c in the span of
w_1..w_i (0 for the zero vector), and m(c) is the least l with c . w_l != 0.
The central object is the n x n table rho[i][j] = rho(u_i * v_j) where * is
the componentwise product.  Two independent builders are provided: a generic
linear-algebra path that works for any basis triple, and an algebraic path for
curve bases that reads leading monomials of reduced products.  They must agree
on curve triples; tests and the acceptance suite cross-check them cell by cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import linalg
from .curve import CurveSpec
from .field import FieldSpec

__all__ = [
    "BasisTriple",
    "RhoTable",
    "rho_of_vector",
    "m_of_vector",
    "rho_table_generic",
    "rho_table_algebraic",
]


@dataclass
class BasisTriple:
    """Three bases U, V, W of GF(q)^n, rows are basis vectors."""

    spec: FieldSpec
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    _cache: dict = dataclass_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.w.shape[0]
        for name, m in (("U", self.u), ("V", self.v), ("W", self.w)):
            if m.shape != (n, n):
                raise ValueError(f"basis {name} is not square of matching size")
            if linalg.rank(self.spec, m) != n:
                raise ValueError(f"basis {name} is singular")

    @property
    def n(self) -> int:
        return self.w.shape[0]

    def w_inverse(self) -> np.ndarray:
        inv = self._cache.get("w_inverse")
        if inv is None:
            inv = linalg.inverse(self.spec, self.w)
            self._cache["w_inverse"] = inv
        return inv

    @classmethod
    def from_curve(cls, curve: CurveSpec) -> "BasisTriple":
        cached = curve._cache.get("basis_triple")
        if cached is None:
            b = curve.basis_matrix()
            cached = cls(curve.field, b, b, b)
            curve._cache["basis_triple"] = cached
        return cached


@dataclass
class RhoTable:
    """1-based star-product order table; entry [0] rows/cols are padding."""

    n: int
    rho: np.ndarray  # (n+1, n+1) int32, entries 1..n
    weights: np.ndarray | None = None  # (n+1,) int64 when curve-derived
    _cache: dict = dataclass_field(default_factory=dict, repr=False, compare=False)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError("table indexes are 1-based")
        return int(self.rho[i, j])


def rho_of_vector(triple: BasisTriple, c: np.ndarray) -> int:
    """Largest W-coordinate index of c (1-based), 0 for the zero vector."""
    coords = linalg.matmul(triple.spec, np.asarray(c, dtype=np.int16)[None, :],
                           triple.w_inverse())[0]
    support = np.nonzero(coords)[0]
    return int(support[-1]) + 1 if support.size else 0


def m_of_vector(triple: BasisTriple, c: np.ndarray) -> int:
    """Least l with c . w_l nonzero (1-based).  The zero vector has no such l."""
    spec = triple.spec
    dots = linalg.fold_add(
        spec, spec.MUL[triple.w, np.asarray(c, dtype=np.int16)[None, :]], axis=-1
    )
    support = np.nonzero(dots)[0]
    if not support.size:
        raise ValueError("first-hit index is undefined for the zero vector")
    return int(support[0]) + 1


def rho_table_generic(triple: BasisTriple) -> RhoTable:
    """Star-product table via one factorisation of W applied to all products."""
    spec = triple.spec
    n = triple.n
    products = spec.MUL[triple.u[:, None, :], triple.v[None, :, :]].reshape(n * n, n)
    coords = linalg.matmul(spec, products, triple.w_inverse())
    nonzero = coords != 0
    empty = ~nonzero.any(axis=1)
    if empty.any():
        flat = int(np.nonzero(empty)[0][0])
        i, j = divmod(flat, n)
        raise ValueError(f"star product of basis vectors ({i + 1}, {j + 1}) is zero")
    values = n - np.argmax(nonzero[:, ::-1], axis=1)
    rho = np.zeros((n + 1, n + 1), dtype=np.int32)
    rho[1:, 1:] = values.reshape(n, n)
    return RhoTable(n=n, rho=rho)


def rho_table_algebraic(curve: CurveSpec) -> RhoTable:
    """Star-product table from leading monomials of reduced monomial products."""
    cached = curve._cache.get("rho_table")
    if cached is not None:
        return cached
    lm = curve.product_lm_table()
    alphas = np.array([m.alpha for m in curve.footprint])
    betas = np.array([m.beta for m in curve.footprint])
    values = lm[alphas[:, None] + alphas[None, :], betas[:, None] + betas[None, :]]
    n = curve.n
    rho = np.zeros((n + 1, n + 1), dtype=np.int32)
    rho[1:, 1:] = values
    table = RhoTable(n=n, rho=rho, weights=curve.weights.copy())
    curve._cache["rho_table"] = table
    return table
