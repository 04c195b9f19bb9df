"""Plane curves of the form G(X) = H(Y) over GF(q) and their quotient bases.

The defining ideal is generated by F = G(X) - H(Y) together with the two field
equations X^q - X and Y^q - Y.  Under a weighted degree lexicographic order
whose tie-break favours the smaller X-exponent, that generating set is a
Groebner basis whenever the monomial footprint is exactly as large as the
point count of the variety; the constructor certifies this by counting and
refuses curves where the count argument fails.

The footprint monomials, enumerated in increasing order, double as the index
set 1..n shared by every downstream table, and evaluating them on the variety
points yields the basis vectors u_i = v_i = w_i used by the bound machinery.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg
from .field import FieldSpec, field

__all__ = [
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "CurveSpec",
    "CurveConfigError",
    "order_compare",
    "normal_form",
    "preset_curve",
    "curve_from_config",
    "load_curve",
    "PRESETS",
]


class CurveConfigError(ValueError):
    """Raised for malformed curve configurations (CLI exit code 2)."""


class Monomial(NamedTuple):
    alpha: int
    beta: int


@dataclass(frozen=True)
class MonomialOrder:
    """Weighted degree order; ties go to the smaller X-exponent."""

    weight_x: int
    weight_y: int

    def __post_init__(self) -> None:
        if self.weight_x < 1 or self.weight_y < 1:
            raise CurveConfigError("monomial weights must be positive integers")

    def weight(self, m: Monomial) -> int:
        return self.weight_x * m.alpha + self.weight_y * m.beta

    def key(self, m: Monomial) -> tuple[int, int]:
        # (weight, alpha) is total: equal weight and equal alpha force equal beta
        return (self.weight(m), m.alpha)


def order_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


class Polynomial:
    """Sparse bivariate polynomial: monomial -> nonzero field code."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms: dict[Monomial, int]):
        self.spec = spec
        self.terms = {Monomial(*m): int(c) for m, c in terms.items() if c}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"Polynomial({self.terms})"


def _univariate_terms(coeffs, var: str) -> dict[Monomial, int]:
    out = {}
    for k, c in enumerate(coeffs):
        if c:
            out[Monomial(k, 0) if var == "x" else Monomial(0, k)] = int(c)
    return out


class CurveSpec:
    """Curve data: field, order, defining polynomials, footprint, variety."""

    def __init__(
        self,
        spec: FieldSpec,
        g_coeffs,
        h_coeffs,
        order: MonomialOrder,
        name: str = "custom",
    ):
        self.field = spec
        self.order = order
        self.name = name
        self.g_coeffs = tuple(int(c) % spec.p for c in g_coeffs)
        self.h_coeffs = tuple(int(c) % spec.p for c in h_coeffs)
        if len(self.g_coeffs) < 2 or self.g_coeffs[-1] == 0:
            raise CurveConfigError("G must have degree >= 1 with nonzero lead")
        if len(self.h_coeffs) < 2 or self.h_coeffs[-1] == 0:
            raise CurveConfigError("H must have degree >= 1 with nonzero lead")
        self.deg_g = len(self.g_coeffs) - 1
        self.deg_h = len(self.h_coeffs) - 1
        if self.deg_g > spec.q:
            raise CurveConfigError("deg G exceeds the field size")
        terms = dict(_univariate_terms(self.g_coeffs, "x"))
        for m, c in _univariate_terms(self.h_coeffs, "y").items():
            prev = terms.get(m, 0)
            merged = int(spec.SUB[prev, c])
            if merged:
                terms[m] = merged
            else:
                terms.pop(m, None)
        self.defining = Polynomial(spec, terms)
        lead = self.defining.leading_monomial(order)
        if lead != Monomial(self.deg_g, 0):
            raise CurveConfigError(
                f"leading monomial of G - H is {lead}, expected X^{self.deg_g}; "
                "the chosen weights do not fit this curve"
            )
        self._build_footprint()
        self._build_variety()
        if len(self.points) != self.n:
            raise CurveConfigError(
                f"footprint has {self.n} monomials but the variety has "
                f"{len(self.points)} points; the counting certificate fails"
            )
        self._cache: dict[str, object] = {}

    # -- footprint ----------------------------------------------------------

    def _build_footprint(self) -> None:
        q = self.field.q
        monos = [
            Monomial(a, b)
            for a in range(min(self.deg_g, q))
            for b in range(q)
        ]
        monos.sort(key=self.order.key)
        self.footprint: list[Monomial] = monos
        self.n = len(monos)
        self._index = {m: i + 1 for i, m in enumerate(monos)}
        w = np.zeros(self.n + 1, dtype=np.int64)
        for i, m in enumerate(monos):
            w[i + 1] = self.order.weight(m)
        self.weights = w  # 1-based, weights[0] unused

    def monomial(self, index: int) -> Monomial:
        """Footprint monomial for a 1-based basis index."""
        return self.footprint[index - 1]

    def index_of(self, m: Monomial) -> int:
        """1-based basis index of a footprint monomial."""
        return self._index[Monomial(*m)]

    # -- variety ------------------------------------------------------------

    def _eval_univariate(self, coeffs, values: np.ndarray) -> np.ndarray:
        spec = self.field
        acc = np.full(values.shape, coeffs[-1], dtype=np.int16)
        for c in reversed(coeffs[:-1]):
            acc = spec.ADD[spec.MUL[acc, values], c]
        return acc

    def _build_variety(self) -> None:
        spec = self.field
        codes = np.arange(spec.q, dtype=np.int16)
        gx = self._eval_univariate(self.g_coeffs, codes)
        hy = self._eval_univariate(self.h_coeffs, codes)
        on_curve = gx[:, None] == hy[None, :]
        xs, ys = np.nonzero(on_curve)  # row-major: x outer, y inner
        self.points = [(int(x), int(y)) for x, y in zip(xs, ys)]
        self._g_values = gx
        self._h_values = hy

    # -- evaluation ---------------------------------------------------------

    def _power_tables(self) -> tuple[np.ndarray, np.ndarray]:
        cached = self._cache.get("power_tables")
        if cached is None:
            spec = self.field
            xs = np.array([p[0] for p in self.points], dtype=np.int16)
            ys = np.array([p[1] for p in self.points], dtype=np.int16)
            max_a = max(self.deg_g, spec.q)
            xpow = np.ones((max_a + 1, len(xs)), dtype=np.int16)
            for a in range(1, max_a + 1):
                xpow[a] = spec.MUL[xpow[a - 1], xs]
            ypow = np.ones((spec.q + 1, len(ys)), dtype=np.int16)
            for b in range(1, spec.q + 1):
                ypow[b] = spec.MUL[ypow[b - 1], ys]
            cached = (xpow, ypow)
            self._cache["power_tables"] = cached
        return cached

    def evaluate(self, m: Monomial) -> np.ndarray:
        """Evaluation vector of a monomial over the variety points, as codes."""
        m = Monomial(*m)
        spec = self.field
        xpow, ypow = self._power_tables()
        if m.alpha < xpow.shape[0] and m.beta < ypow.shape[0]:
            return spec.MUL[xpow[m.alpha], ypow[m.beta]]
        xs = np.array([p[0] for p in self.points], dtype=np.int16)
        ys = np.array([p[1] for p in self.points], dtype=np.int16)
        return spec.MUL[
            linalg.vec_pow(spec, xs, m.alpha), linalg.vec_pow(spec, ys, m.beta)
        ]

    def basis_matrix(self) -> np.ndarray:
        """n x n matrix whose row i-1 is the evaluation of footprint monomial i."""
        cached = self._cache.get("basis_matrix")
        if cached is None:
            cached = np.stack([self.evaluate(m) for m in self.footprint])
            self._cache["basis_matrix"] = cached
        return cached

    # -- normal forms -------------------------------------------------------

    def _reduce_step(self, terms: dict[Monomial, int], mono: Monomial) -> None:
        """Cancel one reducible monomial in place (defining poly first)."""
        spec = self.field
        q = spec.q
        coeff = terms.pop(mono)
        a, b = mono
        if a >= self.deg_g:
            lc = self.defining.terms[Monomial(self.deg_g, 0)]
            factor = spec.mul_code(coeff, int(spec.INV[lc]))
            for fm, fc in self.defining.terms.items():
                if fm == Monomial(self.deg_g, 0):
                    continue
                target = Monomial(a - self.deg_g + fm.alpha, b + fm.beta)
                delta = spec.mul_code(factor, fc)
                merged = int(spec.SUB[terms.get(target, 0), delta])
                if merged:
                    terms[target] = merged
                else:
                    terms.pop(target, None)
        elif a >= q:  # unreachable while deg_g <= q, kept for completeness
            target = Monomial(a - q + 1, b)
            merged = int(spec.ADD[terms.get(target, 0), coeff])
            if merged:
                terms[target] = merged
            else:
                terms.pop(target, None)
        elif b >= q:
            target = Monomial(a, b - q + 1)
            merged = int(spec.ADD[terms.get(target, 0), coeff])
            if merged:
                terms[target] = merged
            else:
                terms.pop(target, None)
        else:
            raise AssertionError("monomial is not reducible")

    def normal_form(self, poly: Polynomial) -> Polynomial:
        """Remainder of poly modulo the three basis polynomials."""
        if poly.spec != self.field:
            raise ValueError("polynomial lives in a different field")
        q = self.field.q
        terms = dict(poly.terms)
        while True:
            reducible = [
                m for m in terms if m.alpha >= self.deg_g or m.alpha >= q or m.beta >= q
            ]
            if not reducible:
                return Polynomial(self.field, terms)
            self._reduce_step(terms, max(reducible, key=self.order.key))

    def normal_form_monomial(self, m: Monomial) -> Polynomial:
        return self.normal_form(Polynomial(self.field, {Monomial(*m): 1}))

    def product_lm_table(self) -> np.ndarray:
        """lm index of the normal form of M_i * M_j for every exponent pair.

        Returns an array t with t[A, B] = 1-based footprint index of the
        leading monomial of the normal form of X^A Y^B, for all exponent sums
        reachable from footprint products.  Built once by memoised descent.
        """
        cached = self._cache.get("product_lm_table")
        if cached is not None:
            return cached
        spec = self.field
        q = spec.q
        max_a = 2 * (min(self.deg_g, q) - 1)
        max_b = 2 * (q - 1)
        memo: dict[Monomial, dict[Monomial, int]] = {}

        def nf(mono: Monomial) -> dict[Monomial, int]:
            hit = memo.get(mono)
            if hit is not None:
                return hit
            a, b = mono
            if b >= q:
                result = nf(Monomial(a, b - q + 1))
            elif a >= self.deg_g:
                lc = self.defining.terms[Monomial(self.deg_g, 0)]
                inv_lc = int(spec.INV[lc])
                acc: dict[Monomial, int] = {}
                for fm, fc in self.defining.terms.items():
                    if fm == Monomial(self.deg_g, 0):
                        continue
                    scaled = spec.mul_code(inv_lc, int(spec.NEG[fc]))
                    sub = nf(Monomial(a - self.deg_g + fm.alpha, b + fm.beta))
                    for sm, sc in sub.items():
                        merged = int(
                            spec.ADD[acc.get(sm, 0), spec.mul_code(scaled, sc)]
                        )
                        if merged:
                            acc[sm] = merged
                        else:
                            acc.pop(sm, None)
                result = acc
            else:
                result = {mono: 1}
            memo[mono] = result
            return result

        table = np.zeros((max_a + 1, max_b + 1), dtype=np.int32)
        for a in range(max_a + 1):
            for b in range(max_b + 1):
                form = nf(Monomial(a, b))
                if not form:
                    raise ValueError(
                        f"normal form of X^{a} Y^{b} vanished; "
                        "the quotient basis is inconsistent"
                    )
                lead = max(form, key=self.order.key)
                table[a, b] = self._index[lead]
        self._cache["product_lm_table"] = table
        return table

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"CurveSpec({self.name}, q={self.field.q}, n={self.n})"


def normal_form(curve: CurveSpec, poly: Polynomial) -> Polynomial:
    return curve.normal_form(poly)


# -- presets and configs ------------------------------------------------------

PRESETS: dict[str, dict] = {
    "f8": {
        "p": 2,
        "m": 3,
        "G": [0, 1, 1, 0, 1],  # X^4 + X^2 + X
        "H": [0, 0, 0, 1, 0, 1, 1],  # Y^6 + Y^5 + Y^3
        "weights": [3, 2],
    },
    "f27": {
        "p": 3,
        "m": 3,
        "G": [0, 1, 0, 1, 0, 0, 0, 0, 0, 1],  # X^9 + X^3 + X
        "H": [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1],  # Y^12 + Y^10 + Y^4
        "weights": [4, 3],
    },
}


def curve_from_config(config: dict, name: str = "custom") -> CurveSpec:
    """Build a CurveSpec from a plain config mapping; validates everything."""
    try:
        p = int(config["p"])
        m = int(config["m"])
        g = [int(c) for c in config["G"]]
        h = [int(c) for c in config["H"]]
        wx, wy = (int(w) for w in config["weights"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CurveConfigError(f"bad curve config: {exc}") from exc
    modulus = config.get("modulus")
    try:
        spec = field(p, m, tuple(int(c) for c in modulus) if modulus else None)
    except ValueError as exc:
        raise CurveConfigError(f"bad field parameters: {exc}") from exc
    for coeffs, label in ((g, "G"), (h, "H")):
        for c in coeffs:
            if not 0 <= c < p:
                raise CurveConfigError(
                    f"{label} coefficients must lie in 0..{p - 1} (prime subfield)"
                )
    return CurveSpec(spec, g, h, MonomialOrder(wx, wy), name=name)


def preset_curve(name: str) -> CurveSpec:
    if name not in PRESETS:
        raise CurveConfigError(f"unknown preset {name!r}; have {sorted(PRESETS)}")
    return curve_from_config(PRESETS[name], name=name)


def load_curve(source: str) -> CurveSpec:
    """Resolve a preset name or a JSON config path into a CurveSpec."""
    if source in PRESETS:
        return preset_curve(source)
    try:
        with open(source) as fh:
            config = json.load(fh)
    except OSError as exc:
        raise CurveConfigError(f"cannot read curve config {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CurveConfigError(f"curve config {source!r} is not valid JSON: {exc}") from exc
    return curve_from_config(config, name=source)
