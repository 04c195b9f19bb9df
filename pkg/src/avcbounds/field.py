"""Small finite fields GF(p^m) with table-driven arithmetic.

Elements are polynomial coefficient vectors over GF(p), reduced modulo a fixed
irreducible modulus.  Internally every element is packed into an integer code
in ``range(q)`` (base-p digits, constant coefficient least significant) so that
bulk vector work can run through numpy lookup tables.  Characteristics 2 and 3
are supported, q is capped at 256.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "FieldSpec",
    "FieldElement",
    "GF8_MODULUS",
    "GF27_MODULUS",
    "field",
]

# Default moduli: t^3 + t + 1 over GF(2) and t^3 + 2t + 1 over GF(3),
# coefficient lists in ascending degree order.
GF8_MODULUS = (1, 1, 0, 1)
GF27_MODULUS = (1, 2, 0, 1)

_SUPPORTED_P = (2, 3)
_MAX_Q = 256


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Polynomial division over GF(p) on ascending coefficient lists."""
    num = list(num)
    dden = len(den) - 1
    inv_lc = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    quot = [0] * max(len(num) - dden, 0)
    while len(num) - 1 >= dden and any(num):
        shift = len(num) - 1 - dden
        factor = (num[-1] * inv_lc) % p
        if factor:
            quot[shift] = factor
            for k, c in enumerate(den):
                num[shift + k] = (num[shift + k] - factor * c) % p
        _poly_trim(num)
        if not num:
            break
    return quot, num


def _monic_polys(degree: int, p: int):
    """All monic polynomials of exactly the given degree, ascending coeffs."""
    for packed in range(p**degree):
        coeffs = []
        v = packed
        for _ in range(degree):
            coeffs.append(v % p)
            v //= p
        coeffs.append(1)
        yield coeffs


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for den in _monic_polys(d, p):
            _, rem = _poly_divmod(list(modulus), den, p)
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FieldElement:
    """Immutable element of a FieldSpec, held as its packed integer code."""

    spec: "FieldSpec"
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.decode(self.code)

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return self.spec.add(self, other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return self.spec.mul(self, other)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"FieldElement({self.coeffs}, q={self.spec.q})"


class FieldSpec:
    """GF(p^m) defined by characteristic, degree and irreducible modulus.

    Carries dense numpy lookup tables ADD/MUL (q x q), NEG/INV (q,) used by the
    vectorised helpers in :mod:`avcbounds.linalg`.  Instances are immutable and
    hashable by construction parameters.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...] | list[int]):
        if p not in _SUPPORTED_P:
            raise ValueError(f"characteristic {p} not supported (expected 2 or 3)")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] == 0:
            raise ValueError("modulus must have degree exactly m")
        q = p**m
        if q > _MAX_Q:
            raise ValueError(f"field size {q} exceeds cap {_MAX_Q}")
        if m > 1 and not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus
        self._build_tables()

    # -- representation ----------------------------------------------------

    def encode(self, coeffs) -> int:
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + int(c) % self.p
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.m):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def element(self, coeffs) -> FieldElement:
        return FieldElement(self, self.encode(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> list[FieldElement]:
        """Every element, zero first, in ascending code order."""
        return [FieldElement(self, c) for c in range(self.q)]

    # -- scalar arithmetic --------------------------------------------------

    def _check(self, *els: FieldElement) -> None:
        for e in els:
            if e.spec is not self and e.spec != self:
                raise ValueError("elements belong to different fields")

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a, b)
        return FieldElement(self, int(self.ADD[a.code, b.code]))

    def neg(self, a: FieldElement) -> FieldElement:
        self._check(a)
        return FieldElement(self, int(self.NEG[a.code]))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        self._check(a, b)
        return FieldElement(self, int(self.MUL[a.code, b.code]))

    def inv(self, a: FieldElement) -> FieldElement:
        self._check(a)
        if a.code == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return FieldElement(self, int(self.INV[a.code]))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a.code
        while e:
            if e & 1:
                result = int(self.MUL[result, base])
            base = int(self.MUL[base, base])
            e >>= 1
        return FieldElement(self, result)

    # -- code-level helpers (used by linalg) ---------------------------------

    def mul_code(self, a: int, b: int) -> int:
        return int(self.MUL[a, b])

    def pow_code(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.MUL[result, base])
            base = int(self.MUL[base, base])
            e >>= 1
        return result

    # -- table construction --------------------------------------------------

    def _mul_codes_slow(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self.decode(a), self.decode(b)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if not ca:
                continue
            for j, cb in enumerate(db):
                prod[i + j] = (prod[i + j] + ca * cb) % p
        # reduce modulo the modulus, leading coefficient first
        inv_lc = pow(self.modulus[-1], p - 2, p) if p > 2 else 1
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if not c:
                continue
            factor = (c * inv_lc) % p
            shift = top - m
            for k, mc in enumerate(self.modulus):
                prod[shift + k] = (prod[shift + k] - factor * mc) % p
        code = 0
        for c in reversed(prod[:m]):
            code = code * p + c
        return code

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        codes = np.arange(q)
        digits = np.zeros((q, self.m), dtype=np.int8)
        v = codes.copy()
        for k in range(self.m):
            digits[:, k] = v % p
            v //= p
        self.DIGITS = digits
        add_digits = (digits[:, None, :] + digits[None, :, :]) % p
        weights = p ** np.arange(self.m)
        self.ADD = (add_digits * weights).sum(axis=2).astype(np.int16)
        self.NEG = (((-digits) % p) * weights).sum(axis=1).astype(np.int16)
        mul = np.zeros((q, q), dtype=np.int16)
        for a in range(q):
            for b in range(a, q):
                c = self._mul_codes_slow(a, b)
                mul[a, b] = c
                mul[b, a] = c
        self.MUL = mul
        inv = np.zeros(q, dtype=np.int16)
        for a in range(1, q):
            row = np.nonzero(mul[a] == 1)[0]
            if row.size != 1:
                raise ValueError("multiplication table is not a group on units")
            inv[a] = row[0]
        self.INV = inv
        self.SUB = self.ADD[:, self.NEG]
        # per-code multiplication matrices over GF(p): column e = digits of a * t^e
        mulmat = np.zeros((q, self.m, self.m), dtype=np.int8)
        for a in range(q):
            for e in range(self.m):
                t_e = self.pow_code(p if self.m > 1 else 0, e) if e else 1
                mulmat[a, :, e] = digits[self.mul_code(a, t_e)]
        self.MULMAT = mulmat

    # -- identity -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field(p: int, m: int, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Cached FieldSpec constructor with default moduli for GF(8) and GF(27)."""
    if modulus is None:
        if (p, m) == (2, 3):
            modulus = GF8_MODULUS
        elif (p, m) == (3, 3):
            modulus = GF27_MODULUS
        elif m == 1:
            modulus = (0, 1)
        else:
            raise ValueError(f"no default modulus for GF({p}^{m})")
    return FieldSpec(p, m, tuple(modulus))
