"""Dual codes cut out by rows of the monomial evaluation basis.

A code here is the set of vectors orthogonal to a chosen subset of the
evaluation basis rows.  The parity index set L fully determines the code;
the complementary index set is exactly the set of first-hit positions
realized by nonzero codewords, which is what the bound machinery consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .curve import CurveSpec
from .rho import BasisTriple, RhoTable, rho_table_algebraic

__all__ = ["CodeSpec", "standard_code"]


@dataclass
class CodeSpec:
    curve: CurveSpec
    parity: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.curve.footprint)
        seen = sorted(set(int(l) for l in self.parity))
        if seen and not (1 <= seen[0] and seen[-1] <= n):
            raise ValueError(f"parity indexes must lie in 1..{n}")
        self.parity = tuple(seen)

    @property
    def n(self) -> int:
        return len(self.curve.footprint)

    @property
    def k(self) -> int:
        return self.n - len(self.parity)

    @property
    def m_set(self) -> tuple[int, ...]:
        """Indexes where a nonzero codeword can first hit: all of 1..n minus
        the parity set."""
        excluded = set(self.parity)
        return tuple(l for l in range(1, self.n + 1) if l not in excluded)

    def table(self) -> RhoTable:
        return rho_table_algebraic(self.curve)

    def parity_matrix(self) -> np.ndarray:
        w = self.curve.basis_matrix()
        rows = [l - 1 for l in self.parity]
        return w[rows].copy()

    def generator_matrix(self) -> np.ndarray:
        """k x n generator, the null space of the parity rows."""
        gen = self._cache.get("generator")
        if gen is None:
            if self.parity:
                gen = linalg.null_space(self.curve.field, self.parity_matrix())
            else:
                gen = np.eye(self.n, dtype=np.int16)
            assert gen.shape[0] == self.k
            self._cache["generator"] = gen
        return gen

    def describe(self) -> str:
        return f"[n={self.n}, k={self.k}] parity={{{', '.join(map(str, self.parity))}}}"


def standard_code(curve: CurveSpec, s: int) -> CodeSpec:
    """Code whose parity checks are the first s basis rows."""
    n = len(curve.footprint)
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in 0..{n}, got {s}")
    return CodeSpec(curve, tuple(range(1, s + 1)))
