"""Brute-force ground truth for tiny codes.

Everything here recomputes from first principles: full message-space
sweeps, subspace enumeration in reduced echelon form, and a
self-contained subset walk for the mu maximization.  Nothing calls into
the bound machinery, so agreement between the two routes is evidence
rather than tautology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .codes import CodeSpec
from .field import FieldSpec
from .rho import BasisTriple, RhoTable, m_of_vector

__all__ = [
    "COMBINATION_CAP",
    "MESSAGE_SWEEP_CAP",
    "MU_UNIVERSE_CAP",
    "SUBSPACE_CAP",
    "Subspace",
    "gaussian_binomial",
    "m_of_subspace",
    "max_mu_exhaustive",
    "support_size",
    "true_ghw",
    "true_min_distance",
]

MESSAGE_SWEEP_CAP = 10**7
SUBSPACE_CAP = 10**7
COMBINATION_CAP = 10**6
MU_UNIVERSE_CAP = 22

_CHUNK = 1 << 14


@dataclass(frozen=True)
class Subspace:
    """A subspace given by an explicit basis, rows = vectors of length n."""

    spec: FieldSpec
    basis: np.ndarray

    def __post_init__(self) -> None:
        basis = np.atleast_2d(np.asarray(self.basis, dtype=np.int16))
        object.__setattr__(self, "basis", basis)
        if basis.shape[0] == 0:
            raise ValueError("a subspace needs at least one basis vector")
        if linalg.rank(self.spec, basis) != basis.shape[0]:
            raise ValueError("basis rows are linearly dependent")

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @property
    def n(self) -> int:
        return int(self.basis.shape[1])


def support_size(d: Subspace) -> int:
    """Number of positions where the subspace is not identically zero.

    A combination is nonzero at a position only if some basis row is, and
    the basis rows themselves belong to the subspace, so the support is
    exactly the set of nonzero basis columns.
    """
    return int(np.count_nonzero(d.basis.any(axis=0)))


def _coefficient_block(q: int, t: int, lo: int, hi: int) -> np.ndarray:
    """Rows lo..hi-1 of the lexicographic (q**t, t) coefficient table."""
    idx = np.arange(lo, hi, dtype=np.int64)
    powers = q ** np.arange(t - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers) % q).astype(np.int16)


def m_of_subspace(triple: BasisTriple, d: Subspace) -> frozenset[int]:
    """First-hit indexes realized by the nonzero vectors of the subspace.

    Enumerates all q**dim - 1 nonzero combinations.  The result always has
    exactly dim(D) elements; that is asserted rather than trusted.
    """
    spec = triple.spec
    if d.spec is not spec and d.spec != spec:
        raise ValueError("subspace and basis triple live over different fields")
    q, t = spec.q, d.dim
    if q**t > COMBINATION_CAP:
        raise ValueError(f"q**t = {q**t} exceeds the enumeration cap {COMBINATION_CAP}")
    hits: set[int] = set()
    for lo in range(1, q**t, _CHUNK):
        coeffs = _coefficient_block(q, t, lo, min(lo + _CHUNK, q**t))
        words = linalg.matmul(spec, coeffs, d.basis)
        for row in words:
            hits.add(m_of_vector(triple, row))
    assert len(hits) == t, f"subspace of dim {t} realized {len(hits)} first hits"
    return frozenset(hits)


def true_min_distance(code: CodeSpec) -> int:
    """Minimum Hamming weight over all nonzero codewords, by full sweep."""
    spec = code.curve.field
    q, k = spec.q, code.k
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    if q**k > MESSAGE_SWEEP_CAP:
        raise ValueError(f"q**k = {q**k} exceeds the sweep cap {MESSAGE_SWEEP_CAP}")
    gen = code.generator_matrix()
    best = code.n
    for lo in range(1, q**k, _CHUNK):
        msgs = _coefficient_block(q, k, lo, min(lo + _CHUNK, q**k))
        words = linalg.matmul(spec, msgs, gen)
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


def gaussian_binomial(k: int, t: int, q: int) -> int:
    """Number of t-dimensional subspaces of a k-dimensional space over GF(q)."""
    if t < 0 or t > k:
        return 0
    num = den = 1
    for i in range(t):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def true_ghw(code: CodeSpec, t: int) -> int:
    """Smallest support over all t-dimensional subcodes, by full enumeration.

    Subspaces are enumerated once each through canonical reduced-echelon
    coefficient matrices; the count is checked against the subspace count
    formula at the end.
    """
    spec = code.curve.field
    q, k = spec.q, code.k
    if not 1 <= t <= k:
        raise ValueError(f"t must lie in 1..{k}")
    expected = gaussian_binomial(k, t, q)
    if expected > SUBSPACE_CAP:
        raise ValueError(f"{expected} subspaces exceed the cap {SUBSPACE_CAP}")
    gen = code.generator_matrix()
    best = code.n
    seen = 0
    for pivots in itertools.combinations(range(k), t):
        pivot_set = set(pivots)
        free = [
            (r, c)
            for r in range(t)
            for c in range(k)
            if c > pivots[r] and c not in pivot_set
        ]
        base = np.zeros((t, k), dtype=np.int16)
        base[np.arange(t), list(pivots)] = 1
        total = q ** len(free)
        rows = np.array([r for r, _ in free], dtype=np.intp)
        cols = np.array([c for _, c in free], dtype=np.intp)
        for lo in range(0, total, _CHUNK):
            fill = _coefficient_block(q, len(free), lo, min(lo + _CHUNK, total))
            mats = np.broadcast_to(base, (fill.shape[0], t, k)).copy()
            mats[:, rows, cols] = fill
            words = linalg.matmul(spec, mats.reshape(-1, k), gen)
            words = words.reshape(fill.shape[0], t, code.n)
            supports = np.count_nonzero(words.any(axis=1), axis=1)
            best = min(best, int(supports.min()))
        seen += total
    assert seen == expected, f"enumerated {seen} subspaces, expected {expected}"
    return best


def max_mu_exhaustive(table: RhoTable, targets) -> int:
    """Exact mu-set maximum by direct subset extension over the table.

    Deliberately re-derives everything from the raw table: a candidate i
    joins a chosen set when some column holds a target value in row i that
    strictly dominates every previously chosen row.  Kept independent of
    the search engine so the two can cross-check each other.
    """
    target_set = frozenset(int(l) for l in targets)
    if not target_set:
        raise ValueError("need at least one target value")
    if not all(1 <= l <= table.n for l in target_set):
        raise ValueError(f"targets must lie in 1..{table.n}")
    rho = table.rho  # padded, row/col 0 unused
    universe = [
        i
        for i in range(1, table.n + 1)
        if any(int(v) in target_set for v in rho[i, 1:])
    ]
    if len(universe) > MU_UNIVERSE_CAP:
        raise ValueError(
            f"universe of {len(universe)} candidates exceeds the cap {MU_UNIVERSE_CAP}"
        )

    def extends(chosen: list[int], i: int) -> bool:
        row = rho[i]
        for j in range(1, table.n + 1):
            v = int(row[j])
            if v not in target_set:
                continue
            if all(int(rho[c, j]) < v for c in chosen):
                return True
        return False

    best = 0

    def walk(start: int, chosen: list[int]) -> None:
        nonlocal best
        best = max(best, len(chosen))
        for pos in range(start, len(universe)):
            if len(chosen) + (len(universe) - pos) <= best:
                break
            i = universe[pos]
            if extends(chosen, i):
                chosen.append(i)
                walk(pos + 1, chosen)
                chosen.pop()

    walk(0, [])
    return best
