"""Self-check property suites shared by the CLI harness and the tests.

Each suite returns a PropResult; `detail` is a short human-readable count
of what was exercised.  Suites are deterministic (fixed seeds) so the
reproduce harness emits identical bytes on every run.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .bounds import BoundMethod, advisory_bound, code_bound, fim_bound, max_mu_set
from .codes import CodeSpec, standard_code
from .curve import CurveSpec, Monomial
from .mu import (
    PairStatus,
    check_mu,
    check_mu_exception,
    check_relaxed_mu,
    classify_pairs,
)
from .oracle import _coefficient_block, max_mu_exhaustive, true_ghw, true_min_distance
from .rho import BasisTriple, RhoTable, m_of_vector, rho_table_algebraic

__all__ = ["PropResult", "ALL_SUITES", "run_suite"]

_SEED = 20260819


@dataclass(frozen=True)
class PropResult:
    name: str
    ok: bool
    detail: str


def _random_table(rng: np.random.Generator, n: int) -> RhoTable:
    arr = np.zeros((n + 1, n + 1), dtype=np.int32)
    arr[1:, 1:] = rng.integers(1, n + 1, size=(n, n))
    return RhoTable(n, arr)


def flavor_monotonicity(curve: CurveSpec) -> PropResult:
    """Pair counts never decrease as the domination condition weakens."""
    table = rho_table_algebraic(curve)
    pc = classify_pairs(table)
    bad = [
        l
        for l in range(1, table.n + 1)
        if not (
            pc.pair_count(l, PairStatus.WB)
            <= pc.pair_count(l, PairStatus.WWB)
            <= pc.pair_count(l, PairStatus.OWB)
        )
    ]
    return PropResult(
        f"flavor-monotonicity[{curve.name}]",
        not bad,
        f"{table.n} first-hit values" + (f"; violated at {bad}" if bad else ""),
    )


def window_degeneracy(curve: CurveSpec) -> PropResult:
    """A zero-length uncertainty window collapses the case bound to the
    plain search bound."""
    table = rho_table_algebraic(curve)
    bad = []
    for l in range(1, table.n + 1):
        if fim_bound(table, l, 0).value != advisory_bound(table, l):
            bad.append(l)
    return PropResult(
        f"window-degeneracy[{curve.name}]",
        not bad,
        f"{table.n} indexes" + (f"; violated at {bad}" if bad else ""),
    )


def downward_closure(pairs: int = 1000) -> PropResult:
    """Removing members never breaks any of the three set predicates."""
    rng = np.random.default_rng(_SEED)
    checked = 0
    bad = 0
    while checked < pairs:
        n = int(rng.integers(6, 13))
        table = _random_table(rng, n)
        size = int(rng.integers(1, n + 1))
        sup = sorted(rng.choice(np.arange(1, n + 1), size=size, replace=False).tolist())
        keep = rng.random(len(sup)) < 0.6
        sub = [i for i, k in zip(sup, keep) if k]
        l = int(rng.integers(1, n + 1))
        g = int(rng.integers(0, n - l + 1))
        pivot = min(l + g + 1, n)
        for sup_ok, sub_ok in (
            (check_mu(table, sup, (l,)), check_mu(table, sub, (l,))),
            (check_mu_exception(table, sup, l, g), check_mu_exception(table, sub, l, g)),
            (check_relaxed_mu(table, sup, l, pivot), check_relaxed_mu(table, sub, l, pivot)),
        ):
            if sup_ok and not sub_ok:
                bad += 1
        checked += 1
    return PropResult(
        "downward-closure",
        bad == 0,
        f"{checked} random subset pairs x 3 predicates; {bad} violations",
    )


def exact_matches_exhaustive(count: int = 100) -> PropResult:
    """The branch-and-bound engine in exact mode agrees with the
    independent exhaustive walk on random tables."""
    rng = np.random.default_rng(_SEED + 1)
    bad = 0
    for _ in range(count):
        table = _random_table(rng, 10)
        width = int(rng.integers(1, 3))
        targets = tuple(
            sorted(rng.choice(np.arange(1, 11), size=width, replace=False).tolist())
        )
        if max_mu_set(table, targets, exact=True).size != max_mu_exhaustive(
            table, targets
        ):
            bad += 1
    return PropResult(
        "exact-vs-exhaustive",
        bad == 0,
        f"{count} random 10x10 tables; {bad} disagreements",
    )


def oracle_soundness_d1(curve: CurveSpec, s_range=range(25, 32)) -> PropResult:
    """Every method's distance bound stays at or below the true minimum
    distance on exhaustively checkable codes."""
    bad = []
    checked = 0
    for s in s_range:
        code = standard_code(curve, s)
        true = true_min_distance(code)
        for method in BoundMethod:
            checked += 1
            if code_bound(code, method, 1).value > true:
                bad.append((s, method.token))
    return PropResult(
        f"oracle-soundness-d1[{curve.name}]",
        not bad,
        f"{checked} bound/truth comparisons" + (f"; violated: {bad}" if bad else ""),
    )


def oracle_soundness_d2(curve: CurveSpec, s_range=range(28, 32)) -> PropResult:
    """Every method's pair-weight bound stays at or below the true second
    generalized weight."""
    bad = []
    checked = 0
    for s in s_range:
        code = standard_code(curve, s)
        if code.k < 2:
            continue
        true = true_ghw(code, 2)
        for method in BoundMethod:
            checked += 1
            if code_bound(code, method, 2).value > true:
                bad.append((s, method.token))
    return PropResult(
        f"oracle-soundness-d2[{curve.name}]",
        not bad,
        f"{checked} bound/truth comparisons" + (f"; violated: {bad}" if bad else ""),
    )


def first_hit_structure(curve: CurveSpec) -> PropResult:
    """First-hit sets behave: a t-dimensional subspace realizes exactly t
    first hits, and a code's codewords realize exactly the non-parity
    indexes."""
    from .oracle import Subspace, m_of_subspace  # local: keeps import graph flat

    spec = curve.field
    triple = BasisTriple.from_curve(curve)
    rng = np.random.default_rng(_SEED + 2)
    bad = []
    checked = 0
    # random small subspaces: the first-hit count equals the dimension
    for dim in (1, 2):
        for _ in range(25):
            rows = rng.integers(0, spec.q, size=(dim, curve.n)).astype(np.int16)
            try:
                d = Subspace(spec, rows)
            except ValueError:
                continue
            checked += 1
            if len(m_of_subspace(triple, d)) != dim:
                bad.append(("dim", dim))
    # tiny codes: first hits of all nonzero codewords = complement of parity
    scattered = tuple(l for l in range(1, curve.n + 1) if l not in {2, 9, 17, 25, 31})
    for parity in (tuple(range(1, curve.n - 4)), scattered):
        code = CodeSpec(curve, parity)
        gen = code.generator_matrix()
        hits = set()
        for lo in range(1, spec.q**code.k, 1 << 13):
            msgs = _coefficient_block(spec.q, code.k, lo, min(lo + (1 << 13), spec.q**code.k))
            words = linalg.matmul(spec, msgs, gen)
            hits.update(m_of_vector(triple, word) for word in words)
        checked += 1
        if hits != set(code.m_set):
            bad.append(("code", len(parity)))
    return PropResult(
        f"first-hit-structure[{curve.name}]",
        not bad,
        f"{checked} instances" + (f"; violated: {bad}" if bad else ""),
    )


def star_morphism(curve: CurveSpec) -> PropResult:
    """Pointwise products of basis evaluations match evaluated reduced
    products: the quotient algebra and the function algebra agree."""
    spec = curve.field
    ev = curve.basis_matrix()
    bad = 0
    for i in range(1, curve.n + 1):
        mi = curve.monomial(i)
        for j in range(i, curve.n + 1):
            mj = curve.monomial(j)
            nf = curve.normal_form_monomial(Monomial(mi.alpha + mj.alpha, mi.beta + mj.beta))
            lhs = np.zeros(curve.n, dtype=np.int16)
            for mono, coeff in nf.terms.items():
                lhs = spec.ADD[lhs, spec.MUL[coeff, ev[curve.index_of(mono) - 1]]]
            rhs = spec.MUL[ev[i - 1], ev[j - 1]]
            if not np.array_equal(lhs, rhs):
                bad += 1
    pairs = curve.n * (curve.n + 1) // 2
    return PropResult(
        f"star-morphism[{curve.name}]",
        bad == 0,
        f"{pairs} monomial pairs; {bad} mismatches",
    )


ALL_SUITES = (
    "flavor-monotonicity",
    "window-degeneracy",
    "downward-closure",
    "exact-vs-exhaustive",
    "oracle-soundness-d1",
    "oracle-soundness-d2",
    "first-hit-structure",
    "star-morphism",
)


def run_suite(name: str, f8: CurveSpec, f27: CurveSpec) -> list[PropResult]:
    """Run one named suite; curve-parametric suites cover both presets
    unless the large one is out of budget for them."""
    if name == "flavor-monotonicity":
        return [flavor_monotonicity(f8), flavor_monotonicity(f27)]
    if name == "window-degeneracy":
        return [window_degeneracy(f8), window_degeneracy(f27)]
    if name == "downward-closure":
        return [downward_closure()]
    if name == "exact-vs-exhaustive":
        return [exact_matches_exhaustive()]
    if name == "oracle-soundness-d1":
        return [oracle_soundness_d1(f8)]
    if name == "oracle-soundness-d2":
        return [oracle_soundness_d2(f8)]
    if name == "first-hit-structure":
        return [first_hit_structure(f8)]
    if name == "star-morphism":
        return [star_morphism(f8), star_morphism(f27)]
    raise ValueError(f"unknown property suite {name!r}")
