"""Lower bounds on weights of dual codes, driven entirely by a RhoTable.

Five methods are exposed.  The three pair-counting flavors (wb, wwb, owb)
count table entries equal to the first-hit index of a codeword, filtered by
how robustly the entry dominates its row and column.  The advisory bound
replaces counting by subset maximization: the largest index set in which
every member can point at a witness column hitting the target value while
dominating the previously chosen members.  The fim bound strengthens that by
a case split over which of the v positions following the first hit is the
first nonzero one; each case yields its own maximization problem and the
bound is the smallest case value.

Generalized weights take the minimum over t-element target subsets of the
possible first-hit positions.  The subset searches, their seeding, pruning
and certificates all live here; the predicate definitions live in `mu` and
the raw search engine in `search`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .codes import CodeSpec, standard_code
from .curve import CurveSpec
from .mu import PairStatus, classify_pairs
from .rho import RhoTable, rho_table_algebraic
from .search import (
    DEFAULT_EXACT_CAP,
    DEFAULT_NODE_BUDGET,
    ExactSearchUnavailable,
    SearchResult,
    SubsetProblem,
    WitnessClass,
    maximize_subset,
)

__all__ = [
    "BoundMethod",
    "SearchConfig",
    "DEFAULT_CONFIG",
    "FimCase",
    "FimResult",
    "GhwResult",
    "CodeBound",
    "feng_rao",
    "max_mu_set",
    "advisory_bound",
    "auto_v",
    "resolve_v",
    "fim_bound",
    "ghw_bound",
    "fim_ghw_bound",
    "code_bound",
    "improved_code",
    "standard_code",
    "ExactSearchUnavailable",
]


class BoundMethod(Enum):
    FR_WB = "wb"
    FR_WWB = "wwb"
    FR_OWB = "owb"
    ADVISORY = "adv"
    FIM = "fim"

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str) -> "BoundMethod":
        for method in cls:
            if method.value == token:
                return method
        valid = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown method {token!r} (expected one of: {valid})")

    @property
    def pair_flavor(self) -> PairStatus | None:
        return _FLAVORS.get(self)


_FLAVORS = {
    BoundMethod.FR_WB: PairStatus.WB,
    BoundMethod.FR_WWB: PairStatus.WWB,
    BoundMethod.FR_OWB: PairStatus.OWB,
}

FR_METHODS = (BoundMethod.FR_WB, BoundMethod.FR_WWB, BoundMethod.FR_OWB)


@dataclass(frozen=True)
class SearchConfig:
    node_budget: int = DEFAULT_NODE_BUDGET
    exact_cap: int = DEFAULT_EXACT_CAP
    case_cap: int = 4096


DEFAULT_CONFIG = SearchConfig()


def feng_rao(table: RhoTable, l: int, method: BoundMethod) -> int:
    """Number of (i, j) pairs with table value l and at least the requested
    domination strength."""
    flavor = method.pair_flavor if isinstance(method, BoundMethod) else method
    if not isinstance(flavor, PairStatus):
        raise ValueError(f"{method} is not a pair-counting method")
    _check_index(table, l)
    return classify_pairs(table).pair_count(l, flavor)


def _check_index(table: RhoTable, l: int) -> None:
    if not 1 <= l <= table.n:
        raise ValueError(f"index {l} out of range 1..{table.n}")


# --- subset-search plumbing ------------------------------------------------


def _mu_classes(targets) -> tuple[WitnessClass, ...]:
    return tuple(WitnessClass((l,), l - 1, 0) for l in sorted(targets))


def _normalize_seeds(seeds) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({tuple(sorted(set(map(int, s)))) for s in seeds if s}))


def _run_max_set(
    table: RhoTable,
    classes: tuple[WitnessClass, ...],
    *,
    config: SearchConfig,
    exact: bool = False,
    seeds=(),
    stop_at: int | None = None,
) -> SearchResult:
    """Memoized search dispatch.  Results aborted by stop_at are not cached;
    everything else is, keyed by the compiled classes and search parameters."""
    seeds = _normalize_seeds(seeds)
    memo = table._cache.setdefault("max_set_memo", {})
    key = (classes, exact, config.node_budget, config.exact_cap, seeds)
    hit = memo.get(key)
    if hit is not None:
        return hit
    problem = SubsetProblem(table, list(classes))
    result = maximize_subset(
        problem,
        exact=exact,
        node_budget=config.node_budget,
        exact_cap=config.exact_cap,
        seeds=seeds,
        stop_at=stop_at,
    )
    aborted_early = (
        stop_at is not None and not result.complete and result.size >= stop_at
    )
    if not aborted_early:
        memo[key] = result
    return result


def max_mu_set(
    table: RhoTable,
    targets,
    *,
    exact: bool = False,
    config: SearchConfig = DEFAULT_CONFIG,
) -> SearchResult:
    """Largest set in which every member owns a witness column hitting one of
    the target values while dominating all smaller chosen members.

    Heuristic mode is budgeted branch and bound on top of the ascending
    greedy construction; exact mode runs to optimality but raises
    ExactSearchUnavailable beyond the universe cap.
    """
    targets = sorted(set(map(int, targets)))
    if not targets:
        raise ValueError("targets must be nonempty")
    for l in targets:
        _check_index(table, l)
    return _run_max_set(table, _mu_classes(targets), config=config, exact=exact)


def advisory_bound(
    table: RhoTable, l: int, *, config: SearchConfig = DEFAULT_CONFIG
) -> int:
    return max_mu_set(table, (l,), config=config).size


# --- fim bound -------------------------------------------------------------


def auto_v(table: RhoTable, l: int) -> int:
    """Window length policy: count the later indexes of the same weight."""
    if table.weights is None:
        raise ValueError("table carries no weights; pass an explicit v")
    _check_index(table, l)
    w = table.weights
    return int((w[l + 1 :] == w[l]).sum())


def resolve_v(table: RhoTable, l: int, v_policy) -> int:
    if v_policy == "auto":
        return auto_v(table, l)
    if isinstance(v_policy, int):
        return v_policy
    return int(v_policy.get(l, 0))


@dataclass(frozen=True)
class FimCase:
    pivot: int | None  # None: the all-zero case
    size: int
    witness: tuple[int, ...]
    settled: bool  # False when the search was cut off at the running minimum


@dataclass(frozen=True)
class FimResult:
    l: int
    v: int
    known_zeros: tuple[int, ...]
    value: int
    cases: tuple[FimCase, ...]


def _fim_classes(
    table: RhoTable, l: int, v: int, known_zeros
) -> list[tuple[int | None, WitnessClass]]:
    _check_index(table, l)
    if v < 0 or l + v > table.n:
        raise ValueError(f"window {l}+{v} exceeds table size {table.n}")
    window = range(l + 1, l + v + 1)
    kz = set(map(int, known_zeros))
    if not kz <= set(window):
        raise ValueError(f"known zeros {sorted(kz)} outside window {l + 1}..{l + v}")
    cases: list[tuple[int | None, WitnessClass]] = [
        (None, WitnessClass((l,), l + v, l))
    ]
    for pivot in window:
        if pivot in kz:
            continue
        cases.append((pivot, WitnessClass((l, pivot), pivot - 1, l)))
    return cases


def fim_bound(
    table: RhoTable,
    l: int,
    v: int,
    known_zeros=(),
    *,
    config: SearchConfig = DEFAULT_CONFIG,
    exact: bool = False,
) -> FimResult:
    """Case-split bound at first hit l with an uncertainty window of length v.

    Case None assumes the whole window is zero; case pivot assumes pivot is
    the first nonzero position.  Every case is seeded with the plain advisory
    witness, so the value never drops below the advisory bound.  With v = 0
    there is a single case equivalent to the plain advisory search.
    """
    known_zeros = tuple(sorted(set(map(int, known_zeros))))
    memo = table._cache.setdefault("fim_memo", {})
    key = (l, v, known_zeros, exact, config.node_budget, config.exact_cap)
    hit = memo.get(key)
    if hit is not None:
        return hit
    specs = _fim_classes(table, l, v, known_zeros)
    adv_seed = max_mu_set(table, (l,), exact=exact, config=config).witness
    best: int | None = None
    cases: list[FimCase] = []
    for pivot, cls in specs:
        result = _run_max_set(
            table,
            (cls,),
            config=config,
            exact=exact,
            seeds=(adv_seed,),
            stop_at=best,
        )
        settled = result.complete or best is None or result.size < best
        if best is None or result.size < best:
            best = result.size
        cases.append(FimCase(pivot, result.size, result.witness, settled))
    assert best is not None
    out = FimResult(l, v, known_zeros, best, tuple(cases))
    memo[key] = out
    return out


# --- generalized weights ---------------------------------------------------


@dataclass(frozen=True)
class GhwResult:
    value: int
    t: int
    subset: tuple[int, ...]
    witness: tuple[int, ...]
    # fim only: per-coordinate (first hit, window, pivot or None) of the
    # minimizing case tuple
    cases: tuple = ()


def _ordered_subsets(singles: dict[int, int], t: int):
    """t-subsets of the keys, enumerated so cheap-looking ones come first.

    Yields (subset ascending, lower bound = largest member's single value).
    Keys are sorted by single value, so the first yield realizes the floor
    (the t-th smallest single), a value no subset can beat downward.
    """
    order = sorted(singles, key=lambda l: (singles[l], l))
    for combo in itertools.combinations(order, t):
        lb = max(singles[l] for l in combo)
        yield tuple(sorted(combo)), lb


def ghw_bound(
    table: RhoTable,
    m_set,
    t: int,
    method: BoundMethod,
    *,
    config: SearchConfig = DEFAULT_CONFIG,
) -> GhwResult:
    """Minimum over t-subsets of the first-hit set of the per-subset value.

    Pair-counting methods score a subset by the number of distinct rows
    harvested over the subset's targets; the advisory method runs the
    multi-target subset maximization.
    """
    m_set = sorted(set(map(int, m_set)))
    if not 1 <= t <= len(m_set):
        raise ValueError(f"t must lie in 1..{len(m_set)}, got {t}")
    if method is BoundMethod.FIM:
        raise ValueError("use fim_ghw_bound for the case-split method")
    flavor = method.pair_flavor
    if flavor is not None:
        pc = classify_pairs(table)
        singles = {l: pc.harvest_size((l,), flavor) for l in m_set}
    else:
        singles = {l: advisory_bound(table, l, config=config) for l in m_set}
    floor = sorted(singles.values())[t - 1]
    best: GhwResult | None = None
    for subset, lb in _ordered_subsets(singles, t):
        if best is not None and lb >= best.value:
            continue
        if flavor is not None:
            size = pc.harvest_size(subset, flavor)
            if best is None or size < best.value:
                rows = pc.harvest_rows(subset, flavor)
                best = GhwResult(size, t, subset, tuple(rows))
        else:
            seeds = [
                max_mu_set(table, (l,), config=config).witness for l in subset
            ]
            result = _run_max_set(
                table,
                _mu_classes(subset),
                config=config,
                seeds=seeds,
                stop_at=None if best is None else best.value,
            )
            if best is None or result.size < best.value:
                best = GhwResult(result.size, t, subset, result.witness)
        if best is not None and best.value <= floor:
            break
    assert best is not None
    return best


def fim_ghw_bound(
    table: RhoTable,
    m_set,
    t: int,
    *,
    v_policy="auto",
    known_zeros_fn=None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> GhwResult:
    """Case-split generalized weight: minimum over t-subsets and over case
    tuples of the per-tuple subset maximization, where a member qualifies if
    any coordinate grants it a witness under that coordinate's case."""
    m_set = sorted(set(map(int, m_set)))
    if not 1 <= t <= len(m_set):
        raise ValueError(f"t must lie in 1..{len(m_set)}, got {t}")
    if known_zeros_fn is None:
        known_zeros_fn = lambda l: ()

    def fim_single(l: int) -> FimResult:
        return fim_bound(
            table, l, resolve_v(table, l, v_policy), known_zeros_fn(l), config=config
        )

    singles = {l: fim_single(l).value for l in m_set}
    floor = sorted(singles.values())[t - 1]
    best: GhwResult | None = None
    for subset, lb in _ordered_subsets(singles, t):
        if best is not None and lb >= best.value:
            continue
        per_coord = [
            _fim_classes(table, l, resolve_v(table, l, v_policy), known_zeros_fn(l))
            for l in subset
        ]
        n_tuples = 1
        for specs in per_coord:
            n_tuples *= len(specs)
        if n_tuples > config.case_cap:
            raise ValueError(
                f"{n_tuples} case tuples for subset {subset} exceeds the cap "
                f"{config.case_cap}"
            )
        adv_seed = _run_max_set(
            table,
            _mu_classes(subset),
            config=config,
            seeds=[max_mu_set(table, (l,), config=config).witness for l in subset],
        ).witness
        case_seeds = [
            {z: case.witness for z, case in enumerate(fim_single(l).cases)}
            for l in subset
        ]
        sub_best: tuple[int, tuple, tuple] | None = None
        for selector in itertools.product(*(range(len(s)) for s in per_coord)):
            classes = tuple(per_coord[r][z][1] for r, z in enumerate(selector))
            seeds = [adv_seed]
            for r, z in enumerate(selector):
                seeds.append(case_seeds[r].get(z, ()))
            stop = best.value if best is not None else None
            if sub_best is not None:
                stop = sub_best[0] if stop is None else min(stop, sub_best[0])
            result = _run_max_set(
                table, classes, config=config, seeds=seeds, stop_at=stop
            )
            if sub_best is None or result.size < sub_best[0]:
                cases = tuple(
                    (
                        subset[r],
                        resolve_v(table, subset[r], v_policy),
                        per_coord[r][z][0],
                    )
                    for r, z in enumerate(selector)
                )
                sub_best = (result.size, result.witness, cases)
        assert sub_best is not None
        if best is None or sub_best[0] < best.value:
            best = GhwResult(sub_best[0], t, subset, sub_best[1], sub_best[2])
        if best.value <= floor:
            break
    assert best is not None
    return best


# --- per-code bounds and code constructions --------------------------------


@dataclass(frozen=True)
class CodeBound:
    method: BoundMethod
    t: int
    value: int
    at: tuple[int, ...]  # minimizing first-hit index (t=1) or subset
    witness: tuple[int, ...] = ()
    fim: FimResult | None = None
    ghw: GhwResult | None = None


def _window_zeros(code: CodeSpec, l: int, v: int) -> tuple[int, ...]:
    parity = set(code.parity)
    return tuple(x for x in range(l + 1, l + v + 1) if x in parity)


def code_bound(
    code: CodeSpec,
    method: BoundMethod,
    t: int = 1,
    *,
    v_policy="auto",
    config: SearchConfig = DEFAULT_CONFIG,
) -> CodeBound:
    """Lower bound on the t-th generalized weight of the code.

    t = 1 minimizes the per-index method value over the possible first-hit
    positions; larger t delegates to the subset versions.  The fim window
    positions that are parity checks of the code count as known zeros.
    """
    m_set = code.m_set
    if not m_set:
        raise ValueError("code has dimension 0; no bound to compute")
    table = code.table()
    if t == 1:
        best: CodeBound | None = None
        for l in m_set:
            if method in _FLAVORS:
                value = feng_rao(table, l, method)
                cand = CodeBound(method, 1, value, (l,))
            elif method is BoundMethod.ADVISORY:
                result = max_mu_set(table, (l,), config=config)
                cand = CodeBound(method, 1, result.size, (l,), result.witness)
            else:
                v = resolve_v(table, l, v_policy)
                fr = fim_bound(table, l, v, _window_zeros(code, l, v), config=config)
                low = next(c.witness for c in fr.cases if c.size == fr.value)
                cand = CodeBound(method, 1, fr.value, (l,), low, fim=fr)
            if best is None or cand.value < best.value:
                best = cand
        assert best is not None
        return best
    if method is BoundMethod.FIM:
        ghw = fim_ghw_bound(
            table,
            m_set,
            t,
            v_policy=v_policy,
            known_zeros_fn=lambda l: _window_zeros(
                code, l, resolve_v(table, l, v_policy)
            ),
            config=config,
        )
    else:
        ghw = ghw_bound(table, m_set, t, method, config=config)
    return CodeBound(method, t, ghw.value, ghw.subset, ghw.witness, ghw=ghw)


def improved_code(
    curve: CurveSpec,
    delta: int,
    method: BoundMethod,
    *,
    v_policy="auto",
    config: SearchConfig = DEFAULT_CONFIG,
    max_rounds: int = 10,
) -> CodeSpec:
    """Code keeping exactly the parity checks whose per-index value falls
    below delta.

    For the advisory method the parity set is immediate.  For fim the known
    zeros seen by each window depend on the parity set being built, so the
    set is iterated to a fixed point starting from the advisory choice.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    if method not in (BoundMethod.ADVISORY, BoundMethod.FIM):
        raise ValueError("improved codes are built from the adv or fim method")
    table = rho_table_algebraic(curve)
    every = range(1, table.n + 1)
    adv_parity = tuple(
        l for l in every if advisory_bound(table, l, config=config) < delta
    )
    if method is BoundMethod.ADVISORY:
        return CodeSpec(curve, adv_parity)
    current = adv_parity
    for _ in range(max_rounds):
        held = set(current)

        def kz(l: int, v: int) -> tuple[int, ...]:
            return tuple(x for x in range(l + 1, l + v + 1) if x in held)

        nxt = []
        for l in every:
            v = resolve_v(table, l, v_policy)
            if fim_bound(table, l, v, kz(l, v), config=config).value < delta:
                nxt.append(l)
        nxt = tuple(nxt)
        if nxt == current:
            return CodeSpec(curve, current)
        current = nxt
    raise RuntimeError(
        f"parity set did not stabilize within {max_rounds} rounds at delta={delta}"
    )
