"""Maximum-cardinality search for witness-style subset predicates.

Every bound-side search below reduces to one shape: pick as many row indexes
as possible, processing candidates in ascending order, where a candidate i may
join if some column j from its option list dominates all previously chosen
rows.  An option is described by a witness class: the set of table values the
candidate must hit in that column, a domination ceiling, and one excluded
value.  Since quantifiers only ever look at smaller chosen indexes, a set is
feasible exactly when it can be built left to right, and feasibility is
downward closed, which makes depth-first branch and bound with an
include-first policy both correct and effective.

The first descent of the search is the ascending greedy construction.  In
heuristic mode the search is capped by a node budget and, when the budget is
hit, reinforced by leave-one-out greedy restarts; in exact mode it runs to
completion but refuses universes above a size cap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rho import RhoTable

__all__ = [
    "WitnessClass",
    "SubsetProblem",
    "SearchResult",
    "ExactSearchUnavailable",
    "maximize_subset",
]

DEFAULT_NODE_BUDGET = 20000
DEFAULT_EXACT_CAP = 24


class ExactSearchUnavailable(RuntimeError):
    """Exact search refused: the candidate universe exceeds the cap."""


@dataclass(frozen=True)
class WitnessClass:
    """One admissibility rule: hit a value in accept, dominate below dom_max,
    never dominate across dom_exclude (0 disables the exclusion)."""

    accept: tuple[int, ...]
    dom_max: int
    dom_exclude: int = 0


@dataclass(frozen=True)
class SearchResult:
    size: int
    members: tuple[int, ...]
    complete: bool
    nodes: int

    @property
    def witness(self) -> tuple[int, ...]:
        return self.members


def _value_index(table: RhoTable) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Map table value -> (row indexes, column indexes), both 1-based."""
    cached = table._cache.get("value_index")
    if cached is not None:
        return cached
    n = table.n
    flat = table.rho[1:, 1:].ravel()
    order = np.argsort(flat, kind="stable")
    sorted_vals = flat[order]
    index: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    bounds = np.searchsorted(sorted_vals, np.arange(1, n + 2))
    for v in range(1, n + 1):
        lo, hi = bounds[v - 1], bounds[v]
        if lo == hi:
            continue
        positions = order[lo:hi]
        rows = positions // n + 1
        cols = positions % n + 1
        resort = np.lexsort((cols, rows))
        index[v] = (rows[resort], cols[resort])
    table._cache["value_index"] = index
    return index


class SubsetProblem:
    """Compiled search instance over one RhoTable."""

    def __init__(self, table: RhoTable, classes: list[WitnessClass]):
        self.table = table
        self.classes = list(classes)
        index = _value_index(table)
        options: dict[int, list[tuple[int, int]]] = {}
        for cid, cls in enumerate(self.classes):
            for v in cls.accept:
                hit = index.get(v)
                if hit is None:
                    continue
                for i, j in zip(hit[0].tolist(), hit[1].tolist()):
                    options.setdefault(i, []).append((j, cid))
        for opts in options.values():
            opts.sort()
        self.options = options
        self.universe: list[int] = sorted(options)
        self._bad_masks: dict[tuple[int, int], int] = {}
        self._columns = table.rho[1:, 1:]

    def bad_mask(self, cid: int, j: int) -> int:
        key = (cid, j)
        mask = self._bad_masks.get(key)
        if mask is None:
            cls = self.classes[cid]
            col = self._columns[:, j - 1]
            bad = col > cls.dom_max
            if cls.dom_exclude:
                bad = bad | (col == cls.dom_exclude)
            mask = int.from_bytes(
                np.packbits(bad, bitorder="little").tobytes(), "little"
            )
            self._bad_masks[key] = mask
        return mask

    def find_witness(self, i: int, chosen_mask: int) -> tuple[int, int] | None:
        """First (j, cid) option of candidate i compatible with the chosen set."""
        for j, cid in self.options.get(i, ()):  # ascending j, then class order
            if chosen_mask & self.bad_mask(cid, j) == 0:
                return (j, cid)
        return None

    def feasible(self, members) -> bool:
        """Ascending incremental feasibility of an explicit member set."""
        mask = 0
        for i in sorted(members):
            if self.find_witness(i, mask) is None:
                return False
            mask |= 1 << (i - 1)
        return True


class _Stop(Exception):
    pass


def _greedy(problem: SubsetProblem, skip: frozenset[int] = frozenset()) -> list[int]:
    chosen: list[int] = []
    mask = 0
    for i in problem.universe:
        if i in skip:
            continue
        if problem.find_witness(i, mask) is not None:
            chosen.append(i)
            mask |= 1 << (i - 1)
    return chosen


def maximize_subset(
    problem: SubsetProblem,
    *,
    exact: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
    exact_cap: int = DEFAULT_EXACT_CAP,
    seeds: tuple = (),
    stop_at: int | None = None,
) -> SearchResult:
    """Largest feasible subset of the problem universe.

    Exact mode explores the full tree (universe capped); heuristic mode is
    budgeted and never returns less than the ascending greedy value or any
    valid seed.  stop_at allows early exit once the incumbent is provably
    good enough for the caller's minimum computation.
    """
    universe = problem.universe
    if exact and len(universe) > exact_cap:
        raise ExactSearchUnavailable(
            f"universe has {len(universe)} candidates, exact cap is {exact_cap}"
        )
    best_size = 0
    best_members: tuple[int, ...] = ()
    for seed in seeds:
        members = tuple(sorted(set(seed)))
        if len(members) > best_size and problem.feasible(members):
            best_size = len(members)
            best_members = members
    nodes = 0
    budget = None if exact else node_budget
    path: list[int] = []
    size = len(universe)
    stopped = False

    def dfs(idx: int, mask: int) -> None:
        nonlocal nodes, best_size, best_members, stopped
        if stop_at is not None and best_size >= stop_at:
            stopped = True
            raise _Stop
        if len(path) + (size - idx) <= best_size:
            return
        if idx == size:
            return
        nodes += 1
        if budget is not None and nodes > budget:
            stopped = True
            raise _Stop
        i = universe[idx]
        hit = problem.find_witness(i, mask)
        if hit is not None:
            path.append(i)
            if len(path) > best_size:
                best_size = len(path)
                best_members = tuple(path)
            dfs(idx + 1, mask | (1 << (i - 1)))
            path.pop()
        dfs(idx + 1, mask)

    try:
        dfs(0, 0)
        complete = True
    except _Stop:
        complete = False
    if stopped and not exact and (stop_at is None or best_size < stop_at):
        # budget ran out: try leave-one-out greedy restarts around the greedy set
        base = _greedy(problem)
        if len(base) > best_size:
            best_size = len(base)
            best_members = tuple(base)
        for drop in base:
            alt = _greedy(problem, skip=frozenset((drop,)))
            if len(alt) > best_size:
                best_size = len(alt)
                best_members = tuple(alt)
    return SearchResult(
        size=best_size, members=best_members, complete=complete, nodes=nodes
    )
