"""Well-behaving pair classification and mu-style membership predicates.

All predicates read a RhoTable only.  Conventions, with rho the table and all
indexes 1-based:

* a pair (i, j) is one-way well-behaving (OWB) when rho[i'][j] < rho[i][j]
  for every i' < i; weakly well-behaving (WWB) when additionally
  rho[i][j'] < rho[i][j] for every j' < j; well-behaving (WB) when
  rho[i'][j'] < rho[i][j] for every (i', j') <= (i, j) other than (i, j)
  itself.  WB implies WWB implies OWB.
* a set I' has the mu-property w.r.t. a target set T when every i in I' has a
  column j with rho[i][j] in T that dominates the chosen i' < i inside I'.
* the exception variant at (l, g) accepts domination failures whose value
  falls inside the window {l+1..l+g}; the relaxed variant at (l, pivot)
  additionally accepts witnesses whose own value is the pivot, provided no
  smaller chosen i' hits l in that column.

Every predicate is downward closed: removing members never breaks it.
"""

from __future__ import annotations

from enum import IntEnum

import numpy as np

from .rho import RhoTable

__all__ = [
    "PairStatus",
    "PairClasses",
    "classify_pairs",
    "pair_status",
    "owb_wrt",
    "has_mu_witness",
    "has_exception_witness",
    "has_relaxed_witness",
    "check_mu",
    "check_mu_exception",
    "check_relaxed_mu",
]


class PairStatus(IntEnum):
    """Pair labels ordered by strength: NONE < OWB < WWB < WB."""

    NONE = 0
    OWB = 1
    WWB = 2
    WB = 3


class PairClasses:
    """Vectorised WB/WWB/OWB masks plus per-l pair counts and harvest sets."""

    def __init__(self, table: RhoTable):
        n = table.n
        rho = table.rho[1:, 1:]
        zeros_row = np.zeros((1, n), dtype=rho.dtype)
        zeros_col = np.zeros((n, 1), dtype=rho.dtype)
        col_excl = np.vstack([zeros_row, np.maximum.accumulate(rho, axis=0)[:-1]])
        row_excl = np.hstack([zeros_col, np.maximum.accumulate(rho, axis=1)[:, :-1]])
        rect = np.maximum.accumulate(np.maximum.accumulate(rho, axis=0), axis=1)
        rect_up = np.vstack([zeros_row, rect[:-1]])
        rect_left = np.hstack([zeros_col, rect[:, :-1]])
        self.n = n
        self.owb = rho > col_excl
        self.wwb = self.owb & (rho > row_excl)
        self.wb = rho > np.maximum(rect_up, rect_left)
        self._rho = rho
        self.pair_counts = {
            PairStatus.WB: np.bincount(rho[self.wb], minlength=n + 1),
            PairStatus.WWB: np.bincount(rho[self.wwb], minlength=n + 1),
            PairStatus.OWB: np.bincount(rho[self.owb], minlength=n + 1),
        }
        self.harvest_bits: dict[PairStatus, list[int]] = {}
        for status, mask in (
            (PairStatus.WB, self.wb),
            (PairStatus.WWB, self.wwb),
            (PairStatus.OWB, self.owb),
        ):
            rows, cols = np.nonzero(mask)
            values = rho[rows, cols]
            bits = [0] * (n + 1)
            for r, l in zip(rows, values):
                bits[l] |= 1 << int(r)
            self.harvest_bits[status] = bits

    def pair_count(self, l: int, status: PairStatus) -> int:
        """Number of pairs with value l whose label is at least status."""
        return int(self.pair_counts[status][l])

    def harvest_rows(self, targets, status: PairStatus) -> list[int]:
        """Distinct i with a pair of label >= status hitting the target set."""
        bits = 0
        for l in targets:
            bits |= self.harvest_bits[status][l]
        out, i = [], 1
        while bits:
            if bits & 1:
                out.append(i)
            bits >>= 1
            i += 1
        return out

    def harvest_size(self, targets, status: PairStatus) -> int:
        bits = 0
        for l in targets:
            bits |= self.harvest_bits[status][l]
        return bits.bit_count()


def classify_pairs(table: RhoTable) -> PairClasses:
    cached = table._cache.get("pair_classes")
    if cached is None:
        cached = PairClasses(table)
        table._cache["pair_classes"] = cached
    return cached


def pair_status(table: RhoTable, i: int, j: int) -> PairStatus:
    """Strongest label of the pair (i, j)."""
    classes = classify_pairs(table)
    if classes.wb[i - 1, j - 1]:
        return PairStatus.WB
    if classes.wwb[i - 1, j - 1]:
        return PairStatus.WWB
    if classes.owb[i - 1, j - 1]:
        return PairStatus.OWB
    return PairStatus.NONE


def _members_below(members, i: int) -> list[int]:
    return [m for m in members if m < i]


def owb_wrt(table: RhoTable, i: int, j: int, members) -> bool:
    """One-way well-behaving relative to a member set: the quantifier over
    smaller first indexes runs over members only."""
    value = table.entry(i, j)
    return all(table.entry(m, j) < value for m in _members_below(members, i))


def has_mu_witness(table: RhoTable, i: int, members, targets) -> int | None:
    """Least column j with rho[i][j] in targets and (i, j) OWB w.r.t. members."""
    targets = frozenset(targets)
    below = _members_below(members, i)
    row = table.rho[i]
    for j in range(1, table.n + 1):
        value = int(row[j])
        if value not in targets:
            continue
        if all(table.entry(m, j) < value for m in below):
            return j
    return None


def check_mu(table: RhoTable, members, targets) -> bool:
    """Every member has an OWB-w.r.t.-members witness into the target set."""
    return all(has_mu_witness(table, i, members, targets) is not None for i in members)


def has_exception_witness(table: RhoTable, i: int, members, l: int, g: int) -> int | None:
    """Witness for the mu-property at l where dominated values may also fall
    in the exception window {l+1..l+g}."""
    below = _members_below(members, i)
    row = table.rho[i]
    for j in range(1, table.n + 1):
        if int(row[j]) != l:
            continue
        ok = True
        for m in below:
            v = table.entry(m, j)
            if v == l or v > l + g:
                ok = False
                break
        if ok:
            return j
    return None


def check_mu_exception(table: RhoTable, members, l: int, g: int) -> bool:
    return all(
        has_exception_witness(table, i, members, l, g) is not None for i in members
    )


def has_relaxed_witness(
    table: RhoTable, i: int, members, l: int, pivot: int
) -> int | None:
    """Witness for the relaxed property at (l, pivot), exceptions {l+1..pivot-1}.

    Either an exception-style witness with value l, or a column whose own
    value is the pivot, dominating members below i strictly under the pivot
    and avoiding the value l entirely.
    """
    below = _members_below(members, i)
    row = table.rho[i]
    for j in range(1, table.n + 1):
        value = int(row[j])
        if value != l and value != pivot:
            continue
        ok = True
        for m in below:
            v = table.entry(m, j)
            if v == l or v >= pivot:
                ok = False
                break
        if ok:
            return j
    return None


def check_relaxed_mu(table: RhoTable, members, l: int, pivot: int) -> bool:
    return all(
        has_relaxed_witness(table, i, members, l, pivot) is not None for i in members
    )
