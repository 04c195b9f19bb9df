"""Pair flavours and the witness-set predicates built on them."""

import numpy as np
import pytest

from avcbounds.bounds import fim_bound
from avcbounds.mu import (
    PairStatus,
    check_mu,
    check_mu_exception,
    check_relaxed_mu,
    classify_pairs,
    has_mu_witness,
    owb_wrt,
    pair_status,
)


def test_status_order():
    assert PairStatus.NONE < PairStatus.OWB < PairStatus.WWB < PairStatus.WB
    assert PairStatus.WB >= PairStatus.OWB  # "at least this well-behaving"


def test_one_is_well_behaving_with_everything(t8):
    for l in range(1, 33):
        assert pair_status(t8, 1, l) is PairStatus.WB
        assert pair_status(t8, l, 1) is PairStatus.WB


def test_pair_counts_at_the_two_worked_indexes(pairs8):
    assert pairs8.pair_count(17, PairStatus.WB) == 7
    assert pairs8.pair_count(17, PairStatus.WWB) == 7
    assert pairs8.pair_count(17, PairStatus.OWB) == 8
    assert pairs8.pair_count(21, PairStatus.WB) == 8
    assert pairs8.pair_count(21, PairStatus.WWB) == 8
    assert pairs8.pair_count(21, PairStatus.OWB) == 10


def test_weaker_flavours_never_lose_pairs(pairs8, t8):
    for l in range(1, t8.n + 1):
        wb = pairs8.pair_count(l, PairStatus.WB)
        wwb = pairs8.pair_count(l, PairStatus.WWB)
        owb = pairs8.pair_count(l, PairStatus.OWB)
        assert wb <= wwb <= owb


def test_harvest_rows_are_distinct_and_witnessed(pairs8, t8):
    for targets in ((17,), (21,), (17, 21)):
        for status in (PairStatus.WB, PairStatus.WWB, PairStatus.OWB):
            rows = pairs8.harvest_rows(targets, status)
            assert len(rows) == len(set(rows))
            assert len(rows) == pairs8.harvest_size(targets, status)
            for i in rows:
                assert any(
                    t8.rho[i, j] in targets and pair_status(t8, i, j) >= status
                    for j in range(1, t8.n + 1)
                )


def test_classify_pairs_is_cached(t8):
    assert classify_pairs(t8) is classify_pairs(t8)


def test_check_mu_accepts_the_worked_witness(t8):
    witness = (1, 2, 3, 4, 6, 9, 12, 13, 17)
    assert check_mu(t8, witness, (17,))
    # supersets break: 17 rows cannot all own dominating witness columns
    assert not check_mu(t8, range(1, 18), (17,))


def test_has_mu_witness_returns_a_column(t8):
    members = (1, 2, 3)
    j = has_mu_witness(t8, 3, members, (17,))
    assert j is not None
    assert t8.rho[3, j] == 17


def test_owb_wrt_restricts_the_quantifier(t8):
    # globally OWB pairs stay OWB with respect to any subset
    for i, j in ((3, 12), (2, 13), (5, 9)):
        if pair_status(t8, i, j) >= PairStatus.OWB:
            assert owb_wrt(t8, i, j, range(1, 33))
    assert owb_wrt(t8, 7, 4, ())  # nothing below to dominate


def test_mu_predicates_are_downward_closed(t8):
    rng = np.random.default_rng(3)
    witness = (1, 2, 3, 4, 6, 9, 12, 13, 17)
    for _ in range(40):
        keep = rng.random(len(witness)) < 0.6
        sub = tuple(m for m, k in zip(witness, keep) if k)
        assert check_mu(t8, sub, (17,))


def test_exception_with_empty_window_is_plain_mu(t8):
    rng = np.random.default_rng(5)
    for _ in range(60):
        members = sorted(rng.choice(np.arange(1, 33), size=6, replace=False))
        l = int(rng.integers(5, 33))
        assert check_mu_exception(t8, members, l, 0) == check_mu(t8, members, (l,))


def test_fim_case_witnesses_satisfy_their_predicates(t8):
    for l in (17, 21):
        result = fim_bound(t8, l, 1)
        for case in result.cases:
            assert len(case.witness) == case.size
            if case.pivot is None:
                assert check_mu_exception(t8, case.witness, l, result.v)
            else:
                assert check_relaxed_mu(t8, case.witness, l, case.pivot)
        assert result.value == min(c.size for c in result.cases)


def test_relaxed_witness_may_hit_the_pivot(t8):
    from avcbounds.mu import has_relaxed_witness

    # 18 never hits 17 as a star value in a dominating way, but it does hit
    # the pivot 18 (first column), so the relaxed form admits it
    members = (1, 18)
    assert has_mu_witness(t8, 18, members, (17,)) is None
    j = has_relaxed_witness(t8, 18, members, 17, 18)
    assert j is not None
    assert t8.rho[18, j] in (17, 18)
    assert check_relaxed_mu(t8, members, 17, 18)
