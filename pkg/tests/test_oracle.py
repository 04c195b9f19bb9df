"""Ground-truth sweeps on tiny codes and cross-checks against the bound side.

The oracle recomputes everything from raw enumeration, so these tests double
as soundness evidence for the search machinery.
"""

import numpy as np
import pytest

from avcbounds import linalg
from avcbounds.bounds import max_mu_set
from avcbounds.codes import CodeSpec, standard_code
from avcbounds.oracle import (
    COMBINATION_CAP,
    Subspace,
    _coefficient_block,
    gaussian_binomial,
    m_of_subspace,
    max_mu_exhaustive,
    support_size,
    true_ghw,
    true_min_distance,
)
from avcbounds.rho import BasisTriple, RhoTable, m_of_vector


def test_subspace_validation(f8):
    spec = f8.field
    good = Subspace(spec, np.eye(3, 8, dtype=np.int16))
    assert good.dim == 3 and good.n == 8
    with pytest.raises(ValueError):
        Subspace(spec, np.zeros((0, 8), dtype=np.int16))
    dep = np.array([[1, 0, 0], [2, 0, 0]], dtype=np.int16)
    with pytest.raises(ValueError):
        Subspace(spec, dep)


def test_support_size_counts_nonzero_columns(f8):
    basis = np.array([[1, 0, 0, 2], [0, 0, 3, 2]], dtype=np.int16)
    assert support_size(Subspace(f8.field, basis)) == 3


def test_m_of_subspace_identity_triple(f8):
    spec = f8.field
    eye = np.eye(8, dtype=np.int16)
    triple = BasisTriple(spec, eye, eye, eye)
    assert m_of_subspace(triple, Subspace(spec, eye[4][None, :])) == {5}
    assert m_of_subspace(triple, Subspace(spec, eye[[2, 6]])) == {3, 7}


def test_m_of_subspace_first_hit_count(f8, triple8):
    # dim(D) distinct first hits, whatever the basis looks like
    rng = np.random.default_rng(23)
    w = f8.basis_matrix()
    for _ in range(5):
        rows = rng.choice(32, size=2, replace=False)
        d = Subspace(f8.field, w[rows])
        assert len(m_of_subspace(triple8, d)) == 2


def test_m_of_subspace_guards(f8, f27, triple8):
    with pytest.raises(ValueError):
        m_of_subspace(triple8, Subspace(f27.field, np.eye(3, dtype=np.int16)))
    big = Subspace(f8.field, np.eye(7, 32, dtype=np.int16))
    assert 8**7 > COMBINATION_CAP
    with pytest.raises(ValueError):
        m_of_subspace(triple8, big)


def test_true_min_distance_small_codes(f8):
    # single-basis-row code: distance is that row's weight
    c31 = standard_code(f8, 31)
    gen = c31.generator_matrix()
    assert true_min_distance(c31) == int(np.count_nonzero(gen[0]))
    assert true_min_distance(standard_code(f8, 30)) == 28
    assert true_min_distance(standard_code(f8, 29)) == 26
    assert true_min_distance(standard_code(f8, 27)) == 22


def test_true_min_distance_guards(f8):
    with pytest.raises(ValueError):
        true_min_distance(standard_code(f8, 32))  # k = 0
    with pytest.raises(ValueError):
        true_min_distance(standard_code(f8, 24))  # 8**8 messages, over cap


def test_gaussian_binomial_values():
    assert gaussian_binomial(3, 1, 8) == 73
    assert gaussian_binomial(3, 2, 8) == 73  # duality
    assert gaussian_binomial(3, 3, 8) == 1
    assert gaussian_binomial(4, 2, 8) == 4745
    assert gaussian_binomial(3, 1, 27) == 757
    assert gaussian_binomial(2, 5, 8) == 0


def test_true_ghw_ladder(f8):
    code = standard_code(f8, 29)
    d1 = true_ghw(code, 1)
    d2 = true_ghw(code, 2)
    d3 = true_ghw(code, 3)
    assert d1 == true_min_distance(code) == 26
    assert d1 <= d2 <= d3
    # t = k: the whole code, support of the generator itself
    gen = code.generator_matrix()
    assert d3 == support_size(Subspace(f8.field, gen))


def test_true_ghw_guards(f8):
    code = standard_code(f8, 29)
    with pytest.raises(ValueError):
        true_ghw(code, 0)
    with pytest.raises(ValueError):
        true_ghw(code, 4)  # above the dimension
    with pytest.raises(ValueError):
        true_ghw(standard_code(f8, 24), 2)  # subspace count over cap


def test_max_mu_exhaustive_matches_search_engine():
    rng = np.random.default_rng(17)
    for _ in range(10):
        body = rng.integers(1, 11, size=(10, 10))
        rho = np.zeros((11, 11), dtype=np.int32)
        rho[1:, 1:] = body
        table = RhoTable(10, rho)
        targets = tuple(
            int(x) for x in rng.choice(np.arange(1, 11), size=2, replace=False)
        )
        brute = max_mu_exhaustive(table, targets)
        engine = max_mu_set(table, targets, exact=True)
        assert engine.complete
        assert brute == engine.size


def test_max_mu_exhaustive_guards(t8):
    with pytest.raises(ValueError):
        max_mu_exhaustive(t8, ())
    with pytest.raises(ValueError):
        max_mu_exhaustive(t8, (99,))
    with pytest.raises(ValueError):
        max_mu_exhaustive(t8, (32,))  # every row qualifies: universe over cap


def test_support_dominates_mu_size_per_subspace(f8, t8, triple8):
    # per-subspace soundness of the witness-set lower bound: for D inside the
    # code, |supp(D)| >= any feasible mu-set size w.r.t. m(D)
    code = standard_code(f8, 29)
    gen = code.generator_matrix()
    spec = f8.field
    # dimension 1: all 511 nonzero codewords, thinned for speed
    msgs = _coefficient_block(8, 3, 1, 8**3)
    words = linalg.matmul(spec, msgs, gen)
    for word in words[::7]:
        target = m_of_vector(triple8, word)
        mu = max_mu_set(t8, (target,)).size
        assert int(np.count_nonzero(word)) >= mu
    # dimension 2: sampled independent pairs
    rng = np.random.default_rng(31)
    checked = 0
    while checked < 40:
        pick = rng.integers(1, 8**3, size=2)
        basis = words[pick - 1]
        if linalg.rank(spec, basis) != 2:
            continue
        d = Subspace(spec, basis)
        targets = m_of_subspace(triple8, d)
        mu = max_mu_set(t8, tuple(targets)).size
        assert support_size(d) >= mu
        checked += 1
