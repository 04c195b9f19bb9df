"""Star-product position table: anchors, routes, invariances."""

import numpy as np
import pytest

from avcbounds import linalg
from avcbounds.curve import PRESETS, curve_from_config
from avcbounds.rho import (
    BasisTriple,
    m_of_vector,
    rho_of_vector,
    rho_table_algebraic,
    rho_table_generic,
)


def test_anchor_entries(t8):
    assert t8.rho[3, 12] == 17
    assert t8.rho[3, 11] == 18
    assert t8.rho[2, 13] == 17


def test_shape_and_padding(t8, t27):
    for table in (t8, t27):
        n = table.n
        assert table.rho.shape == (n + 1, n + 1)
        assert not table.rho[0].any() and not table.rho[:, 0].any()
        body = table.rho[1:, 1:]
        assert body.min() >= 1 and body.max() <= n


def test_first_row_and_column_are_identity(t8, t27):
    for table in (t8, t27):
        n = table.n
        idx = np.arange(1, n + 1)
        assert np.array_equal(table.rho[1, 1:], idx)
        assert np.array_equal(table.rho[1:, 1], idx)


def test_table_is_symmetric(t8, t27):
    for table in (t8, t27):
        assert np.array_equal(table.rho, table.rho.T)


def test_weight_subadditivity(f8, t8):
    # reductions never raise the weighted degree, and products that stay
    # inside the footprint keep it exactly
    w = f8.weights
    n = f8.n
    for i in range(1, n + 1):
        mi = f8.monomial(i)
        for j in range(1, n + 1):
            mj = f8.monomial(j)
            assert w[t8.rho[i, j]] <= w[i] + w[j]
            if mi.alpha + mj.alpha < f8.deg_g and mi.beta + mj.beta < f8.field.q:
                prod = type(mi)(mi.alpha + mj.alpha, mi.beta + mj.beta)
                assert t8.rho[i, j] == f8.index_of(prod)


def test_generic_route_matches_algebraic_f8(f8, t8):
    generic = rho_table_generic(BasisTriple.from_curve(f8))
    assert np.array_equal(t8.rho, generic.rho)


def test_modulus_swap_leaves_the_table_alone(t8):
    cfg = dict(PRESETS["f8"])
    cfg["modulus"] = (1, 0, 1, 1)
    alt = rho_table_algebraic(curve_from_config(cfg, name="f8-alt"))
    assert np.array_equal(t8.rho, alt.rho)


def test_triple_from_curve_uses_the_evaluation_basis(f8, triple8):
    w = f8.basis_matrix()
    assert np.array_equal(triple8.u, w)
    assert np.array_equal(triple8.v, w)
    assert np.array_equal(triple8.w, w)
    assert triple8.n == 32


def test_rho_of_vector_on_basis_rows(f8, triple8):
    w = f8.basis_matrix()
    for i in (1, 2, 7, 17, 32):
        assert rho_of_vector(triple8, w[i - 1]) == i
    assert rho_of_vector(triple8, np.zeros(32, dtype=np.int16)) == 0


def test_rho_of_vector_on_combinations(f8, triple8):
    spec = f8.field
    w = f8.basis_matrix()
    combo = linalg.vadd(spec, w[2], w[6])  # w_3 + w_7
    assert rho_of_vector(triple8, combo) == 7
    # scaling cannot move the position
    scaled = spec.MUL[5, combo]
    assert rho_of_vector(triple8, scaled) == 7


def test_m_of_vector_identity_triple(f8):
    spec = f8.field
    eye = np.eye(6, dtype=np.int16)
    triple = BasisTriple(spec, eye, eye, eye)
    vec = np.array([0, 0, 3, 0, 1, 0], dtype=np.int16)
    assert m_of_vector(triple, vec) == 3
    assert m_of_vector(triple, eye[4]) == 5


def test_m_of_vector_matches_bruteforce(f8, triple8):
    spec = f8.field
    rng = np.random.default_rng(11)
    for _ in range(10):
        c = rng.integers(0, 8, size=32).astype(np.int16)
        if not c.any():
            continue
        dots = [int(linalg.dot(spec, c, triple8.w[l])) for l in range(32)]
        want = next(l + 1 for l, d in enumerate(dots) if d)
        assert m_of_vector(triple8, c) == want


def test_m_of_vector_rejects_zero(triple8):
    with pytest.raises(ValueError):
        m_of_vector(triple8, np.zeros(32, dtype=np.int16))


def test_generic_route_rejects_degenerate_products(f8):
    # identity bases are nonsingular, yet e_i * e_j = 0 off the diagonal
    spec = f8.field
    eye = np.eye(4, dtype=np.int16)
    with pytest.raises(ValueError):
        rho_table_generic(BasisTriple(spec, eye, eye, eye))


def test_singular_basis_is_rejected(f8):
    spec = f8.field
    bad = np.eye(4, dtype=np.int16)
    bad[2] = bad[1]
    with pytest.raises(ValueError):
        BasisTriple(spec, bad, np.eye(4, dtype=np.int16), np.eye(4, dtype=np.int16))


def test_weights_are_carried(f8, t8):
    assert t8.weights is not None
    assert np.array_equal(t8.weights, f8.weights)
