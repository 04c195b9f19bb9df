"""Footprint, variety and normal-form behaviour of the curve presets."""

import json

import numpy as np
import pytest

from avcbounds import linalg
from avcbounds.curve import (
    CurveConfigError,
    Monomial,
    MonomialOrder,
    PRESETS,
    Polynomial,
    curve_from_config,
    load_curve,
    order_compare,
    preset_curve,
)


def test_f8_footprint_size_and_spot_checks(f8):
    assert f8.n == 32
    assert f8.monomial(12) == Monomial(3, 0)  # X^3
    assert f8.weights[12] == 9
    assert f8.monomial(17) == Monomial(0, 6)  # Y^6
    assert f8.weights[17] == 12
    assert f8.monomial(18) == Monomial(2, 3)  # X^2 Y^3
    assert f8.weights[18] == 12
    assert f8.monomial(21) == Monomial(0, 7)  # Y^7
    assert f8.weights[21] == 14


def test_f27_footprint_size(f27):
    assert f27.n == 243
    assert f27.monomial(1) == Monomial(0, 0)
    assert f27.weights[1] == 0


def test_footprint_is_the_full_degree_box(f8, f27):
    for curve in (f8, f27):
        got = set(curve.footprint)
        want = {
            Monomial(a, b)
            for a in range(curve.deg_g)
            for b in range(curve.field.q)
        }
        assert got == want


def test_index_monomial_roundtrip(f8, f27):
    for curve in (f8, f27):
        for i in range(1, curve.n + 1):
            assert curve.index_of(curve.monomial(i)) == i


def test_order_keys_strictly_increase_along_the_basis(f8, f27):
    for curve in (f8, f27):
        keys = [curve.order.key(m) for m in curve.footprint]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        w = curve.weights
        assert all(w[i] <= w[i + 1] for i in range(1, curve.n))


def test_order_compare_signs():
    order = MonomialOrder(3, 2)
    assert order_compare(order, Monomial(0, 0), Monomial(1, 0)) < 0
    assert order_compare(order, Monomial(1, 0), Monomial(0, 0)) > 0
    assert order_compare(order, Monomial(0, 6), Monomial(2, 3)) < 0  # weight tie
    assert order_compare(order, Monomial(2, 3), Monomial(2, 3)) == 0


def test_variety_points_satisfy_the_equation(f8):
    spec = f8.field
    assert len(f8.points) == f8.n
    for x, y in f8.points:
        gx = 0
        for c in reversed(f8.g_coeffs):
            gx = int(spec.ADD[spec.MUL[gx, x], c])
        hy = 0
        for c in reversed(f8.h_coeffs):
            hy = int(spec.ADD[spec.MUL[hy, y], c])
        assert gx == hy


def test_trace_fibers_have_equal_size(f8, f27):
    # both presets use a trace polynomial on the X side: every attained value
    # is hit by the same number of x's, which is what makes |variety| = n
    for curve in (f8, f27):
        values = curve._g_values.tolist()
        counts = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        assert len(set(counts.values())) == 1


def test_evaluate_constant_and_products(f8):
    ones = f8.evaluate(Monomial(0, 0))
    assert np.array_equal(ones, np.ones(f8.n, dtype=np.int16))
    x = f8.evaluate(Monomial(1, 0))
    y = f8.evaluate(Monomial(0, 1))
    xy = f8.evaluate(Monomial(1, 1))
    assert np.array_equal(xy, f8.field.MUL[x, y])
    # evaluation outside the precomputed power window still works
    big = f8.evaluate(Monomial(9, 11))
    direct = f8.field.MUL[
        linalg.vec_pow(f8.field, x, 9), linalg.vec_pow(f8.field, y, 11)
    ]
    assert np.array_equal(big, direct)


def test_basis_matrix_is_invertible(f8, f27):
    for curve in (f8, f27):
        w = curve.basis_matrix()
        assert w.shape == (curve.n, curve.n)
        assert linalg.rank(curve.field, w) == curve.n


def test_normal_form_of_the_leading_power(f8):
    # X^4 = X^2 + X + Y^6 + Y^5 + Y^3 on the curve (char 2)
    nf = f8.normal_form_monomial(Monomial(4, 0))
    want = {
        Monomial(2, 0): 1,
        Monomial(1, 0): 1,
        Monomial(0, 6): 1,
        Monomial(0, 5): 1,
        Monomial(0, 3): 1,
    }
    assert nf.terms == want


def test_normal_form_fixes_footprint_monomials(f8):
    for m in f8.footprint:
        nf = f8.normal_form_monomial(m)
        assert nf.terms == {m: 1}


def test_normal_form_agrees_with_evaluation(f8):
    # reducing modulo the ideal cannot change values on the variety
    spec = f8.field
    for mono in (Monomial(4, 0), Monomial(5, 2), Monomial(3, 9), Monomial(6, 8)):
        nf = f8.normal_form_monomial(mono)
        acc = np.zeros(f8.n, dtype=np.int16)
        for m, c in nf.terms.items():
            acc = spec.ADD[acc, spec.MUL[f8.evaluate(m), c]]
        assert np.array_equal(acc, f8.evaluate(mono))


def test_polynomial_basics(f8):
    spec = f8.field
    zero = Polynomial(spec, {})
    assert not zero
    p = Polynomial(spec, {Monomial(1, 0): 1, Monomial(0, 2): 1})
    assert p.leading_monomial(f8.order) == Monomial(0, 2)  # weight 4 beats 3
    with pytest.raises(ValueError):
        zero.leading_monomial(f8.order)


def test_curve_config_errors():
    with pytest.raises(CurveConfigError):
        curve_from_config({"p": 2, "m": 3, "G": [0, 1], "H": [0, 1]})  # no weights
    bad = dict(PRESETS["f8"])
    bad["G"] = [0, 2, 1, 0, 1]  # coefficient 2 outside the prime subfield
    with pytest.raises(CurveConfigError):
        curve_from_config(bad)
    swapped = dict(PRESETS["f8"])
    swapped["weights"] = [2, 3]  # wrong order: leading monomial moves
    with pytest.raises(CurveConfigError):
        curve_from_config(swapped)
    with pytest.raises(CurveConfigError):
        preset_curve("f9")


def test_load_curve_paths(tmp_path):
    assert load_curve("f8").n == 32
    cfg = tmp_path / "curve.json"
    cfg.write_text(json.dumps(PRESETS["f8"]))
    assert load_curve(str(cfg)).n == 32
    with pytest.raises(CurveConfigError):
        load_curve(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    with pytest.raises(CurveConfigError):
        load_curve(str(bad))
