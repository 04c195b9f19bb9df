"""Field table sanity for the two working sizes plus construction guards."""

import numpy as np
import pytest

from avcbounds.field import GF8_MODULUS, GF27_MODULUS, FieldSpec, field


@pytest.mark.parametrize("p,m", [(2, 3), (3, 3), (2, 1), (3, 1)])
def test_tables_are_a_field(p, m):
    spec = field(p, m)
    q = spec.q
    codes = np.arange(q)
    # commutativity and identity
    assert np.array_equal(spec.ADD, spec.ADD.T)
    assert np.array_equal(spec.MUL, spec.MUL.T)
    assert np.array_equal(spec.ADD[0], codes)
    assert np.array_equal(spec.MUL[1], codes)
    assert np.array_equal(spec.MUL[0], np.zeros(q, dtype=spec.MUL.dtype))
    # additive and multiplicative inverses
    assert np.array_equal(spec.ADD[codes, spec.NEG], np.zeros(q, dtype=np.int64))
    nz = codes[1:]
    assert np.array_equal(spec.MUL[nz, spec.INV[nz]], np.ones(q - 1, dtype=np.int64))
    # every nonzero row of MUL is a permutation (no zero divisors)
    for a in nz:
        assert sorted(spec.MUL[a].tolist()) == list(range(q))


def test_associativity_and_distributivity_exhaustive_gf8():
    spec = field(2, 3)
    q = spec.q
    for a in range(q):
        for b in range(q):
            ab_add = int(spec.ADD[a, b])
            ab_mul = int(spec.MUL[a, b])
            for c in range(q):
                assert spec.ADD[ab_add, c] == spec.ADD[a, spec.ADD[b, c]]
                assert spec.MUL[ab_mul, c] == spec.MUL[a, spec.MUL[b, c]]
                assert spec.MUL[ab_add, c] == spec.ADD[spec.MUL[a, c], spec.MUL[b, c]]


@pytest.mark.parametrize("p,m", [(2, 3), (3, 3)])
def test_frobenius_is_additive(p, m):
    spec = field(p, m)
    for a in range(spec.q):
        for b in range(spec.q):
            lhs = spec.pow_code(int(spec.ADD[a, b]), p)
            rhs = int(spec.ADD[spec.pow_code(a, p), spec.pow_code(b, p)])
            assert lhs == rhs


def test_encode_decode_roundtrip():
    spec = field(3, 3)
    for code in range(spec.q):
        assert spec.encode(spec.decode(code)) == code
    assert spec.decode(spec.encode((2, 0, 1))) == (2, 0, 1)


def test_element_wrappers():
    spec = field(2, 3)
    a = spec.element((1, 1, 0))
    b = spec.element((0, 1, 1))
    assert (a + b).coeffs == (1, 0, 1)
    assert a * spec.one == a
    assert a + spec.zero == a
    assert spec.mul(a, spec.inv(a)) == spec.one
    assert len(spec.elements()) == 8
    with pytest.raises(ZeroDivisionError):
        spec.inv(spec.zero)


def test_pow_code_matches_repeated_mul():
    spec = field(3, 3)
    rng = np.random.default_rng(7)
    for a in rng.integers(1, spec.q, size=20):
        acc = 1
        for e in range(9):
            assert spec.pow_code(int(a), e) == acc
            acc = int(spec.MUL[acc, a])
    # Fermat: a^(q-1) = 1
    for a in range(1, spec.q):
        assert spec.pow_code(a, spec.q - 1) == 1


def test_default_moduli():
    assert field(2, 3).modulus == GF8_MODULUS
    assert field(3, 3).modulus == GF27_MODULUS
    assert field(2, 1).modulus == (0, 1)


def test_alternate_modulus_still_a_field():
    alt = FieldSpec(2, 3, (1, 0, 1, 1))  # the other irreducible cubic
    assert alt.q == 8
    nz = np.arange(1, 8)
    assert np.array_equal(alt.MUL[nz, alt.INV[nz]], np.ones(7, dtype=np.int64))
    assert alt != field(2, 3)


def test_construction_guards():
    with pytest.raises(ValueError):
        FieldSpec(2, 3, (1, 1, 1, 1))  # t^3+t^2+t+1 = (t+1)(t^2+1), reducible
    with pytest.raises(ValueError):
        FieldSpec(2, 3, (1, 1, 0, 1, 0))  # degree 4 coefficients for m=3
    with pytest.raises(ValueError):
        FieldSpec(5, 2, (2, 0, 1))  # unsupported characteristic
    with pytest.raises(ValueError):
        field(2, 9)  # no default modulus that large


def test_field_cache_and_equality():
    assert field(2, 3) is field(2, 3)
    assert field(2, 3) == FieldSpec(2, 3, GF8_MODULUS)
    assert hash(field(3, 3)) == hash(FieldSpec(3, 3, GF27_MODULUS))
