"""Dual code wiring: parity sets, generators, first-hit index sets."""

import numpy as np
import pytest

from avcbounds import linalg
from avcbounds.codes import CodeSpec, standard_code


def test_standard_code_shape(f8):
    code = standard_code(f8, 16)
    assert code.n == 32
    assert code.k == 16
    assert code.parity == tuple(range(1, 17))
    assert code.m_set == tuple(range(17, 33))
    assert code.describe() == (
        "[n=32, k=16] parity={" + ", ".join(map(str, range(1, 17))) + "}"
    )


def test_standard_code_edges(f8):
    full = standard_code(f8, 0)
    assert full.k == 32 and full.parity == () and full.m_set == tuple(range(1, 33))
    assert np.array_equal(full.generator_matrix(), np.eye(32, dtype=np.int16))
    empty = standard_code(f8, 32)
    assert empty.k == 0 and empty.m_set == ()
    assert empty.generator_matrix().shape == (0, 32)
    with pytest.raises(ValueError):
        standard_code(f8, 33)
    with pytest.raises(ValueError):
        standard_code(f8, -1)


def test_parity_indexes_are_normalized(f8):
    code = CodeSpec(f8, (5, 3, 3, 5, 1))
    assert code.parity == (1, 3, 5)
    assert code.k == 29
    with pytest.raises(ValueError):
        CodeSpec(f8, (0, 4))
    with pytest.raises(ValueError):
        CodeSpec(f8, (1, 40))


def test_generator_is_orthogonal_to_parity(f8):
    for parity in (tuple(range(1, 17)), (2, 9, 17, 25, 31)):
        code = CodeSpec(f8, parity)
        gen = code.generator_matrix()
        assert gen.shape == (code.k, 32)
        assert linalg.rank(f8.field, gen) == code.k
        prod = linalg.matmul(f8.field, code.parity_matrix(), gen.T)
        assert not prod.any()


def test_parity_matrix_rows_are_basis_rows(f8):
    code = standard_code(f8, 4)
    w = f8.basis_matrix()
    assert np.array_equal(code.parity_matrix(), w[:4])


def test_m_set_is_the_parity_complement(f8):
    code = CodeSpec(f8, (2, 9, 17, 25, 31))
    assert set(code.m_set) == set(range(1, 33)) - {2, 9, 17, 25, 31}
    assert code.k == 27


def test_table_is_shared_with_the_curve(f8, t8):
    code = standard_code(f8, 16)
    assert np.array_equal(code.table().rho, t8.rho)
