"""Vectorised linear algebra over GF(p^m) on packed integer-code arrays.

numpy supplies the array plumbing; every field semantic goes through the
lookup tables carried by a FieldSpec.  Large matrix products are lifted to the
prime field and dispatched to one float32 BLAS multiply per row chunk, which
is exact because digit sums stay far below 2**24.
"""

from __future__ import annotations

import numpy as np

from .field import FieldSpec

__all__ = [
    "vadd",
    "vsub",
    "vmul",
    "vneg",
    "fold_add",
    "dot",
    "matmul",
    "vec_pow",
    "inverse",
    "rref",
    "rank",
    "null_space",
]

_LIFT_THRESHOLD = 1 << 22  # element ops below this use plain table loops
_CHUNK_ROWS = 8192


def vadd(spec: FieldSpec, a, b):
    return spec.ADD[a, b]


def vsub(spec: FieldSpec, a, b):
    return spec.SUB[a, b]


def vmul(spec: FieldSpec, a, b):
    return spec.MUL[a, b]


def vneg(spec: FieldSpec, a):
    return spec.NEG[a]


def fold_add(spec: FieldSpec, arr, axis: int = -1):
    """Field-sum reduction along an axis by pairwise table lookups."""
    arr = np.asarray(arr)
    arr = np.moveaxis(arr, axis, -1)
    while arr.shape[-1] > 1:
        n = arr.shape[-1]
        half = n // 2
        head = spec.ADD[arr[..., :half], arr[..., half : 2 * half]]
        if n % 2:
            head = np.concatenate([head, arr[..., -1:]], axis=-1)
        arr = head
    return arr[..., 0]


def dot(spec: FieldSpec, a, b):
    """Field inner product along the last axis (no conjugation)."""
    return fold_add(spec, vmul(spec, a, b), axis=-1)


def _lift_rows(spec: FieldSpec, a: np.ndarray) -> np.ndarray:
    """(r, k) codes -> (r, k*m) prime-field digits as float32."""
    digits = spec.DIGITS[a]  # (r, k, m)
    return digits.reshape(a.shape[0], -1).astype(np.float32)


def _lift_matrix(spec: FieldSpec, b: np.ndarray) -> np.ndarray:
    """(k, c) codes -> (k*m, c*m) prime-field multiplication-matrix blocks."""
    blocks = spec.MULMAT[b]  # (k, c, m, m) with axes (j, col, d, e)
    return (
        blocks.transpose(0, 3, 1, 2)
        .reshape(b.shape[0] * spec.m, b.shape[1] * spec.m)
        .astype(np.float32)
    )


def matmul(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(q) for 2-d code arrays."""
    a = np.asarray(a, dtype=np.int16)
    b = np.asarray(b, dtype=np.int16)
    r, k = a.shape
    k2, c = b.shape
    if k != k2:
        raise ValueError("inner dimensions do not match")
    if k == 0:
        return np.zeros((r, c), dtype=np.int16)
    if r * k * c <= _LIFT_THRESHOLD:
        acc = np.zeros((r, c), dtype=np.int16)
        for j in range(k):
            acc = spec.ADD[acc, spec.MUL[a[:, j][:, None], b[j][None, :]]]
        return acc
    lifted_b = _lift_matrix(spec, b)
    weights = (spec.p ** np.arange(spec.m)).astype(np.int64)
    out = np.zeros((r, c), dtype=np.int16)
    for start in range(0, r, _CHUNK_ROWS):
        stop = min(start + _CHUNK_ROWS, r)
        digits = _lift_rows(spec, a[start:stop]) @ lifted_b
        digits = np.asarray(digits, dtype=np.int64) % spec.p
        digits = digits.reshape(stop - start, c, spec.m)
        out[start:stop] = (digits * weights).sum(axis=2).astype(np.int16)
    return out


def vec_pow(spec: FieldSpec, base: np.ndarray, exponent: int) -> np.ndarray:
    """Elementwise power of a code array (exponent >= 0, 0**0 == 1)."""
    result = np.ones_like(base)
    acc = base.copy()
    e = exponent
    while e:
        if e & 1:
            result = spec.MUL[result, acc]
        acc = spec.MUL[acc, acc]
        e >>= 1
    return result


def _eliminate(spec: FieldSpec, work: np.ndarray, pivot_row: int, col: int) -> None:
    inv = spec.INV[work[pivot_row, col]]
    work[pivot_row] = spec.MUL[inv, work[pivot_row]]
    targets = np.nonzero(work[:, col])[0]
    targets = targets[targets != pivot_row]
    if targets.size:
        factors = work[targets, col]
        work[targets] = spec.SUB[
            work[targets], spec.MUL[factors[:, None], work[pivot_row][None, :]]
        ]


def rref(spec: FieldSpec, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form, returning (matrix, pivot column list)."""
    work = np.array(m, dtype=np.int16)
    rows, cols = work.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        support = np.nonzero(work[row:, col])[0]
        if not support.size:
            continue
        pivot = row + int(support[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        _eliminate(spec, work, row, col)
        pivots.append(col)
        row += 1
    return work, pivots


def rank(spec: FieldSpec, m: np.ndarray) -> int:
    return len(rref(spec, m)[1])


def inverse(spec: FieldSpec, m: np.ndarray) -> np.ndarray:
    """Gauss-Jordan inverse of a square code matrix."""
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("matrix is not square")
    work = np.concatenate(
        [np.array(m, dtype=np.int16), np.eye(n, dtype=np.int16)], axis=1
    )
    reduced, pivots = rref(spec, work)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return reduced[:, n:]


def null_space(spec: FieldSpec, m: np.ndarray) -> np.ndarray:
    """Basis (as rows) of {v : m @ v = 0} over GF(q)."""
    m = np.asarray(m, dtype=np.int16)
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int16)
    reduced, pivots = rref(spec, m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int16)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = spec.NEG[reduced[r, f]]
    return basis
