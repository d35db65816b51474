"""Dense linear algebra over GF(q^2).

Matrices are 2-D ``int64`` numpy arrays of element encodings; every
function takes the :class:`~grs_hermes.field.FieldTower` first.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import FieldTower


def as_mat(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def matmul(t: FieldTower, a, b) -> np.ndarray:
    a, b = as_mat(a), as_mat(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[1]):
        out = t.add(out, t.mul(a[:, i, None], b[None, i, :]))
    return out


def vecmat(t: FieldTower, x, a) -> np.ndarray:
    return matmul(t, np.asarray(x, dtype=np.int64)[None, :], a)[0]


def rref(t: FieldTower, a) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns.

    The result is the unique RREF: leading entries are 1 and every pivot
    column is zero outside its pivot row.
    """
    r = as_mat(a).copy()
    rows, cols = r.shape
    pivots = []
    row = 0
    for c in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, c])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            r[[row, piv]] = r[[piv, row]]
        r[row] = t.mul(r[row], t.inv(int(r[row, c])))
        coef = r[:, c].copy()
        coef[row] = 0
        hit = np.nonzero(coef)[0]
        if hit.size:
            r[hit] = t.sub(r[hit], t.mul(coef[hit, None], r[row][None, :]))
        pivots.append(c)
        row += 1
    return r, len(pivots), tuple(pivots)


def rank(t: FieldTower, a) -> int:
    a = as_mat(a)
    if a.size == 0:
        return 0
    return rref(t, a)[1]


def nullspace(t: FieldTower, a) -> np.ndarray:
    """Basis of ``{x : A x^T = 0}`` as the rows of a ``(cols - rank) x cols`` array.

    Each basis vector has first nonzero coordinate 1: the vector belonging
    to free column ``f`` has a 1 there and zeros in the other free columns.
    """
    a = as_mat(a)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, rk, pivots = rref(t, a)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = t.neg(int(r[row, f]))
    # normalise: first nonzero coordinate -> 1
    for i in range(len(free)):
        lead = int(basis[i][np.nonzero(basis[i])[0][0]])
        basis[i] = t.div(basis[i], lead)
    return basis


def row_equivalent(t: FieldTower, a, b) -> bool:
    a, b = as_mat(a), as_mat(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch {a.shape} vs {b.shape}")
    return bool(np.array_equal(rref(t, a)[0], rref(t, b)[0]))


def batch_full_rank(t: FieldTower, mats: np.ndarray) -> np.ndarray:
    """For a stack of square matrices ``(B, k, k)``, flag which are invertible."""
    m = np.array(mats, dtype=np.int64)
    if m.ndim != 3 or m.shape[1] != m.shape[2]:
        raise ValueError("expected a stack of square matrices")
    b, k, _ = m.shape
    ok = np.ones(b, dtype=bool)
    idx = np.arange(b)
    for c in range(k):
        nz = m[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + nz.argmax(axis=1)
        top = m[idx, c].copy()
        m[idx, c] = m[idx, piv]
        m[idx, piv] = top
        lead = np.where(has, m[:, c, c], 1)
        m[:, c] = t.mul(m[:, c], t.inv(lead)[:, None])
        if c + 1 < k:
            f = m[:, c + 1:, c]
            m[:, c + 1:] = t.sub(m[:, c + 1:], t.mul(f[:, :, None], m[:, None, c, :]))
    return ok


def columns_full_rank(t: FieldTower, a, cols: Sequence[int]) -> bool:
    """True iff the columns ``cols`` of ``a`` are linearly independent."""
    a = as_mat(a)
    cols = [int(c) for c in cols]
    if len(set(cols)) != len(cols):
        raise ValueError("column indices must be distinct")
    if any(c < 0 or c >= a.shape[1] for c in cols):
        raise ValueError("column index out of range")
    sub = a[:, cols]
    if len(cols) > a.shape[0]:
        return False
    if sub.shape[0] == sub.shape[1]:
        return bool(batch_full_rank(t, sub[None])[0])
    return rank(t, sub) == len(cols)
