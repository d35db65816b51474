import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grs_hermes.field import tower_for
from grs_hermes.linalg import (
    batch_full_rank,
    columns_full_rank,
    matmul,
    nullspace,
    rank,
    rref,
    row_equivalent,
)


def det(t, m):
    """Leibniz expansion; only used on tiny matrices."""
    k = len(m)
    acc = 0
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = 1
        for i in range(k):
            term = t.mul(term, int(m[i][perm[i]]))
        acc = t.sub(acc, term) if inv % 2 else t.add(acc, term)
    return acc


def rank_by_minors(t, a):
    rows, cols = a.shape
    for r in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), r):
            for ci in itertools.combinations(range(cols), r):
                if det(t, a[np.ix_(ri, ci)]):
                    return r
    return 0


@st.composite
def field_matrix(draw, max_rows=4, max_cols=5):
    q = draw(st.sampled_from([2, 3, 4]))
    t = tower_for(q)
    rows = draw(st.integers(1, max_rows))
    cols = draw(st.integers(1, max_cols))
    # bias towards low rank by mixing in zero and repeated rows
    entries = draw(st.lists(st.integers(0, t.order - 1), min_size=rows * cols, max_size=rows * cols))
    a = np.array(entries, dtype=np.int64).reshape(rows, cols)
    if rows > 1 and draw(st.booleans()):
        a[-1] = t.mul(a[0], draw(st.integers(0, t.order - 1)))
    return t, a


def is_rref(r, rk, pivots):
    if len(pivots) != rk or list(pivots) != sorted(pivots):
        return False
    for i, p in enumerate(pivots):
        if r[i, p] != 1 or np.any(r[i, :p]) or np.count_nonzero(r[:, p]) != 1:
            return False
    return not np.any(r[rk:])


def test_rref_identity_and_zero(gf4):
    r, rk, piv = rref(gf4, np.eye(3, dtype=np.int64))
    assert np.array_equal(r, np.eye(3)) and rk == 3 and piv == (0, 1, 2)
    r, rk, piv = rref(gf4, np.zeros((2, 4), dtype=np.int64))
    assert not r.any() and rk == 0 and piv == ()


def test_rref_scalar_multiple_row(gf4):
    w = 2
    a = np.array([[1, w], [w, gf4.mul(w, w)]])
    r, rk, piv = rref(gf4, a)
    assert rk == 1 and piv == (0,)
    assert r.tolist() == [[1, w], [0, 0]]


@settings(max_examples=150, deadline=None)
@given(field_matrix())
def test_rank_matches_minor_oracle(tm):
    t, a = tm
    r, rk, piv = rref(t, a)
    assert rk == rank_by_minors(t, a)
    assert is_rref(r, rk, piv)


@settings(max_examples=150, deadline=None)
@given(field_matrix())
def test_rref_idempotent_and_nullspace(tm):
    t, a = tm
    r = rref(t, a)[0]
    assert np.array_equal(rref(t, r)[0], r)
    ns = nullspace(t, a)
    assert rank(t, a) + ns.shape[0] == a.shape[1]
    if ns.size:
        assert not matmul(t, a, ns.T).any()
        for x in ns:
            assert x[np.nonzero(x)[0][0]] == 1
        assert rank(t, ns) == ns.shape[0]


@settings(max_examples=80, deadline=None)
@given(field_matrix(), st.data())
def test_row_equivalence_is_an_equivalence(tm, data):
    t, a = tm
    rows = a.shape[0]
    perm = data.draw(st.permutations(range(rows)))
    scale = data.draw(st.lists(st.integers(1, t.order - 1), min_size=rows, max_size=rows))
    b = t.mul(a[list(perm)], np.array(scale)[:, None])
    if rows > 1:
        b[0] = t.add(b[0], t.mul(b[1], data.draw(st.integers(0, t.order - 1))))
    c = b[::-1].copy()
    assert row_equivalent(t, a, a)
    assert row_equivalent(t, a, b) and row_equivalent(t, b, a)
    assert row_equivalent(t, b, c) and row_equivalent(t, a, c)


def test_row_equivalent_examples(gf4):
    eye = np.eye(3, dtype=np.int64)
    assert row_equivalent(gf4, eye, eye[[2, 0, 1]])
    assert not row_equivalent(gf4, eye, np.zeros_like(eye))
    with pytest.raises(ValueError):
        row_equivalent(gf4, eye, eye[:2])


def test_nullspace_examples(gf4):
    assert nullspace(gf4, np.eye(4, dtype=np.int64)).shape == (0, 4)
    a = np.array([[1, 1, 1, 1], [0, 1, 2, 3], [0, 1, 3, 2]])
    assert nullspace(gf4, a).tolist() == [[1, 1, 1, 1]]


@pytest.mark.parametrize("q", [3, 4, 5])
def test_vandermonde_nullspace_is_a_line(q, rng):
    t = tower_for(q)
    for _ in range(10):
        n = int(rng.integers(2, min(t.order, 9) + 1))
        pts = rng.choice(t.order, n, replace=False)
        a = np.array([t.power(pts, i) for i in range(n - 1)])
        assert nullspace(t, a).shape[0] == 1


def test_columns_full_rank(gf4):
    assert not columns_full_rank(gf4, np.ones((2, 2), dtype=np.int64), [0, 1])
    gen = np.array([[1, 1, 1, 1], [0, 1, 2, 3]])
    for cols in itertools.combinations(range(4), 2):
        assert columns_full_rank(gf4, gen, cols)
    with pytest.raises(ValueError):
        columns_full_rank(gf4, gen, [1, 1])
    with pytest.raises(ValueError):
        columns_full_rank(gf4, gen, [0, 4])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 4), st.integers(0, 2**32 - 1))
def test_batch_full_rank_matches_determinant(q, k, seed):
    t = tower_for(q)
    r = np.random.default_rng(seed)
    mats = r.integers(0, t.order, (12, k, k))
    mats[0, :, 0] = 0  # at least one singular matrix
    got = batch_full_rank(t, mats)
    assert got.tolist() == [det(t, m) != 0 for m in mats]
    assert not got[0]
