import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grs_hermes.field import MAX_ORDER, FieldTower, build_tower, is_prime, prime_power, tower_for

from .conftest import SMALL_QS


# -- independent scalar arithmetic straight from the defining polynomials --

def _poly_mul_mod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    d = len(mod) - 1
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            for j in range(d + 1):
                prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    return (prod + [0] * d)[:d]


def ref_mul(t, x, y):
    p, m, q = t.p, t.m, t.q

    def digits(v):
        return [(v // p ** i) % p for i in range(m)]

    def undigits(ds):
        return sum(d * p ** i for i, d in enumerate(ds))

    def mq(a, b):
        return undigits(_poly_mul_mod(digits(a), digits(b), t.base_poly, p))

    def aq(a, b):
        return undigits([(u + w) % p for u, w in zip(digits(a), digits(b))])

    def nq(a):
        return undigits([(-u) % p for u in digits(a)])

    a0, a1, b0, b1 = x % q, x // q, y % q, y // q
    t0, t1 = t.top_poly[0], t.top_poly[1]
    hh = mq(a1, b1)
    re = aq(mq(a0, b0), nq(mq(t0, hh)))
    im = aq(aq(mq(a0, b1), mq(a1, b0)), nq(mq(t1, hh)))
    return re + q * im


def ref_order(t, x):
    k, acc = 1, x
    while acc != 1:
        acc = ref_mul(t, acc, x)
        k += 1
    return k


def test_gf4_tower():
    t = build_tower(2, 1)
    assert t.q == 2 and t.order == 4
    assert t.top_poly == [1, 1, 1]
    # y^2 + y + 1 is the only monic quadratic over GF(2) without a root
    rootless = [
        (c0, c1) for c0, c1 in itertools.product(range(2), repeat=2)
        if all((a * a + c1 * a + c0) % 2 for a in range(2))
    ]
    assert rootless == [(1, 1)]
    w = t.generator
    assert w == 2
    assert t.mul(w, w) == t.add(w, 1) == 3
    assert t.mul(2, 3) == 1


def test_gf9_group_order():
    t = build_tower(3, 1)
    assert t.order - 1 == 8
    assert ref_order(t, t.generator) == 8


@pytest.mark.parametrize("q", SMALL_QS)
def test_polynomials_are_smallest_irreducible(q):
    t = tower_for(q)
    p, m = t.p, t.m
    # base polynomial: no root/factor for it, a factor for every smaller candidate
    def has_factor(poly):
        d = len(poly) - 1
        for deg in range(1, d // 2 + 1):
            for low in itertools.product(range(p), repeat=deg):
                g = list(low) + [1]
                if not any(_poly_mul_mod(poly, [1], g, p)):
                    return True
        return False

    if m > 1:
        assert not has_factor(t.base_poly)
        for low in itertools.product(range(p), repeat=m):
            cand = list(low) + [1]
            if cand == t.base_poly:
                break
            assert has_factor(cand)
    # top polynomial: no root in GF(q), every smaller candidate has one
    def has_root(t0, t1):
        return any(
            t.add(t.add(ref_mul(t, a, a), ref_mul(t, t1, a)), t0) == 0 for a in range(t.q)
        )

    t0, t1, one = t.top_poly
    assert one == 1 and not has_root(t0, t1)
    for c0, c1 in itertools.product(range(t.q), repeat=2):
        if (c0, c1) == (t0, t1):
            break
        assert has_root(c0, c1)


@pytest.mark.parametrize("q", SMALL_QS)
def test_generator_is_smallest_primitive(q):
    t = tower_for(q)
    assert ref_order(t, t.generator) == t.order - 1
    for x in range(1, t.generator):
        assert ref_order(t, x) < t.order - 1


@pytest.mark.parametrize("q", SMALL_QS)
def test_multiplication_matches_polynomial_reference(q):
    t = tower_for(q)
    el = range(t.order)
    for x, y in itertools.product(el, repeat=2):
        assert t.mul(x, y) == ref_mul(t, x, y)


@pytest.mark.parametrize("q", [11, 16, 23])
def test_multiplication_reference_sampled(q, rng):
    t = tower_for(q)
    xs = rng.integers(0, t.order, 300)
    ys = rng.integers(0, t.order, 300)
    got = t.mul(xs, ys)
    assert [int(g) for g in got] == [ref_mul(t, int(x), int(y)) for x, y in zip(xs, ys)]


@pytest.mark.parametrize("q", SMALL_QS + (16,))
def test_frobenius_is_an_automorphism(q):
    t = tower_for(q)
    el = t.elements()
    x, y = el[:, None], el[None, :]
    f = t.frobenius
    assert np.array_equal(f(t.add(x, y)), t.add(f(x), f(y)))
    assert np.array_equal(f(t.mul(x, y)), t.mul(f(x), f(y)))
    assert np.array_equal(f(f(el)), el)
    fixed = el[f(el) == el]
    assert np.array_equal(fixed, np.arange(t.q))


def test_frobenius_examples(gf4):
    assert gf4.frobenius(2) == 3
    assert gf4.frobenius(1) == 1
    assert gf4.frobenius(0) == 0


@pytest.mark.parametrize("q", SMALL_QS)
def test_norm_fibres(q):
    t = tower_for(q)
    norms = t.norm(t.elements())
    assert np.all(norms < t.q)
    assert norms[0] == 0
    counts = np.bincount(norms, minlength=t.q)
    assert counts[0] == 1
    assert np.all(counts[1:] == q + 1)


def test_norm_examples(gf4):
    assert gf4.norm(2) == 1
    assert gf4.norm(0) == 0


@pytest.mark.parametrize("q", SMALL_QS + (23,))
def test_solve_norm_equation_exhaustive(q):
    t = tower_for(q)
    el = t.elements()
    for c in range(1, t.q):
        brute = [int(x) for x in el if t.power(int(x), q + 1) == c]
        assert t.solve_norm_equation(c) == min(brute)


def test_solve_norm_equation_examples(gf4, gf9):
    assert gf4.solve_norm_equation(1) == 1
    v = gf9.solve_norm_equation(2)
    assert gf9.power(v, 4) == 2


def test_solve_norm_equation_rejects(gf9):
    with pytest.raises(ValueError):
        gf9.solve_norm_equation(0)
    with pytest.raises(ValueError):
        gf9.solve_norm_equation(3)


@pytest.mark.parametrize("q", SMALL_QS)
def test_log_antilog_inverse(q):
    t = tower_for(q)
    nz = np.arange(1, t.order)
    assert np.array_equal(t.antilog(t.log(nz)), nz)
    assert t.antilog(0) == 1


@pytest.mark.parametrize("q", SMALL_QS)
def test_inverse_and_division(q):
    t = tower_for(q)
    nz = np.arange(1, t.order)
    assert np.all(t.mul(nz, t.inv(nz)) == 1)
    with pytest.raises(ZeroDivisionError):
        t.inv(0)


@settings(max_examples=60, deadline=None)
@given(q=st.sampled_from([3, 5, 9, 25]), data=st.data())
def test_field_axioms(q, data):
    t = tower_for(q)
    x, y, z = (data.draw(st.integers(0, t.order - 1)) for _ in range(3))
    assert t.add(x, t.add(y, z)) == t.add(t.add(x, y), z)
    assert t.mul(x, t.mul(y, z)) == t.mul(t.mul(x, y), z)
    assert t.mul(x, t.add(y, z)) == t.add(t.mul(x, y), t.mul(x, z))
    assert t.sub(t.add(x, y), y) == x
    assert t.add(x, t.neg(x)) == 0
    e = data.draw(st.integers(-5, 40))
    if x:
        assert t.power(x, e) == t.antilog(t.log(x) * e)


@pytest.mark.parametrize("q", SMALL_QS)
def test_full_tables_match_log_path(q):
    t = tower_for(q)
    el = t.elements()
    x, y = el[:, None], el[None, :]
    logmul = np.where((x == 0) | (y == 0), 0, t._exp[t._log[x] + t._log[y]])
    assert np.array_equal(t.mul(x, y), logmul)


def test_subfield_encodings(gf9):
    t = tower_for(9)
    assert np.array_equal(t.in_base(np.arange(81)), np.arange(81) < 9)
    # GF(q) is closed under the field operations
    sub = np.arange(9)
    assert np.all(t.add(sub[:, None], sub[None, :]) < 9)
    assert np.all(t.mul(sub[:, None], sub[None, :]) < 9)


def test_build_is_deterministic():
    a, b = FieldTower(3, 2), FieldTower(3, 2)
    assert a.to_dict() == b.to_dict()
    assert np.array_equal(a._exp, b._exp) and np.array_equal(a._log, b._log)
    assert build_tower(3, 2) is build_tower(3, 2)


def test_json_roundtrip():
    t = tower_for(8)
    d = t.to_dict()
    assert set(d) == {"p", "m", "base_poly", "top_poly", "generator"}
    assert FieldTower.from_dict(d) is t
    with pytest.raises(ValueError):
        FieldTower.from_dict({**d, "generator": d["generator"] + 1})


def test_rejections():
    with pytest.raises(ValueError):
        build_tower(4, 1)
    with pytest.raises(ValueError):
        build_tower(2, 0)
    with pytest.raises(ValueError):
        build_tower(2, 11)  # q^2 = 2^22
    assert (2 ** 10) ** 2 <= MAX_ORDER


def test_prime_helpers():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_power(64) == (2, 6)
    assert prime_power(23) == (23, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(ValueError):
            prime_power(bad)
