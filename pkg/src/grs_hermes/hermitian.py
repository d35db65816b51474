"""Hermitian self-orthogonality and the named GRS construction families.

Families
--------
``q2``       all of GF(q^2), length q^2, k <= q - 1
``q2plus1``  all of GF(q^2) plus infinity, length q^2 + 1, k <= q
``r_family`` zero plus the r(q-1)-th roots of unity, length r(q-1) + 1,
             for 0 < r < q + 1 with q + 1 = r (mod 2r), k <= (q - 1 + r)/2
``coset``    translates beta_j + {first n_j elements of GF(q)} of blocks
             with n_j <= q, t <= q blocks, k <= min(n_j)/2

In every family the column multipliers solve ``v_i**(q+1) == c_i`` for
the F_q-rational dual vector ``c`` of the evaluation set.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import FieldTower, prime_power, tower_for
from .grs import FAIL, PASS, GrsCode, build_grs, code_subset, q_power_code
from .linalg import matmul
from .vandermonde import EvalSet, all_points, roots_of_unity, solve_dual

FAMILIES = ("q2", "coset", "q2plus1", "r_family")


class FamilyError(ValueError):
    """Family parameters violate the construction's requirements."""


def hermitian_inner(t: FieldTower, b, c) -> int:
    b, c = np.asarray(b, dtype=np.int64), np.asarray(c, dtype=np.int64)
    if b.shape != c.shape:
        raise ValueError(f"length mismatch {b.shape} vs {c.shape}")
    acc = 0
    for x in t.mul(b, t.frobenius(c)).ravel():
        acc = t.add(acc, int(x))
    return acc


def hermitian_gram(t: FieldTower, gen) -> np.ndarray:
    """Matrix of ``<g_i, g_j>_H`` over all generator row pairs."""
    gen = np.asarray(gen, dtype=np.int64)
    return matmul(t, gen, t.frobenius(gen).T)


def is_hermitian_self_orthogonal(code: GrsCode) -> bool:
    """``C`` is contained in its Hermitian dual.

    By sesquilinearity it is enough that the Gram matrix of the generator
    rows vanishes; the ``k(k+1)/2`` pairs ``i <= j`` determine it.
    """
    if code.k == 0:
        return True
    return not np.any(hermitian_gram(code.tower, code.gen))


def verified(code: GrsCode) -> GrsCode:
    """Copy of ``code`` with ``hermitian_ok`` filled in."""
    return code.with_checks(hermitian_ok=PASS if is_hermitian_self_orthogonal(code) else FAIL)


def degree_bound(n: int, with_inf: bool, q: int) -> int:
    """Largest k for which the degree argument gives self-orthogonality.

    ``n`` counts the finite points only.
    """
    return (n + q) // (q + 1) if with_inf else (n + q - 1) // (q + 1)


def exponent_condition(n: int, k: int, q: int) -> bool:
    """``{q*i mod (n-1) : 1 <= i < k}`` lies inside ``{0, ..., n-k-1}``."""
    if (q * q - 1) % (n - 1):
        raise ValueError(f"n - 1 = {n - 1} must divide q^2 - 1 = {q * q - 1}")
    return all((q * i) % (n - 1) <= n - k - 1 for i in range(1, k))


def r_values(q: int) -> list[int]:
    """All ``0 < r < q + 1`` with ``q + 1 = r (mod 2r)``."""
    return [r for r in range(1, q + 1) if (q + 1) % (2 * r) == r]


@dataclass(frozen=True)
class FamilyParams:
    family: str
    q: int
    k: int
    r: int | None = None
    blocks: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.blocks is not None:
            object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))

    @property
    def length(self) -> int:
        q = self.q
        return {
            "q2": q * q,
            "q2plus1": q * q + 1,
            "r_family": (self.r or 0) * (q - 1) + 1,
            "coset": sum(self.blocks or ()),
        }[self.family]

    def guaranteed_k(self) -> int:
        q = self.q
        if self.family == "q2":
            return q - 1
        if self.family == "q2plus1":
            return q
        if self.family == "r_family":
            return (q - 1 + self.r) // 2
        return min(self.blocks) // 2

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise FamilyError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        try:
            prime_power(self.q)
        except ValueError as exc:
            raise FamilyError(str(exc)) from None
        if self.k < 1:
            raise FamilyError("dimension must be at least 1")
        q = self.q
        if self.family == "r_family":
            r = self.r
            if r is None:
                raise FamilyError("r_family needs r")
            if not 0 < r < q + 1:
                raise FamilyError(f"r = {r} must satisfy 0 < r < q + 1 = {q + 1}")
            if (q + 1) % (2 * r) != r:
                raise FamilyError(f"q + 1 = {q + 1} is not congruent to r = {r} mod {2 * r}")
        if self.family == "coset":
            b = self.blocks
            if not b:
                raise FamilyError("coset family needs block sizes")
            if len(b) > q:
                raise FamilyError(f"at most q = {q} blocks allowed")
            if any(nj < 2 or nj > q for nj in b):
                raise FamilyError(f"block sizes must lie in [2, q = {q}]")
            # k = min/2 + 1 is attempted and checked directly
            if self.k > min(b) // 2 + 1:
                raise FamilyError(f"k = {self.k} exceeds min(n_j)/2 + 1 = {min(b) // 2 + 1}")
            return
        if self.k > self.guaranteed_k():
            raise FamilyError(
                f"k = {self.k} exceeds the {self.family} bound {self.guaranteed_k()}"
            )

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "q": self.q,
            "k": self.k,
            "r": self.r,
            "blocks": list(self.blocks) if self.blocks is not None else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyParams":
        blocks = d.get("blocks")
        return cls(d["family"], int(d["q"]), int(d["k"]), d.get("r"),
                   tuple(blocks) if blocks is not None else None)


def coset_points(t: FieldTower, blocks) -> EvalSet:
    """Block ``j`` is ``beta_j + {0, 1, ..., n_j - 1}`` with ``beta_j = j*y``.

    The encodings below ``q`` are GF(q), and ``j*y`` (encoding ``j*q``)
    runs over distinct additive cosets of GF(q).
    """
    q = t.q
    pts = []
    for j, nj in enumerate(blocks):
        pts.extend(t.add(j * q, np.arange(nj, dtype=np.int64)).tolist())
    return EvalSet(t, tuple(pts))


def norm_roots(t: FieldTower, c) -> np.ndarray:
    return np.array([t.solve_norm_equation(int(x)) for x in c], dtype=np.int64)


def _rational_dual(ev: EvalSet) -> np.ndarray:
    d = solve_dual(ev)
    if not d.rational:
        raise AssertionError("construction produced an evaluation set without a rational dual")
    return d.array()


def family_eval_set(params: FamilyParams) -> EvalSet:
    t = tower_for(params.q)
    if params.family == "q2":
        return all_points(t)
    if params.family == "q2plus1":
        return all_points(t, with_infinity=True)
    if params.family == "r_family":
        m = params.r * (params.q - 1)
        return EvalSet(t, roots_of_unity(t, m, with_zero=True))
    return coset_points(t, params.blocks)


def _smallest_rootless(t: FieldTower, degree: int) -> list[int]:
    pts = t.elements()
    for low in itertools.product(range(1, t.order), *[range(t.order)] * (degree - 1)):
        if np.all(poly_eval(t, low + (1,), pts) != 0):
            return list(low) + [1]
    raise AssertionError("no rootless polynomial found")  # unreachable


def poly_mul(t: FieldTower, a, b) -> list[int]:
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, x in enumerate(a):
        out[i:i + len(b)] = t.add(out[i:i + len(b)], t.mul(int(x), np.asarray(b, dtype=np.int64)))
    return [int(x) for x in out]


def rootless_monic(t: FieldTower, degree: int) -> list[int]:
    """A monic polynomial of ``degree >= 2`` with no root in GF(q^2).

    Built as ``Q**a * C**b`` with ``degree = 2a + 3b``, ``b`` in {0, 1},
    where ``Q`` and ``C`` are the lexicographically smallest (constant term
    first) rootless monic quadratic and cubic.
    """
    if degree < 2:
        raise ValueError("a polynomial of degree below 2 over a field has a root")
    b = degree % 2
    a = (degree - 3 * b) // 2
    h = [1]
    for _ in range(a):
        h = poly_mul(t, h, _smallest_rootless(t, 2))
    if b:
        h = poly_mul(t, h, _smallest_rootless(t, 3))
    return h


def poly_eval(t: FieldTower, coeffs, pts) -> np.ndarray:
    """Horner evaluation, coefficients constant term first."""
    acc = np.zeros(len(pts), dtype=np.int64)
    for coef in reversed(list(coeffs)):
        acc = t.add(t.mul(acc, pts), int(coef))
    return acc


def _norm_trace_values(t: FieldTower, d: int, lam, s: int, pts) -> np.ndarray:
    x = t.mul(lam, t.power(np.asarray(pts, dtype=np.int64), d))
    return t.add(t.add(t.norm(pts), t.add(x, t.frobenius(x))), s)


@lru_cache(maxsize=None)
def norm_trace_weights(t: FieldTower) -> tuple[int, int, int] | None:
    """Smallest ``(d, lam, s)`` with ``W(x) = s + N(x) + Tr(lam * x**d)``
    nonzero on all of GF(q^2), scanning ``2 <= d < q`` first.

    Such weights, with weight 1 at infinity, make
    ``GRS_{q-1}(GF(q^2), v, inf)`` Hermitian self-orthogonal when
    ``v**(q+1) = W``: the Gram entries are power sums of ``W`` at
    exponents the three terms avoid, and the infinity entry cancels the
    norm term.  Returns ``None`` if the scan finds nothing (q = 2, 4, 16).
    """
    q = t.q
    pts = t.elements()
    norms = t.norm(pts)
    rows = np.arange(256)
    for d in range(2, q):
        pd = t.power(pts, d)
        for lo in range(1, t.order, 256):
            lam = np.arange(lo, min(lo + 256, t.order), dtype=np.int64)
            x = t.mul(lam[:, None], pd[None, :])
            vals = t.add(norms[None, :], t.add(x, t.frobenius(x)))
            seen = np.zeros((len(lam), q), dtype=bool)
            seen[rows[:len(lam), None], vals] = True
            gaps = ~seen.all(axis=1)
            if gaps.any():
                i = int(np.argmax(gaps))
                # s works iff -s is never taken
                s = min(s for s in range(q) if not seen[i, t.neg(s)])
                return d, int(lam[i]), s
    return None


def construct_family(params: FamilyParams) -> GrsCode:
    """Build the family's code and confirm it is Hermitian self-orthogonal.

    ``q2plus1`` below the top dimension: codes with infinity are not nested,
    so ``v**(q+1) = c`` alone is self-orthogonal only for ``k == q``.  For
    ``k <= q - 2`` the code is taken inside that one as
    ``{h*g : deg g < k}`` with ``h`` monic, rootless, of degree ``q - k``,
    i.e. multipliers ``v_i * h(a_i)`` (the infinity multiplier is unchanged
    because ``h`` is monic).  ``k == q - 1`` uses the weights of
    :func:`norm_trace_weights` instead, and is rejected when none exist.
    """
    params.validate()
    t = tower_for(params.q)
    ev = family_eval_set(params)
    record = params.to_dict()
    if params.family == "coset":
        # each block has its own dual vector
        c, start = [], 0
        for nj in params.blocks:
            c.extend(_rational_dual(EvalSet(t, ev.points[start:start + nj])).tolist())
            start += nj
        c = np.array(c, dtype=np.int64)
    else:
        c = _rational_dual(ev)
    v = norm_roots(t, c)
    if params.family == "q2plus1" and params.k == params.q - 1:
        found = norm_trace_weights(t)
        if found is None:
            raise FamilyError(
                f"q2plus1 with q = {params.q}, k = q - 1: the weight search found no "
                "s + N(x) + Tr(lam*x^d) without zeros"
            )
        d, lam, s0 = found
        w = np.append(_norm_trace_values(t, d, lam, s0, ev.array()), 1)
        v = norm_roots(t, t.mul(c, w))
        record["recipe"] = "norm-trace"
        record["weights"] = [d, lam, s0]
    elif params.family == "q2plus1" and params.k < params.q:
        h = rootless_monic(t, params.q - params.k)
        v = v.copy()
        v[:-1] = t.mul(v[:-1], poly_eval(t, h, ev.array()))
        record["recipe"] = "subcode"
        record["multiplier"] = [int(x) for x in h]
    code = verified(build_grs(ev, v, params.k, family=record))
    if code.checks["hermitian_ok"] != PASS:
        if params.k > params.guaranteed_k():
            raise FamilyError(
                f"k = {params.k} is beyond the guaranteed bound and the code is "
                "not Hermitian self-orthogonal"
            )
        raise AssertionError(f"Hermitian post-check failed for {params}")
    return code


def unrepaired_code(params: FamilyParams) -> GrsCode:
    """The family's code with ``v**(q+1) = c`` and no repair, unchecked."""
    params.validate()
    ev = family_eval_set(params)
    if params.family == "coset":
        # only the repair-free families are meaningful here
        raise ValueError("unrepaired_code covers q2, q2plus1 and r_family")
    v = norm_roots(ev.tower, solve_dual(ev).c)
    return build_grs(ev, v, params.k, family=params.to_dict())


def conjugate_inclusion(code: GrsCode) -> bool:
    """``C^q`` inside ``GRS_{n-k}(a, v^q)``, the Euclidean dual shape."""
    t = code.tower
    big = build_grs(code.eval, t.frobenius(code.v), code.n - code.k)
    return code_subset(t, q_power_code(code), big.gen)
