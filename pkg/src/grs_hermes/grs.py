"""Generalized Reed-Solomon codes ``GRS_k(a, v)`` and ``GRS_k(a, v, inf)``.

A code is stored with its generator matrix.  Row ``i`` evaluates ``x**i``
at the points and scales column ``j`` by ``v[j]``.  The infinity
coordinate, when present, is the last column.  It carries the coefficient
of ``x**(k-1)``, so only the top row is nonzero there.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace

import numpy as np

from .field import FieldTower
from .linalg import as_mat, rank, row_equivalent, vecmat
from .vandermonde import EvalSet, power_rows, solve_dual

CHECK_NAMES = ("hermitian_ok", "mds_ok", "rational_dual_ok")
UNKNOWN, PASS, FAIL = "unknown", "pass", "fail"


def _unknown_checks() -> dict:
    return {name: UNKNOWN for name in CHECK_NAMES}


@dataclass(frozen=True, eq=False)
class GrsCode:
    tower: FieldTower
    eval: EvalSet
    v: np.ndarray
    k: int
    gen: np.ndarray
    checks: dict = field(default_factory=_unknown_checks)
    family: dict | None = None

    @property
    def n(self) -> int:
        return self.eval.length

    @property
    def q(self) -> int:
        return self.tower.q

    def with_checks(self, **updates) -> "GrsCode":
        bad = set(updates) - set(CHECK_NAMES)
        if bad:
            raise KeyError(f"unknown checks: {sorted(bad)}")
        return replace(self, checks={**self.checks, **updates})

    def to_dict(self) -> dict:
        d = {
            "field": self.tower.to_dict(),
            "eval": self.eval.to_dict(),
            "v": [int(x) for x in self.v],
            "k": self.k,
            "gen": [[int(x) for x in row] for row in self.gen],
            "checks": dict(self.checks),
        }
        if self.family is not None:
            d["family"] = dict(self.family)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GrsCode":
        tower = FieldTower.from_dict(d["field"])
        ev = EvalSet.from_dict(tower, d["eval"])
        k = int(d["k"])
        gen = np.array(d["gen"], dtype=np.int64).reshape(k, ev.length)
        checks = {**_unknown_checks(), **d.get("checks", {})}
        return cls(tower, ev, np.array(d["v"], dtype=np.int64), k, gen, checks, d.get("family"))

    def code_id(self) -> str:
        """SHA-256 of the canonical JSON, ignoring the mutable check flags."""
        d = self.to_dict()
        d.pop("checks")
        blob = json.dumps(d, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def grs_generator(e: EvalSet, v, k: int) -> np.ndarray:
    t = e.tower
    v = np.asarray(v, dtype=np.int64)
    n = e.n_points
    gen = np.zeros((k, e.length), dtype=np.int64)
    if k:
        gen[:, :n] = t.mul(power_rows(t, e.array(), k), v[None, :n])
        if e.with_infinity:
            gen[k - 1, n] = v[n]
    return gen


def build_grs(e: EvalSet, v, k: int, family: dict | None = None) -> GrsCode:
    """``GRS_k`` on the evaluation set ``e`` with column multipliers ``v``.

    ``k == 0`` gives the zero code, which arises as the dual of a
    full-length code.
    """
    v = np.array(v, dtype=np.int64).ravel()
    if len(v) != e.length:
        raise ValueError(f"scaling vector has length {len(v)}, expected {e.length}")
    if np.any(v == 0):
        raise ValueError("scaling entries must be nonzero")
    if not 0 <= k <= e.length:
        raise ValueError(f"dimension {k} outside [0, {e.length}]")
    v.setflags(write=False)
    gen = grs_generator(e, v, k)
    gen.setflags(write=False)
    return GrsCode(e.tower, e, v, k, gen, family=family)


def encode(code: GrsCode, msg) -> np.ndarray:
    """Codeword ``(v_1 f(a_1), ..., v_n f(a_n)[, v_inf * f_{k-1}])``.

    Evaluates the message polynomial by Horner's rule rather than through
    the generator matrix.
    """
    t = code.tower
    msg = np.asarray(msg, dtype=np.int64).ravel()
    if len(msg) != code.k:
        raise ValueError(f"message has length {len(msg)}, expected {code.k}")
    pts = code.eval.array()
    acc = np.zeros(len(pts), dtype=np.int64)
    for coef in msg[::-1]:
        acc = t.add(t.mul(acc, pts), int(coef))
    word = t.mul(acc, code.v[: len(pts)])
    if code.eval.with_infinity:
        top = int(msg[-1]) if code.k else 0
        word = np.append(word, t.mul(top, int(code.v[-1])))
    return word


def encode_matrix(code: GrsCode, msg) -> np.ndarray:
    msg = np.asarray(msg, dtype=np.int64).ravel()
    if len(msg) != code.k:
        raise ValueError(f"message has length {len(msg)}, expected {code.k}")
    return vecmat(code.tower, msg, code.gen)


def euclidean_dual(code: GrsCode, dual=None) -> GrsCode:
    """``GRS_{n-k}(a, u)`` with ``u_i = c_i / v_i`` for the dual vector ``c``."""
    t = code.tower
    c = solve_dual(code.eval).array() if dual is None else np.asarray(dual, dtype=np.int64)
    u = t.div(c, code.v)
    return build_grs(code.eval, u, code.n - code.k)


def q_power_code(code: GrsCode) -> np.ndarray:
    """Generator of ``C^q``: Frobenius applied entrywise."""
    return code.tower.frobenius(code.gen)


def code_subset(t: FieldTower, a, b) -> bool:
    """Whether every row of ``a`` lies in the row space of ``b``."""
    a, b = as_mat(a), as_mat(b)
    if a.shape[1] != b.shape[1]:
        raise ValueError(f"length mismatch {a.shape[1]} vs {b.shape[1]}")
    if a.shape[0] == 0 or not np.any(a):
        return True
    return rank(t, np.vstack([b, a])) == rank(t, b)


def same_code(t: FieldTower, a, b) -> bool:
    """Row-space equality of two generator matrices of equal shape."""
    a, b = as_mat(a), as_mat(b)
    if a.shape != b.shape:
        return False
    if a.shape[0] == 0:
        return True
    return row_equivalent(t, a, b)
