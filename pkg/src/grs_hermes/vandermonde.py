"""Vandermonde-type systems ``A x^T = 0`` and their F_q-rational solutions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .field import FieldTower
from .linalg import nullspace, row_equivalent


@dataclass(frozen=True)
class EvalSet:
    """Ordered distinct evaluation points, optionally with a point at infinity."""

    tower: FieldTower
    points: tuple[int, ...]
    with_infinity: bool = False

    def __post_init__(self):
        pts = tuple(int(x) for x in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("an evaluation set needs at least two points")
        if len(set(pts)) != len(pts):
            raise ValueError("evaluation points must be distinct")
        if any(x < 0 or x >= self.tower.order for x in pts):
            raise ValueError("evaluation point outside the field")

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def length(self) -> int:
        """Code length: the finite points plus one for infinity."""
        return len(self.points) + int(self.with_infinity)

    def array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64)

    def to_dict(self) -> dict:
        return {"points": list(self.points), "infinity": self.with_infinity}

    @classmethod
    def from_dict(cls, tower: FieldTower, d: dict) -> "EvalSet":
        return cls(tower, tuple(d["points"]), bool(d.get("infinity", False)))


@dataclass(frozen=True)
class DualVector:
    c: tuple[int, ...]
    rational: bool

    def array(self) -> np.ndarray:
        return np.array(self.c, dtype=np.int64)


def power_rows(t: FieldTower, pts, count: int) -> np.ndarray:
    """Rows ``pts**i`` for ``i = 0 .. count-1`` (with ``0**0 == 1``)."""
    pts = np.asarray(pts, dtype=np.int64)
    return np.array([t.power(pts, i) for i in range(count)], dtype=np.int64).reshape(
        count, len(pts)
    )


def matrix_A(e: EvalSet) -> np.ndarray:
    """The ``(n-1) x n`` matrix of powers ``0 .. n-2`` of the points."""
    if e.with_infinity:
        raise ValueError("matrix_A is for evaluation sets without infinity")
    return power_rows(e.tower, e.array(), e.n_points - 1)


def matrix_A_inf(e: EvalSet) -> np.ndarray:
    """The ``n x (n+1)`` matrix with an extra column for the point at infinity."""
    if not e.with_infinity:
        raise ValueError("matrix_A_inf needs an evaluation set with infinity")
    n = e.n_points
    out = np.zeros((n, n + 1), dtype=np.int64)
    out[:, :n] = power_rows(e.tower, e.array(), n)
    out[n - 1, n] = 1
    return out


def system_matrix(e: EvalSet) -> np.ndarray:
    return matrix_A_inf(e) if e.with_infinity else matrix_A(e)


@lru_cache(maxsize=64)
def solve_dual(e: EvalSet) -> DualVector:
    """Generator of the one-dimensional solution space of the system.

    The returned vector has first coordinate 1.  Because every solution has
    all coordinates nonzero, a scalar multiple lies in GF(q)^n exactly when
    this representative does, so ``rational`` needs no further rescaling.
    """
    t = e.tower
    basis = nullspace(t, system_matrix(e))
    if basis.shape[0] != 1:
        raise AssertionError(f"solution space has dimension {basis.shape[0]}, expected 1")
    c = basis[0]
    if np.any(c == 0):
        raise AssertionError("dual vector has a zero coordinate")
    return DualVector(tuple(int(x) for x in c), bool(np.all(c < t.q)))


def rationality_by_rowspace(e: EvalSet) -> bool:
    """Row-space criterion: ``A`` and its entrywise q-th power are row equivalent."""
    a = system_matrix(e)
    return row_equivalent(e.tower, a, e.tower.frobenius(a))


def conjugate_in_span(e: EvalSet, c) -> bool:
    """Whether the coordinatewise q-th power of ``c`` is a multiple of ``c``.

    This is the solution-space form of the rationality criterion: the
    conjugate of a solution must again be a solution.
    """
    t = e.tower
    c = np.asarray(c, dtype=np.int64)
    cq = t.frobenius(c)
    lam = t.div(int(cq[0]), int(c[0]))
    return bool(np.array_equal(t.mul(c, lam), cq))


def roots_of_unity(t: FieldTower, m: int, with_zero: bool = False) -> tuple[int, ...]:
    """The ``m``-th roots of unity ``g**((q^2-1)/m * i)``, ``i = 0..m-1``.

    With ``with_zero`` the point 0 is prepended.
    """
    n1 = t.order - 1
    if m < 1 or n1 % m:
        raise ValueError(f"{m} does not divide q^2 - 1 = {n1}")
    pts = tuple(int(x) for x in np.atleast_1d(t.antilog((n1 // m) * np.arange(m))))
    return (0,) + pts if with_zero else pts


def all_points(t: FieldTower, with_infinity: bool = False) -> EvalSet:
    """Every element of GF(q^2): zero followed by the powers of the generator."""
    return EvalSet(t, roots_of_unity(t, t.order - 1, with_zero=True), with_infinity)


def translate(t: FieldTower, beta: int, pts) -> EvalSet:
    """The points ``beta + a`` for ``a`` in ``pts``."""
    return EvalSet(t, tuple(int(x) for x in t.add(beta, np.asarray(pts, dtype=np.int64))))
