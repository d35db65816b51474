"""Brute-force and combinatorial checks that back every certificate."""
from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .grs import FAIL, PASS, GrsCode, grs_generator
from .hermitian import hermitian_gram
from .linalg import batch_full_rank
from .vandermonde import EvalSet, solve_dual

ENUMERATE_GUARD = 1 << 24
SUBSET_GUARD = 10 ** 7
DEFAULT_SAMPLES = 10_000
NOT_COMPUTED = "not computed"
SAMPLED_PASS = "sampled-pass"

_MSG_CHUNK = 1 << 15
_SUBSET_CHUNK = 4096


class GuardExceeded(RuntimeError):
    """An exhaustive oracle was asked to do more work than its guard allows."""


def worker_count() -> int:
    n = int(os.environ.get("GRS_HERMES_THREADS", "0") or 0)
    return n if n > 0 else (os.cpu_count() or 1)


def min_distance_enumerate(code: GrsCode, guard: int = ENUMERATE_GUARD) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Weights are invariant under scaling, so only messages whose highest
    nonzero coefficient is 1 are visited: ``(N^k - 1)/(N - 1)`` of them.
    The guard still applies to the full count ``N^k``.
    """
    t = code.tower
    k, n = code.gen.shape
    N = t.order
    if N ** k > guard:
        raise GuardExceeded(f"{N ** k} messages exceed the enumeration guard {guard}")
    gen = code.gen
    best = n + 1
    for lead in range(k):
        total = N ** lead
        for start in range(0, total, _MSG_CHUNK):
            idx = np.arange(start, min(total, start + _MSG_CHUNK), dtype=np.int64)
            words = np.broadcast_to(gen[lead], (len(idx), n))
            for i in range(lead):
                digit = (idx // N ** i) % N
                words = t.add(words, t.mul(digit[:, None], gen[i][None, :]))
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


def _check_subsets(code: GrsCode, subsets: np.ndarray) -> bool:
    if len(subsets) == 0:
        return True
    chunks = [subsets[i:i + _SUBSET_CHUNK] for i in range(0, len(subsets), _SUBSET_CHUNK)]

    def run(chunk):
        mats = np.transpose(code.gen[:, chunk], (1, 0, 2))
        return bool(batch_full_rank(code.tower, mats).all())

    workers = min(worker_count(), len(chunks))
    if workers <= 1:
        return all(run(c) for c in chunks)
    with ThreadPoolExecutor(workers) as pool:
        return all(pool.map(run, chunks))


def sample_subsets(n: int, k: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.sort(np.argsort(rng.random((count, n)), axis=1)[:, :k], axis=1)


def mds_by_column_rank(
    code: GrsCode,
    mode: str = "exhaustive",
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    guard: int = SUBSET_GUARD,
) -> str:
    """Every ``k`` columns of the generator are independent.

    ``mode="exhaustive"`` returns ``"pass"`` or ``"fail"``.  ``"sampled"``
    checks ``samples`` seeded random subsets and can only return
    ``"sampled-pass"`` or ``"fail"``.
    """
    k, n = code.gen.shape
    if k == 0:
        return PASS if mode == "exhaustive" else SAMPLED_PASS
    if mode == "exhaustive":
        total = math.comb(n, k)
        if total > guard:
            raise GuardExceeded(f"C({n},{k}) = {total} subsets exceed the guard {guard}")
        combos = itertools.combinations(range(n), k)
        while True:
            block = np.array(list(itertools.islice(combos, 16 * _SUBSET_CHUNK)), dtype=np.int64)
            if block.size == 0:
                return PASS
            if not _check_subsets(code, block.reshape(-1, k)):
                return FAIL
    if mode == "sampled":
        ok = _check_subsets(code, sample_subsets(n, k, samples, seed))
        return SAMPLED_PASS if ok else FAIL
    raise ValueError(f"unknown MDS mode {mode!r}")


@dataclass
class Budget:
    """What ``verify_all`` may spend.

    ``mds`` is ``"auto"``, ``"exhaustive"``, ``"sampled"`` or ``None``.
    With ``"auto"`` the strongest affordable oracle is chosen: enumeration,
    then exhaustive column ranks, then sampling.
    """

    enumerate: bool = True
    mds: str | None = "auto"
    samples: int = DEFAULT_SAMPLES
    seed: int = 0
    enumerate_guard: int = ENUMERATE_GUARD
    subset_guard: int = SUBSET_GUARD

    @classmethod
    def none(cls) -> "Budget":
        return cls(enumerate=False, mds=None)


@dataclass
class VerifyReport:
    code_id: str
    q: int
    n: int
    k: int
    min_distance: int | str
    mds: str
    hermitian: str
    hermitian_pairs: int
    rational_dual: str
    grs_structure: str
    method: str
    sample_count: int
    seed: int
    elapsed: float

    @property
    def passed(self) -> bool:
        return (
            self.hermitian == PASS
            and self.rational_dual == PASS
            and self.grs_structure == PASS
            and self.mds in (PASS, SAMPLED_PASS, NOT_COMPUTED)
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyReport":
        return cls(**d)


def _rational_dual_status(code: GrsCode) -> str:
    """Every block of the evaluation set has an F_q-rational dual vector.

    Coset-family codes are checked block by block; everything else as a
    single block.
    """
    ev = code.eval
    fam = code.family or {}
    sizes = fam.get("blocks") if fam.get("family") == "coset" else None
    if not sizes or sum(sizes) != ev.n_points or ev.with_infinity:
        sizes = [ev.n_points]
    start = 0
    for nj in sizes:
        block = ev if len(sizes) == 1 else EvalSet(ev.tower, ev.points[start:start + nj])
        if not solve_dual(block).rational:
            return FAIL
        start += nj
    return PASS


def verify_all(code: GrsCode, budget: Budget | None = None) -> VerifyReport:
    """Run every affordable check; failures become report entries."""
    budget = Budget() if budget is None else budget
    start = time.perf_counter()
    k, n = code.k, code.n

    gram = hermitian_gram(code.tower, code.gen) if k else np.zeros((0, 0))
    hermitian = FAIL if np.any(gram) else PASS
    structure = PASS if np.array_equal(grs_generator(code.eval, code.v, k), code.gen) else FAIL

    d: int | str = NOT_COMPUTED
    mds, method, count = NOT_COMPUTED, "none", 0
    mode = budget.mds
    if budget.enumerate and k and code.tower.order ** k <= budget.enumerate_guard:
        d = min_distance_enumerate(code, budget.enumerate_guard)
        method = "enumeration"
        mds = PASS if d == n - k + 1 else FAIL
        mode = None
    if mode == "auto":
        mode = "exhaustive" if math.comb(n, k) <= budget.subset_guard else "sampled"
    if mode is not None:
        mds = mds_by_column_rank(code, mode, budget.samples, budget.seed, budget.subset_guard)
        count = budget.samples if mode == "sampled" else math.comb(n, k)
        method = "column-rank" if mode == "exhaustive" else "sampled"

    return VerifyReport(
        code_id=code.code_id(),
        q=code.q,
        n=n,
        k=k,
        min_distance=d,
        mds=mds,
        hermitian=hermitian,
        hermitian_pairs=k * (k + 1) // 2,
        rational_dual=_rational_dual_status(code),
        grs_structure=structure,
        method=method,
        sample_count=count,
        seed=budget.seed,
        elapsed=time.perf_counter() - start,
    )


def apply_report(code: GrsCode, report: VerifyReport) -> GrsCode:
    """Copy of ``code`` with its check flags taken from ``report``.

    A sampled MDS result is recorded as ``"sampled-pass"``, never ``"pass"``.
    """
    mds = {PASS: PASS, SAMPLED_PASS: SAMPLED_PASS, FAIL: FAIL}.get(report.mds, "unknown")
    return code.with_checks(
        hermitian_ok=report.hermitian, mds_ok=mds, rational_dual_ok=report.rational_dual
    )
