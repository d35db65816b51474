"""Quantum MDS parameters from Hermitian self-orthogonal MDS codes.

A Hermitian self-orthogonal ``[n, k, n-k+1]`` code over GF(q^2) yields a
q-ary ``[[n, n-2k, k+1]]`` stabilizer code.
"""
from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .field import prime_power
from .grs import PASS, GrsCode
from .hermitian import r_values
from .oracle import SAMPLED_PASS, VerifyReport

CSV_COLUMNS = ("q", "n", "kq", "d", "family", "r", "k", "certified", "mds_mode", "code_file")


@dataclass(frozen=True)
class QuantumParams:
    q: int
    n: int
    kq: int
    d: int
    source: dict = field(default_factory=dict)
    certified: bool = False
    mds_mode: str = "none"

    def label(self) -> str:
        return f"[[{self.n},{self.kq},{self.d}]]_{self.q}"

    def to_dict(self) -> dict:
        return asdict(self)


def singleton_check(p: QuantumParams) -> bool:
    """Quantum Singleton bound met with equality: ``kq == n - 2d + 2``."""
    return p.kq == p.n - 2 * p.d + 2


def derive_quantum(code: GrsCode, report: VerifyReport) -> QuantumParams:
    if report.code_id != code.code_id():
        raise ValueError("verification report belongs to a different code")
    mds_ok = report.mds in (PASS, SAMPLED_PASS)
    certified = (
        report.hermitian == PASS
        and mds_ok
        and report.rational_dual == PASS
        and report.grs_structure == PASS
    )
    return QuantumParams(
        q=code.q,
        n=code.n,
        kq=code.n - 2 * code.k,
        d=code.k + 1,
        source=dict(code.family or {}),
        certified=certified,
        mds_mode=report.mds if mds_ok else "none",
    )


@dataclass
class CatalogRow:
    q: int
    n: int
    kq: int
    d: int
    family: str
    r: int | None
    k: int
    certified: bool = False
    mds_mode: str = ""
    code_file: str = ""
    note: str = ""

    def params(self) -> QuantumParams:
        return QuantumParams(self.q, self.n, self.kq, self.d,
                             {"family": self.family, "r": self.r, "k": self.k},
                             self.certified, self.mds_mode or "none")

    def family_request(self) -> dict:
        return {"family": self.family, "q": self.q, "k": self.k, "r": self.r, "blocks": None}


def catalog(q_list) -> list[CatalogRow]:
    """Every quantum MDS parameter set the constructions give for each ``q``.

    Rows: length ``q^2 + 1`` with ``d <= q + 1``; length ``r(q-1) + 1`` with
    ``d <= (q + r + 1)/2`` for each admissible ``r < q + 1``; length ``q^2``
    with ``d <= q`` (the ``r = q + 1`` case).
    """
    rows = []
    for q in q_list:
        prime_power(q)
        n = q * q + 1
        for k in range(1, q + 1):
            rows.append(CatalogRow(q, n, n - 2 * k, k + 1, "q2plus1", None, k))
        for r in r_values(q):
            n = r * (q - 1) + 1
            note = "length (q^2+2)/3" if 3 * r == q + 1 else ""
            for k in range(1, (q - 1 + r) // 2 + 1):
                rows.append(CatalogRow(q, n, n - 2 * k, k + 1, "r_family", r, k, note=note))
        n = q * q
        for k in range(1, q):
            rows.append(CatalogRow(q, n, n - 2 * k, k + 1, "q2", None, k,
                                   note="r = q+1 case"))
    return rows


def write_catalog(rows: list[CatalogRow], out_dir) -> list[Path]:
    """One JSON file per q plus a merged ``catalog.csv``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for q in sorted({r.q for r in rows}):
        path = out / f"catalog_q{q}.json"
        data = [asdict(r) for r in rows if r.q == q]
        path.write_text(json.dumps(data, indent=1) + "\n")
        written.append(path)
    path = out / "catalog.csv"
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([r.q, r.n, r.kq, r.d, r.family, "" if r.r is None else r.r, r.k,
                        str(r.certified).lower(), r.mds_mode, r.code_file])
    written.append(path)
    return written
