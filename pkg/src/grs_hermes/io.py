"""JSON files for codes and verification reports."""
from __future__ import annotations

import json
from pathlib import Path

from .grs import GrsCode
from .oracle import VerifyReport


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": ")) + "\n"


def save_code(code: GrsCode, path) -> Path:
    path = Path(path)
    path.write_text(_dump(code.to_dict()))
    return path


def load_code(path) -> GrsCode:
    return GrsCode.from_dict(json.loads(Path(path).read_text()))


def report_path(code_path) -> Path:
    """``codes/x.json`` -> ``codes/x.report.json``."""
    p = Path(code_path)
    return p.with_name(p.stem + ".report.json")


def save_report(report: VerifyReport, path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(report.to_dict(), indent=1) + "\n")
    return path


def load_report(path) -> VerifyReport:
    return VerifyReport.from_dict(json.loads(Path(path).read_text()))
