"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .field import tower_for
from .hermitian import FamilyError, FamilyParams, construct_family
from .io import load_code, load_report, report_path, save_code, save_report
from .oracle import Budget, GuardExceeded, apply_report, verify_all
from .quantum import catalog, derive_quantum, singleton_check, write_catalog

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _mds_mode(text: str):
    if text in ("auto", "exhaustive", "none"):
        return text, None
    if text.startswith("sampled"):
        _, _, n = text.partition(":")
        try:
            return "sampled", int(n) if n else None
        except ValueError:
            pass
    raise argparse.ArgumentTypeError("use auto, exhaustive, none or sampled:N")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grs-hermes",
        description="Hermitian self-orthogonal GRS codes and quantum MDS parameters.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="print the field tower for GF(q) < GF(q^2)")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("construct", help="build a family code and write it as JSON")
    p.add_argument("--family", choices=["q2", "coset", "q2plus1", "r_family"])
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--blocks", type=_int_list)
    p.add_argument("--request", type=Path, help="JSON request record instead of flags")
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("verify", help="verify a code file and write its report")
    p.add_argument("file", type=Path)
    p.add_argument("--mds", type=_mds_mode, default=("auto", None),
                   help="auto (default), exhaustive, sampled:N or none")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-enumerate", action="store_true",
                   help="skip brute-force minimum distance")

    p = sub.add_parser("quantum", help="print the quantum parameters of a code file")
    p.add_argument("file", type=Path)

    p = sub.add_parser("catalog", help="write the parameter catalog")
    p.add_argument("--q-list", type=_int_list, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--certify", action="store_true",
                   help="construct and verify every row, writing code files")
    p.add_argument("--samples", type=int, default=1000,
                   help="sample count when certifying needs sampled MDS")
    p.add_argument("--seed", type=int, default=0)
    return ap


def _params_from_args(args) -> FamilyParams:
    if args.request is not None:
        try:
            params = FamilyParams.from_dict(json.loads(args.request.read_text()))
        except (OSError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"bad request file: {exc}")
    else:
        missing = [f for f in ("family", "q", "k") if getattr(args, f) is None]
        if missing:
            raise UsageError("missing " + ", ".join("--" + m for m in missing))
        blocks = tuple(args.blocks) if args.blocks else None
        params = FamilyParams(args.family, args.q, args.k, args.r, blocks)
    if params.family == "r_family" and params.r == params.q + 1:
        print("note: r = q + 1 is the length q^2 family; using family q2", file=sys.stderr)
        params = FamilyParams("q2", params.q, params.k)
    return params


def cmd_field_info(args) -> int:
    try:
        t = tower_for(args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    info = {"q": t.q, "q2": t.order, **t.to_dict()}
    print(json.dumps(info))
    return EXIT_OK


def cmd_construct(args) -> int:
    params = _params_from_args(args)
    try:
        code = construct_family(params)
    except FamilyError as exc:
        raise UsageError(str(exc))
    save_code(code, args.out)
    print(f"wrote [{code.n},{code.k}] code over GF({code.tower.order}) to {args.out}")
    return EXIT_OK


def _budget(mode: str, samples, seed: int, enumerate_: bool) -> Budget:
    b = Budget(enumerate=enumerate_, mds=None if mode == "none" else mode, seed=seed)
    if mode == "exhaustive":
        b.enumerate = False
    if samples is not None:
        b.samples = samples
    return b


def _print_report(rep) -> None:
    rows = [
        ("code", f"[{rep.n},{rep.k}] over GF({rep.q * rep.q})"),
        ("hermitian", f"{rep.hermitian} ({rep.hermitian_pairs} pairs)"),
        ("rational dual", rep.rational_dual),
        ("grs structure", rep.grs_structure),
        ("mds", f"{rep.mds} via {rep.method}"
         + (f", {rep.sample_count} subsets" if rep.sample_count else "")),
        ("min distance", str(rep.min_distance)),
        ("elapsed", f"{rep.elapsed:.3f}s"),
    ]
    for key, val in rows:
        print(f"  {key:<14}{val}")


def cmd_verify(args) -> int:
    code = _load(args.file)
    mode, samples = args.mds
    budget = _budget(mode, samples, args.seed, not args.no_enumerate)
    try:
        rep = verify_all(code, budget)
    except GuardExceeded as exc:
        print(f"error: {exc}; try --mds sampled:10000", file=sys.stderr)
        return EXIT_GUARD
    out = save_report(rep, report_path(args.file))
    _print_report(rep)
    print(f"report written to {out}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def _load(path: Path):
    try:
        return load_code(path)
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read code file {path}: {exc}")


def cmd_quantum(args) -> int:
    code = _load(args.file)
    rpath = report_path(args.file)
    rep = load_report(rpath) if rpath.exists() else None
    if rep is None or rep.code_id != code.code_id():
        try:
            rep = verify_all(code)
        except GuardExceeded as exc:
            print(f"error: {exc}; run verify with --mds sampled:N first", file=sys.stderr)
            return EXIT_GUARD
    qp = derive_quantum(code, rep)
    print(qp.label())
    status = "certified" if qp.certified else "NOT certified"
    flag = " (sampled)" if qp.mds_mode == "sampled-pass" else ""
    print(f"{status}{flag}; singleton {'met' if singleton_check(qp) else 'violated'}",
          file=sys.stderr)
    return EXIT_OK if qp.certified else EXIT_FAIL


def cmd_catalog(args) -> int:
    try:
        rows = catalog(args.q_list)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.certify:
        codes = args.out / "codes"
        codes.mkdir(parents=True, exist_ok=True)
        for row in rows:
            try:
                code = construct_family(FamilyParams.from_dict(row.family_request()))
            except FamilyError as exc:
                row.mds_mode = "none"
                row.note = f"no construction: {exc}"
                continue
            rep = verify_all(code, Budget(samples=args.samples, seed=args.seed))
            stem = f"{row.family}_q{row.q}" + (f"_r{row.r}" if row.r else "") + f"_k{row.k}"
            path = save_code(apply_report(code, rep), codes / f"{stem}.json")
            save_report(rep, report_path(path))
            qp = derive_quantum(code, rep)
            row.certified = qp.certified
            row.mds_mode = rep.mds
            row.code_file = str(path.relative_to(args.out))
    for path in write_catalog(rows, args.out):
        print(f"wrote {path}")
    return EXIT_OK


COMMANDS = {
    "field-info": cmd_field_info,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "quantum": cmd_quantum,
    "catalog": cmd_catalog,
}


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
