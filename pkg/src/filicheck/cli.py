"""Command-line interface.

    filicheck analyze --builtin L6
    filicheck search --builtin g6_2 --mode bi --json
    filicheck verify-catalog

Exit statuses: 0 success/decided, 1 catalog mismatch, 2 parse or input
error, 3 invalid algebra, 4 undecided search, 5 odd dimension.
"""

from __future__ import annotations

import argparse
import os
import sys

from .algebra import InvalidAlgebraError, LieAlgebra, validate
from .catalog import builtin, verify_catalog
from .fileformat import AlgebraFormatError, parse
from .nilpotent import characteristic_sequence, is_filiform, lower_central_series
from .numeric import DEFAULT_TOL, numeric_invariant_search
from .reporting import base_report, jsonable, to_json, write_report_dir
from .structures import (
    DEFAULT_SEED,
    Status,
    bi_invariant_pairing_obstruction,
    filiform_obstruction,
    solve_bi_invariant,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_UNKNOWN = 4
EXIT_ODD_DIM = 5


class InputError(Exception):
    """Unusable input: unknown builtin key or unreadable file."""


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("FILICHECK_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"FILICHECK_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _load_input(args, check_jacobi: bool) -> tuple[LieAlgebra, str, str]:
    if args.builtin:
        try:
            entry = builtin(args.builtin)
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
        return entry.algebra, "builtin", args.builtin
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return parse(text, check_jacobi=check_jacobi), "file", args.file


def _emit(report: dict, args, out) -> None:
    if args.report_dir:
        write_report_dir(report, args.report_dir)
    if args.json:
        out.write(to_json(report))
    else:
        _render_text(report, out)


def _render_text(report: dict, out) -> None:
    results = report["results"]
    inp = report["input"]
    out.write(f"filicheck {report['command']}: {inp['name']} ({inp['kind']})\n")
    if report["command"] == "analyze":
        out.write(f"  dim {results['dim']} over {results['field']}\n")
        out.write(f"  valid: {_yn(results['valid'])}\n")
        if not results["valid"]:
            out.write(f"  antisymmetry violations: {results['antisymmetry_violations']}\n")
            out.write(f"  jacobi violations: {results['jacobi_violations']}\n")
            return
        out.write(f"  series dims: {' '.join(str(d) for d in results['series_dims'])}\n")
        out.write(f"  nilpotent: {_yn(results['nilpotent'])}\n")
        out.write(f"  filiform: {_yn(results['filiform'])}\n")
        seq = results["characteristic_sequence"]
        if seq is not None:
            out.write(f"  characteristic sequence: ({', '.join(str(p) for p in seq)})\n")
            out.write(f"  characteristic vector: {' '.join(results['characteristic_vector'])}\n")
    elif report["command"] == "search":
        out.write(f"  mode: {results['mode']}\n")
        if "error" in results:
            out.write(f"  error: {results['error']}\n")
            return
        for ob in results["obstructions"]:
            out.write(f"  obstruction {ob['name']}: {ob['status']}\n")
        cert = results.get("certificate")
        out.write(f"  verdict: {results['status']}" + (f" ({cert})\n" if cert else "\n"))
        for block in (results.get("evidence") or {}, results.get("corroboration") or {}):
            if "min_residual" in block:
                out.write(f"  residual floor: {block['min_residual']:.6e} over "
                          f"{block['restarts']} restarts (tol {block['tol']:g})\n")
        if results.get("witness"):
            out.write("  witness:\n")
            for row in results["witness"]:
                out.write("    " + " ".join(row) + "\n")
    elif report["command"] == "verify-catalog":
        for entry in results["entries"]:
            if entry["match"]:
                out.write(f"  {entry['key']}: ok\n")
            else:
                out.write(f"  {entry['key']}: MISMATCH\n")
                for diff in entry["diffs"]:
                    out.write(
                        f"    {diff['property']}: expected {diff['expected']}"
                        f" computed {diff['computed']}\n"
                    )
        out.write(f"  all entries match: {_yn(results['all_match'])}\n")


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_analyze(args, out) -> int:
    alg, kind, name = _load_input(args, check_jacobi=False)
    seed = _resolve_seed(args.seed)
    report = base_report("analyze", kind, name, seed)
    results = report["results"]
    results["dim"] = alg.dim
    results["field"] = alg.field
    vr = validate(alg)
    results["valid"] = vr.ok
    if not vr.ok:
        results["antisymmetry_violations"] = jsonable(vr.antisymmetry_violations)
        results["jacobi_violations"] = jsonable(vr.jacobi_violations)
        _emit(report, args, out)
        return EXIT_INVALID
    series = lower_central_series(alg)
    results["series_dims"] = list(series.dims)
    results["nilpotent"] = series.reaches_zero
    results["filiform"] = is_filiform(alg)
    if series.reaches_zero:
        seq, witness = characteristic_sequence(alg)
        results["characteristic_sequence"] = list(seq)
        results["characteristic_vector"] = jsonable(list(witness))
    else:
        results["characteristic_sequence"] = None
        results["characteristic_vector"] = None
    _emit(report, args, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    alg, kind, name = _load_input(args, check_jacobi=True)
    seed = _resolve_seed(args.seed)
    report = base_report("search", kind, name, seed)
    results = report["results"]
    results["mode"] = args.mode
    if alg.dim % 2 != 0:
        results["error"] = f"odd dimension {alg.dim}"
        _emit(report, args, out)
        return EXIT_ODD_DIM

    obstructions = []
    nilpotent = lower_central_series(alg).reaches_zero
    if nilpotent and args.mode == "bi":
        ob = bi_invariant_pairing_obstruction(alg)
        obstructions.append({"name": "pairing", "status": ob.status.value,
                             "evidence": jsonable(ob.evidence)})
    ob = filiform_obstruction(alg)
    obstructions.append({"name": "filiform", "status": ob.status.value})
    results["obstructions"] = obstructions

    if args.mode == "bi":
        verdict = solve_bi_invariant(alg, seed=seed)
    elif ob.status is Status.NOT_EXISTS:
        verdict = ob  # the filiform theorem covers invariant structures
    else:
        verdict = numeric_invariant_search(alg, restarts=args.restarts, tol=args.tol, seed=seed)

    results["status"] = verdict.status.value
    results["certificate"] = verdict.certificate.value if verdict.certificate else None
    results["witness"] = jsonable(verdict.witness) if verdict.witness else None
    results["evidence"] = jsonable(verdict.evidence)
    if args.corroborate and "residuals" not in verdict.evidence:
        floor = numeric_invariant_search(alg, restarts=args.restarts, tol=args.tol, seed=seed)
        results["corroboration"] = jsonable(floor.evidence)
    _emit(report, args, out)
    return EXIT_OK if verdict.status is not Status.UNKNOWN else EXIT_UNKNOWN


def cmd_verify_catalog(args, out) -> int:
    seed = _resolve_seed(args.seed)
    report = base_report("verify-catalog", "catalog", "builtins", seed)
    entries, all_match = verify_catalog(seed)
    report["results"]["entries"] = jsonable(entries)
    report["results"]["all_match"] = all_match
    _emit(report, args, out)
    return EXIT_OK if all_match else EXIT_MISMATCH


def _add_input_flags(sp) -> None:
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--builtin", metavar="KEY", help="builtin catalog key (e.g. L6, g6_2)")
    group.add_argument("--file", metavar="PATH", help="algebra file in the text format")


def _add_common_flags(sp) -> None:
    sp.add_argument("--json", action="store_true", help="emit the structured report")
    sp.add_argument("--seed", type=int, default=None,
                    help="seed (default: FILICHECK_SEED or a fixed constant)")
    sp.add_argument("--report-dir", metavar="DIR", default=None,
                    help="write report.csv, report.json and figures into DIR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filicheck",
        description="exact analysis of invariant and bi-invariant complex structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="series, filiform flag, characteristic sequence")
    _add_input_flags(sp)
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("search", help="decide existence of a complex structure")
    _add_input_flags(sp)
    _add_common_flags(sp)
    sp.add_argument("--mode", choices=["bi", "invariant"], default="bi")
    sp.add_argument("--restarts", type=int, default=60)
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL)
    sp.add_argument("--corroborate", action="store_true",
                    help="also run the numeric minimizer and record its residual floor")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify-catalog", help="recompute every catalog entry's expected map")
    _add_common_flags(sp)
    sp.set_defaults(func=cmd_verify_catalog)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except AlgebraFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidAlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
