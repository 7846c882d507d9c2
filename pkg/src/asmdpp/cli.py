"""Command-line front end.

Subcommands:

  enumerate  stream one family in canonical order (json or text lines)
  genfunc    print a generating function (determinant or brute force)
  table      CSV of per-(p, m, k) counts for both families
  verify     run the named verification suites (exit 1 on any failure)
  matrix     dump one of the named matrices as JSON term lists

Exit codes: 0 success, 1 verification failure, 2 usage error.  The
environment variable ASMDPP_MAX_N caps the order accepted by the
enumeration-backed commands.  Outputs are byte-deterministic given the
command line and seed; verify prints timing only to stderr (text) or
under --timings (json).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path
from typing import Iterator

from . import verify as verify_mod
from .asm import asm_from_json, asm_row_word, asm_to_json, enumerate_asms, z_asm_brute
from .dpp import dpp_from_json, dpp_to_json, enumerate_dpps, z_dpp_brute
from .errors import AsmDppError
from .limits import MAX_N_ENV_VAR
from .linalg import det_poly
from .matrices import FAMILY_NAMES, build, matrix_to_json
from .paths import enumerate_nilp_families, nilp_from_json, nilp_to_json
from .polynomial import poly_str
from .sixvertex import config_from_json, config_to_json, enumerate_configs

KINDS = ("asm", "dpp", "sixvertex", "nilp")
GENFUNC_METHODS = ("det", "brute-asm", "brute-dpp", "det-w")


def _env_cap() -> int | None:
    raw = os.environ.get(MAX_N_ENV_VAR)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise AsmDppError(f"{MAX_N_ENV_VAR} must be an integer, got {raw!r}")


def _check_cap(n: int) -> None:
    cap = _env_cap()
    if cap is not None and n > cap:
        raise AsmDppError(f"order {n} exceeds {MAX_N_ENV_VAR}={cap}")


def _json_objects(kind: str, n: int) -> Iterator[object]:
    if kind == "asm":
        return (asm_to_json(a) for a in enumerate_asms(n))
    if kind == "dpp":
        return (dpp_to_json(d) for d in enumerate_dpps(n))
    if kind == "sixvertex":
        return (config_to_json(c) for c in enumerate_configs(n))
    if kind == "nilp":
        return (nilp_to_json(p) for p in enumerate_nilp_families(n))
    raise AsmDppError(f"unknown kind {kind!r}")


def _text_of(kind: str, obj: object) -> str:
    if kind == "asm":
        return asm_row_word(asm_from_json(obj))
    if kind == "dpp":
        rows = dpp_from_json(obj).rows
        return " / ".join(" ".join(str(p) for p in row) for row in rows) if rows else "empty"
    if kind == "sixvertex":
        return " / ".join(" ".join(row) for row in config_from_json(obj).types)
    if kind == "nilp":
        fam = nilp_from_json(obj)
        return " / ".join("".join(p.steps) or "-" for p in fam.paths)
    raise AsmDppError(f"unknown kind {kind!r}")


def _cached_json_lines(kind: str, n: int, cache_dir: str) -> Iterator[object]:
    path = Path(cache_dir) / f"{kind}_n{n}.ndjson"
    if path.exists():
        with path.open() as fh:
            for line in fh:
                if line.strip():
                    yield json.loads(line)
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w") as fh:
        for obj in _json_objects(kind, n):
            fh.write(json.dumps(obj, separators=(",", ":")) + "\n")
            yield obj


def cmd_enumerate(args: argparse.Namespace, out) -> int:
    _check_cap(args.n)
    objects = (
        _cached_json_lines(args.kind, args.n, args.cache)
        if args.cache
        else _json_objects(args.kind, args.n)
    )
    emitted = 0
    for obj in objects:
        if args.limit is not None and emitted >= args.limit:
            break
        if args.format == "json":
            out.write(json.dumps(obj, separators=(",", ":")) + "\n")
        else:
            out.write(_text_of(args.kind, obj) + "\n")
        emitted += 1
    return 0


def cmd_genfunc(args: argparse.Namespace, out) -> int:
    _check_cap(args.n)
    if args.method == "det":
        poly = det_poly(build("M_BAR", args.n))
    elif args.method == "det-w":
        poly = det_poly(build("M_BAR_W", args.n))
    elif args.method == "brute-asm":
        poly = z_asm_brute(args.n)
    else:
        poly = z_dpp_brute(args.n)
    if args.format == "json":
        doc = {
            "n": args.n,
            "method": args.method,
            "vars": ["x", "y", "z", "w", "q"],
            "terms": poly.to_term_list(),
        }
        out.write(json.dumps(doc, separators=(",", ":")) + "\n")
    else:
        out.write(poly_str(poly) + "\n")
    return 0


def cmd_table(args: argparse.Namespace, out) -> int:
    _check_cap(args.n)
    from .asm import asm_stats
    from .dpp import dpp_stats

    asm_cells: dict = {}
    for a in enumerate_asms(args.n):
        s = asm_stats(a)
        key = (s.nu, s.mu, s.rho)
        asm_cells[key] = asm_cells.get(key, 0) + 1
    dpp_cells: dict = {}
    for d in enumerate_dpps(args.n):
        s = dpp_stats(d, args.n)
        key = (s.nu, s.mu, s.rho)
        dpp_cells[key] = dpp_cells.get(key, 0) + 1
    out.write("p,m,k,asm_count,dpp_count,equal\n")
    for key in sorted(set(asm_cells) | set(dpp_cells)):
        ac = asm_cells.get(key, 0)
        dc = dpp_cells.get(key, 0)
        flag = "true" if ac == dc else "false"
        out.write(f"{key[0]},{key[1]},{key[2]},{ac},{dc},{flag}\n")
    return 0


def cmd_verify(args: argparse.Namespace, out) -> int:
    cap = _env_cap()
    max_n = args.max_n
    if cap is not None:
        max_n = cap if max_n is None else min(max_n, cap)
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in verify_mod.SUITES:
        raise AsmDppError(
            f"unknown suite {args.suite!r}; choose from {sorted(verify_mod.SUITES)} or 'all'"
        )
    started = time.perf_counter()
    reports = [verify_mod.run_suite(name, max_n, args.seed) for name in names]
    all_passed = all(r.passed for r in reports)
    if args.format == "json":
        doc = {
            "passed": all_passed,
            "seed": args.seed,
            "suites": [r.to_json(timings=args.timings) for r in reports],
        }
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        for r in reports:
            for line in r.text_lines():
                out.write(line + "\n")
        total = sum(len(r.checks) for r in reports)
        failed = sum(1 for r in reports for c in r.checks if not c.passed)
        out.write(f"{'FAIL' if failed else 'OK'}: {total - failed}/{total} checks passed\n")
    print(
        f"verify finished in {time.perf_counter() - started:.2f}s",
        file=sys.stderr,
    )
    if not all_passed:
        failing = [
            f"{r.suite}.{c.name} {c.params}"
            for r in reports
            for c in r.checks
            if not c.passed
        ]
        print("failing checks: " + "; ".join(failing), file=sys.stderr)
    return 0 if all_passed else 1


def cmd_matrix(args: argparse.Namespace, out) -> int:
    m = build(args.name, args.n, refined=not args.unrefined)
    doc = {
        "name": args.name,
        "n": args.n,
        "refined": not args.unrefined,
        "vars": ["x", "y", "z", "w", "q"],
        "entries": matrix_to_json(m),
    }
    out.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="asmdpp",
        description="Exact enumeration and determinant identities for "
        "alternating sign matrices and descending plane partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="stream one family in canonical order")
    p_enum.add_argument("--kind", choices=KINDS, required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--format", choices=("json", "text"), default="json")
    p_enum.add_argument("--limit", type=int, default=None)
    p_enum.add_argument("--output", default=None)
    p_enum.add_argument("--cache", default=None, help="directory for ndjson caches")
    p_enum.set_defaults(fn=cmd_enumerate)

    p_gen = sub.add_parser("genfunc", help="print a generating function")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--method", choices=GENFUNC_METHODS, default="det")
    p_gen.add_argument("--format", choices=("text", "json"), default="text")
    p_gen.add_argument("--output", default=None)
    p_gen.set_defaults(fn=cmd_genfunc)

    p_table = sub.add_parser("table", help="per-(p,m,k) counts as CSV")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--output", default=None)
    p_table.set_defaults(fn=cmd_table)

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", default="all")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--timings", action="store_true")
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(fn=cmd_verify)

    p_matrix = sub.add_parser("matrix", help="dump a named matrix as JSON")
    p_matrix.add_argument("--name", choices=FAMILY_NAMES, required=True)
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument("--unrefined", action="store_true")
    p_matrix.add_argument("--output", default=None)
    p_matrix.set_defaults(fn=cmd_matrix)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be at least 1")
    try:
        if args.output:
            with open(args.output, "w") as out:
                return args.fn(args, out)
        return args.fn(args, sys.stdout)
    except AsmDppError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
