"""Command-line front end.

Exit codes: 0 success, 1 a verification or agreement check failed, 2 usage
error (bad tuple, bad parameters, unsupported method).  Every report carries
the run configuration it was produced with.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field

from .bounds import (
    SINGLE_ERROR_MIN_DISTANCE,
    gv_lower,
    greedy_code,
    perfect_code_lower,
    sphere_packing_upper,
    verify_code,
)
from .core import (
    check_divides,
    check_regular,
    format_sequence,
    identity_multipermutation,
    infer_regularity,
    is_permutation,
    parse_sequence,
    project,
)
from .enumeration import (
    DEFAULT_MATRIX_CAP,
    DEFAULT_SPACE_CAP,
    distance_matrix,
    enumerate_space,
    histogram_sphere_sizes,
    write_histogram_csv,
    write_matrix_csv,
)
from .exceptions import MPUlamError, UnsupportedRegimeError
from .metric import distance
from .spheres import extremal_center_scan, omega_center, sphere_enumerate, sphere_size_radius1
from .tableaux import sphere_size_identity
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    r: int | None = None
    t: int | None = None
    d: int | None = None
    center: str | None = None
    format: str = "text"
    seed: int | None = None
    threads: int = 1
    caps: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)


def _threads(value: int | None) -> int:
    return value if value and value > 0 else (os.cpu_count() or 1)


def _resolve_sequence(text: str, r: int | None, force_project: bool) -> tuple[tuple[int, ...], int]:
    """Turn a CLI tuple into an r-regular multipermutation.

    A permutation of 1..n is projected when ``--project`` is set or when an
    r > 1 is requested (a permutation is only ever 1-regular).
    """
    seq = parse_sequence(text)
    if force_project:
        if r is None:
            raise UsageError("--project needs --r")
        if not is_permutation(seq):
            raise UsageError(f"--project needs a permutation, got {text}")
        return project(seq, r).symbols, r
    if r is not None and r > 1 and is_permutation(seq):
        return project(seq, r).symbols, r
    if r is None:
        return seq, infer_regularity(seq)
    check_regular(seq, r)
    return seq, r


def _emit(report: dict, fmt: str, text: list[str], rows: list[list] | None = None) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows or []:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        print("\n".join(text))


def cmd_distance(args, cfg: RunConfig) -> int:
    a, ra = _resolve_sequence(args.a, args.r, args.project)
    b, rb = _resolve_sequence(args.b, args.r, args.project)
    if len(a) != len(b) or ra != rb:
        raise UsageError("tuples must have the same length and content")
    cfg.n, cfg.r = len(a), ra
    res = distance(a, b, witness=args.witness)
    report = {"config": asdict(cfg), "a": format_sequence(a), "b": format_sequence(b), **res.to_dict()}
    text = [f"a        {format_sequence(a)}", f"b        {format_sequence(b)}", f"r        {ra}",
            f"distance {res.distance}", f"lcs      {res.lcs_length}"]
    if res.witness:
        text.append(f"witness  a@{format_sequence(res.witness[0]) or '-'}  b@{format_sequence(res.witness[1]) or '-'}")
    _emit(report, cfg.format, text, [["a", "b", "r", "distance", "lcs"],
                                     [format_sequence(a), format_sequence(b), ra, res.distance, res.lcs_length]])
    return EXIT_OK


def cmd_sphere(args, cfg: RunConfig) -> int:
    if args.identity:
        if args.n is None or args.r is None:
            raise UsageError("--identity needs --n and --r")
        center = identity_multipermutation(args.n, args.r).symbols
        r = args.r
    elif args.center:
        center, r = _resolve_sequence(args.center, args.r, args.project)
    else:
        raise UsageError("give --center or --identity")
    n, t = len(center), args.t
    if not 0 <= t <= n - 1:
        raise UsageError(f"--t must lie in [0, {n - 1}]")
    cfg.n, cfg.r, cfg.t, cfg.center = n, r, t, format_sequence(center)
    is_identity = center == identity_multipermutation(n, r).symbols

    method = args.method
    if method == "rsk" and not is_identity:
        raise UsageError("method requires identity center")
    if method == "formula" and t >= 2:
        raise UsageError("formula method only covers radius t <= 1")

    sizes: dict[str, int] = {}
    details: dict = {}
    if method in ("formula", "all") and t <= 1:
        if t == 0:
            sizes["formula"] = 1
        else:
            rep = sphere_size_radius1(center, r)
            sizes["formula"] = rep.sphere_size_formula
            details["duplication"] = rep.to_dict()
    if method in ("rsk", "all") and is_identity:
        sizes["rsk"] = sphere_size_identity(n, r, t)
    if method in ("enumerate", "all"):
        sizes["enumerate"] = len(sphere_enumerate(center, t, cap=args.cap))

    agree = len(set(sizes.values())) <= 1
    report = {"config": asdict(cfg), "center": format_sequence(center), "sizes": sizes, "agree": agree, **details}
    text = [f"center {format_sequence(center)}  (n={n}, r={r}, t={t})"]
    text += [f"  {name:<10}{size}" for name, size in sizes.items()]
    if "duplication" in details:
        dup = details["duplication"]
        text.append(f"  |T_n|={dup['size_T']} |D|={dup['size_D']} |E|={dup['size_E']} "
                    f"-> {dup['size_T']} - {dup['size_D']} - {dup['size_E']} = {dup['sphere_size_formula']}")
    text.append(("agree: " + "/".join(str(v) for v in sizes.values())) if agree else "DISAGREE")
    rows = [["method", "size"]] + [[k, v] for k, v in sizes.items()]
    _emit(report, cfg.format, text, rows)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_bounds(args, cfg: RunConfig) -> int:
    n, r, d = args.n, args.r, args.d
    check_divides(n, r)
    if not 1 <= d <= max(n - 1, 1):
        raise UsageError(f"--d must lie in [1, {n - 1}]")
    cfg.n, cfg.r, cfg.d = n, r, d
    cfg.extra["single_error_min_distance"] = args.sec_min_distance
    rows_out = []
    for label, make in (
        ("sphere_packing_upper", lambda: sphere_packing_upper(n, r)),
        ("perfect_lower", lambda: perfect_code_lower(n, r)),
        ("gv_lower", lambda: gv_lower(n, r, d)),
    ):
        try:
            rep = make().to_dict()
            rep["supported"] = True
            if label == "sphere_packing_upper":
                rep["applies_to_this_d"] = d >= args.sec_min_distance
            rows_out.append(rep)
        except UnsupportedRegimeError:
            rows_out.append({"bound_kind": label, "supported": False,
                             "reason": "largest-sphere formula requires n/r != 2"})
    report = {"config": asdict(cfg), "bounds": rows_out}
    text = [f"bounds for n={n}, r={r}, d={d}"]
    for row in rows_out:
        if row["supported"]:
            note = ""
            if row.get("applies_to_this_d") is False:
                note = f"  (single-error codes only, d >= {args.sec_min_distance})"
            text.append(f"  {row['bound_kind']:<22}{row['bound_value']:>16}  -> {row['bound_integer']}{note}")
        else:
            text.append(f"  {row['bound_kind']:<22}{'unsupported':>16}  ({row['reason']})")
    rows = [["bound_kind", "supported", "bound_value", "bound_integer", "space_size"]]
    rows += [[x["bound_kind"], x["supported"], x.get("bound_value", ""), x.get("bound_integer", ""),
              x.get("space_size", "")] for x in rows_out]
    _emit(report, cfg.format, text, rows)
    return EXIT_OK


def cmd_scan(args, cfg: RunConfig) -> int:
    n, r, t = args.n, args.r, args.t
    cfg.n, cfg.r, cfg.t = n, r, t
    scan = extremal_center_scan(n, r, t, workers=cfg.threads)
    e = identity_multipermutation(n, r).symbols
    _, m_omega = omega_center(n, r)
    report = {"config": asdict(cfg), **scan.to_dict(),
              "identity_center": format_sequence(e),
              "omega_center": format_sequence(m_omega.symbols)}
    if t == 1:
        report["identity_size"] = sphere_size_radius1(e, r).sphere_size_enumerated
        report["omega_size"] = sphere_size_radius1(m_omega.symbols, r).sphere_size_enumerated
    text = [f"scan over all centers, n={n}, r={r}, t={t}",
            f"  min {scan.min_size:>6} at {format_sequence(scan.min_center)}",
            f"  max {scan.max_size:>6} at {format_sequence(scan.max_center)}"]
    if t == 1:
        text.append(f"  identity center {report['identity_center']}: {report['identity_size']}")
        text.append(f"  omega center    {report['omega_center']}: {report['omega_size']}")
    rows = [["which", "center", "size"], ["min", format_sequence(scan.min_center), scan.min_size],
            ["max", format_sequence(scan.max_center), scan.max_size]]
    _emit(report, cfg.format, text, rows)
    return EXIT_OK


def cmd_greedy(args, cfg: RunConfig) -> int:
    n, r, d = args.n, args.r, args.d
    cfg.n, cfg.r, cfg.d, cfg.seed = n, r, d, args.seed
    code = greedy_code(n, r, d, seed=args.seed, cap=args.cap)
    ok, pair = verify_code(code, d)
    if args.output:
        with open(args.output, "w") as fh:
            code.write_text(fh)
    report = {"config": asdict(cfg), **code.to_dict(), "verified": ok}
    text = [format_sequence(c) for c in code.codewords]
    text.append(f"# {len(code)} codewords, min distance >= {d}: {'verified' if ok else 'FAILED'}")
    rows = [["codeword"]] + [[format_sequence(c)] for c in code.codewords]
    _emit(report, cfg.format, text, rows)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, cfg: RunConfig) -> int:
    suites = SUITES if args.suite == "all" else (args.suite,)
    cfg.seed = args.seed
    cfg.extra.update(n_max=args.n_max, suite=args.suite, samples=args.samples)
    results = [run_suite(name, args.n_max, seed=args.seed, samples=args.samples) for name in suites]
    passed = all(res.passed for res in results)
    report = {"config": asdict(cfg), "passed": passed, "suites": [res.to_dict() for res in results]}
    text = []
    for res in results:
        line = f"{res.name:<8} {'PASS' if res.passed else 'FAIL'}  {res.checks} checks  {res.seconds:.2f}s"
        if not res.passed:
            line += f"\n         {res.failed_check}: {res.counterexample}"
        text.append(line)
        if res.name == "spheres" and res.notes:
            nt = res.notes
            text.append(f"         12-symbol example {nt['example_center']}: |D|={nt['size_D']} |E|={nt['size_E']} "
                        f"enumerated sphere={nt['enumerated_sphere_size']} "
                        f"(1+(n-1)^2-|D|-|E|={nt['with_plus_one']}, without the +1: {nt['without_plus_one']})")
    rows = [["suite", "passed", "checks", "seconds", "failed_check", "counterexample"]]
    rows += [[x.name, x.passed, x.checks, round(x.seconds, 3), x.failed_check or "", x.counterexample or ""]
             for x in results]
    _emit(report, cfg.format, text, rows)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_enumerate(args, cfg: RunConfig) -> int:
    n, r = args.n, args.r
    cfg.n, cfg.r, cfg.t = n, r, args.t
    cfg.extra["what"] = args.what
    if args.what == "space":
        points = list(enumerate_space(n, r, cap=args.cap))
        report = {"config": asdict(cfg), "size": str(len(points)), "tuples": [format_sequence(p) for p in points]}
        text = [format_sequence(p) for p in points]
        rows = [["tuple"]] + [[format_sequence(p)] for p in points]
        _emit(report, cfg.format, text, rows)
    elif args.what == "matrix":
        points = list(enumerate_space(n, r))
        matrix = distance_matrix(n, r, cap=args.matrix_cap)
        if cfg.format == "csv":
            write_matrix_csv(matrix, points, sys.stdout)
        else:
            report = {"config": asdict(cfg), "labels": [format_sequence(p) for p in points], "matrix": matrix}
            width = max(len(format_sequence(p)) for p in points)
            text = [f"{format_sequence(p):>{width}}  " + " ".join(str(x) for x in row) for p, row in zip(points, matrix)]
            _emit(report, cfg.format, text)
    else:
        if args.t is None:
            raise UsageError("--what histogram needs --t")
        hist = histogram_sphere_sizes(n, r, args.t, workers=cfg.threads)
        if cfg.format == "csv":
            write_histogram_csv(hist, sys.stdout)
        else:
            report = {"config": asdict(cfg), "histogram": {str(k): v for k, v in hist.items()}}
            text = [f"{size:>8} {count}" for size, count in hist.items()]
            _emit(report, cfg.format, ["  size  centers"] + text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--threads", type=int, default=0, help="worker processes; 0 means one per CPU")

    parser = argparse.ArgumentParser(prog="mpulam", description="r-regular Ulam metric toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("distance", parents=[common], help="r-regular Ulam distance between two tuples")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--project", action="store_true", help="treat inputs as permutations and project them")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("sphere", parents=[common], help="sphere size by formula, RSK and/or enumeration")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--center")
    g.add_argument("--identity", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--project", action="store_true")
    p.add_argument("--method", choices=("formula", "rsk", "enumerate", "all"), default="all")
    p.add_argument("--cap", type=int, default=2 * 10**6, help="state cap for enumeration")
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("bounds", parents=[common], help="sphere-packing, perfect-code and GV bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--sec-min-distance", type=int, default=SINGLE_ERROR_MIN_DISTANCE,
                   help="minimum distance regarded as single-error correcting")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("scan-extremes", parents=[common], help="smallest/largest sphere over all centers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("greedy-code", parents=[common], help="greedy code with minimum distance d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--output", help="also write codewords, one per line")
    p.add_argument("--cap", type=int, default=DEFAULT_SPACE_CAP)
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("verify", parents=[common], help="run invariant sweeps")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="list the space, distance matrix or sphere histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--what", choices=("space", "matrix", "histogram"), default="space")
    p.add_argument("--t", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_SPACE_CAP)
    p.add_argument("--matrix-cap", type=int, default=DEFAULT_MATRIX_CAP)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(subcommand=args.subcommand, format=args.format, threads=_threads(args.threads))
    for name in ("cap", "matrix_cap"):
        if hasattr(args, name):
            cfg.caps[name] = getattr(args, name)
    try:
        return args.func(args, cfg)
    except (UsageError, MPUlamError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
