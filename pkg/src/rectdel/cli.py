"""Command-line interface.

Subcommands: generate, build, analyze, certify, sweep, search, export-svg.
All outputs are deterministic for fixed inputs and seeds; errors exit
nonzero with a diagnostic on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .analysis import all_pairs_stretch, bound_formula
from .delaunay import Triangulation, build_triangulation
from .errors import RectDelError
from .files import points_from_json, points_to_json
from .generate import generate_points
from .geometry import AspectRatio, validate_general_position
from .proof_path import Certificate, extract_proof_path
from .search import worst_case_search
from .svg import render_svg
from .verify_cert import verify_certificate


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_points(path: str):
    ps = points_from_json(_read(path))
    report = validate_general_position(ps)
    if not report.ok:
        raise RectDelError(f"invalid point set: {report.describe()}")
    return ps


def cmd_generate(args) -> int:
    ps = generate_points(args.n, args.seed, args.distribution)
    _write(args.out, points_to_json(ps))
    return 0


def cmd_build(args) -> int:
    ps = _load_points(args.points)
    T = build_triangulation(ps, AspectRatio.parse(args.aspect))
    _write(args.out, T.to_json())
    return 0


def cmd_analyze(args) -> int:
    T = Triangulation.from_json(_read(args.tri))
    report = all_pairs_stretch(T, tol=args.tolerance)
    if args.format == "csv":
        _write(args.out, report.to_csv())
    else:
        _write(args.out, report.to_json())
    return 0


def cmd_certify(args) -> int:
    T = Triangulation.from_json(_read(args.tri))
    if args.check:
        cert = Certificate.from_json(_read(args.check))
        res = verify_certificate(T, cert, tol=args.tolerance)
        if res.ok:
            print(f"certificate ok: pair ({cert.u},{cert.v}), "
                  f"{len(cert.steps)} steps, bound {cert.claimed_bound:.12g}")
            return 0
        print(f"certificate REJECTED: {res.reason}", file=sys.stderr)
        return 1
    u, v = (int(s) for s in args.pair.split(","))
    if T.has_edge(u, v):
        print("pair is adjacent (trivial certificate)", file=sys.stderr)
    path, cert = extract_proof_path(T, u, v)
    res = verify_certificate(T, cert, tol=args.tolerance)
    if args.out:
        _write(args.out, cert.to_json())
    print(f"pair ({u},{v}) flag={cert.flag}")
    print(f"path: {' -> '.join(map(str, path))}")
    for step in cert.steps:
        print(f"  {step.kind:28s} lhs={step.lhs:.9f} rhs={step.rhs:.9f} "
              f"slack={step.slack:.3e}")
    print(f"claimed bound: {cert.claimed_bound:.12f}")
    print(f"verification: {'ok' if res.ok else 'FAILED: ' + str(res.reason)}")
    return 0 if res.ok else 1


def cmd_sweep(args) -> int:
    aspects = [s.strip() for s in args.aspects.split(",")]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["aspect", "trial", "n", "seed", "max_ratio", "sigma"])
    for aspect_str in aspects:
        aspect = AspectRatio.parse(aspect_str)
        sigma = bound_formula(aspect)
        for trial in range(args.trials):
            seed = args.seed + trial
            ps = generate_points(args.n, seed)
            T = build_triangulation(ps, aspect)
            report = all_pairs_stretch(T)
            writer.writerow([aspect_str, trial, args.n, seed,
                             repr(report.max_ratio), repr(sigma)])
    _write(args.out, buf.getvalue())
    return 0


def cmd_search(args) -> int:
    aspect = AspectRatio.parse(args.aspect)
    _best, result = worst_case_search(aspect, args.n, args.budget, args.seed)
    _write(args.out, result.to_json())
    print(f"best ratio {result.best_ratio:.9f} of sigma {result.sigma:.9f} "
          f"({result.evaluations} evaluations, {result.restarts} restarts)")
    return 0


def cmd_export_svg(args) -> int:
    T = Triangulation.from_json(_read(args.tri))
    _write(args.out, render_svg(T, show_homothets=not args.no_homothets))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rectdel",
        description="Rectangle Delaunay triangulations: exact construction, "
                    "stretch analysis, and certified bounded paths.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a random point file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--distribution", choices=["uniform", "clustered"], default="uniform")
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="build a triangulation from a point file")
    b.add_argument("--points", required=True)
    b.add_argument("--aspect", required=True)
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_build)

    a = sub.add_parser("analyze", help="stretch report for a triangulation")
    a.add_argument("--tri", required=True)
    a.add_argument("--format", choices=["json", "csv"], default="json")
    a.add_argument("--tolerance", type=float, default=1e-9)
    a.add_argument("--out", default="-")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("certify", help="extract and verify a certified path")
    c.add_argument("--tri", required=True)
    c.add_argument("--pair", help="two ids: i,j")
    c.add_argument("--check", help="verify an existing certificate file instead")
    c.add_argument("--tolerance", type=float, default=1e-9)
    c.add_argument("--out", help="write the certificate JSON here")
    c.set_defaults(func=cmd_certify)

    s = sub.add_parser("sweep", help="max stretch over random instances, CSV")
    s.add_argument("--aspects", required=True, help="comma-separated aspect list")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_sweep)

    w = sub.add_parser("search", help="hill-climb for high-stretch configurations")
    w.add_argument("--aspect", required=True)
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--budget", type=int, required=True)
    w.add_argument("--seed", type=int, required=True)
    w.add_argument("--out", default="-")
    w.set_defaults(func=cmd_search)

    e = sub.add_parser("export-svg", help="draw a triangulation")
    e.add_argument("--tri", required=True)
    e.add_argument("--out", default="-")
    e.add_argument("--no-homothets", action="store_true")
    e.set_defaults(func=cmd_export_svg)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "certify" and not args.check and not args.pair:
        parser.error("certify requires --pair or --check")
    try:
        return args.func(args)
    except RectDelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"file error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
