"""Command-line front end.

Exit codes: 0 success, 1 partial batch failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import io
from .combinatorics import cyclic_polytope, dualize, facets_from_points
from .errors import SmallCoverError
from .gf2 import (
    EnumerationReport,
    Verdict,
    enumerate_char_maps,
    is_characteristic_z2,
    quick_obstruction,
)
from .invariants import invariant_report
from .lift import DEFAULT_BOUND, find_lift
from .symmetry import automorphisms, orbit_classify


class UsageError(SmallCoverError):
    pass


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.output:
        io.write_text(args.output, text)
    else:
        sys.stdout.write(text)


def _load_report(path: str, p) -> EnumerationReport:
    report = io.matrices_from_dict(io.read_json(path))
    for k, lam in enumerate(report.matrices):
        if (lam.n, lam.m) != (p.dim, p.num_facets):
            raise UsageError(f"matrix {k} is {lam.n}x{lam.m}, polytope needs {p.dim}x{p.num_facets}")
        if not lam.canonical or not is_characteristic_z2(lam, p):
            raise UsageError(f"matrix {k} is not a canonical characteristic matrix over {p.name}")
    return report


# -- commands ------------------------------------------------------------------


def cmd_hull(args: argparse.Namespace) -> int:
    data = io.read_json(args.points)
    pts = io.points_from_dict(data)
    sf = facets_from_points(pts)
    name = args.name or (data.get("name") if isinstance(data, dict) else None) or Path(args.points).stem
    p = dualize(sf, name)
    if args.facets_output:
        io.write_text(args.facets_output, io.dumps(io.facets_to_dict(sf)))
    if args.format == "text":
        _emit(args, _polytope_text(p))
    else:
        _emit(args, io.dumps(io.polytope_to_dict(p)))
    return 0


def cmd_gen_cyclic(args: argparse.Namespace) -> int:
    p = dualize(cyclic_polytope(args.n, args.m), args.name or f"C{args.n}({args.m})*")
    if args.format == "text":
        _emit(args, _polytope_text(p))
    else:
        _emit(args, io.dumps(io.polytope_to_dict(p)))
    return 0


def _polytope_text(p) -> str:
    lines = [f"{p.name}: dim {p.dim}, {p.num_facets} facets, {len(p.vertices)} vertices"]
    lines += [" ".join(f"F{i}" for i in v) for v in p.vertices]
    return "\n".join(lines) + "\n"


def cmd_enumerate(args: argparse.Namespace) -> int:
    p = io.load_polytope(args.polytope)
    if quick_obstruction(p) is Verdict.BLOCKED:
        report = EnumerationReport(p.name, 0, (), 0)
        print(f"{p.name}: 2-neighborly with {p.num_facets} >= 2^{p.dim} facets; no characteristic map",
              file=sys.stderr)
    else:
        report = enumerate_char_maps(p, workers=args.workers)
    print(f"{p.name}: {report.count} characteristic matrices", file=sys.stderr)
    if args.format == "text":
        blocks = [f"a{k + 1}[{p.name}] =\n{lam.to_text()}" for k, lam in enumerate(report.matrices)]
        _emit(args, f"{p.name}: {report.count} matrices\n" + "".join(b + "\n\n" for b in blocks))
    else:
        _emit(args, io.dumps(io.matrices_to_dict(report, p.dim, p.num_facets)))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    p = io.load_polytope(args.polytope)
    report = _load_report(args.matrices, p)
    group = automorphisms(p)
    cls = orbit_classify(report, group)
    if args.format == "text":
        lines = [f"{p.name}: |Aut| = {group.order}, {len(cls)} orbits"]
        for g in group.generators:
            lines.append("generator " + " ".join(map(str, g.images)))
        for orbit, rep in zip(cls.orbits, cls.representatives):
            lines.append("orbit " + " ".join(str(i) for i in orbit))
            lines.append(rep.to_text())
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, io.dumps(io.classification_to_dict(p.name, group, cls)))
    return 0


def cmd_lift(args: argparse.Namespace) -> int:
    p = io.load_polytope(args.polytope)
    report = _load_report(args.matrices, p)
    lifts = [find_lift(lam, p, args.bound) for lam in report.matrices]
    if args.format == "text":
        lines = []
        for k, lam in enumerate(lifts):
            lines.append(f"[{k}] " + ("no lift within bound" if lam is None else "lift"))
            if lam is not None:
                lines.append(lam.to_text())
        _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    else:
        _emit(args, io.dumps(io.lifts_to_dict(p.name, args.bound, lifts)))
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    p = io.load_polytope(args.polytope)
    report = invariant_report(p)
    if args.format == "text":
        lines = [f"{key}: {value}" for key, value in report.items()]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, io.dumps(report))
    return 0


def batch_row(path: str, bound: int = DEFAULT_BOUND) -> dict:
    """Full pipeline for one polytope file; errors are captured in the row."""
    try:
        p = io.load_polytope(path)
        if quick_obstruction(p) is Verdict.BLOCKED:
            report = EnumerationReport(p.name, 0, (), 0)
        else:
            report = enumerate_char_maps(p)
        group = automorphisms(p)
        orbits = len(orbit_classify(report, group))
        if report.count == 0:
            lifting = "n/a"
        else:
            lifted = sum(find_lift(lam, p, bound) is not None for lam in report.matrices)
            lifting = "all" if lifted == report.count else f"{lifted}/{report.count}"
        return {"file": Path(path).name, "name": p.name, "matrices": report.count,
                "aut_order": group.order, "orbits": orbits, "lifting": lifting}
    except (SmallCoverError, OSError) as exc:
        return {"file": Path(path).name, "error": str(exc)}


def _batch_job(item: tuple[str, int]) -> dict:
    return batch_row(*item)


def cmd_batch(args: argparse.Namespace) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise UsageError(f"{directory} is not a directory")
    files = sorted(str(f) for f in directory.glob("*.json"))
    jobs = [(f, args.bound) for f in files]
    if args.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_batch_job, jobs))
    else:
        rows = [_batch_job(j) for j in jobs]
    ok = [r for r in rows if "error" not in r]
    failed = [r for r in rows if "error" in r]
    if args.format == "json":
        _emit(args, io.dumps({"rows": ok, "errors": failed}))
    else:
        header = f"{'file':<24} {'name':<20} {'matrices':>8} {'aut':>5} {'orbits':>6}  lifting"
        lines = [header]
        for r in rows:
            if "error" in r:
                lines.append(f"{r['file']:<24} ERROR {r['error']}")
            else:
                lines.append(f"{r['file']:<24} {r['name']:<20} {r['matrices']:>8} {r['aut_order']:>5} "
                             f"{r['orbits']:>6}  {r['lifting']}")
        _emit(args, "\n".join(lines) + "\n")
    for r in failed:
        print(f"error: {r['file']}: {r['error']}", file=sys.stderr)
    return 1 if failed else 0


# -- parser ----------------------------------------------------------------------


def _add_globals(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "text"), default=default("json"))
    parser.add_argument("--workers", type=int, default=default(1))
    parser.add_argument("--output", "-o", default=default(None))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smallcover", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        _add_globals(sp, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("hull", cmd_hull, "convex hull of a points file, dualized to a simple polytope")
    sp.add_argument("points")
    sp.add_argument("--name")
    sp.add_argument("--facets-output")

    gen = sub.add_parser("gen", help="generate standard polytopes")
    gsub = gen.add_subparsers(dest="family", required=True)
    sp = gsub.add_parser("cyclic", help="dual of the cyclic polytope C^n(m)")
    _add_globals(sp, suppress=True)
    sp.set_defaults(func=cmd_gen_cyclic)
    sp.add_argument("n", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--name")

    sp = add("enumerate", cmd_enumerate, "all canonical Z2 characteristic matrices")
    sp.add_argument("polytope")

    sp = add("classify", cmd_classify, "Aut(P)-orbits of enumerated matrices")
    sp.add_argument("polytope")
    sp.add_argument("matrices")

    sp = add("lift", cmd_lift, "integer lifts of enumerated matrices")
    sp.add_argument("polytope")
    sp.add_argument("matrices")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)

    sp = add("invariants", cmd_invariants, "f/h-vectors, neighborliness, chromatic number, SR generators")
    sp.add_argument("polytope")

    sp = add("batch", cmd_batch, "run the full pipeline over a directory of polytope files")
    sp.add_argument("directory")
    sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    if getattr(args, "bound", 1) < 1:
        parser.error("--bound must be >= 1")
    try:
        return args.func(args)
    except (SmallCoverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

