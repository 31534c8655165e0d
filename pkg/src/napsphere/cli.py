"""Command-line interface.

Subcommands
-----------
napoleonise        construct apexes/centroids for a triangle or d-triple
classify           report the Equilateral / OutwardNapoleonic / NotNapoleonic verdict
sample             draw seeded side parameters from the Napoleonic quadric
search             brute-force all eight sign vectors for equilateral results
verify-identities  run the exact polynomial identity checks

Inputs are JSON documents, either ``{"vertices": [[x,y,z], ...]}`` (three
vertices, normalised on ingestion) or ``{"d": [d0, d1, d2]}`` (side
parameters, realized as a canonical triangle).  Exit codes: 0 success,
1 malformed input, 2 geometric validation failure (the error kind is
printed as JSON).  The environment variable ``NAPOLEON_TOL`` overrides the
default classification/search tolerance; ``--tol`` beats both.

See FORMATS.md for the exact output schemas.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import algebra
from .classify import CLASSIFY_TOL, ClassificationReport, classify
from .core import barycentre, normalize, spherical_distance
from .ellipsoid import d_to_xyz, realize, sample_napoleonic_d_with_attempts
from .errors import NapsphereError
from .napoleon import NapoleonisationResult, SignVector, napoleonise
from .oracle import search_equilateral
from .triangle import SideParameters, SphericalTriangle, new_triangle

__all__ = ["main"]

# Vertex-norm corrections larger than this are reported on stderr.
NORMALISE_WARN = 1e-6

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_INVALID = 2


def _default_tol() -> float:
    env = os.environ.get("NAPOLEON_TOL")
    if env is None:
        return CLASSIFY_TOL
    try:
        return float(env)
    except ValueError:
        raise SystemExit(f"NAPOLEON_TOL is not a number: {env!r}")


def _dump(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, round-trip floats."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _read_input(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _BadInput(f"cannot read input: {exc}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _BadInput(f"input is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise _BadInput("input must be a JSON object")
    return doc


class _BadInput(Exception):
    """Malformed input (exit 1), as opposed to geometric rejection (exit 2)."""


def _triangle_from_doc(doc: dict) -> SphericalTriangle:
    if "vertices" in doc:
        verts = doc["vertices"]
        if not (isinstance(verts, list) and len(verts) == 3):
            raise _BadInput('"vertices" must be a list of three [x, y, z] triples')
        normed = []
        for k, row in enumerate(verts):
            if not (isinstance(row, list) and len(row) == 3):
                raise _BadInput(f"vertex {k} must be an [x, y, z] triple")
            try:
                v = np.array([float(x) for x in row])
            except (TypeError, ValueError):
                raise _BadInput(f"vertex {k} has non-numeric components")
            n = float(np.linalg.norm(v))
            if abs(n - 1.0) > NORMALISE_WARN:
                print(
                    f"warning: vertex {k} renormalised (|v| deviated from 1 by {abs(n - 1.0):.3e})",
                    file=sys.stderr,
                )
            normed.append(normalize(v))
        return new_triangle(*normed)
    if "d" in doc:
        return realize(_side_parameters_from_doc(doc))
    raise _BadInput('input must contain either "vertices" or "d"')


def _side_parameters_from_doc(doc: dict) -> SideParameters:
    row = doc["d"]
    if not (isinstance(row, list) and len(row) == 3):
        raise _BadInput('"d" must be a list of three numbers')
    try:
        values = [float(x) for x in row]
    except (TypeError, ValueError):
        raise _BadInput('"d" has non-numeric components')
    return SideParameters(*values)


def _vec(v) -> list[float]:
    return [float(x) for x in v]


def _napoleonisation_dict(t: SphericalTriangle, res: NapoleonisationResult) -> dict:
    rs = res.centroids
    return {
        "signs": list(res.signs.as_tuple()),
        "orientation_swapped": t.orientation_swapped,
        "vertices": [_vec(p) for p in t.vertices],
        "apexes": [_vec(q) for q in res.apexes],
        "centroids": [_vec(r) for r in rs],
        "centroid_inner_products": {
            "rr01": res.rr01,
            "rr12": res.rr12,
            "rr20": res.rr20,
        },
        "centroid_distances": [
            spherical_distance(rs[0], rs[1]),
            spherical_distance(rs[1], rs[2]),
            spherical_distance(rs[2], rs[0]),
        ],
        "equilateral_residual": res.equilateral_residual,
        "coincident_centroids": res.centroids_coincident,
        "near_boundary": res.near_boundary,
        "barycentre": _vec(barycentre(*t.vertices)),
        "napoleon_barycentre": _vec(barycentre(*rs)),
    }


def _point_cloud_csv(t: SphericalTriangle, res: NapoleonisationResult) -> str:
    lines = ["kind,index,x,y,z"]

    def row(kind: str, index: int, v) -> None:
        lines.append(f"{kind},{index},{float(v[0])!r},{float(v[1])!r},{float(v[2])!r}")

    for i, p in enumerate(t.vertices):
        row("P", i, p)
    for i, q in enumerate(res.apexes):
        row("Q", i, q)
    for i, r in enumerate(res.centroids):
        row("R", i, r)
    row("barycentre", 0, barycentre(*t.vertices))
    row("barycentre", 1, barycentre(*res.centroids))
    return "\n".join(lines) + "\n"


def _report_dict(report: ClassificationReport) -> dict:
    return {
        "d": list(report.d.as_tuple()),
        "alpha": report.alpha,
        "chi": report.chi,
        "gamma": report.gamma,
        "condition_value": report.condition_value,
        "condition_residual": report.condition_residual,
        "equilateral_factor": report.equilateral_factor,
        "verdict": str(report.verdict),
        "predicted_rr": report.predicted_rr,
        "predicted_side": report.predicted_side,
        "epsilon_sign": report.epsilon_sign,
        "note": report.note,
    }


def cmd_napoleonise(args) -> int:
    doc = _read_input(args.input)
    t = _triangle_from_doc(doc)
    try:
        signs = SignVector.parse(args.signs)
    except ValueError as exc:
        raise _BadInput(str(exc))
    res = napoleonise(t, signs)
    if args.format == "csv":
        sys.stdout.write(_point_cloud_csv(t, res))
    else:
        print(_dump(_napoleonisation_dict(t, res)))
    return EXIT_OK


def cmd_classify(args) -> int:
    doc = _read_input(args.input)
    t = _triangle_from_doc(doc)
    report = classify(t, tol=args.tol)
    print(_dump(_report_dict(report)))
    return EXIT_OK


def cmd_sample(args) -> int:
    samples, attempts = sample_napoleonic_d_with_attempts(args.count, args.seed)
    if args.format == "csv":
        header = "d0,d1,d2,X,Y,Z"
        if args.realize:
            header += "," + ",".join(f"p{i}{ax}" for i in range(3) for ax in "xyz")
        print(header)
        for d in samples:
            xyz = d_to_xyz(d)
            cells = [repr(v) for v in (*d.as_tuple(), *xyz.as_tuple())]
            if args.realize:
                t = realize(d)
                cells += [repr(float(x)) for p in t.vertices for x in p]
            print(",".join(cells))
        return EXIT_OK
    rows = []
    for d in samples:
        xyz = d_to_xyz(d)
        entry = {
            "d": list(d.as_tuple()),
            "xyz": list(xyz.as_tuple()),
            "condition_value": xyz.quadric_value(),
        }
        if args.realize:
            entry["vertices"] = [_vec(p) for p in realize(d).vertices]
        rows.append(entry)
    print(
        _dump(
            {
                "count": args.count,
                "seed": args.seed,
                "attempts": attempts,
                "acceptance_rate": args.count / attempts,
                "samples": rows,
            }
        )
    )
    return EXIT_OK


def cmd_search(args) -> int:
    doc = _read_input(args.input)
    t = _triangle_from_doc(doc)
    hits = search_equilateral(t, tol=args.tol)
    print(
        _dump(
            {
                "tolerance": args.tol,
                "matches": [
                    {"signs": list(s.as_tuple()), "residual": r} for s, r in hits
                ],
            }
        )
    )
    return EXIT_OK


def cmd_verify_identities(args) -> int:
    checks = algebra.verify_all()
    ok = True
    for check in checks:
        status = "PASS" if check else "FAIL"
        print(f"{status}  {check.name}")
        if not check:
            ok = False
            print(f"      difference: {check.difference!r}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_BAD_INPUT


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="napsphere",
        description="Napoleonisations of spherical triangles: construction, "
        "classification, quadric sampling, and exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("napoleonise", help="construct apexes and centroids")
    p.add_argument("input", help="JSON file with 'vertices' or 'd' ('-' for stdin)")
    p.add_argument("--signs", default="out", help="'out', 'in', or e.g. '+-+' (default: out)")
    p.add_argument("--tol", type=float, default=None, help=argparse.SUPPRESS)
    p.add_argument("--format", choices=("json", "csv"), default="json", help="csv emits a plot-ready point cloud")
    p.set_defaults(func=cmd_napoleonise)

    p = sub.add_parser("classify", help="classify a triangle")
    p.add_argument("input", help="JSON file with 'vertices' or 'd' ('-' for stdin)")
    p.add_argument("--tol", type=float, default=None, help="classification tolerance (default 1e-9 or NAPOLEON_TOL)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", help="sample side parameters from the Napoleonic quadric")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--realize", action="store_true", help="also emit canonical vertices per sample")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search", help="brute-force all eight sign vectors")
    p.add_argument("input", help="JSON file with 'vertices' or 'd' ('-' for stdin)")
    p.add_argument("--tol", type=float, default=None, help="equilaterality tolerance (default 1e-9 or NAPOLEON_TOL)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-identities", help="run the exact polynomial identity checks")
    p.set_defaults(func=cmd_verify_identities)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "tol", None) is None:
        args.tol = _default_tol()
    try:
        return args.func(args)
    except _BadInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NapsphereError as exc:
        print(_dump({"error": {"kind": exc.kind, "message": str(exc)}}))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
