"""quatpoly command line: build, verify, export, project.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import checks
from . import constructions as C
from .coxeter import build_named_group, expected_decomposition
from .export import dumps_json, to_csv, to_json_doc, to_off
from .polytope import LAMBDA_I, cell_census, census_summary, dual_cell, min_sq_distance, vertex_figure
from .project3d import Solid3, classify_faces, hull3d, imag3, partition_by_real_part, pyritohedral_orbits

log = logging.getLogger("quatpoly")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
PROJECT_MODES = ("pyritohedral", "vertex-figure", "dual-cell")
PROJECTABLE = {"snub24": PROJECT_MODES}

# file-name friendly real-part labels
_CLASS_SLUGS = {"tau/2": "tau", "-tau/2": "minus-tau", "sigma/2": "sigma", "-sigma/2": "minus-sigma",
                "1/2": "half", "-1/2": "minus-half", "0": "zero"}


class UsageError(Exception):
    pass


def _solid(name: str) -> Solid3:
    return hull3d([imag3(p) for p in C.construction(name).points])


def _census_json(solid: Solid3) -> dict:
    counts = Counter()
    for cls in classify_faces(solid):
        counts[(cls.tag, tuple(str(x) for x in cls.lengths_sq))] += 1
    return {
        "vertices": len(solid.vertices),
        "edges": len(solid.edges),
        "faces": len(solid.faces),
        "face_classes": [{"tag": t, "sides_sq": list(ls), "count": n} for (t, ls), n in sorted(counts.items())],
    }


# ---------------------------------------------------------------------------
# build


def cmd_build(args) -> int:
    c = C.construction(args.name)
    out = sys.stdout
    if c.is_group:
        g = c.group
        print(f"{args.name}: {g.name} order {g.order}", file=out)
        stars = sum(1 for e in g if e.star)
        print(f"  elements: {g.order - stars} [p,q] + {stars} [p,q]*", file=out)
        try:
            want = expected_decomposition(g.name)
        except KeyError:
            want = None
        if want is not None:
            same = g.key_set() == frozenset(e.key for e in want)
            print(f"  decomposition: {'matches' if same else 'DIFFERS FROM'} the bracket form ({len(want)} elements)", file=out)
        return EXIT_OK
    pts = c.points
    print(f"{args.name}: {len(pts)} vertices in {c.dim}D", file=out)
    for k, v in sorted(c.metadata.items()):
        print(f"  {k}: {v}", file=out)
    print(f"  min squared edge: {min_sq_distance(list(pts))}", file=out)
    if args.cells and c.dim == 4:
        poly = C.polytope_of(args.name)
        print(f"  facets: {len(poly.facets)}", file=out)
        census = poly.census
        if not census and c.metadata.get("group"):
            census = cell_census(poly, build_named_group(c.metadata["group"]))
        if census:
            for (shape, stab), n in census_summary(census).items():
                print(f"    {n} x {shape} (stabilizer order {stab})", file=out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    try:
        selected = checks.select(args.scope)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failures = 0
    for c in selected:
        res = checks.run_check(c)
        failures += not res.passed
        print(res.row(), flush=True)
    print(f"{len(selected)} checks, {failures} failures")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# export


def _export_payload(name: str, fmt: str) -> str:
    c = C.construction(name)
    if c.is_group:
        raise UsageError(f"{name} is a group; export a point construction instead")
    meta = {"construction": name, "dimension": c.dim, **c.metadata}
    if fmt == "off":
        if c.dim != 3:
            raise UsageError(f"{name} is 4D; OFF needs a 3D solid, use `quatpoly project {name} --mode ...`")
        return to_off(_solid(name))
    if fmt == "csv":
        return to_csv(list(c.points))
    if c.dim == 3:
        solid = _solid(name)
        return dumps_json(to_json_doc(solid.vertices, solid.edges, solid.faces, meta))
    poly = C.polytope_of(name)
    return dumps_json(to_json_doc(list(c.points), poly.edges, poly.facets, meta))


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    log.info("wrote %s", path)


def cmd_export(args) -> int:
    _write(_export_payload(args.name, args.format), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# project


def project_solids(name: str, mode: str) -> tuple[dict, dict]:
    """Solids keyed by file stem, plus the census document."""
    if mode not in PROJECTABLE.get(name, ()):
        raise UsageError(f"mode {mode!r} is not supported for {name}; supported: "
                         + ", ".join(f"{k} ({', '.join(v)})" for k, v in PROJECTABLE.items()))
    solids: dict[str, Solid3] = {}
    census: dict = {"construction": name, "mode": mode}
    if mode == "pyritohedral":
        pts = C.construction(name).points
        parts = partition_by_real_part(pts)
        for label, part in parts.items():
            solids[f"{name}-pyritohedral-{_CLASS_SLUGS[label]}"] = hull3d([imag3(p) for p in part])
        orbits = pyritohedral_orbits(pts, C.construction("pyritohedral").group)
        census["orbit_sizes"] = [len(o) for o in orbits]
        census["classes"] = {label: {"real_part": label, "size": len(parts[label]),
                                     **_census_json(solids[f"{name}-pyritohedral-{_CLASS_SLUGS[label]}"])}
                             for label in parts}
    elif mode == "vertex-figure":
        vf = vertex_figure(C.snub24_polytope(), LAMBDA_I)
        solids[f"{name}-vertex-figure"] = vf.solid
        census["vertex"] = str(LAMBDA_I)
        census["solid"] = _census_json(vf.solid)
    else:
        cell = dual_cell(C.snub24_dual(), C.snub24_polytope(), LAMBDA_I)
        solids[f"{name}-dual-cell"] = cell.solid
        census["vertex"] = str(LAMBDA_I)
        census["center_kinds"] = dict(sorted(Counter(cell.kinds).items()))
        census["solid"] = _census_json(cell.solid)
    return solids, census


def cmd_project(args) -> int:
    solids, census = project_solids(args.name, args.mode)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for stem, solid in sorted(solids.items()):
        _write(to_off(solid), str(out / f"{stem}.off"))
        print(f"{stem}.off: {len(solid.vertices)} vertices, {len(solid.faces)} faces")
    _write(json.dumps(census, indent=1, sort_keys=True) + "\n", str(out / f"{args.name}-{args.mode}-census.json"))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quatpoly", description="Exact quaternionic Coxeter groups and 4D polytopes.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    p.add_argument("--threads", type=int, help="worker hint for hull computations (overrides QUATPOLY_THREADS)")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a named group or point set and summarize it")
    b.add_argument("name", choices=C.CONSTRUCTION_NAMES, metavar="NAME", help=", ".join(C.CONSTRUCTION_NAMES))
    b.add_argument("--cells", action="store_true", help="also compute facets and the cell census (4D sets)")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("scope", nargs="?", default="all", choices=("all",) + checks.SCOPES)
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export", help="write a construction as json, csv or off")
    e.add_argument("name", choices=C.CONSTRUCTION_NAMES, metavar="NAME")
    e.add_argument("--format", choices=("json", "csv", "off"), default="json")
    e.add_argument("-o", "--output", help="output file (default stdout)")
    e.set_defaults(func=cmd_export)

    pr = sub.add_parser("project", help="3D solids derived from a 4D construction")
    pr.add_argument("name", choices=C.CONSTRUCTION_NAMES, metavar="NAME")
    pr.add_argument("--mode", choices=PROJECT_MODES, required=True)
    pr.add_argument("-o", "--output", default=".", help="output directory")
    pr.set_defaults(func=cmd_project)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.threads is not None:
        if args.threads < 1:
            print("error: --threads must be at least 1", file=sys.stderr)
            return EXIT_USAGE
        os.environ["QUATPOLY_THREADS"] = str(args.threads)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
