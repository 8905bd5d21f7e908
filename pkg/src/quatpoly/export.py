"""JSON / CSV / OFF writers. Output is canonical so repeated runs are byte-identical."""
from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .algebra import FieldScalar, Quaternion
from .project3d import Solid3

FLOAT_DIGITS = 12


def fmt_float(x) -> str:
    """12 significant digits, no locale, no negative zero."""
    v = float(x)
    s = f"{v:.{FLOAT_DIGITS}g}"
    return "0" if s == "-0" else s


def approx(x) -> float:
    return float(fmt_float(x))


def _coords(p) -> tuple:
    return tuple(p.c) if isinstance(p, Quaternion) else tuple(FieldScalar.coerce(x) for x in p)


def vertex_record(p) -> dict:
    cs = _coords(p)
    return {"exact": [c.to_json() for c in cs], "approx": [approx(c) for c in cs]}


def to_json_doc(vertices: Sequence, edges: Sequence = (), facets: Sequence = (),
                metadata: Optional[dict] = None) -> dict:
    return {
        "metadata": dict(metadata or {}),
        "vertices": [vertex_record(p) for p in vertices],
        "edges": [list(e) for e in edges],
        "facets": [list(f) for f in facets],
    }


def dumps_json(doc: dict) -> str:
    """Sorted keys, one list item per line."""
    out = ["{"]
    keys = sorted(doc)
    for n, k in enumerate(keys):
        v = doc[k]
        tail = "," if n < len(keys) - 1 else ""
        if isinstance(v, list):
            items = [" " + json.dumps(x, sort_keys=True) for x in v]
            body = ",\n".join(items)
            out.append(f"{json.dumps(k)}: [\n{body}\n]{tail}" if items else f"{json.dumps(k)}: []{tail}")
        else:
            out.append(f"{json.dumps(k)}: {json.dumps(v, sort_keys=True)}{tail}")
    out.append("}")
    return "\n".join(out) + "\n"


def read_json_vertices(text: str) -> list[tuple[FieldScalar, ...]]:
    """Exact vertices back from an exported JSON document."""
    doc = json.loads(text)
    return [tuple(FieldScalar.from_json(c) for c in v["exact"]) for v in doc["vertices"]]


def to_csv(vertices: Sequence) -> str:
    buf = io.StringIO()
    rows = [_coords(p) for p in vertices]
    dim = len(rows[0]) if rows else 4
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i}" for i in range(dim)])
    for r in rows:
        w.writerow([fmt_float(x) for x in r])
    return buf.getvalue()


def to_off(solid: Solid3) -> str:
    """OFF text; faces keep the outward (counter-clockwise) order of the hull."""
    lines = ["OFF", f"{len(solid.vertices)} {len(solid.faces)} {len(solid.edges)}"]
    for v in solid.vertices:
        lines.append(" ".join(fmt_float(x) for x in v))
    for f in solid.faces:
        lines.append(" ".join(str(x) for x in (len(f), *f)))
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[tuple[int, ...]], int]:
    toks = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if toks[0] != ["OFF"]:
        raise ValueError("missing OFF header")
    nv, nf, ne = map(int, toks[1])
    verts = [tuple(float(x) for x in t) for t in toks[2:2 + nv]]
    faces = [tuple(int(x) for x in t[1:]) for t in toks[2 + nv:2 + nv + nf]]
    for t, f in zip(toks[2 + nv:], faces):
        if int(t[0]) != len(f):
            raise ValueError("face length mismatch")
    return verts, faces, ne
