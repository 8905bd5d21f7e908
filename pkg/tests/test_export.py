from fractions import Fraction

from hypothesis import given, strategies as st

from quatpoly import constructions as C
from quatpoly.algebra import SIGMA, TAU, FieldScalar
from quatpoly.export import (
    dumps_json, fmt_float, parse_off, read_json_vertices, to_csv, to_json_doc, to_off, vertex_record,
)
from quatpoly.project3d import hull3d, imag3

small = st.fractions(min_value=-20, max_value=20, max_denominator=9)
scalars = st.builds(FieldScalar, small, small, small, small)


def test_fmt_float():
    assert fmt_float(TAU) == "1.61803398875"
    assert fmt_float(SIGMA) == "-0.61803398875"
    assert fmt_float(-0.0) == "0"
    assert fmt_float(FieldScalar(Fraction(1, 3))) == "0.333333333333"
    assert fmt_float(2) == "2"


def test_vertex_record():
    rec = vertex_record((TAU, 0, 1))
    assert rec["approx"] == [1.61803398875, 0.0, 1.0]
    assert [FieldScalar.from_json(x) for x in rec["exact"]] == [TAU, FieldScalar(0), FieldScalar(1)]


@given(st.lists(st.tuples(scalars, scalars, scalars, scalars), max_size=6))
def test_json_round_trip_is_exact(rows):
    text = dumps_json(to_json_doc(rows, metadata={"k": "v"}))
    assert read_json_vertices(text) == [tuple(r) for r in rows]


def test_snub_json_round_trip():
    pts = list(C.construction("snub24").points)
    back = read_json_vertices(dumps_json(to_json_doc(pts)))
    assert back == [tuple(p.c) for p in pts]


def test_csv_header_and_rows():
    text = to_csv(list(C.construction("24cell").points))
    lines = text.splitlines()
    assert lines[0] == "x0,x1,x2,x3"
    assert len(lines) == 25


def test_off_icosahedron():
    s = hull3d([imag3(p) for p in C.construction("icosa-a3").points])
    verts, faces, ne = parse_off(to_off(s))
    assert (len(verts), len(faces), ne) == (12, 20, 30)
    assert all(len(f) == 3 for f in faces)


def test_output_is_byte_identical():
    pts = list(C.construction("snub24").points)
    a = dumps_json(to_json_doc(pts, metadata={"x": 1}))
    C.clear_caches()
    b = dumps_json(to_json_doc(list(C.construction("snub24").points), metadata={"x": 1}))
    assert a == b
    s = hull3d([imag3(p) for p in C.construction("trunc-oct-b3").points])
    assert to_off(s) == to_off(hull3d([imag3(p) for p in C.construction("trunc-oct-b3").points]))
