import json
import re
from pathlib import Path

import pytest

from quatpoly import checks, constructions, coxeter
from quatpoly.algebra import E0, E1, E2, E3
from quatpoly.cli import main
from quatpoly.export import parse_off, read_json_vertices


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_group(capsys):
    code, out, _ = run(capsys, "build", "snub-group")
    assert code == 0 and "order 576" in out


def test_build_points(capsys):
    assert "96 vertices" in run(capsys, "build", "snub24")[1]
    assert "192 vertices" in run(capsys, "build", "f4-union")[1]


def test_build_cells(capsys):
    code, out, _ = run(capsys, "build", "24cell", "--cells")
    assert code == 0 and "24" in out and "octahedron" in out


def test_usage_errors(capsys):
    assert run(capsys, "build", "no-such-thing")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "--threads", "0", "build", "24cell")[0] == 2
    assert run(capsys, "verify", "nowhere")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_off_for_4d_is_a_usage_error(capsys):
    code, _, err = run(capsys, "export", "snub24", "--format", "off")
    assert code == 2 and "quatpoly project snub24 --mode" in err


def test_export_group_is_a_usage_error(capsys):
    assert run(capsys, "export", "w-d4")[0] == 2


def test_unsupported_projection(capsys, tmp_path):
    code, _, err = run(capsys, "project", "600cell", "--mode", "pyritohedral", "-o", str(tmp_path))
    assert code == 2 and "snub24" in err


def test_export_json_round_trip(capsys, tmp_path):
    path = tmp_path / "s.json"
    assert run(capsys, "export", "snub24", "--format", "json", "-o", str(path))[0] == 0
    text = path.read_text()
    doc = json.loads(text)
    assert len(doc["vertices"]) == 96 and len(doc["facets"]) == 144
    assert set(read_json_vertices(text)) == {tuple(p.c) for p in constructions.construction("snub24").points}


def test_export_off_3d(capsys):
    code, out, _ = run(capsys, "export", "trunc-oct-b3", "--format", "off")
    verts, faces, ne = parse_off(out)
    assert code == 0 and (len(verts), len(faces), ne) == (24, 14, 36)


def test_project_pyritohedral(capsys, tmp_path):
    assert run(capsys, "project", "snub24", "--mode", "pyritohedral", "-o", str(tmp_path))[0] == 0
    offs = sorted(tmp_path.glob("*.off"))
    assert len(offs) == 7
    counts = sorted(len(parse_off(p.read_text())[0]) for p in offs)
    assert counts == [12] * 6 + [24]
    census = json.loads((tmp_path / "snub24-pyritohedral-census.json").read_text())
    assert sorted(census["orbit_sizes"]) == [12] * 6 + [24]


@pytest.mark.parametrize("mode,v,f", [("vertex-figure", 9, 8), ("dual-cell", 8, 9)])
def test_project_single_solids(capsys, tmp_path, mode, v, f):
    assert run(capsys, "project", "snub24", "--mode", mode, "-o", str(tmp_path))[0] == 0
    verts, faces, _ = parse_off((tmp_path / f"snub24-{mode}.off").read_text())
    assert (len(verts), len(faces)) == (v, f)


def test_outputs_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "project", "snub24", "--mode", "dual-cell", "-o", str(a))
    constructions.clear_caches()
    run(capsys, "--threads", "2", "project", "snub24", "--mode", "dual-cell", "-o", str(b))
    for p in sorted(a.iterdir()):
        assert p.read_bytes() == (b / p.name).read_bytes()
    run(capsys, "export", "24cell", "-o", str(a / "t.json"))
    run(capsys, "--threads", "3", "export", "24cell", "-o", str(b / "t.json"))
    assert (a / "t.json").read_bytes() == (b / "t.json").read_bytes()


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify", "algebra")
    assert code == 0
    assert re.search(r"\d+ checks, 0 failures", out)


def test_verify_scope_runs_only_that_scope(capsys, monkeypatch):
    seen = []

    def fake(c):
        seen.append(c.scope)
        return checks.CheckResult(c.criterion, c.scope, c.name, "-", "-", True, 0.0)

    monkeypatch.setattr(checks, "run_check", fake)
    assert run(capsys, "verify", "polytope")[0] == 0
    assert seen and set(seen) == {"polytope"}
    assert len(seen) == len(checks.select("polytope"))


def test_verify_reports_corrupted_group(capsys, monkeypatch):
    # a wrong fourth root generates a group of order 384 instead of 192
    monkeypatch.setattr(coxeter, "D4_SIMPLE_ROOTS", (E2 - E3, E1 + E3, -E2 - E3, E0 + E1 + E2 + E3))
    monkeypatch.setattr(checks, "REGISTRY", [c for c in checks.REGISTRY
                                             if c.criterion in (1, 2) and "W_H4" not in c.name])
    constructions.clear_caches()
    try:
        code, out, _ = run(capsys, "verify", "coxeter")
    finally:
        monkeypatch.undo()
        constructions.clear_caches()
    assert code == 1
    fails = [ln for ln in out.splitlines() if ln.startswith("[FAIL]")]
    assert any("W_D4" in ln and "384" in ln for ln in fails)


def test_every_criterion_has_checks_and_tests():
    assert checks.criteria_covered() == set(checks.ACCEPTANCE_CRITERIA) == set(range(1, 11))
    text = (Path(__file__).parent / "test_acceptance.py").read_text()
    for k in range(1, 11):
        assert re.search(rf"def test_criterion_{k}_\w+", text) or f"test_criterion_{k}_" in text, k
