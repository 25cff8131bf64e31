import json

from click.testing import CliRunner

from blrings.cli import main
from blrings.construct import zmod


def run(*args):
    return CliRunner().invoke(main, list(args))


def test_check_text_output():
    result = run("check", "zmod(6)")
    assert result.exit_code == 0
    assert "pseudo-bl-ring: true" in result.output
    assert "subdirectly-irreducible: false" in result.output


def test_check_json_schema():
    result = run("check", "zmod(6)", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["schema"] == "blrings-report-v1"
    assert payload["order"] == 6 and payload["ideal_count"] == 4
    assert payload["predicates"]["multiplication-ring"]["verdict"] is True


def test_json_round_trip_byte_identical():
    for args in (("check", "zmod(12)", "--format", "json"),
                 ("ideals", "zmod(12)", "--format", "json"),
                 ("algebra", "zmod(12)", "--format", "json"),
                 ("decompose", "zmod(12)", "--format", "json")):
        out = run(*args).output
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


def test_ideals_listing():
    result = run("ideals", "zmod(12)")
    assert result.exit_code == 0
    assert "{0,6}" in result.output and "star-dense" in result.output


def test_ideals_dot_output():
    result = run("ideals", "zmod(6)", "--dot")
    assert result.exit_code == 0
    assert result.output.startswith("digraph ideals {")
    assert 'label="{0,2,4}"' in result.output
    assert result.output == run("ideals", "zmod(6)", "--dot").output


def test_algebra_reports():
    result = run("algebra", "zmod(4)", "--format", "json")
    payload = json.loads(result.output)
    axioms = {r["axiom"]: r["holds"] for r in payload["axioms"]["pseudo_mv"]}
    assert all(axioms.values())
    assert payload["mv_center"] == [0, 1, 2]


def test_decompose_output():
    result = run("decompose", "zmod(12)", "--format", "json")
    payload = json.loads(result.output)
    assert payload["kernels_intersect_to_zero"] is True
    assert sorted(f["order"] for f in payload["factors"]) == [2, 3, 4]
    assert all(all(f["checks"].values()) for f in payload["factors"])


def test_exit_code_parse_error():
    assert run("check", "mystery(4)").exit_code == 2


def test_exit_code_construction_error():
    assert run("check", "quotient(zmod(4),[9])").exit_code == 3


def test_exit_code_size_bound():
    assert run("check", "zmod(999)").exit_code == 4
    assert run("check", "zmod(32)", "--max-order", "16").exit_code == 4


def test_props_none_corpus():
    result = run("props", "--corpus", "none", "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.output)["records"] == []


def test_props_only_single_column():
    result = run("props", "--corpus", "base", "--only", "P3.5",
                 "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert {r["property"] for r in payload["records"]} == {"P3.5"}
    assert {r["outcome"] for r in payload["records"]} <= {"pass", "vacuous"}


def test_props_unknown_selector_exit_codes():
    assert run("props", "--corpus", "mystery").exit_code == 2
    assert run("props", "--corpus", "base", "--only", "Z9.9").exit_code == 2


def test_tables_spec_via_cli(tmp_path):
    r = zmod(4)
    path = tmp_path / "z4.tables"
    nums = [r.order, r.zero] + list(r.add.ravel()) + list(r.mul.ravel())
    path.write_text(" ".join(str(v) for v in nums))
    result = run("check", f"tables({path})")
    assert result.exit_code == 0
    assert "special-primary: true" in result.output
    bad = tmp_path / "bad.tables"
    bad.write_text("2 0 0 0 0 0 0 0 0 0")
    assert run("check", f"tables({bad})").exit_code == 3
