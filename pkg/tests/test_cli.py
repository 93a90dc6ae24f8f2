from __future__ import annotations

import json
import subprocess
import sys

import pytest

from segalkit.cli import EXIT_DISTINGUISHED, EXIT_INPUT, EXIT_OK, main
from strategies import fixture_path


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv) -> tuple[int, dict]:
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# ---------------------------------------------------------------- documented examples


def test_check_segal_z2(capsys) -> None:
    code, out, _ = run(capsys, "check-segal", fixture_path("z2"))
    assert code == EXIT_OK
    assert "n=2: ISO" in out and "n=3: ISO" in out


def test_characterize_walking_arrow(capsys) -> None:
    code, data = run_json(capsys, "characterize", "--levels", "1", fixture_path("walking_arrow"))
    assert code == EXIT_OK
    assert [lv["components"] for lv in data["levels"]] == [[2, 2], [3, 3]]


def test_hammock_formal_inverse(capsys) -> None:
    code, data = run_json(capsys, "hammock-pi0", "--from", "y", "--to", "x", "--len", "5", fixture_path("walking_arrow_weq"))
    assert code == EXIT_OK
    assert (data["count"], data["stable"]) == (1, True)


def test_characterize_z2_levels(capsys) -> None:
    code, data = run_json(capsys, "characterize", fixture_path("z2"))
    assert code == EXIT_OK
    assert [lv["verdict"] for lv in data["levels"]] == ["EQUIVALENT-AT-INVARIANT-LEVEL"] * 3


@pytest.mark.parametrize("n", [2, 3])
def test_characterize_simplicial_group(capsys, n) -> None:
    code, out, _ = run(capsys, "characterize", "--dim", "3", "--maxdeg", "2", fixture_path(f"const_z{n}_simpcat"))
    assert code == EXIT_OK
    assert "EQUIVALENT" in out


def test_ho_category_walking_arrow(capsys) -> None:
    code, out, _ = run(capsys, "ho-category", "--nmax", "2", "--dim", "2", fixture_path("walking_arrow"))
    assert code == EXIT_OK and "isomorphic to input: yes" in out


def test_classification_with_isos_matches_classifying(capsys) -> None:
    flags = ("--nmax", "2", "--dim", "2", fixture_path("walking_iso"))
    _, a = run_json(capsys, "classifying-diagram", *flags)
    _, b = run_json(capsys, "classification-diagram", "--weq-iso", *flags)
    assert a["levels"] == b["levels"]


# ---------------------------------------------------------------- exit codes


def test_distinguished_exit_codes(capsys) -> None:
    code, out, _ = run(capsys, "dk-compare", "--nmax", "2", "--dim", "2", fixture_path("walking_arrow"), fixture_path("terminal"))
    assert code == EXIT_DISTINGUISHED and out.startswith("NOT-DK-EQUIVALENT")
    code, out, _ = run(capsys, "check-complete", "--nmax", "2", "--dim", "2", fixture_path("walking_arrow_weq"))
    assert code == EXIT_DISTINGUISHED and out.startswith("NOT-STRICT-SEGAL")


def test_corrupted_fixture_is_invalid(capsys) -> None:
    code, data = run_json(capsys, "validate", fixture_path("corrupted"))
    assert code == EXIT_INPUT and not data["valid"]
    assert any(v.startswith("unknown-composite") for v in data["violations"])


def test_commands_refuse_invalid_category(capsys) -> None:
    code, _, err = run(capsys, "nerve", fixture_path("corrupted"))
    assert code == EXIT_INPUT and "not a category" in err


def test_parse_error_reports_position(capsys, tmp_path) -> None:
    bad = tmp_path / "bad.json"
    bad.write_text('{"objects": ["a"],\n  "morphisms": [}\n')
    code, _, err = run(capsys, "validate", bad)
    assert code == EXIT_INPUT and "line 2" in err


@pytest.mark.parametrize(
    "doc, fragment",
    [
        ({"morphisms": []}, "objects"),
        ({"objects": "a", "morphisms": [], "identities": {}, "compose": []}, "objects"),
        ({"objects": ["a"], "morphisms": [[1, "a", "a"]], "identities": {"a": 1}, "compose": []}, "strings"),
    ],
)
def test_field_errors(capsys, tmp_path, doc, fragment) -> None:
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", path)
    assert code == EXIT_INPUT and fragment in err


def test_unknown_object(capsys) -> None:
    code, _, err = run(capsys, "hammock-pi0", "--from", "x", "--to", "q", fixture_path("walking_arrow"))
    assert code == EXIT_INPUT and "unknown object" in err


def test_missing_file(capsys, tmp_path) -> None:
    code, _, err = run(capsys, "nerve", tmp_path / "absent.json")
    assert code == EXIT_INPUT and err.startswith("error:")


def test_non_group_aut_h(capsys, tmp_path) -> None:
    # {1, e} with e idempotent and an edge from e to 1
    table = [[a, b, "e" if "e" in (a, b) else "1"] for a in ("1", "e") for b in ("1", "e")]
    rank = {"s1": 2, "t": 1, "se": 0}
    els = ["s1", "se", "t"]
    table1 = [[a, b, min(a, b, key=rank.__getitem__)] for a in els for b in els]
    doc = {
        "objects": ["*"],
        "identities": {"*": "1"},
        "mapspaces": [
            {
                "source": "*",
                "target": "*",
                "space": {
                    "simplices": [["1", "e"], els],
                    "faces": [[[], []], [[0, 0], [1, 1], [0, 1]]],
                    "degens": [[[0], [1]], [[], [], []]],
                },
            }
        ],
        "composition": [{"objects": ["*", "*", "*"], "levels": [table, table1]}],
    }
    path = tmp_path / "monoid.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "characterize", path)
    assert code == EXIT_DISTINGUISHED and out.startswith("NONGROUP-AUTH")


# ---------------------------------------------------------------- determinism and round trips


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_reports_are_byte_identical(capsys, tmp_path, fmt) -> None:
    outs = []
    for i in range(2):
        out = tmp_path / f"r{i}.{fmt}"
        main(["classifying-diagram", "--nmax", "2", "--dim", "3", "--format", fmt, "--out", str(out), str(fixture_path("z2"))])
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] and outs[0]


def test_nerve_json_round_trip(capsys, tmp_path) -> None:
    out = tmp_path / "nerve.json"
    assert main(["nerve", "--dim", "4", "--format", "json", "--out", str(out), str(fixture_path("z3"))]) == EXIT_OK
    first = json.loads(out.read_text())
    code, again = run_json(capsys, "homology", out)
    assert code == EXIT_OK
    for key in ("counts", "pi0", "betti", "torsion"):
        assert again[key] == first[key]
    assert first["torsion"][1] == [3]


def test_selftest(capsys) -> None:
    code, out, _ = run(capsys, "selftest")
    assert code == EXIT_OK
    assert out.rstrip().endswith("checks passed") and "FAIL" not in out


def test_module_entry_point() -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "segalkit", "validate", str(fixture_path("walking_iso"))],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == EXIT_OK and proc.stdout.startswith("VALID")


def test_help_lists_commands(capsys) -> None:
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    for name in ("check-segal", "hammock-pi0", "characterize", "selftest"):
        assert name in out
