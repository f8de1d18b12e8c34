"""Command-line interface: subcommands, exit codes, output determinism.

The CLI is a thin client; by default it talks to the service in-process, so
CliRunner exercises the full request/response path without a server."""

import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from leibnizalg.cli import main
from leibnizalg.corpus import e4, reduce_mod, sl2
from leibnizalg.serialize import algebra_to_dict


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("algebras")
    paths = {}
    for name, alg in (
        ("e4", e4()),
        ("sl2", sl2()),
        ("e4mod2", reduce_mod(e4(), 2)),
    ):
        p = root / f"{name}.json"
        p.write_text(json.dumps(algebra_to_dict(alg)))
        paths[name] = str(p)
    bad = root / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "field": {"kind": "Q"},
                "dim": 2,
                "products": [{"i": 1, "j": 2, "out": [[1, "1"]]}],
            }
        )
    )
    paths["bad"] = str(bad)
    notjson = root / "broken.json"
    notjson.write_text("{not json")
    paths["notjson"] = str(notjson)
    paths["dir"] = str(root)
    return paths


@pytest.fixture()
def runner():
    return CliRunner()


def test_validate_ok(runner, files):
    res = runner.invoke(main, ["validate", "--input", files["e4"]])
    assert res.exit_code == 0
    assert "valid left Leibniz algebra of dim 4" in res.output


def test_validate_rejects_identity_violation(runner, files):
    res = runner.invoke(main, ["validate", "--input", files["bad"]])
    assert res.exit_code == 2
    assert "leibniz_identity_violation" in res.output


def test_missing_file_is_exit_2(runner, files):
    res = runner.invoke(main, ["validate", "--input", files["dir"] + "/nope.json"])
    assert res.exit_code == 2


def test_unparseable_json_is_exit_2(runner, files):
    res = runner.invoke(main, ["validate", "--input", files["notjson"]])
    assert res.exit_code == 2


def test_analyze_text_output(runner, files):
    res = runner.invoke(main, ["analyze", "--input", files["e4"]])
    assert res.exit_code == 0
    assert "solvable" in res.output
    assert "nilradical dim 3" in res.output


def test_analyze_json_output(runner, files):
    res = runner.invoke(main, ["analyze", "--input", files["e4"], "--json"])
    assert res.exit_code == 0
    body = json.loads(res.output)
    assert body["lower_central_dims"] == [4, 2, 2]


def test_series_with_subspace(runner, files):
    res = runner.invoke(
        main,
        ["series", "--input", files["e4"], "--subspace", "1,0,0,0;0,1,0,0;0,0,1,0"],
    )
    assert res.exit_code == 0
    assert "nilpotent" in res.output


def test_subinvariant_chain(runner, files):
    res = runner.invoke(
        main, ["subinvariant", "--input", files["e4"], "--subspace", "0,0,1,0"]
    )
    assert res.exit_code == 0
    assert "PASS" in res.output
    assert "length 4" in res.output


def test_subinvariant_negative_still_exit_0(runner, files):
    # a correct "no" answer is a successful run
    res = runner.invoke(
        main, ["subinvariant", "--input", files["e4"], "--subspace", "0,0,0,1"]
    )
    assert res.exit_code == 0
    assert "not subinvariant" in res.output


def test_bad_subspace_coords_exit_2(runner, files):
    res = runner.invoke(
        main, ["subinvariant", "--input", files["e4"], "--subspace", "1,oops,0,0"]
    )
    assert res.exit_code == 2


def test_radical_and_nilradical(runner, files):
    res = runner.invoke(main, ["radical", "--input", files["sl2"]])
    assert res.exit_code == 0 and "radical dim 0" in res.output
    res = runner.invoke(main, ["nilradical", "--input", files["e4"]])
    assert res.exit_code == 0 and "nilradical dim 3" in res.output


def test_cartan_found(runner, files):
    res = runner.invoke(main, ["cartan", "--input", files["e4"]])
    assert res.exit_code == 0
    assert "cartan subalgebra dim 2" in res.output


def test_cartan_exhausted_is_exit_0(runner, files):
    res = runner.invoke(
        main, ["cartan", "--input", files["e4"], "--max-attempts", "1"]
    )
    assert res.exit_code == 0
    assert "search exhausted" in res.output


def test_tower_sl2(runner, files):
    res = runner.invoke(main, ["tower", "--input", files["sl2"]])
    assert res.exit_code == 0
    assert "bound 3 <= 3: holds" in res.output


def test_tower_rejection_is_exit_2(runner, files):
    res = runner.invoke(main, ["tower", "--input", files["e4"]])
    assert res.exit_code == 2
    assert "nonzero_left_center" in res.output


def test_oracle_check(runner, files):
    res = runner.invoke(main, ["oracle-check", "--input", files["e4mod2"]])
    assert res.exit_code == 0
    assert "status: ok" in res.output


def test_theorems_single_file(runner, files):
    res = runner.invoke(main, ["theorems", "--input", files["e4"]])
    assert res.exit_code == 0
    assert "ALL PASS" in res.output


def test_theorems_directory_fan_out(runner, files, tmp_path):
    d = tmp_path / "batch"
    d.mkdir()
    (d / "a_e4.json").write_text(json.dumps(algebra_to_dict(e4())))
    (d / "b_sl2.json").write_text(json.dumps(algebra_to_dict(sl2())))
    res = runner.invoke(main, ["theorems", "--input", str(d)])
    assert res.exit_code == 0
    assert "a_e4.json" in res.output and "b_sl2.json" in res.output
    assert "ALL PASS" in res.output


def test_theorems_empty_directory_exit_2(runner, tmp_path):
    d = tmp_path / "empty"
    d.mkdir()
    res = runner.invoke(main, ["theorems", "--input", str(d)])
    assert res.exit_code == 2


def test_theorems_failure_maps_to_exit_1(runner, files, monkeypatch):
    # force a failing battery through the service to pin the exit-code contract
    from leibnizalg import reports

    def fake_report(a, seed=0):
        return {
            "algebra": {"name": a.name, "dim": a.dim, "field": {"kind": "Q"}},
            "checks": [{"name": "forced", "status": "fail", "detail": "forced"}],
            "counts": {"pass": 0, "fail": 1, "skipped": 0, "info": 0},
            "all_passed": False,
        }

    monkeypatch.setattr(reports, "theorems_report", fake_report)
    res = runner.invoke(main, ["theorems", "--input", files["e4"]])
    assert res.exit_code == 1
    assert "FAILURES PRESENT" in res.output


def test_internal_defect_maps_to_exit_1(runner, files, monkeypatch):
    from leibnizalg import reports
    from leibnizalg.errors import TheoremViolation

    def boom(a):
        raise TheoremViolation("forced defect")

    monkeypatch.setattr(reports, "radical_report", boom)
    res = runner.invoke(main, ["radical", "--input", files["e4"]])
    assert res.exit_code == 1
    assert "theorem_violation" in res.output


def test_json_outputs_are_byte_identical_across_processes(files):
    cmd = [
        sys.executable,
        "-m",
        "leibnizalg.cli",
        "analyze",
        "--input",
        files["e4"],
        "--json",
        "--seed",
        "5",
    ]
    out1 = subprocess.run(cmd, capture_output=True, check=True).stdout
    out2 = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert out1 == out2
    assert json.loads(out1)["dim"] == 4


def test_help_lists_all_subcommands(runner):
    res = runner.invoke(main, ["--help"])
    assert res.exit_code == 0
    for sub in (
        "validate",
        "analyze",
        "series",
        "subinvariant",
        "radical",
        "nilradical",
        "cartan",
        "tower",
        "oracle-check",
        "theorems",
        "serve",
    ):
        assert sub in res.output
