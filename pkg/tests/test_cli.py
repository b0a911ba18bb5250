"""Command-line verbs, JSON reports, and the exit-code contract."""

import json

import pytest

from biplane_schemes import cli
from biplane_schemes.binmat import format_matrix, identity
from biplane_schemes.extract import CounterexampleError


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    payload = json.loads(out) if out.strip() else None
    return code, payload, err


@pytest.fixture()
def fixture_dir(tmp_path, capsys):
    target = tmp_path / "fx"
    code, payload, _ = run_json(capsys, "fixtures", "--out", str(target))
    assert code == 0
    assert payload["schema_version"] == 1
    return target


def test_verify_biplane(fixture_dir, capsys):
    code, payload, _ = run_json(capsys, "verify", str(fixture_dir / "b4c.txt"))
    assert code == 0
    assert payload["verified"] is True
    assert payload["kind"] == "biplane"
    assert payload["design"] == {
        "k": 6, "v": 16, "order": 4,
        "canonical": True, "full_trace": True, "symmetric": True,
    }


def test_verify_pbibd(fixture_dir, capsys):
    code, payload, _ = run_json(capsys, "verify", str(fixture_dir / "core16_2.txt"))
    assert code == 0
    assert payload["kind"] == "pbibd"
    assert payload["design"]["lambda"] == [0, 1, 2]
    assert payload["design"]["n"] == [11, 2, 2]


def test_verify_false(tmp_path, capsys):
    path = tmp_path / "id4.txt"
    path.write_text(format_matrix(identity(4)))
    code, payload, _ = run_json(capsys, "verify", str(path))
    assert code == 1
    assert payload["verified"] is False
    assert "biplane" in payload["reasons"] and "pbibd" in payload["reasons"]


def test_verify_not_even_uniform(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n1 1\n1 0\n")
    code, payload, _ = run_json(capsys, "verify", str(path))
    assert code == 1
    assert payload["verified"] is False


def test_missing_and_malformed_files(tmp_path, capsys):
    code, _, err = run_cli(capsys, "verify", str(tmp_path / "absent.txt"))
    assert code == 2
    assert "error:" in err

    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 x\nx 1\n")
    code, _, err = run_cli(capsys, "verify", str(bad))
    assert code == 2


def test_usage_errors(capsys):
    assert run_cli(capsys, "bogus")[0] == 2
    assert run_cli(capsys)[0] == 2
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "search", "--help")[0] == 0
    assert run_cli(capsys, "verify")[0] == 2
    assert run_cli(capsys, "search", "--k", "4", "--nonsense")[0] == 2


def test_extract(fixture_dir, tmp_path, capsys):
    core_path = tmp_path / "core.txt"
    code, payload, _ = run_json(
        capsys, "extract", str(fixture_dir / "b4c.txt"), "--core-out", str(core_path))
    assert code == 0
    assert payload["verified"] is True
    assert payload["indices"] == [8, 9, 10, 11, 12, 13]
    assert payload["pbibd"]["n"] == [1, 2, 2]
    assert core_path.exists()

    code, verify_payload, _ = run_json(capsys, "verify", str(core_path))
    assert code == 0
    assert verify_payload["kind"] == "pbibd"


def test_extract_rejects_plain_pbibd(fixture_dir, capsys):
    code, payload, _ = run_json(capsys, "extract", str(fixture_dir / "core16_1.txt"))
    assert code == 1
    assert payload["verified"] is False


def test_extract_counterexample_exits_3(fixture_dir, capsys, monkeypatch):
    def boom(m):
        raise CounterexampleError("forced for the exit-code contract")

    monkeypatch.setattr(cli, "extract_design", boom)
    code, out, err = run_cli(capsys, "extract", str(fixture_dir / "b4c.txt"))
    assert code == 3
    assert "counterexample" in err


def test_family_round_trip(tmp_path, capsys):
    out_path = tmp_path / "d3.txt"
    code, payload, _ = run_json(capsys, "family", "--m", "3", "--out", str(out_path))
    assert code == 0
    assert payload["m"] == 3
    assert payload["d"] == 3
    assert payload["lambda"] == [0, 1, 2]

    code, verify_payload, _ = run_json(capsys, "verify", str(out_path))
    assert code == 0
    assert verify_payload["kind"] == "pbibd"
    assert verify_payload["design"]["d"] == 3


def test_family_bad_m(capsys):
    code, _, err = run_cli(capsys, "family", "--m", "2")
    assert code == 2


def test_search_exhausts_small_k(capsys):
    code, payload, _ = run_json(capsys, "search", "--k", "4")
    assert code == 0
    assert payload["exhausted"] is True
    assert payload["solution_count"] == 0


def test_search_solutions_out(tmp_path, capsys):
    sink = tmp_path / "solutions.txt"
    code, payload, _ = run_json(
        capsys, "search", "--k", "3", "--solutions-out", str(sink))
    assert code == 0
    assert payload["solution_count"] == 1
    text = sink.read_text()
    assert text.startswith("4 4\n")

    # appending is the contract
    code, _, _ = run_json(
        capsys, "search", "--k", "3", "--solutions-out", str(sink))
    assert sink.read_text().count("4 4\n") == 2


def test_search_long_run_gate(capsys):
    code, _, err = run_cli(capsys, "search", "--k", "9")
    assert code == 2
    assert "--long-run" in err
    code, _, _ = run_cli(capsys, "search", "--k", "2")
    assert code == 2


def test_search_threads_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "2")
    code, payload, _ = run_json(capsys, "search", "--k", "6")
    assert code == 0
    assert payload["solution_count"] == 1

    monkeypatch.setenv(cli.THREADS_ENV, "soup")
    code, _, err = run_cli(capsys, "search", "--k", "4")
    assert code == 2


def test_search_checkpoint_flag(tmp_path, capsys):
    ck = tmp_path / "ck.json"
    code, payload, _ = run_json(
        capsys, "search", "--k", "6", "--checkpoint", str(ck))
    assert code == 0
    assert ck.exists()


def test_scheme_valid(fixture_dir, capsys):
    code, payload, _ = run_json(capsys, "scheme", str(fixture_dir / "relation6.txt"))
    assert code == 0
    assert payload["valid"] is True
    assert payload["scheme"]["n"] == [1, 1, 2, 2]
    assert payload["bose_mesner"] == {
        "closure": True, "commutative": True, "sum_to_all_ones": True,
    }


def test_scheme_invalid_intersection_numbers(tmp_path, capsys):
    path = tmp_path / "p3.txt"
    path.write_text("3 3\n0 1 2\n1 0 1\n2 1 0\n")
    code, payload, _ = run_json(capsys, "scheme", str(path))
    assert code == 1
    assert payload["valid"] is False
    assert payload["axiom"] == "intersection-numbers"
    assert payload["witness"]["count_a"] != payload["witness"]["count_b"]


def test_scheme_axiom_gate(tmp_path, capsys):
    path = tmp_path / "diag.txt"
    path.write_text("2 2\n1 1\n1 0\n")
    code, payload, _ = run_json(capsys, "scheme", str(path))
    assert code == 1
    assert payload["axiom"] == "diagonal"


def test_fixtures_listing(tmp_path, capsys):
    target = tmp_path / "fx"
    code, payload, _ = run_json(capsys, "fixtures", "--out", str(target))
    assert code == 0
    assert "b4c.txt" in payload["files"]
    assert "metadata.json" in payload["files"]
    assert (target / "relation6.txt").exists()


def test_every_report_carries_schema_version(fixture_dir, capsys):
    for argv in (
        ["verify", str(fixture_dir / "b4c.txt")],
        ["extract", str(fixture_dir / "b4c.txt")],
        ["family", "--m", "4"],
        ["search", "--k", "3"],
        ["scheme", str(fixture_dir / "relation6.txt")],
    ):
        _, payload, _ = run_json(capsys, *argv)
        assert payload["schema_version"] == 1
