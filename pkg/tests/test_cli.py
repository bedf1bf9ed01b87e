import json
from fractions import Fraction

import pytest

from detmult.cli import main, render_float
from detmult.exactnum import parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_j_text(capsys):
    code, out, _ = run(capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2")
    assert code == 0
    assert out.strip() == "64"


def test_eps_json_schema(capsys):
    code, out, _ = run(
        capsys, "eps", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "341/16"
    assert payload["kind"] == "generic"
    assert payload["quantity"] == "eps"
    assert set(payload) == {
        "kind", "m", "n", "t", "quantity", "value", "value_float", "engine",
        "simplex_count",
    }


def test_text_json_roundtrip(capsys):
    _, text_out, _ = run(
        capsys, "eps", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2"
    )
    _, json_out, _ = run(
        capsys, "eps", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--format", "json",
    )
    assert parse_rational(text_out.strip()) == parse_rational(
        json.loads(json_out)["value"]
    )


def test_csv_format(capsys):
    code, out, _ = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "kind,m,n,t,quantity,value"
    assert lines[1] == "generic,3,4,2,j,64"


def test_engine_both(capsys):
    code, out, _ = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--engine", "both",
    )
    assert code == 0
    assert out.strip() == "64"


def test_scroll(capsys):
    code, out, _ = run(capsys, "scroll", "3", "2")
    assert code == 0 and out.strip() == "10"
    code, out, _ = run(capsys, "scroll", "4")
    assert code == 0 and out.strip() == "4"


def test_selberg(capsys):
    code, out, _ = run(capsys, "selberg", "--m", "2", "--n", "4")
    assert code == 0
    assert "equal" in out


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--m", "3", "--n", "3")
    assert code == 0 and out.strip() == "2"


def test_oracle_s_list(capsys):
    code, out, _ = run(
        capsys, "oracle", "--kind", "generic", "--m", "3", "--n", "3", "--t", "2",
        "--s-list", "10,20", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "s,count,estimate,ratio_to_exact"
    assert len(lines) == 3


def test_missing_m_is_domain_error(capsys):
    code, _, err = run(capsys, "j", "--kind", "generic", "--n", "4", "--t", "2")
    assert code == 1
    assert "m" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["j", "--kind", "bogus", "--n", "4", "--t", "2"])
    assert exc.value.code == 2


def test_cache_roundtrip(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    args = ["j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
            "--cache", str(cache)]
    assert main(args) == 0
    capsys.readouterr()
    record = json.loads(cache.read_text().strip())
    assert record["value"] == "64"
    # second run hits the cache and appends nothing new
    assert main(args) == 0
    capsys.readouterr()
    assert len(cache.read_text().strip().splitlines()) == 1
    # verify mode recomputes and still exits 0
    assert main(args + ["--verify-cache"]) == 0
    capsys.readouterr()


def test_cache_corrupt_line_warns(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    cache.write_text("this is not json\n")
    code, out, err = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--cache", str(cache),
    )
    assert code == 0 and out.strip() == "64"
    assert "corrupt" in err


def test_cache_mismatch_detected(tmp_path, capsys):
    cache = tmp_path / "cache.jsonl"
    record = {"kind": "generic", "m": 3, "n": 4, "t": 2, "quantity": "j",
              "value": "65", "engine": "monomial"}
    cache.write_text(json.dumps(record) + "\n")
    code, _, err = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--cache", str(cache), "--verify-cache",
    )
    assert code == 1
    assert "disagrees" in err


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "env_cache.jsonl"
    monkeypatch.setenv("DETMULT_CACHE", str(cache))
    code, out, _ = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2"
    )
    assert code == 0 and out.strip() == "64"
    assert cache.exists()


def test_table1_single_row(capsys):
    code, out, _ = run(capsys, "table1", "--rows", "2,3,3")
    assert code == 0
    assert "j=2" in out and "eps=1/2" in out
    assert "1/1 rows match" in out


def test_table1_injected_mismatch(capsys):
    code, out, _ = run(capsys, "table1", "--rows", "2,3,3", "--inject-mismatch")
    assert code == 1
    assert "MISMATCH" in out


def test_float_digits_round_half_even(capsys):
    assert render_float(Fraction(1, 8), 2) == "0.12"  # ties to even
    assert render_float(Fraction(3, 8), 2) == "0.38"
    assert render_float(Fraction(341, 16), 3) == "21.312"
    code, out, _ = run(
        capsys, "eps", "--kind", "generic", "--m", "3", "--n", "4", "--t", "2",
        "--format", "json", "--float-digits", "4",
    )
    assert json.loads(out)["value_float"] == "21.3125"


def test_integrate_subcommand(tmp_path, capsys):
    # int_0^{1/2} (1 - 2 z)^2 dz = 1/6
    problem = {
        "dim": 1,
        "inequalities": [["-1", "0"], ["1", "1/2"]],
        "polynomial": [["1", [0]], ["-4", [1]], ["4", [2]]],
    }
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(problem))
    code, out, _ = run(capsys, "integrate", str(path))
    assert code == 0
    assert out.strip() == "1/6"


def test_integrate_dump_triangulation(tmp_path, capsys):
    problem = {
        "dim": 2,
        "inequalities": [
            ["-1", "0", "0"], ["0", "-1", "0"], ["1", "0", "1"], ["0", "1", "1"],
        ],
        "polynomial": [["1", [1, 1]]],
    }
    path = tmp_path / "square.json"
    path.write_text(json.dumps(problem))
    code, out, err = run(
        capsys, "integrate", str(path), "--dump-triangulation", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "1/4"
    dump = json.loads(err)
    assert dump["simplices"]


def test_invalid_range_is_zero_not_error(capsys):
    code, out, _ = run(
        capsys, "j", "--kind", "generic", "--m", "3", "--n", "5", "--t", "3"
    )
    assert code == 0 and out.strip() == "0"
