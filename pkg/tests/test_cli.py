"""Command-line behavior: subcommands, exit codes, error JSON, plumbing."""
import json
import os

import pytest

from sciprod.cli import main
from sciprod.ingestion import write_bundle

from conftest import build_f1


@pytest.fixture
def f1_dir(tmp_path):
    data = tmp_path / "data"
    write_bundle(build_f1(), str(data))
    return data


@pytest.fixture
def run_toml(tmp_path, f1_dir):
    path = tmp_path / "run.toml"
    path.write_text(
        f"""
out_dir = "{tmp_path / 'out'}"

[inputs]
dir = "{f1_dir}"

[cohort]
min_sc_professors = 1
""",
        encoding="utf-8",
    )
    return path


def stderr_json(capsys):
    err = capsys.readouterr().err.strip().splitlines()
    return json.loads(err[-1])


def test_validate_ok(f1_dir, tmp_path, capsys):
    code = main(["validate", str(f1_dir), "--out", str(tmp_path / "out")])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("validation: 0 fatal, 0 row error(s), 0 warning(s)")
    with open(tmp_path / "out" / "validation.json") as fh:
        payload = json.load(fh)
    assert payload["valid"] is True


def test_validate_broken_dataset(f1_dir, tmp_path, capsys):
    os.remove(f1_dir / "journals.csv")
    code = main(["validate", str(f1_dir), "--out", str(tmp_path / "out")])
    assert code == 1
    with open(tmp_path / "out" / "validation.json") as fh:
        payload = json.load(fh)
    assert payload["valid"] is False
    assert any(i["rule"] == "missing_file" for i in payload["issues"])


def test_run_writes_everything(run_toml, tmp_path, capsys):
    code = main(["run", "--config", str(run_toml)])
    assert code == 0
    out_dir = tmp_path / "out"
    names = {p.name for p in out_dir.iterdir()}
    assert names == {
        "validation.json", "indicators.csv", "summary_overall.csv",
        "summary_discipline.csv", "outperform_counts.csv",
        "gap_O.csv", "gap_FO.csv", "gap_AC.csv", "gap_AIF.csv",
    }
    assert "3/5 professors eligible" in capsys.readouterr().out


def test_compute_writes_only_indicators(run_toml, tmp_path, capsys):
    code = main(["compute", "--config", str(run_toml)])
    assert code == 0
    assert {p.name for p in (tmp_path / "out").iterdir()} == {"indicators.csv"}


def test_report_writes_only_reports(run_toml, tmp_path, capsys):
    code = main(["report", "--config", str(run_toml)])
    assert code == 0
    names = {p.name for p in (tmp_path / "out").iterdir()}
    assert "indicators.csv" not in names
    assert len(names) == 7


def test_flags_override_config(run_toml, tmp_path, capsys):
    code = main(["report", "--config", str(run_toml),
                 "--format", "json", "--countries", "NO,IT"])
    assert code == 0
    with open(tmp_path / "out" / "gap_O.json") as fh:
        payload = json.load(fh)
    assert payload["country_a"] == "NO"
    assert payload["country_b"] == "IT"


def test_emit_baselines_flag(run_toml, tmp_path, capsys):
    target = tmp_path / "cells.csv"
    code = main(["compute", "--config", str(run_toml),
                 "--emit-baselines", str(target)])
    assert code == 0
    assert target.exists()


def test_no_inputs_is_an_error(capsys):
    code = main(["run"])
    assert code == 1
    payload = stderr_json(capsys)
    assert payload["error"] == "no_inputs"


def test_bad_countries_syntax(f1_dir, capsys):
    code = main(["run", str(f1_dir), "--countries", "IT"])
    assert code == 1
    assert stderr_json(capsys)["error"] == "country_pair"


def test_fatal_data_fails_run(f1_dir, tmp_path, capsys):
    os.remove(f1_dir / "journals.csv")
    code = main(["run", str(f1_dir), "--out", str(tmp_path / "out")])
    assert code == 1
    assert stderr_json(capsys)["error"] == "missing_file"


def test_bad_decile_is_runtime_error(f1_dir, capsys):
    code = main(["run", str(f1_dir), "--decile", "0"])
    assert code == 2
    assert stderr_json(capsys)["error"] == "runtime"


def test_missing_config_file(capsys):
    code = main(["run", "--config", "/nonexistent/run.toml"])
    assert code == 2
    assert stderr_json(capsys)["error"] == "runtime"


def test_generate_default_profile(tmp_path, capsys):
    out = tmp_path / "synth"
    code = main(["generate", "--seed", "5", "--out", str(out),
                 "--professors", "IT=12,NO=8"])
    assert code == 0
    assert "generated 20 professors" in capsys.readouterr().out
    assert {p.name for p in out.iterdir()} == {
        "personnel.csv", "publications.csv", "authorships.csv",
        "journals.csv", "salaries.csv", "capital.csv", "scmap.csv",
    }


def test_generate_is_repeatable(tmp_path, capsys):
    for label in ("a", "b"):
        main(["generate", "--seed", "9", "--out", str(tmp_path / label),
              "--professors", "IT=10,NO=5"])
    for name in ("personnel.csv", "publications.csv"):
        assert (tmp_path / "a" / name).read_bytes() == \
            (tmp_path / "b" / name).read_bytes()


def test_generate_from_toml_with_seed_override(tmp_path, capsys):
    config = tmp_path / "synth.toml"
    config.write_text(
        """
seed = 1

[countries]
IT = 6
NO = 4

[[sc]]
code = "CARD"
discipline = "Clinical medicine"

[[sc]]
code = "MATH"
discipline = "Mathematics"
""",
        encoding="utf-8",
    )
    out = tmp_path / "synth"
    code = main(["generate", "--config", str(config), "--seed", "77",
                 "--out", str(out)])
    assert code == 0
    assert "generated 10 professors" in capsys.readouterr().out
    # override means a different stream than seed 1
    other = tmp_path / "other"
    main(["generate", "--config", str(config), "--out", str(other)])
    assert (out / "publications.csv").read_bytes() != \
        (other / "publications.csv").read_bytes()


def test_generated_data_flows_into_run(tmp_path, capsys):
    data = tmp_path / "data"
    main(["generate", "--seed", "21", "--out", str(data),
          "--professors", "IT=60,NO=40"])
    code = main(["run", str(data), "--out", str(tmp_path / "out")])
    assert code == 0
    assert (tmp_path / "out" / "indicators.csv").exists()


def test_end_to_end_cli_determinism(tmp_path, capsys):
    data = tmp_path / "data"
    main(["generate", "--seed", "33", "--out", str(data),
          "--professors", "IT=50,NO=30"])
    for label in ("x", "y"):
        code = main(["run", str(data), "--out", str(tmp_path / label)])
        assert code == 0
    for name in ("indicators.csv", "summary_overall.csv", "gap_AC.csv"):
        assert (tmp_path / "x" / name).read_bytes() == \
            (tmp_path / "y" / name).read_bytes()
