"""File rendering: formats, ordering, the 10-significant-digit contract."""
import csv
import json
from pathlib import Path

from sciprod.analytics import GapRow, GroupMean, OutperformRow, ReportBundle
from sciprod.baselines import BaselineTable
from sciprod.reports import (
    REPORT_BASENAMES,
    fmt,
    render_reports,
    write_baselines,
    write_indicators,
)

from test_analytics import vec


def sample_bundle():
    means = lambda v: {i: v for i in ("O", "FO", "AC", "AIF", "FSS")}
    overall = [GroupMean("Overall", "IT", 3, means(1.25)),
               GroupMean("Overall", "NO", 2, means(0.75))]
    top = [GroupMean("Overall", "IT", 1, means(3.5))]
    disciplines = [GroupMean("Clinical medicine", "IT", 3, means(1.0))]
    out_row = OutperformRow("Clinical medicine", 3,
                            {i: 1 for i in ("O", "FO", "AC", "AIF", "FSS")})
    total = OutperformRow("Overall", 3,
                          {i: 1 for i in ("O", "FO", "AC", "AIF", "FSS")})
    gap = GapRow("CARD", 3, 0.64, 4, 3.77)
    return ReportBundle(
        countries=("IT", "NO"),
        overall=overall,
        top_decile_overall=top,
        discipline_table=disciplines,
        discipline_overall=overall,
        outperform=[out_row],
        outperform_overall=total,
        gap_tables={i: [gap] for i in ("O", "FO", "AC", "AIF")},
        top_decile_ids=("P1",),
    )


def test_fmt_contract():
    assert fmt(None) == ""
    assert fmt("CARD") == "CARD"
    assert fmt(7) == "7"
    assert fmt(0.64 - 3.77) == "-3.13"
    assert fmt(1 / 3) == "0.3333333333"
    assert fmt(1.1) == "1.1"
    assert fmt(8e-06) == "8e-06"


def test_render_writes_seven_files(tmp_path):
    paths = render_reports(sample_bundle(), tmp_path)
    assert [p.stem for p in paths] == list(REPORT_BASENAMES)
    assert all(p.suffix == ".csv" and p.exists() for p in paths)


def test_summary_overall_layout(tmp_path):
    render_reports(sample_bundle(), tmp_path)
    with open(tmp_path / "summary_overall.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][:3] == ["cohort", "country", "professors"]
    assert [r[0] for r in rows[1:]] == ["all", "all", "top_decile"]
    assert rows[1][1:3] == ["IT", "3"]


def test_gap_file_orientation(tmp_path):
    render_reports(sample_bundle(), tmp_path)
    with open(tmp_path / "gap_FO.csv", newline="") as fh:
        header, row = list(csv.reader(fh))
    assert header == ["sc", "country_a", "professors_a", "mean_a",
                      "country_b", "professors_b", "mean_b", "delta"]
    assert row == ["CARD", "IT", "3", "0.64", "NO", "4", "3.77", "-3.13"]


def test_outperform_layout(tmp_path):
    render_reports(sample_bundle(), tmp_path)
    with open(tmp_path / "outperform_counts.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0][:4] == ["discipline", "scs", "O_higher", "O_share"]
    assert rows[1][:2] == ["Clinical medicine", "3"]
    assert rows[-1][0] == "Overall"
    assert rows[1][3] == "33.33333333"  # 100/3 to ten digits


def test_json_format_round_trips(tmp_path):
    paths = render_reports(sample_bundle(), tmp_path, report_format="json")
    assert all(p.suffix == ".json" for p in paths)
    with open(tmp_path / "gap_O.json") as fh:
        payload = json.load(fh)
    assert payload["country_a"] == "IT"
    assert payload["rows"][0]["delta"] == -3.13
    assert payload["rows"][0]["sc"] == "CARD"


def test_text_format_is_aligned(tmp_path):
    paths = render_reports(sample_bundle(), tmp_path, report_format="text")
    assert all(p.suffix == ".txt" for p in paths)
    lines = (tmp_path / "summary_overall.txt").read_text().splitlines()
    assert lines[0] == "Average normalized scores per country"
    assert lines[1].startswith("cohort")
    assert set(lines[2]) <= {"-", " "}


def test_csv_uses_lf_line_endings(tmp_path):
    render_reports(sample_bundle(), tmp_path)
    raw = (tmp_path / "summary_overall.csv").read_bytes()
    assert b"\r" not in raw
    assert raw.endswith(b"\n")


def test_write_indicators_sorted_by_id(tmp_path):
    vectors = {
        "B": vec("B", fss=2.0),
        "A": vec("A", fss=1.0, ac=None),
    }
    write_indicators(vectors, tmp_path)
    with open(tmp_path / "indicators.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["professor_id", "country", "sc", "discipline", "t",
                       "cost_eur", "N", "O_raw", "FO_raw", "AC_raw",
                       "AIF_raw", "FSS_raw"]
    assert [r[0] for r in rows[1:]] == ["A", "B"]
    assert rows[1][9] == ""  # undefined AC renders as an empty cell


def test_write_baselines(tmp_path):
    table = BaselineTable(
        citation_mean={(2013, "CARD"): 15.0, (2013, "MATH"): 29 / 3},
        if_mean={(2013, "CARD"): 2.5},
        citation_support={(2013, "CARD"): 2, (2013, "MATH"): 3},
        if_support={(2013, "CARD"): 2},
    )
    path = write_baselines(table, tmp_path / "baselines.csv")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[1] == ["2013", "CARD", "15", "2.5", "2", "2"]
    assert rows[2] == ["2013", "MATH", "9.666666667", "", "3", "0"]


def test_rendering_is_deterministic(tmp_path):
    first = Path(tmp_path / "a")
    second = Path(tmp_path / "b")
    render_reports(sample_bundle(), first)
    render_reports(sample_bundle(), second)
    for name in REPORT_BASENAMES:
        assert (first / f"{name}.csv").read_bytes() == \
            (second / f"{name}.csv").read_bytes()
