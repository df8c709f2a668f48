"""Deterministic rendering of indicator and report tables.

Every file is written with LF line endings and numbers formatted to 10
significant digits, so identical inputs give byte-identical outputs. The
same tables render as CSV (default), JSON, or aligned text; the numbers are
the same in all three.

Report files:

    summary_overall      per-country means, full cohort and top decile
    summary_discipline   per-discipline per-country means, plus Overall
    outperform_counts    SCs per discipline where the second country leads
    gap_O / gap_FO / gap_AC / gap_AIF
                         largest per-SC mean differences, both directions
"""
from __future__ import annotations

import csv
import json
import logging
from pathlib import Path
from typing import Optional, Union

from .analytics import GroupMean, OutperformRow, ReportBundle
from .baselines import BaselineTable
from .indicators import IndicatorVector
from .models import INDICATORS

log = logging.getLogger("sciprod.reports")

INDICATORS_HEADER = ["professor_id", "country", "sc", "discipline", "t",
                     "cost_eur", "N", "O_raw", "FO_raw", "AC_raw",
                     "AIF_raw", "FSS_raw"]
SUMMARY_HEADER = ["cohort", "country", "professors",
                  "O", "FO", "AC", "AIF", "FSS"]
DISCIPLINE_HEADER = ["discipline", "country", "professors",
                     "O", "FO", "AC", "AIF", "FSS"]
OUTPERFORM_HEADER = ["discipline", "scs",
                     "O_higher", "O_share", "FO_higher", "FO_share",
                     "AC_higher", "AC_share", "AIF_higher", "AIF_share",
                     "FSS_higher", "FSS_share"]
GAP_HEADER = ["sc", "country_a", "professors_a", "mean_a",
              "country_b", "professors_b", "mean_b", "delta"]
BASELINES_HEADER = ["year", "sc", "c_mean", "if_mean",
                    "c_support", "if_support"]

REPORT_BASENAMES = ("summary_overall", "summary_discipline",
                    "outperform_counts", "gap_O", "gap_FO",
                    "gap_AC", "gap_AIF")

Cell = Union[str, int, float, None]


def fmt(value: Cell) -> str:
    """Cell text: 10 significant digits for floats, empty for missing."""
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _json_cell(value: Cell) -> Cell:
    # round-trip through the text form so JSON carries the same 10 digits
    if isinstance(value, float):
        return float(f"{value:.10g}")
    return value


def _write_csv(path: Path, header: list[str], rows: list[list[Cell]]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(cell) for cell in row])


def _write_json(path: Path, header: list[str], rows: list[list[Cell]],
                meta: dict) -> None:
    payload = dict(meta)
    payload["rows"] = [
        {key: _json_cell(cell) for key, cell in zip(header, row)}
        for row in rows
    ]
    with open(path, "w", newline="", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=2)
        handle.write("\n")


def _write_text(path: Path, title: str, header: list[str],
                rows: list[list[Cell]]) -> None:
    cells = [header] + [[fmt(cell) for cell in row] for row in rows]
    widths = [max(len(line[col]) for line in cells)
              for col in range(len(header))]
    with open(path, "w", newline="", encoding="utf-8") as handle:
        handle.write(title + "\n")
        for index, line in enumerate(cells):
            handle.write("  ".join(
                cell.ljust(width)
                for cell, width in zip(line, widths)).rstrip() + "\n")
            if index == 0:
                handle.write("  ".join("-" * width
                                       for width in widths) + "\n")


def _extension(report_format: str) -> str:
    return {"csv": ".csv", "json": ".json", "text": ".txt"}[report_format]


def _emit(out_dir: Path, basename: str, title: str, header: list[str],
          rows: list[list[Cell]], report_format: str, meta: dict) -> Path:
    path = out_dir / (basename + _extension(report_format))
    if report_format == "csv":
        _write_csv(path, header, rows)
    elif report_format == "json":
        _write_json(path, header, rows, meta)
    else:
        _write_text(path, title, header, rows)
    return path


def indicator_rows(vectors: dict[str, IndicatorVector]) -> list[list[Cell]]:
    rows = []
    for pid in sorted(vectors):
        vec = vectors[pid]
        rows.append([vec.professor_id, vec.country, vec.sc, vec.discipline,
                     vec.t, vec.cost, vec.n_pubs,
                     vec.o, vec.fo, vec.ac, vec.aif, vec.fss])
    return rows


def write_indicators(vectors: dict[str, IndicatorVector],
                     out_dir: Path) -> Path:
    """Per-professor raw indicator file; always CSV, always id-ordered."""
    path = out_dir / "indicators.csv"
    _write_csv(path, INDICATORS_HEADER, indicator_rows(vectors))
    return path


def write_baselines(table: BaselineTable, path: Path) -> Path:
    """Baseline dump: one row per (year, SC) cell present in either table."""
    cells = sorted(set(table.citation_mean) | set(table.if_mean))
    rows: list[list[Cell]] = []
    for year, sc in cells:
        rows.append([year, sc,
                     table.citation_mean.get((year, sc)),
                     table.if_mean.get((year, sc)),
                     table.citation_support.get((year, sc), 0),
                     table.if_support.get((year, sc), 0)])
    _write_csv(path, BASELINES_HEADER, rows)
    return path


def _summary_rows(groups: list[GroupMean], label: Optional[str],
                  first_column: bool) -> list[list[Cell]]:
    rows = []
    for group in groups:
        prefix: list[Cell] = [label if label is not None else group.key,
                              group.country, group.professors]
        if not first_column:
            prefix[0] = group.key
        rows.append(prefix + [group.means[i] for i in INDICATORS])
    return rows


def _outperform_row(row: OutperformRow) -> list[Cell]:
    cells: list[Cell] = [row.discipline, row.scs]
    for indicator in INDICATORS:
        cells.append(row.higher[indicator])
        cells.append(row.share(indicator))
    return cells


def render_reports(bundle: ReportBundle, out_dir: Path,
                   report_format: str = "csv") -> list[Path]:
    """Write the seven report files; returns the paths in a fixed order."""
    out_dir.mkdir(parents=True, exist_ok=True)
    country_a, country_b = bundle.countries
    meta = {"country_a": country_a, "country_b": country_b}
    paths = []

    rows = ([["all", g.country, g.professors] + [g.means[i] for i in INDICATORS]
             for g in bundle.overall]
            + [["top_decile", g.country, g.professors]
               + [g.means[i] for i in INDICATORS]
               for g in bundle.top_decile_overall])
    paths.append(_emit(out_dir, "summary_overall",
                       "Average normalized scores per country",
                       SUMMARY_HEADER, rows, report_format, meta))

    rows = _summary_rows(bundle.discipline_table, None, False)
    for group in bundle.discipline_overall:
        rows.append(["Overall", group.country, group.professors]
                    + [group.means[i] for i in INDICATORS])
    paths.append(_emit(out_dir, "summary_discipline",
                       "Average normalized scores per discipline",
                       DISCIPLINE_HEADER, rows, report_format, meta))

    rows = [_outperform_row(row) for row in bundle.outperform]
    rows.append(_outperform_row(bundle.outperform_overall))
    paths.append(_emit(
        out_dir, "outperform_counts",
        f"SCs per discipline where {country_b} outperforms {country_a}",
        OUTPERFORM_HEADER, rows, report_format, meta))

    for indicator in ("O", "FO", "AC", "AIF"):
        rows = [[row.sc, country_a, row.professors_a, row.mean_a,
                 country_b, row.professors_b, row.mean_b, row.delta]
                for row in bundle.gap_tables[indicator]]
        paths.append(_emit(
            out_dir, f"gap_{indicator}",
            f"Largest per-SC {indicator} differences "
            f"({country_a} minus {country_b})",
            GAP_HEADER, rows, report_format, meta))

    log.info("wrote %d report files to %s", len(paths), out_dir)
    return paths
