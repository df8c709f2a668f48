"""Cross-professor analytics: normalization, aggregation, comparison tables.

Raw scores are normalized within each SC to the mean of the nonzero values
over both countries combined, so 1.0 always reads "SC average" and 1.10
reads "10% above average". Zeros stay zero and undefined values stay
undefined. All comparison tables are computed from the normalized
per-professor scores:

    overall / discipline means   per-country averages, skipping undefined
    top decile                   per SC, the ceil(decile * n) highest by
                                 normalized FSS, ties at the cutoff included
    outperform counts            SCs per discipline where country B's mean
                                 strictly exceeds country A's
    gap tables                   per-SC delta = mean(A) - mean(B); the k most
                                 negative and k most positive rows
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .indicators import IndicatorVector
from .models import INDICATORS

log = logging.getLogger("sciprod.analytics")

OVERALL_KEY = "Overall"


@dataclass
class NormalizedScores:
    """Normalized per-professor values and the per-(SC, indicator) factors."""

    values: dict[str, dict[str, Optional[float]]]
    factors: dict[tuple[str, str], Optional[float]]

    def value(self, professor_id: str, indicator: str) -> Optional[float]:
        return self.values[professor_id][indicator]


@dataclass
class GroupMean:
    """Per-country mean of normalized scores over one group of professors."""

    key: str
    country: str
    professors: int
    means: dict[str, Optional[float]]


@dataclass
class OutperformRow:
    """How many of a discipline's SCs country B wins, per indicator."""

    discipline: str
    scs: int
    higher: dict[str, int]

    def share(self, indicator: str) -> Optional[float]:
        if self.scs == 0:
            return None
        return 100.0 * self.higher[indicator] / self.scs


@dataclass
class GapRow:
    """One SC's per-country means and their difference."""

    sc: str
    professors_a: int
    mean_a: float
    professors_b: int
    mean_b: float

    @property
    def delta(self) -> float:
        return self.mean_a - self.mean_b


@dataclass
class ReportBundle:
    """Everything the report files need, already ordered."""

    countries: tuple[str, str]
    overall: list[GroupMean]
    top_decile_overall: list[GroupMean]
    discipline_table: list[GroupMean]
    discipline_overall: list[GroupMean]
    outperform: list[OutperformRow]
    outperform_overall: OutperformRow
    gap_tables: dict[str, list[GapRow]]
    top_decile_ids: tuple[str, ...]
    factors: dict[tuple[str, str], Optional[float]] = field(default_factory=dict)


def normalize_within_sc(
    vectors: dict[str, IndicatorVector],
) -> NormalizedScores:
    """Scale each indicator to the SC's nonzero mean, countries combined."""
    by_sc: dict[str, list[IndicatorVector]] = {}
    for vec in vectors.values():
        by_sc.setdefault(vec.sc, []).append(vec)

    factors: dict[tuple[str, str], Optional[float]] = {}
    for sc, members in by_sc.items():
        for indicator in INDICATORS:
            nonzero = [v for v in (m.value(indicator) for m in members)
                       if v is not None and v != 0.0]
            factors[(sc, indicator)] = (
                sum(nonzero) / len(nonzero) if nonzero else None)
            if not nonzero:
                log.warning("SC %s has no nonzero %s; normalization skipped",
                            sc, indicator)

    values: dict[str, dict[str, Optional[float]]] = {}
    for pid, vec in vectors.items():
        row: dict[str, Optional[float]] = {}
        for indicator in INDICATORS:
            raw = vec.value(indicator)
            factor = factors[(vec.sc, indicator)]
            if raw is None or raw == 0.0 or factor is None:
                row[indicator] = raw
            else:
                row[indicator] = raw / factor
        values[pid] = row
    return NormalizedScores(values=values, factors=factors)


def top_decile(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    decile: float = 0.10,
) -> list[str]:
    """Ids of the top professors by normalized FSS within each SC.

    The quota is ceil(decile * n), computed in exact arithmetic so that
    decile = 0.10 over 20 professors selects 2, not 3. Everybody tied with
    the professor at the cutoff is included.
    """
    quota_fraction = Fraction(str(decile))
    by_sc: dict[str, list[str]] = {}
    for pid, vec in vectors.items():
        by_sc.setdefault(vec.sc, []).append(pid)

    selected: list[str] = []
    for sc, pids in by_sc.items():
        pids.sort(key=lambda pid: (-normalized.value(pid, "FSS"), pid))
        quota = math.ceil(quota_fraction * len(pids))
        cutoff = normalized.value(pids[quota - 1], "FSS")
        for pid in pids:
            if normalized.value(pid, "FSS") >= cutoff:
                selected.append(pid)
    selected.sort()
    return selected


def group_means(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    ids: list[str],
    countries: tuple[str, str],
    keyfunc: Callable[[IndicatorVector], str],
) -> list[GroupMean]:
    """Per-(group, country) means of normalized scores, skipping undefined.

    Rows come out sorted by group key, countries in pair order; groups with
    no professors in a country are omitted for that country.
    """
    sums: dict[tuple[str, str], dict[str, float]] = {}
    counts: dict[tuple[str, str], dict[str, int]] = {}
    sizes: dict[tuple[str, str], int] = {}
    for pid in ids:
        vec = vectors[pid]
        cell = (keyfunc(vec), vec.country)
        sizes[cell] = sizes.get(cell, 0) + 1
        cell_sums = sums.setdefault(cell, {i: 0.0 for i in INDICATORS})
        cell_counts = counts.setdefault(cell, {i: 0 for i in INDICATORS})
        for indicator in INDICATORS:
            value = normalized.value(pid, indicator)
            if value is not None:
                cell_sums[indicator] += value
                cell_counts[indicator] += 1

    order = {country: rank for rank, country in enumerate(countries)}
    rows: list[GroupMean] = []
    for key, country in sorted(sizes, key=lambda c: (c[0], order[c[1]])):
        cell = (key, country)
        means = {
            indicator: (sums[cell][indicator] / counts[cell][indicator]
                        if counts[cell][indicator] else None)
            for indicator in INDICATORS
        }
        rows.append(GroupMean(key, country, sizes[cell], means))
    return rows


def _sc_means(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    countries: tuple[str, str],
) -> tuple[dict[str, dict[str, tuple[int, dict]]], dict[str, str]]:
    """Per-SC per-country (size, means) plus the SC -> discipline map."""
    rows = group_means(vectors, normalized, sorted(vectors), countries,
                       keyfunc=lambda vec: vec.sc)
    table: dict[str, dict[str, tuple[int, dict]]] = {}
    for row in rows:
        table.setdefault(row.key, {})[row.country] = (row.professors, row.means)
    disciplines = {vec.sc: vec.discipline for vec in vectors.values()}
    return table, disciplines


def outperform_counts(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    countries: tuple[str, str],
) -> tuple[list[OutperformRow], OutperformRow]:
    """Per discipline, the SCs where country B's mean strictly exceeds A's.

    Only SCs with professors from both countries enter the denominator;
    a comparison with an undefined mean on either side never counts as a
    win. Returns the discipline rows plus the overall sum row.
    """
    country_a, country_b = countries
    sc_table, disciplines = _sc_means(vectors, normalized, countries)
    per_discipline: dict[str, OutperformRow] = {}
    total = OutperformRow(OVERALL_KEY, 0, {i: 0 for i in INDICATORS})
    for sc in sorted(sc_table):
        cell = sc_table[sc]
        if country_a not in cell or country_b not in cell:
            log.info("SC %s present in one country only; "
                     "skipped in outperform counts", sc)
            continue
        row = per_discipline.setdefault(
            disciplines[sc],
            OutperformRow(disciplines[sc], 0, {i: 0 for i in INDICATORS}))
        row.scs += 1
        total.scs += 1
        _, means_a = cell[country_a]
        _, means_b = cell[country_b]
        for indicator in INDICATORS:
            a, b = means_a[indicator], means_b[indicator]
            if a is not None and b is not None and b > a:
                row.higher[indicator] += 1
                total.higher[indicator] += 1
    rows = [per_discipline[d] for d in sorted(per_discipline)]
    return rows, total


def gap_rows(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    countries: tuple[str, str],
    indicator: str,
    top_k: int = 10,
) -> list[GapRow]:
    """The k most negative and k most positive per-SC deltas.

    delta = mean(A) - mean(B), so the head of the list is where B leads.
    Rows are sorted by (delta, SC); when fewer than 2k SCs qualify, every
    qualifying row appears exactly once.
    """
    country_a, country_b = countries
    sc_table, _ = _sc_means(vectors, normalized, countries)
    rows: list[GapRow] = []
    for sc in sorted(sc_table):
        cell = sc_table[sc]
        if country_a not in cell or country_b not in cell:
            continue
        n_a, means_a = cell[country_a]
        n_b, means_b = cell[country_b]
        if means_a[indicator] is None or means_b[indicator] is None:
            continue
        rows.append(GapRow(sc, n_a, means_a[indicator],
                           n_b, means_b[indicator]))
    rows.sort(key=lambda row: (row.delta, row.sc))
    if len(rows) <= 2 * top_k:
        if len(rows) < 2 * top_k:
            log.warning("gap table %s: only %d SC(s) qualify for k=%d",
                        indicator, len(rows), top_k)
        return rows
    return rows[:top_k] + rows[-top_k:]


def build_reports(
    vectors: dict[str, IndicatorVector],
    normalized: NormalizedScores,
    countries: tuple[str, str],
    top_k: int = 10,
    decile: float = 0.10,
) -> ReportBundle:
    """Assemble every table the report files are rendered from."""
    all_ids = sorted(vectors)
    decile_ids = top_decile(vectors, normalized, decile)
    overall = group_means(vectors, normalized, all_ids, countries,
                          keyfunc=lambda vec: OVERALL_KEY)
    top_overall = group_means(vectors, normalized, decile_ids, countries,
                              keyfunc=lambda vec: OVERALL_KEY)
    disciplines = group_means(vectors, normalized, all_ids, countries,
                              keyfunc=lambda vec: vec.discipline)
    out_rows, out_total = outperform_counts(vectors, normalized, countries)
    gaps = {indicator: gap_rows(vectors, normalized, countries,
                                indicator, top_k)
            for indicator in ("O", "FO", "AC", "AIF")}
    return ReportBundle(
        countries=countries,
        overall=overall,
        top_decile_overall=top_overall,
        discipline_table=disciplines,
        discipline_overall=overall,
        outperform=out_rows,
        outperform_overall=out_total,
        gap_tables=gaps,
        top_decile_ids=tuple(decile_ids),
        factors=dict(normalized.factors),
    )
