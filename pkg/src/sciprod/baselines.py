"""Scaling baselines for citations and impact factors.

Citations are scaled against the mean citation count of *cited* publications
(citations >= 1) in the same (year, SC) cell; impact factors against the mean
IF of journals hosting cited publications in the cell. Publications in a cell
with no cited member fall back to the (year, discipline) mean, then to the
year mean over everything; a publication whose journal spans several SCs uses
the arithmetic mean of its cells' values (resolving each cell through the
fallback chain independently).

Zero-citation publications always standardize to 0.0 regardless of the
baseline, so an empty cell only matters for cited work.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .cohort import publication_if_table, publication_sc_table
from .models import DatasetBundle

log = logging.getLogger("sciprod.baselines")


@dataclass
class BaselineTable:
    """Mean citation / IF per (year, SC) with discipline and year fallbacks.

    ``*_support`` hold the number of publications behind each cell, kept for
    the baseline export and for diagnosing thin cells.
    """

    citation_mean: dict[tuple[int, str], float] = field(default_factory=dict)
    if_mean: dict[tuple[int, str], float] = field(default_factory=dict)
    citation_support: dict[tuple[int, str], int] = field(default_factory=dict)
    if_support: dict[tuple[int, str], int] = field(default_factory=dict)
    citation_mean_discipline: dict[tuple[int, str], float] = field(default_factory=dict)
    if_mean_discipline: dict[tuple[int, str], float] = field(default_factory=dict)
    citation_mean_year: dict[int, float] = field(default_factory=dict)
    if_mean_year: dict[int, float] = field(default_factory=dict)

    def citation_baseline(self, year: int, sc: str,
                          discipline: Optional[str]) -> Optional[float]:
        value = self.citation_mean.get((year, sc))
        if value is not None:
            return value
        if discipline is not None:
            value = self.citation_mean_discipline.get((year, discipline))
            if value is not None:
                return value
        return self.citation_mean_year.get(year)

    def if_baseline(self, year: int, sc: str,
                    discipline: Optional[str]) -> Optional[float]:
        value = self.if_mean.get((year, sc))
        if value is not None:
            return value
        if discipline is not None:
            value = self.if_mean_discipline.get((year, discipline))
            if value is not None:
                return value
        return self.if_mean_year.get(year)


def _means(sums: dict, counts: dict) -> dict:
    return {key: sums[key] / counts[key] for key in sums}


def build_baselines(
    bundle: DatasetBundle,
    pub_scs: Optional[dict[str, tuple[str, ...]]] = None,
    pub_ifs: Optional[dict[str, Optional[float]]] = None,
) -> BaselineTable:
    """Accumulate cited-only means at SC, discipline and year level."""
    if pub_scs is None:
        pub_scs = publication_sc_table(bundle)
    if pub_ifs is None:
        pub_ifs = publication_if_table(bundle)

    c_sum: dict[tuple[int, str], float] = {}
    c_cnt: dict[tuple[int, str], int] = {}
    f_sum: dict[tuple[int, str], float] = {}
    f_cnt: dict[tuple[int, str], int] = {}
    cd_sum: dict[tuple[int, str], float] = {}
    cd_cnt: dict[tuple[int, str], int] = {}
    fd_sum: dict[tuple[int, str], float] = {}
    fd_cnt: dict[tuple[int, str], int] = {}
    cy_sum: dict[int, float] = {}
    cy_cnt: dict[int, int] = {}
    fy_sum: dict[int, float] = {}
    fy_cnt: dict[int, int] = {}

    for pub in bundle.publications:
        if pub.citations < 1:
            continue
        year = pub.year
        impact = pub_ifs[pub.pub_id]
        cy_sum[year] = cy_sum.get(year, 0.0) + pub.citations
        cy_cnt[year] = cy_cnt.get(year, 0) + 1
        if impact is not None:
            fy_sum[year] = fy_sum.get(year, 0.0) + impact
            fy_cnt[year] = fy_cnt.get(year, 0) + 1
        seen_disciplines = set()
        for sc in pub_scs[pub.pub_id]:
            cell = (year, sc)
            c_sum[cell] = c_sum.get(cell, 0.0) + pub.citations
            c_cnt[cell] = c_cnt.get(cell, 0) + 1
            if impact is not None:
                f_sum[cell] = f_sum.get(cell, 0.0) + impact
                f_cnt[cell] = f_cnt.get(cell, 0) + 1
            discipline = bundle.sc_map.discipline_of(sc)
            if discipline in seen_disciplines:
                continue
            seen_disciplines.add(discipline)
            dcell = (year, discipline)
            cd_sum[dcell] = cd_sum.get(dcell, 0.0) + pub.citations
            cd_cnt[dcell] = cd_cnt.get(dcell, 0) + 1
            if impact is not None:
                fd_sum[dcell] = fd_sum.get(dcell, 0.0) + impact
                fd_cnt[dcell] = fd_cnt.get(dcell, 0) + 1

    table = BaselineTable(
        citation_mean=_means(c_sum, c_cnt),
        if_mean=_means(f_sum, f_cnt),
        citation_support=dict(c_cnt),
        if_support=dict(f_cnt),
        citation_mean_discipline=_means(cd_sum, cd_cnt),
        if_mean_discipline=_means(fd_sum, fd_cnt),
        citation_mean_year=_means(cy_sum, cy_cnt),
        if_mean_year=_means(fy_sum, fy_cnt),
    )
    log.info("baselines built: %d citation cells, %d IF cells",
             len(table.citation_mean), len(table.if_mean))
    return table


def _cell_average(values: list[float]) -> Optional[float]:
    if not values:
        return None
    return sum(values) / len(values)


def standardize_citations(
    citations: int,
    year: int,
    scs: tuple[str, ...],
    bundle: DatasetBundle,
    table: BaselineTable,
) -> Optional[float]:
    """citations / mean(cited in cell), averaging baselines over the
    publication's SCs. Uncited publications are exactly 0.0; None means no
    baseline exists on any fallback level."""
    if citations == 0:
        return 0.0
    values = []
    for sc in scs:
        base = table.citation_baseline(year, sc, bundle.sc_map.discipline_of(sc))
        if base is not None:
            values.append(base)
    baseline = _cell_average(values)
    if baseline is None or baseline == 0.0:
        return None
    return citations / baseline


def standardize_impact_factor(
    impact: Optional[float],
    year: int,
    scs: tuple[str, ...],
    bundle: DatasetBundle,
    table: BaselineTable,
) -> Optional[float]:
    """IF / mean(IF of journals of cited pubs in cell), averaged over SCs.
    None when the journal has no IF or no baseline exists."""
    if impact is None:
        return None
    values = []
    for sc in scs:
        base = table.if_baseline(year, sc, bundle.sc_map.discipline_of(sc))
        if base is not None:
            values.append(base)
    baseline = _cell_average(values)
    if baseline is None or baseline == 0.0:
        return None
    return impact / baseline
