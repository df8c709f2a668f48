"""Independent brute-force recomputation of the whole analysis.

This module exists to check the pipeline, so it deliberately shares no code
with it beyond the parsed record types: journal resolution, classification,
filters, baselines, credit weights, costs and the five indicators are all
re-derived here in the most literal way that fits in nested loops. Meant
for small datasets; nothing here is tuned for speed.
"""
from __future__ import annotations

import math
from typing import Optional

from .config import CohortConfig, CreditConfig
from .models import DatasetBundle


def _resolve_year(bundle: DatasetBundle, journal_id: str, year: int) -> int:
    years = sorted(y for (jid, y) in bundle.journal_years
                   if jid == journal_id)
    best = years[0]
    for candidate in years:
        if abs(candidate - year) < abs(best - year):
            best = candidate
    return best


def _pub_journal(bundle: DatasetBundle, pub) -> tuple:
    year = _resolve_year(bundle, pub.journal_id, pub.year)
    record = bundle.journal_years[(pub.journal_id, year)]
    return record.subject_categories, record.impact_factor


def _classify(bundle: DatasetBundle, pid: str,
              pub_info: dict) -> Optional[str]:
    tally: dict[str, list] = {}
    for entry in bundle.authorships:
        if entry.professor_id != pid:
            continue
        pub = bundle.publications_by_id[entry.pub_id]
        for sc in pub_info[entry.pub_id][0]:
            record = tally.setdefault(sc, [0, 0])
            record[0] += 1
            record[1] += pub.citations
    if not tally:
        return None
    best = None
    for sc in sorted(tally):
        if best is None:
            best = sc
            continue
        if tally[sc][0] > tally[best][0]:
            best = sc
        elif tally[sc][0] == tally[best][0] and tally[sc][1] > tally[best][1]:
            best = sc
    return best


def _weights(n: int, intramural: bool, positional: bool,
             credit: CreditConfig) -> list[float]:
    if not positional:
        return [1.0 / n] * n
    weights = [0.0] * n
    if intramural:
        weights[0] += credit.intramural_first_last
        weights[n - 1] += credit.intramural_first_last
        middle = list(range(1, n - 1))
        for index in middle:
            weights[index] += credit.intramural_others_pool / len(middle)
    else:
        weights[0] += credit.extramural_first_last
        weights[n - 1] += credit.extramural_first_last
        if n >= 2:
            weights[1] += credit.extramural_second
            weights[n - 2] += credit.extramural_second
        middle = list(range(2, n - 2))
        for index in middle:
            weights[index] += credit.extramural_others_pool / len(middle)
    total = sum(weights)
    return [w / total for w in weights]


def oracle_compute(bundle: DatasetBundle, cohort: CohortConfig,
                   credit: CreditConfig) -> dict[str, dict]:
    """Everything the pipeline computes per professor, the long way."""
    pub_info = {pub.pub_id: _pub_journal(bundle, pub)
                for pub in bundle.publications}

    result: dict[str, dict] = {}
    assigned: dict[str, Optional[str]] = {}
    for prof in bundle.professors:
        assigned[prof.professor_id] = _classify(bundle, prof.professor_id,
                                                pub_info)

    # filters, in order; SC sizes counted over survivors of the first two
    sc_sizes: dict[str, int] = {}
    reasons: dict[str, str] = {}
    for prof in bundle.professors:
        pid = prof.professor_id
        if prof.years_on_staff < cohort.min_years_on_staff:
            reasons[pid] = "too_few_years"
        elif assigned[pid] is None:
            reasons[pid] = "no_publications"
        else:
            reasons[pid] = "none"
            sc_sizes[assigned[pid]] = sc_sizes.get(assigned[pid], 0) + 1
    for prof in bundle.professors:
        pid = prof.professor_id
        if reasons[pid] != "none":
            continue
        if sc_sizes[assigned[pid]] < cohort.min_sc_professors:
            reasons[pid] = "small_sc"
        elif assigned[pid] in set(cohort.excluded_scs):
            reasons[pid] = "excluded_field"

    # cited-only baselines on three levels
    def mean(values: list[float]) -> Optional[float]:
        return sum(values) / len(values) if values else None

    cited = [pub for pub in bundle.publications if pub.citations >= 1]
    sc_cells: dict[tuple, list] = {}
    if_cells: dict[tuple, list] = {}
    disc_cells: dict[tuple, list] = {}
    disc_if_cells: dict[tuple, list] = {}
    year_cells: dict[int, list] = {}
    year_if_cells: dict[int, list] = {}
    for pub in cited:
        scs, impact = pub_info[pub.pub_id]
        year_cells.setdefault(pub.year, []).append(pub.citations)
        if impact is not None:
            year_if_cells.setdefault(pub.year, []).append(impact)
        seen = set()
        for sc in scs:
            sc_cells.setdefault((pub.year, sc), []).append(pub.citations)
            if impact is not None:
                if_cells.setdefault((pub.year, sc), []).append(impact)
            discipline = bundle.sc_map.discipline_of(sc)
            if discipline in seen:
                continue
            seen.add(discipline)
            disc_cells.setdefault((pub.year, discipline),
                                  []).append(pub.citations)
            if impact is not None:
                disc_if_cells.setdefault((pub.year, discipline),
                                         []).append(impact)

    def citation_base(year: int, sc: str) -> Optional[float]:
        if (year, sc) in sc_cells:
            return mean(sc_cells[(year, sc)])
        discipline = bundle.sc_map.discipline_of(sc)
        if (year, discipline) in disc_cells:
            return mean(disc_cells[(year, discipline)])
        return mean(year_cells.get(year, []))

    def if_base(year: int, sc: str) -> Optional[float]:
        if (year, sc) in if_cells:
            return mean(if_cells[(year, sc)])
        discipline = bundle.sc_map.discipline_of(sc)
        if (year, discipline) in disc_if_cells:
            return mean(disc_if_cells[(year, discipline)])
        return mean(year_if_cells.get(year, []))

    window = cohort.window
    for prof in bundle.professors:
        pid = prof.professor_id
        entry = {"sc": assigned[pid], "eligible": reasons[pid] == "none",
                 "reason": reasons[pid]}
        result[pid] = entry
        if not entry["eligible"]:
            continue

        sc = assigned[pid]
        discipline = bundle.sc_map.discipline_of(sc)
        positional = bundle.sc_map.regime_of(sc) == "position_weighted"

        # salary years: recorded ranks, then window years ascending with the
        # nearest recorded rank, until the declared span is covered
        history = dict(prof.rank_by_year)
        needed = prof.years_on_staff - len(history)
        for year in range(window[0], window[1] + 1):
            if needed == 0:
                break
            if year in history:
                continue
            recorded = sorted(prof.rank_by_year)
            nearest = recorded[0]
            for candidate in recorded:
                if abs(candidate - year) < abs(nearest - year):
                    nearest = candidate
            history[year] = prof.rank_by_year[nearest]
            needed -= 1
        salaries = [bundle.cost_table.salary[(prof.country, rank)]
                    for _, rank in sorted(history.items())]
        cost = (sum(salaries) / len(salaries)) / 2.0 \
            + bundle.cost_table.capital[(prof.country, discipline)]

        sum_f = 0.0
        sum_c = 0.0
        sum_cf = 0.0
        sum_if = 0.0
        n_cit = 0
        n_if = 0
        pubs = [a for a in bundle.authorships if a.professor_id == pid]
        for authorship in pubs:
            pub = bundle.publications_by_id[authorship.pub_id]
            scs, impact = pub_info[pub.pub_id]
            vector = _weights(pub.total_authors, pub.affiliation_count == 1,
                              positional, credit)
            f = vector[authorship.position - 1]
            sum_f += f
            if pub.citations == 0:
                c_std: Optional[float] = 0.0
            else:
                bases = [b for b in (citation_base(pub.year, s) for s in scs)
                         if b is not None]
                c_std = pub.citations / mean(bases) if bases else None
            if c_std is not None:
                sum_c += c_std
                sum_cf += c_std * f
                n_cit += 1
            if impact is not None:
                bases = [b for b in (if_base(pub.year, s) for s in scs)
                         if b is not None]
                if bases:
                    sum_if += impact / mean(bases)
                    n_if += 1
        t = prof.years_on_staff
        entry["cost"] = cost
        entry["n_pubs"] = len(pubs)
        entry["O"] = len(pubs) / t / cost
        entry["FO"] = sum_f / t / cost
        entry["AC"] = sum_c / n_cit if n_cit else None
        entry["AIF"] = sum_if / n_if if n_if else None
        entry["FSS"] = sum_cf / t / cost
    return result
