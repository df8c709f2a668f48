"""Raw per-professor productivity indicators.

For a professor with N publications over t years on staff and a yearly
research cost of w_r/2 + k (half the average salary over staffed years plus
the discipline's yearly capital rate):

    O   = N / (t * cost)
    FO  = sum(f_i) / (t * cost)
    AC  = mean of defined standardized citation values
    AIF = mean of defined standardized journal impact factors
    FSS = sum(std_citations_i * f_i) / (t * cost)

AC and AIF are None when no publication carries a defined value. A
publication whose citation standardization is undefined contributes zero to
FSS and is dropped from AC's denominator; the same rule ties AIF to defined
impact factors. The credit regime is the one recorded for the professor's
assigned SC's discipline, applied to their whole portfolio.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .baselines import (
    BaselineTable,
    standardize_citations,
    standardize_impact_factor,
)
from .cohort import Cohort, publication_if_table, publication_sc_table
from .config import CreditConfig
from .credit import fractional_contribution
from .models import DatasetBundle, ProfessorRecord

log = logging.getLogger("sciprod.indicators")


@dataclass(frozen=True)
class CostProfile:
    """Yearly cost of keeping the professor researching."""

    yearly_salary: float
    yearly_capital: float

    @property
    def research_cost(self) -> float:
        # labor counts at 50%: half the salary buys the research time
        return self.yearly_salary / 2.0 + self.yearly_capital


@dataclass
class IndicatorVector:
    """Raw indicator values for one professor."""

    professor_id: str
    country: str
    gender: str
    sc: str
    discipline: str
    t: int
    cost: float
    n_pubs: int
    o: float
    fo: float
    ac: Optional[float]
    aif: Optional[float]
    fss: float
    n_cit_defined: int
    n_if_defined: int

    def value(self, indicator: str) -> Optional[float]:
        return getattr(self, indicator.lower())

    @property
    def undefined_flags(self) -> frozenset:
        flags = set()
        if self.ac is None:
            flags.add("AC")
        if self.aif is None:
            flags.add("AIF")
        return frozenset(flags)


def staffed_years(prof: ProfessorRecord,
                  window: tuple[int, int]) -> list[tuple[int, str]]:
    """The years the professor draws salary, each with the rank held.

    Recorded rank years come first. When the declared years on staff exceed
    the recorded history, the remaining window years fill in ascending order,
    each imputing the rank of the nearest recorded year (earlier year wins a
    distance tie). Validation guarantees the history fits the declared span.
    """
    ranked = sorted(prof.rank_by_year.items())
    missing = prof.years_on_staff - len(ranked)
    if missing <= 0:
        return ranked
    recorded = [year for year, _ in ranked]
    padded = list(ranked)
    for year in range(window[0], window[1] + 1):
        if missing == 0:
            break
        if year in prof.rank_by_year:
            continue
        nearest = min(recorded, key=lambda r: (abs(r - year), r))
        padded.append((year, prof.rank_by_year[nearest]))
        missing -= 1
    padded.sort()
    return padded


def cost_profile(prof: ProfessorRecord, discipline: str,
                 bundle: DatasetBundle,
                 window: tuple[int, int]) -> CostProfile:
    """Average salary over staffed years plus the discipline capital rate."""
    years = staffed_years(prof, window)
    total = 0.0
    for _year, rank in years:
        total += bundle.cost_table.salary[(prof.country, rank)]
    w_r = total / len(years)
    k = bundle.cost_table.capital[(prof.country, discipline)]
    return CostProfile(yearly_salary=w_r, yearly_capital=k)


def compute_professor(
    prof: ProfessorRecord,
    sc: str,
    discipline: str,
    bundle: DatasetBundle,
    baselines: BaselineTable,
    credit: CreditConfig,
    window: tuple[int, int],
    pub_scs: dict[str, tuple[str, ...]],
    pub_ifs: dict[str, Optional[float]],
) -> IndicatorVector:
    """Evaluate all five indicators for one eligible professor."""
    regime = bundle.sc_map.regime_of(sc)
    cost = cost_profile(prof, discipline, bundle, window).research_cost
    t = prof.years_on_staff
    entries = bundle.authorships_by_professor[prof.professor_id]
    sum_f = 0.0
    sum_c = 0.0
    sum_cf = 0.0
    sum_if = 0.0
    n_cit = 0
    n_if = 0
    for pub_id, position in entries:
        pub = bundle.publications_by_id[pub_id]
        scs = pub_scs[pub_id]
        f = fractional_contribution(position, pub, regime, credit)
        sum_f += f
        c_std = standardize_citations(pub.citations, pub.year, scs,
                                      bundle, baselines)
        if c_std is None:
            log.warning("publication %s has no citation baseline; "
                        "contributes 0 to FSS of %s",
                        pub_id, prof.professor_id)
        else:
            sum_c += c_std
            sum_cf += c_std * f
            n_cit += 1
        if_std = standardize_impact_factor(pub_ifs[pub_id], pub.year, scs,
                                           bundle, baselines)
        if if_std is not None:
            sum_if += if_std
            n_if += 1
    n = len(entries)
    denom = t * cost
    return IndicatorVector(
        professor_id=prof.professor_id,
        country=prof.country,
        gender=prof.gender,
        sc=sc,
        discipline=discipline,
        t=t,
        cost=cost,
        n_pubs=n,
        o=n / denom,
        fo=sum_f / denom,
        ac=sum_c / n_cit if n_cit else None,
        aif=sum_if / n_if if n_if else None,
        fss=sum_cf / denom,
        n_cit_defined=n_cit,
        n_if_defined=n_if,
    )


def compute_indicators(
    bundle: DatasetBundle,
    cohort: Cohort,
    baselines: BaselineTable,
    credit: CreditConfig,
    window: tuple[int, int],
    pub_scs: Optional[dict[str, tuple[str, ...]]] = None,
    pub_ifs: Optional[dict[str, Optional[float]]] = None,
) -> dict[str, IndicatorVector]:
    """Indicator vectors for the whole eligible cohort, keyed by id."""
    if pub_scs is None:
        pub_scs = publication_sc_table(bundle)
    if pub_ifs is None:
        pub_ifs = publication_if_table(bundle)
    vectors: dict[str, IndicatorVector] = {}
    for pid in cohort.eligible_ids:
        prof = bundle.professors_by_id[pid]
        assignment = cohort.assignments[pid]
        vectors[pid] = compute_professor(
            prof, assignment.assigned_sc, assignment.discipline,
            bundle, baselines, credit, window, pub_scs, pub_ifs)
    log.info("computed indicators for %d professors", len(vectors))
    return vectors
