"""Reproducible synthetic dataset generation.

A single PCG64 stream drives every draw, in a fixed order (journals first,
then professors country by country, SC block by SC block), so a seed fully
determines the output bytes. Field-level behavior is controlled per SC:
publication counts are negative binomial, citation counts discretized
lognormal with an uncited share, author counts shifted Poisson, impact
factors lognormal with a share of IF-less journals. The goal is plausibly
heavy-tailed machinery-validation data, not a statistical portrait of any
real country.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .models import (
    GENDERS,
    POSITION_WEIGHTED_DISCIPLINES,
    RANKS,
    AuthorshipRecord,
    CostTable,
    DatasetBundle,
    JournalRecord,
    ProfessorRecord,
    PublicationRecord,
    SCMap,
)

log = logging.getLogger("sciprod.synth")


class SynthConfigError(ValueError):
    """Invalid generator configuration; names the offending field."""

    def __init__(self, fieldname: str, message: str):
        super().__init__(f"{fieldname}: {message}")
        self.fieldname = fieldname


@dataclass(frozen=True)
class SCProfile:
    """Distribution parameters for one subject category."""

    code: str
    discipline: str
    weight: float = 1.0
    pub_mean: float = 4.0
    pub_dispersion: float = 1.5
    citation_mu: float = 1.0
    citation_sigma: float = 1.0
    uncited_share: float = 0.30
    authors_mean: float = 4.0
    if_mu: float = 0.5
    if_sigma: float = 0.5
    ifless_share: float = 0.05
    journals: int = 5


@dataclass(frozen=True)
class SynthConfig:
    seed: int
    countries: tuple[tuple[str, int], ...]
    scs: tuple[SCProfile, ...]
    window: tuple[int, int] = (2011, 2015)
    salary: dict = field(default_factory=lambda: {
        "assistant": 55000.0, "associate": 75000.0, "full": 105000.0})
    salary_factor: dict = field(default_factory=dict)
    capital: dict = field(default_factory=dict)
    capital_factor: dict = field(default_factory=dict)
    short_staff_share: float = 0.05
    partial_history_share: float = 0.20
    promotion_share: float = 0.15
    intramural_share: float = 0.20

    def validate(self) -> None:
        if self.window[0] > self.window[1]:
            raise SynthConfigError("window", "start year after end year")
        if not self.countries:
            raise SynthConfigError("countries", "at least one country needed")
        for name, count in self.countries:
            if count < 0:
                raise SynthConfigError("countries",
                                       f"negative professor count for {name}")
        if not self.scs:
            raise SynthConfigError("sc", "at least one SC profile needed")
        for profile in self.scs:
            prefix = f"sc[{profile.code}]"
            if profile.weight <= 0:
                raise SynthConfigError(prefix + ".weight", "must be positive")
            if profile.pub_mean < 0 or profile.pub_dispersion <= 0:
                raise SynthConfigError(prefix + ".pub_mean",
                                       "mean >= 0 and dispersion > 0 required")
            if not 0 <= profile.uncited_share <= 1:
                raise SynthConfigError(prefix + ".uncited_share",
                                       "must lie in [0, 1]")
            if not 0 <= profile.ifless_share <= 1:
                raise SynthConfigError(prefix + ".ifless_share",
                                       "must lie in [0, 1]")
            if profile.authors_mean < 1:
                raise SynthConfigError(prefix + ".authors_mean",
                                       "must be at least 1")
            if profile.journals < 1:
                raise SynthConfigError(prefix + ".journals",
                                       "at least one journal needed")
        for rank in RANKS:
            if self.salary.get(rank, 0) <= 0:
                raise SynthConfigError(f"salaries.{rank}",
                                       "positive salary required")
        for share_name in ("short_staff_share", "partial_history_share",
                           "promotion_share", "intramural_share"):
            if not 0 <= getattr(self, share_name) <= 1:
                raise SynthConfigError(share_name, "must lie in [0, 1]")


DEFAULT_SC_POOL = (
    SCProfile("BIOCHEMISTRY", "Biology", 1.2, 5.5, 1.6, 1.4, 1.0, 0.22, 6.0, 0.9, 0.5, 0.04, 6),
    SCProfile("ECOLOGY", "Biology", 0.9, 4.0, 1.4, 1.1, 1.1, 0.28, 4.0, 0.6, 0.5, 0.05, 5),
    SCProfile("GENETICS", "Biology", 1.0, 6.0, 1.8, 1.5, 1.1, 0.20, 7.0, 1.0, 0.6, 0.03, 6),
    SCProfile("CARDIOLOGY", "Clinical medicine", 1.1, 6.5, 1.5, 1.3, 1.2, 0.25, 7.5, 0.8, 0.6, 0.05, 7),
    SCProfile("ONCOLOGY", "Clinical medicine", 1.2, 7.0, 1.7, 1.6, 1.2, 0.18, 8.0, 1.1, 0.6, 0.04, 7),
    SCProfile("SURGERY", "Clinical medicine", 0.9, 4.5, 1.3, 0.9, 1.3, 0.35, 6.0, 0.5, 0.5, 0.08, 5),
    SCProfile("OPTICS", "Physics", 0.8, 5.0, 1.6, 1.2, 1.0, 0.24, 4.5, 0.7, 0.4, 0.05, 5),
    SCProfile("ACOUSTICS", "Physics", 0.6, 3.5, 1.4, 0.9, 1.0, 0.30, 3.0, 0.4, 0.4, 0.06, 4),
    SCProfile("ROBOTICS", "Engineering", 0.8, 4.5, 1.5, 1.0, 1.1, 0.32, 3.5, 0.5, 0.5, 0.07, 5),
    SCProfile("MECHANICS", "Engineering", 0.9, 4.0, 1.4, 0.9, 1.0, 0.30, 3.0, 0.4, 0.4, 0.06, 5),
    SCProfile("STATISTICS", "Mathematics", 0.7, 3.0, 1.3, 0.8, 1.0, 0.35, 2.5, 0.3, 0.4, 0.08, 4),
    SCProfile("TOPOLOGY", "Mathematics", 0.5, 2.5, 1.2, 0.7, 1.0, 0.40, 2.0, 0.2, 0.4, 0.10, 3),
)

DEFAULT_CAPITAL = {
    "Biology": 30000.0,
    "Clinical medicine": 35000.0,
    "Physics": 40000.0,
    "Engineering": 28000.0,
    "Mathematics": 12000.0,
}


def default_config(seed: int, professors: dict[str, int],
                   n_scs: int = 12, pub_scale: float = 1.0) -> SynthConfig:
    """A ready-made profile mix covering both credit regimes."""
    if not 1 <= n_scs <= len(DEFAULT_SC_POOL):
        raise SynthConfigError("n_scs",
                               f"must lie in 1..{len(DEFAULT_SC_POOL)}")
    scs = tuple(
        SCProfile(**{**profile.__dict__,
                     "pub_mean": profile.pub_mean * pub_scale})
        for profile in DEFAULT_SC_POOL[:n_scs])
    factors = {name: round(0.9 + 0.2 * index, 2)
               for index, name in enumerate(sorted(professors))}
    return SynthConfig(
        seed=seed,
        countries=tuple(sorted(professors.items())),
        scs=scs,
        capital=dict(DEFAULT_CAPITAL),
        salary_factor=factors,
        capital_factor=factors,
    )


def _journals(rng: np.random.Generator,
              config: SynthConfig) -> list[JournalRecord]:
    """One journal pool per SC; some journals straddle a sibling SC."""
    by_discipline: dict[str, list[str]] = {}
    for profile in config.scs:
        by_discipline.setdefault(profile.discipline, []).append(profile.code)
    records = []
    years = range(config.window[0], config.window[1] + 1)
    for profile in config.scs:
        siblings = [code for code in by_discipline[profile.discipline]
                    if code != profile.code]
        for index in range(profile.journals):
            jid = f"J-{profile.code}-{index:03d}"
            scs = [profile.code]
            if siblings and rng.random() < 0.15:
                scs.append(siblings[int(rng.integers(0, len(siblings)))])
            ifless = rng.random() < profile.ifless_share
            for year in years:
                impact = None
                if not ifless:
                    impact = round(
                        float(np.exp(rng.normal(profile.if_mu,
                                                profile.if_sigma))), 3)
                records.append(JournalRecord(jid, year, impact,
                                             tuple(sorted(set(scs)))))
    return records


def _years_on_staff(rng: np.random.Generator, n: int,
                    config: SynthConfig) -> np.ndarray:
    wlen = config.window[1] - config.window[0] + 1
    if wlen == 1:
        return np.ones(n, dtype=int)
    probs = np.zeros(wlen)
    short = config.short_staff_share
    if wlen == 2:
        probs[0] = short
        probs[1] = 1.0 - short
    else:
        probs[0] = probs[1] = short / 2.0
        rest = 1.0 - short
        mids = wlen - 3
        if mids > 0:
            probs[2:wlen - 1] = rest * 0.3 / mids
            probs[wlen - 1] = rest * 0.7
        else:
            probs[wlen - 1] = rest
    return rng.choice(np.arange(1, wlen + 1), size=n, p=probs)


def _rank_history(rng: np.random.Generator, years_on_staff: int,
                  start_rank: int, promote: bool, partial: bool,
                  window: tuple[int, int]) -> dict[int, str]:
    last = window[1]
    staffed = list(range(last - years_on_staff + 1, last + 1))
    switch = staffed[len(staffed) // 2] if promote and years_on_staff >= 2 else None
    history = {}
    rank = start_rank
    for year in staffed:
        if switch is not None and year >= switch:
            rank = min(start_rank + 1, len(RANKS) - 1)
        history[year] = RANKS[rank]
    if partial and years_on_staff >= 2:
        keep = staffed[-max(1, years_on_staff // 2):]
        history = {year: history[year] for year in keep}
    return history


def generate(config: SynthConfig) -> DatasetBundle:
    """Build a full dataset bundle from the configuration."""
    config.validate()
    rng = np.random.default_rng(config.seed)
    journals = _journals(rng, config)

    weights = np.array([profile.weight for profile in config.scs])
    weights = weights / weights.sum()
    genders = np.array(GENDERS)
    gender_probs = np.array([0.38, 0.55, 0.07])

    professors: list[ProfessorRecord] = []
    publications: list[PublicationRecord] = []
    authorships: list[AuthorshipRecord] = []
    pub_counter = 0

    for country, count in config.countries:
        if count == 0:
            log.warning("country %s configured with 0 professors; omitted",
                        country)
            continue
        sc_counts = rng.multinomial(count, weights)
        sequence = 0
        for profile, block in zip(config.scs, sc_counts):
            if block == 0:
                continue
            block = int(block)
            block_genders = rng.choice(genders, size=block, p=gender_probs)
            staff_years = _years_on_staff(rng, block, config)
            start_ranks = rng.choice(3, size=block, p=[0.3, 0.4, 0.3])
            promotions = rng.random(block) < config.promotion_share
            partials = rng.random(block) < config.partial_history_share
            dispersion = profile.pub_dispersion
            p = dispersion / (dispersion + profile.pub_mean)
            pub_counts = rng.negative_binomial(dispersion, p, size=block)

            total = int(pub_counts.sum())
            years = rng.integers(config.window[0], config.window[1] + 1,
                                 size=total)
            journal_idx = rng.integers(0, profile.journals, size=total)
            uncited = rng.random(total) < profile.uncited_share
            cited_values = 1 + np.floor(
                np.exp(rng.normal(profile.citation_mu,
                                  profile.citation_sigma,
                                  size=total))).astype(int)
            citations = np.where(uncited, 0, cited_values)
            author_counts = np.clip(
                1 + rng.poisson(profile.authors_mean - 1.0, size=total),
                1, 50)
            positions = rng.integers(1, author_counts + 1)
            intramural = rng.random(total) < config.intramural_share
            affiliations = np.where(
                intramural, 1, 2 + rng.poisson(1.0, size=total))

            cursor = 0
            for member in range(block):
                sequence += 1
                pid = f"{country}-{sequence:06d}"
                yos = int(staff_years[member])
                history = _rank_history(
                    rng, yos, int(start_ranks[member]),
                    bool(promotions[member]), bool(partials[member]),
                    config.window)
                professors.append(ProfessorRecord(
                    pid, country, str(block_genders[member]), history, yos))
                for _ in range(int(pub_counts[member])):
                    pub_counter += 1
                    pub_id = f"W{pub_counter:08d}"
                    publications.append(PublicationRecord(
                        pub_id,
                        int(years[cursor]),
                        f"J-{profile.code}-{int(journal_idx[cursor]):03d}",
                        int(citations[cursor]),
                        int(author_counts[cursor]),
                        int(affiliations[cursor])))
                    authorships.append(AuthorshipRecord(
                        pub_id, pid, int(positions[cursor])))
                    cursor += 1

    salary = {}
    capital = {}
    for country, count in config.countries:
        if count == 0:
            continue
        salary_factor = config.salary_factor.get(country, 1.0)
        capital_factor = config.capital_factor.get(country, 1.0)
        for rank in RANKS:
            salary[(country, rank)] = round(
                config.salary[rank] * salary_factor, 2)
        for profile in config.scs:
            base = config.capital.get(profile.discipline, 20000.0)
            capital[(country, profile.discipline)] = round(
                base * capital_factor, 2)

    entries = {}
    for profile in config.scs:
        regime = ("position_weighted"
                  if profile.discipline in POSITION_WEIGHTED_DISCIPLINES
                  else "uniform")
        entries[profile.code] = (profile.discipline, regime)

    bundle = DatasetBundle(
        professors=professors,
        publications=publications,
        authorships=authorships,
        journals=journals,
        cost_table=CostTable(salary=salary, capital=capital),
        sc_map=SCMap(entries=entries),
    )
    log.info("generated %d professors, %d publications, %d journal rows",
             len(professors), len(publications), len(journals))
    return bundle


def load_synth_config(path: Path) -> SynthConfig:
    """Read a generator configuration from a flat TOML file."""
    from .config import _load_toml

    data = _load_toml(path)
    scs = []
    for raw in data.get("sc", []):
        known = {f for f in SCProfile.__dataclass_fields__}
        unknown = set(raw) - known
        if unknown:
            raise SynthConfigError("sc", f"unknown keys: {sorted(unknown)}")
        scs.append(SCProfile(**raw))
    countries = tuple(sorted(
        (str(name), int(count))
        for name, count in data.get("countries", {}).items()))
    window = tuple(data.get("window", (2011, 2015)))
    if len(window) != 2:
        raise SynthConfigError("window", "expected [start, end]")
    kwargs = {}
    for name in ("short_staff_share", "partial_history_share",
                 "promotion_share", "intramural_share"):
        if name in data:
            kwargs[name] = float(data[name])
    return SynthConfig(
        seed=int(data.get("seed", 0)),
        countries=countries,
        scs=tuple(scs),
        window=(int(window[0]), int(window[1])),
        salary={str(k): float(v) for k, v in data.get("salaries", {}).items()}
        or SynthConfig.__dataclass_fields__["salary"].default_factory(),
        salary_factor={str(k): float(v)
                       for k, v in data.get("salary_factor", {}).items()},
        capital={str(k): float(v)
                 for k, v in data.get("capital", {}).items()},
        capital_factor={str(k): float(v)
                        for k, v in data.get("capital_factor", {}).items()},
        **kwargs,
    )
