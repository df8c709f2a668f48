"""Cohort construction: SC assignment, classification, eligibility filters.

Each publication inherits the subject categories of its hosting journal
(resolved at the publication year, falling back to the journal's nearest
covered year). Each professor is then classified into the single most
recurrent SC of their portfolio, and the eligibility filters are applied in
a fixed order:

    1. at least ``min_years_on_staff`` years on staff,
    2. at least one publication in the window,
    3. the assigned SC must hold at least ``min_sc_professors`` professors
       across all countries (counting only professors that survived 1-2),
    4. the assigned SC must not be on the exclusion list.

Every professor ends up either eligible or with exactly one exclusion
reason, so cohort size plus exclusion counts always equals the input size.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .config import CohortConfig
from .models import (
    DatasetBundle,
    DatasetError,
    JournalRecord,
    ProfessorRecord,
    PublicationRecord,
)

log = logging.getLogger("sciprod.cohort")

REASON_NONE = "none"
REASON_TOO_FEW_YEARS = "too_few_years"
REASON_NO_PUBLICATIONS = "no_publications"
REASON_SMALL_SC = "small_sc"
REASON_EXCLUDED_FIELD = "excluded_field"

EXCLUSION_REASONS = (
    REASON_TOO_FEW_YEARS,
    REASON_NO_PUBLICATIONS,
    REASON_SMALL_SC,
    REASON_EXCLUDED_FIELD,
)


@dataclass
class CohortAssignment:
    """Classification and eligibility outcome for one professor."""

    professor_id: str
    assigned_sc: Optional[str]
    discipline: Optional[str]
    eligible: bool
    exclusion_reason: str


@dataclass
class Cohort:
    """All assignments plus the sorted ids of the eligible population."""

    assignments: dict[str, CohortAssignment]
    eligible_ids: list[str]
    exclusion_counts: dict[str, int] = field(default_factory=dict)

    def eligible_in_sc(self, sc: str) -> list[str]:
        return [pid for pid in self.eligible_ids
                if self.assignments[pid].assigned_sc == sc]


def resolve_journal(bundle: DatasetBundle, pub: PublicationRecord) -> JournalRecord:
    """Journal entry for the publication's year, or the nearest covered year
    (ties prefer the earlier year). No entry at all is fatal."""
    exact = bundle.journal_years.get((pub.journal_id, pub.year))
    if exact is not None:
        return exact
    years = bundle.journal_year_index.get(pub.journal_id)
    if not years:
        raise DatasetError("journals.csv", 0, "unknown_journal",
                           f"no journal entry at any year for '{pub.journal_id}'")
    nearest = min(years, key=lambda y: (abs(y - pub.year), y))
    log.warning("journal %s has no %d entry; using %d for publication %s",
                pub.journal_id, pub.year, nearest, pub.pub_id)
    return bundle.journal_years[(pub.journal_id, nearest)]


def assign_publication_scs(pub: PublicationRecord, bundle: DatasetBundle) -> tuple[str, ...]:
    """The hosting journal's SC list, order-normalized (sorted)."""
    return resolve_journal(bundle, pub).subject_categories


def publication_sc_table(bundle: DatasetBundle) -> dict[str, tuple[str, ...]]:
    """pub_id -> sorted SC tuple for every publication, resolving each
    (journal, year) pair once."""
    cache: dict[tuple[str, int], tuple[str, ...]] = {}
    table: dict[str, tuple[str, ...]] = {}
    for pub in bundle.publications:
        key = (pub.journal_id, pub.year)
        scs = cache.get(key)
        if scs is None:
            scs = assign_publication_scs(pub, bundle)
            cache[key] = scs
        table[pub.pub_id] = scs
    return table


def publication_if_table(bundle: DatasetBundle) -> dict[str, Optional[float]]:
    """pub_id -> impact factor of the hosting journal at the resolved year."""
    cache: dict[tuple[str, int], Optional[float]] = {}
    table: dict[str, Optional[float]] = {}
    for pub in bundle.publications:
        key = (pub.journal_id, pub.year)
        if key not in cache:
            cache[key] = resolve_journal(bundle, pub).impact_factor
        table[pub.pub_id] = cache[key]
    return table


def classify_professor(
    prof: ProfessorRecord,
    bundle: DatasetBundle,
    pub_scs: dict[str, tuple[str, ...]],
) -> str:
    """Most recurrent SC in the professor's portfolio.

    Each publication contributes one count to each of its journal's SCs.
    Ties break first by the larger total citations accumulated in the tied
    SC, then by the lexicographically smaller SC code.
    """
    entries = bundle.authorships_by_professor.get(prof.professor_id, ())
    counts: dict[str, int] = {}
    citations: dict[str, int] = {}
    for pub_id, _pos in entries:
        pub = bundle.publications_by_id[pub_id]
        for sc in pub_scs[pub_id]:
            counts[sc] = counts.get(sc, 0) + 1
            citations[sc] = citations.get(sc, 0) + pub.citations
    if not counts:
        raise ValueError(f"professor '{prof.professor_id}' has no publications to classify")
    return min(counts, key=lambda sc: (-counts[sc], -citations[sc], sc))


def apply_eligibility_filters(
    bundle: DatasetBundle,
    config: CohortConfig,
    pub_scs: Optional[dict[str, tuple[str, ...]]] = None,
) -> Cohort:
    """Classify every professor and apply the eligibility filters in order."""
    if pub_scs is None:
        pub_scs = publication_sc_table(bundle)
    excluded = set(config.excluded_scs)
    assignments: dict[str, CohortAssignment] = {}
    survivors_by_sc: dict[str, list[str]] = {}

    for prof in bundle.professors:
        pid = prof.professor_id
        has_pubs = bool(bundle.authorships_by_professor.get(pid))
        sc = classify_professor(prof, bundle, pub_scs) if has_pubs else None
        discipline = bundle.sc_map.discipline_of(sc) if sc is not None else None
        if prof.years_on_staff < config.min_years_on_staff:
            reason = REASON_TOO_FEW_YEARS
        elif not has_pubs:
            reason = REASON_NO_PUBLICATIONS
        else:
            reason = REASON_NONE
            survivors_by_sc.setdefault(sc, []).append(pid)
        assignments[pid] = CohortAssignment(pid, sc, discipline, False, reason)

    # SC-size filter counts only professors that passed the individual
    # filters, across all countries combined
    small_scs = {sc for sc, ids in survivors_by_sc.items()
                 if len(ids) < config.min_sc_professors}

    eligible_ids: list[str] = []
    exclusion_counts = {reason: 0 for reason in EXCLUSION_REASONS}
    for pid, assignment in assignments.items():
        if assignment.exclusion_reason == REASON_NONE:
            if assignment.assigned_sc in small_scs:
                assignment.exclusion_reason = REASON_SMALL_SC
            elif assignment.assigned_sc in excluded:
                assignment.exclusion_reason = REASON_EXCLUDED_FIELD
            else:
                assignment.eligible = True
                eligible_ids.append(pid)
        if not assignment.eligible:
            exclusion_counts[assignment.exclusion_reason] += 1

    eligible_ids.sort()
    for reason, count in sorted(exclusion_counts.items()):
        if count:
            log.info("excluded %d professor(s): %s", count, reason)
    return Cohort(assignments, eligible_ids, exclusion_counts)
