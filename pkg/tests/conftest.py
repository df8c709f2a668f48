"""Shared fixture builders.

``make_bundle`` assembles a DatasetBundle from terse tuples so unit tests
stay readable. The ``f1`` fixture is a five-professor dataset whose
indicator values are small enough to verify by hand; the expected numbers
live next to the assertions in the test modules that use it.
"""
from __future__ import annotations

import pytest

from sciprod.config import CohortConfig, CreditConfig
from sciprod.models import (
    AuthorshipRecord,
    CostTable,
    DatasetBundle,
    JournalRecord,
    ProfessorRecord,
    PublicationRecord,
    REGIME_POSITION,
    REGIME_UNIFORM,
    SCMap,
)


def make_professor(pid, country="IT", gender="F", ranks=None, years=None):
    ranks = ranks if ranks is not None else {y: "full" for y in range(2011, 2016)}
    return ProfessorRecord(
        professor_id=pid,
        country=country,
        gender=gender,
        rank_by_year=dict(ranks),
        years_on_staff=years if years is not None else len(ranks),
    )


def make_pub(pub_id, year, journal_id, citations, authors, affiliations=1):
    return PublicationRecord(
        pub_id=pub_id,
        year=year,
        journal_id=journal_id,
        citations=citations,
        total_authors=authors,
        affiliation_count=affiliations,
    )


def make_bundle(professors, publications, authorships, journals,
                salary=None, capital=None, sc_entries=None):
    """authorships: (pub_id, professor_id, position) triples.
    journals: (journal_id, year, impact_factor, scs) tuples."""
    salary = salary or {
        ("IT", "assistant"): 40000.0,
        ("IT", "associate"): 60000.0,
        ("IT", "full"): 80000.0,
        ("NO", "assistant"): 50000.0,
        ("NO", "associate"): 70000.0,
        ("NO", "full"): 90000.0,
    }
    capital = capital or {
        ("IT", "Clinical medicine"): 10000.0,
        ("IT", "Mathematics"): 5000.0,
        ("NO", "Clinical medicine"): 12000.0,
        ("NO", "Mathematics"): 6000.0,
    }
    sc_entries = sc_entries or {
        "CARD": ("Clinical medicine", REGIME_POSITION),
        "MATH": ("Mathematics", REGIME_UNIFORM),
    }
    return DatasetBundle(
        professors=list(professors),
        publications=list(publications),
        authorships=[AuthorshipRecord(*a) for a in authorships],
        journals=[JournalRecord(j, y, f, tuple(sorted(scs)))
                  for j, y, f, scs in journals],
        cost_table=CostTable(salary=dict(salary), capital=dict(capital)),
        sc_map=SCMap(entries=dict(sc_entries)),
    )


@pytest.fixture
def tiny_cohort_config():
    # min_sc_professors=1 so handmade fixtures keep every SC
    return CohortConfig(min_years_on_staff=3, min_sc_professors=1)


@pytest.fixture
def credit_config():
    return CreditConfig()


def build_f1():
    """Two countries, two SCs, five professors, six publications.

    P1 (IT, CARD): W1 cited intramural pair, W2 uncited solo.
    P2 (IT, MATH): W3 four-author, W6 in an IF-less journal.
    P3 (NO, CARD): W4 five-author extramural in a dual-SC journal, W5 trio.
    P4 (NO): two staffed years, filtered out.
    P5 (IT): no publications, filtered out.
    """
    professors = [
        make_professor("P1", "IT", "F"),
        make_professor("P2", "IT", "M",
                       ranks={2013: "associate", 2014: "associate", 2015: "associate"}),
        make_professor("P3", "NO", "F"),
        make_professor("P4", "NO", "M", ranks={2014: "assistant", 2015: "assistant"}),
        make_professor("P5", "IT", "unknown"),
    ]
    publications = [
        make_pub("W1", 2013, "J1", citations=10, authors=2, affiliations=1),
        make_pub("W2", 2013, "J1", citations=0, authors=1, affiliations=1),
        make_pub("W3", 2013, "J2", citations=5, authors=4, affiliations=2),
        make_pub("W4", 2013, "J3", citations=20, authors=5, affiliations=3),
        make_pub("W5", 2014, "J1", citations=8, authors=3, affiliations=1),
        make_pub("W6", 2013, "J4", citations=4, authors=2, affiliations=1),
    ]
    authorships = [
        ("W1", "P1", 1),
        ("W2", "P1", 1),
        ("W3", "P2", 2),
        ("W4", "P3", 5),
        ("W5", "P3", 2),
        ("W5", "P4", 1),
        ("W6", "P2", 1),
    ]
    journals = [
        ("J1", y, 2.0, ("CARD",)) for y in range(2011, 2016)
    ] + [
        ("J2", y, 1.0, ("MATH",)) for y in range(2011, 2016)
    ] + [
        ("J3", 2013, 3.0, ("CARD", "MATH")),
        ("J4", 2013, None, ("MATH",)),
    ]
    return make_bundle(professors, publications, authorships, journals)


@pytest.fixture
def f1():
    return build_f1()
