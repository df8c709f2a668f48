"""Canonical data structures shared across the pipeline.

Every ingestion, cohort, baseline and indicator module operates on the
types defined here. A parsed dataset is held in a :class:`DatasetBundle`,
which is treated as immutable once validated and is safe to share between
workers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

RANKS = ("assistant", "associate", "full")
GENDERS = ("F", "M", "unknown")

#: Disciplines whose byline conventions signal contribution by author order.
POSITION_WEIGHTED_DISCIPLINES = frozenset(
    {"Biology", "Biomedical research", "Clinical medicine"}
)

REGIME_UNIFORM = "uniform"
REGIME_POSITION = "position_weighted"

#: Indicator short names, in fixed report order.
INDICATORS = ("O", "FO", "AC", "AIF", "FSS")


@dataclass
class ProfessorRecord:
    """One evaluated researcher.

    ``rank_by_year`` maps each staffed calendar year to the rank held at the
    close of that year; ``years_on_staff`` is the number of staffed years in
    the observation window and may exceed the number of listed rank years
    when the source registry has gaps.
    """

    professor_id: str
    country: str
    gender: str
    rank_by_year: dict[int, str]
    years_on_staff: int


@dataclass
class PublicationRecord:
    """One paper: citation count is a snapshot, byline size includes
    unregistered external co-authors."""

    pub_id: str
    year: int
    journal_id: str
    citations: int
    total_authors: int
    affiliation_count: int


@dataclass
class AuthorshipRecord:
    """Link between a registered professor and a publication, with the
    professor's 1-based byline position."""

    pub_id: str
    professor_id: str
    position: int


@dataclass
class JournalRecord:
    """Journal metadata for one calendar year.

    ``impact_factor`` is None when the source has no IF for that year;
    ``subject_categories`` is the journal's non-empty, sorted SC list.
    """

    journal_id: str
    year: int
    impact_factor: Optional[float]
    subject_categories: tuple[str, ...]


@dataclass
class CostTable:
    """Average yearly research input costs in euros.

    ``salary`` keys are (country, rank), ``capital`` keys are
    (country, discipline). All values are strictly positive.
    """

    salary: dict[tuple[str, str], float]
    capital: dict[tuple[str, str], float]


@dataclass
class SCMap:
    """Subject category -> (discipline, credit regime) mapping.

    Each SC belongs to exactly one discipline. The regime decides whether
    co-author credit is split uniformly or by byline position.
    """

    entries: dict[str, tuple[str, str]]

    def discipline_of(self, sc: str) -> str:
        return self.entries[sc][0]

    def regime_of(self, sc: str) -> str:
        return self.entries[sc][1]

    def disciplines(self) -> set[str]:
        return {disc for disc, _ in self.entries.values()}


@dataclass
class DatasetBundle:
    """Merged, canonically ordered dataset.

    Records are keyed and sorted by id so that two bundles parsed from
    row-permuted files compare equal. Lookup indices are built once in
    ``__post_init__`` and never mutated afterwards.
    """

    professors: list[ProfessorRecord]
    publications: list[PublicationRecord]
    authorships: list[AuthorshipRecord]
    journals: list[JournalRecord]
    cost_table: CostTable
    sc_map: SCMap

    professors_by_id: dict[str, ProfessorRecord] = field(
        init=False, repr=False, compare=False
    )
    publications_by_id: dict[str, PublicationRecord] = field(
        init=False, repr=False, compare=False
    )
    journal_years: dict[tuple[str, int], JournalRecord] = field(
        init=False, repr=False, compare=False
    )
    #: journal_id -> sorted list of years with an entry
    journal_year_index: dict[str, list[int]] = field(
        init=False, repr=False, compare=False
    )
    #: professor_id -> [(pub_id, position)], sorted by pub_id
    authorships_by_professor: dict[str, list[tuple[str, int]]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        self.professors.sort(key=lambda p: p.professor_id)
        self.publications.sort(key=lambda p: p.pub_id)
        self.authorships.sort(key=lambda a: (a.pub_id, a.position))
        self.journals.sort(key=lambda j: (j.journal_id, j.year))
        self.professors_by_id = {p.professor_id: p for p in self.professors}
        self.publications_by_id = {p.pub_id: p for p in self.publications}
        self.journal_years = {(j.journal_id, j.year): j for j in self.journals}
        self.journal_year_index = {}
        for j in self.journals:
            self.journal_year_index.setdefault(j.journal_id, []).append(j.year)
        by_prof: dict[str, list[tuple[str, int]]] = {}
        for a in self.authorships:
            by_prof.setdefault(a.professor_id, []).append((a.pub_id, a.position))
        for entries in by_prof.values():
            entries.sort()
        self.authorships_by_professor = by_prof

    def countries(self) -> list[str]:
        return sorted({p.country for p in self.professors})


FATAL = "fatal"
WARNING = "warning"
ROW_ERROR = "row_error"


@dataclass
class ValidationIssue:
    """One integrity finding: severity, source location and violated rule."""

    severity: str
    file: str
    line: int
    rule: str
    message: str

    def format(self) -> str:
        return f"{self.severity}: {self.file}:{self.line} [{self.rule}] {self.message}"


@dataclass
class ValidationReport:
    """Accumulated findings from parsing and cross-file validation."""

    issues: list[ValidationIssue] = field(default_factory=list)

    def add(self, severity: str, file: str, line: int, rule: str, message: str) -> None:
        self.issues.append(ValidationIssue(severity, file, line, rule, message))

    def fatal_issues(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == FATAL]

    def warnings(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == WARNING]

    def row_errors(self) -> list[ValidationIssue]:
        return [i for i in self.issues if i.severity == ROW_ERROR]

    @property
    def is_valid(self) -> bool:
        return not self.fatal_issues()

    def extend(self, other: "ValidationReport") -> None:
        self.issues.extend(other.issues)

    def to_dict(self) -> dict:
        return {
            "valid": self.is_valid,
            "fatal_count": len(self.fatal_issues()),
            "warning_count": len(self.warnings()),
            "row_error_count": len(self.row_errors()),
            "issues": [
                {
                    "severity": i.severity,
                    "file": i.file,
                    "line": i.line,
                    "rule": i.rule,
                    "message": i.message,
                }
                for i in self.issues
            ],
        }


class DatasetError(Exception):
    """Fatal input problem; carries the source location and violated rule."""

    def __init__(self, file: str, line: int, rule: str, message: str):
        self.file = file
        self.line = line
        self.rule = rule
        super().__init__(f"{file}:{line} [{rule}] {message}")
        self.message = message
