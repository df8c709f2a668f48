"""CSV ingestion, cross-file validation and canonical serialization.

Input is a set of seven UTF-8 CSV files with fixed headers:

    personnel.csv     professor_id,country,gender,rank_by_year,years_on_staff
    publications.csv  pub_id,year,journal_id,citations,total_authors,affiliation_count
    authorships.csv   pub_id,professor_id,position
    journals.csv      journal_id,year,impact_factor,subject_categories
    salaries.csv      country,rank,yearly_salary_eur
    capital.csv       country,discipline,yearly_capital_eur
    scmap.csv         sc,discipline[,credit_regime]

``rank_by_year`` holds ``;``-separated ``year:rank`` pairs, subject
categories are ``|``-separated, and the impact-factor field may be empty.

Every fatal finding names the file, the 1-based line number and the violated
rule, so a failed run can be traced back to the offending row. Malformed
personnel rows (bad tokens) are collected as row-level errors and excluded;
structural problems (duplicate keys, broken references, negative counts)
are fatal.
"""
from __future__ import annotations

import csv
import logging
import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .models import (
    FATAL,
    GENDERS,
    POSITION_WEIGHTED_DISCIPLINES,
    RANKS,
    REGIME_POSITION,
    REGIME_UNIFORM,
    ROW_ERROR,
    WARNING,
    CostTable,
    DatasetBundle,
    DatasetError,
    JournalRecord,
    ProfessorRecord,
    PublicationRecord,
    AuthorshipRecord,
    SCMap,
    ValidationReport,
)

log = logging.getLogger("sciprod.ingestion")

PERSONNEL_HEADER = ["professor_id", "country", "gender", "rank_by_year", "years_on_staff"]
PUBLICATIONS_HEADER = ["pub_id", "year", "journal_id", "citations", "total_authors", "affiliation_count"]
AUTHORSHIPS_HEADER = ["pub_id", "professor_id", "position"]
JOURNALS_HEADER = ["journal_id", "year", "impact_factor", "subject_categories"]
SALARIES_HEADER = ["country", "rank", "yearly_salary_eur"]
CAPITAL_HEADER = ["country", "discipline", "yearly_capital_eur"]
SCMAP_HEADER = ["sc", "discipline"]
SCMAP_HEADER_FULL = ["sc", "discipline", "credit_regime"]


@dataclass
class InputPaths:
    """Locations of the seven input files."""

    personnel: str
    publications: str
    authorships: str
    journals: str
    salaries: str
    capital: str
    scmap: str

    @classmethod
    def in_dir(cls, directory: str) -> "InputPaths":
        """Standard filenames under one directory."""
        j = lambda name: os.path.join(directory, name)
        return cls(
            personnel=j("personnel.csv"),
            publications=j("publications.csv"),
            authorships=j("authorships.csv"),
            journals=j("journals.csv"),
            salaries=j("salaries.csv"),
            capital=j("capital.csv"),
            scmap=j("scmap.csv"),
        )

    def as_list(self) -> list[str]:
        return [
            self.personnel,
            self.publications,
            self.authorships,
            self.journals,
            self.salaries,
            self.capital,
            self.scmap,
        ]


def _read_rows(path: str, expected_header: list[str], report: ValidationReport,
               alt_header: Optional[list[str]] = None) -> Optional[list[list[str]]]:
    """Read all rows after an exact header match; None when the file is unusable."""
    fname = os.path.basename(path)
    if not os.path.exists(path):
        report.add(FATAL, fname, 0, "missing_file", f"input file not found: {path}")
        return None
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            report.add(FATAL, fname, 1, "missing_header", "file is empty, header row mandatory")
            return None
        if header != expected_header and (alt_header is None or header != alt_header):
            missing = [c for c in expected_header if c not in header]
            detail = f"missing columns {missing}" if missing else f"got {header}"
            report.add(
                FATAL, fname, 1, "schema_mismatch",
                f"expected header {expected_header}, {detail}",
            )
            return None
        rows = list(reader)
    return rows


def parse_personnel(path: str, report: ValidationReport) -> list[ProfessorRecord]:
    """Parse the personnel registry.

    Rows with unknown rank or gender tokens, or malformed rank/year fields,
    are excluded and recorded as row-level errors; duplicate professor ids
    are fatal.
    """
    fname = os.path.basename(path)
    rows = _read_rows(path, PERSONNEL_HEADER, report)
    records: list[ProfessorRecord] = []
    if rows is None:
        return records
    seen: dict[str, int] = {}
    for lineno, row in enumerate(rows, start=2):
        if len(row) != len(PERSONNEL_HEADER):
            report.add(ROW_ERROR, fname, lineno, "field_count",
                       f"expected {len(PERSONNEL_HEADER)} fields, got {len(row)}")
            continue
        prof_id, country, gender, rank_field, years_field = [f.strip() for f in row]
        if not prof_id:
            report.add(ROW_ERROR, fname, lineno, "empty_id", "professor_id is empty")
            continue
        if prof_id in seen:
            report.add(FATAL, fname, lineno, "duplicate_professor_id",
                       f"professor_id '{prof_id}' already defined at line {seen[prof_id]}")
            continue
        if gender == "":
            gender = "unknown"
        if gender not in GENDERS:
            report.add(ROW_ERROR, fname, lineno, "unknown_gender",
                       f"unknown gender token '{gender}', row excluded")
            continue
        rank_by_year: dict[int, str] = {}
        ok = True
        for pair in filter(None, rank_field.split(";")):
            year_str, _, rank = pair.partition(":")
            try:
                year = int(year_str)
            except ValueError:
                report.add(ROW_ERROR, fname, lineno, "malformed_rank_year",
                           f"cannot parse year in '{pair}', row excluded")
                ok = False
                break
            if rank not in RANKS:
                report.add(ROW_ERROR, fname, lineno, "unknown_rank",
                           f"unknown rank '{rank}', row excluded")
                ok = False
                break
            rank_by_year[year] = rank
        if not ok:
            continue
        try:
            years_on_staff = int(years_field)
        except ValueError:
            report.add(ROW_ERROR, fname, lineno, "malformed_years_on_staff",
                       f"cannot parse years_on_staff '{years_field}', row excluded")
            continue
        if years_on_staff < 1:
            report.add(FATAL, fname, lineno, "years_on_staff_range",
                       f"years_on_staff must be >= 1, got {years_on_staff}")
            continue
        if not rank_by_year:
            report.add(ROW_ERROR, fname, lineno, "empty_rank_history",
                       "rank_by_year is empty, row excluded")
            continue
        seen[prof_id] = lineno
        records.append(ProfessorRecord(prof_id, country, gender, rank_by_year, years_on_staff))
    return records


def parse_journals(path: str, report: ValidationReport) -> list[JournalRecord]:
    """Parse the per-year journal table. Empty impact factor is allowed,
    an empty SC list or a negative IF is fatal."""
    fname = os.path.basename(path)
    rows = _read_rows(path, JOURNALS_HEADER, report)
    records: list[JournalRecord] = []
    if rows is None:
        return records
    seen: dict[tuple[str, int], int] = {}
    for lineno, row in enumerate(rows, start=2):
        if len(row) != len(JOURNALS_HEADER):
            report.add(FATAL, fname, lineno, "field_count",
                       f"expected {len(JOURNALS_HEADER)} fields, got {len(row)}")
            continue
        journal_id, year_str, if_str, sc_field = [f.strip() for f in row]
        try:
            year = int(year_str)
        except ValueError:
            report.add(FATAL, fname, lineno, "malformed_year", f"cannot parse year '{year_str}'")
            continue
        if (journal_id, year) in seen:
            report.add(FATAL, fname, lineno, "duplicate_journal_year",
                       f"({journal_id}, {year}) already defined at line {seen[(journal_id, year)]}")
            continue
        impact_factor: Optional[float] = None
        if if_str:
            try:
                impact_factor = float(if_str)
            except ValueError:
                report.add(FATAL, fname, lineno, "malformed_impact_factor",
                           f"cannot parse impact_factor '{if_str}'")
                continue
            if impact_factor < 0:
                report.add(FATAL, fname, lineno, "negative_impact_factor",
                           f"impact_factor must be >= 0, got {impact_factor}")
                continue
        scs = tuple(sorted(s.strip() for s in sc_field.split("|") if s.strip()))
        if not scs:
            report.add(FATAL, fname, lineno, "empty_sc_list",
                       f"journal ({journal_id}, {year}) has an empty SC list")
            continue
        seen[(journal_id, year)] = lineno
        records.append(JournalRecord(journal_id, year, impact_factor, scs))
    return records


def parse_publications(
    publications_path: str,
    authorships_path: str,
    journal_ids: set[str],
    report: ValidationReport,
) -> tuple[list[PublicationRecord], list[AuthorshipRecord]]:
    """Parse publications and their authorship links.

    The journal table must already be loaded: a publication referencing an
    unknown journal is a fatal referential error, as is an authorship whose
    byline position exceeds the publication's author count.
    """
    fname = os.path.basename(publications_path)
    rows = _read_rows(publications_path, PUBLICATIONS_HEADER, report)
    publications: list[PublicationRecord] = []
    authors_of: dict[str, int] = {}
    if rows is not None:
        seen_line: dict[str, int] = {}
        for lineno, row in enumerate(rows, start=2):
            if len(row) != len(PUBLICATIONS_HEADER):
                report.add(FATAL, fname, lineno, "field_count",
                           f"expected {len(PUBLICATIONS_HEADER)} fields, got {len(row)}")
                continue
            pub_id, year_s, journal_id, cit_s, auth_s, aff_s = row
            pub_id = pub_id.strip()
            journal_id = journal_id.strip()
            try:
                year = int(year_s)
                citations = int(cit_s)
                total_authors = int(auth_s)
                affiliation_count = int(aff_s)
            except ValueError:
                report.add(FATAL, fname, lineno, "malformed_integer",
                           f"cannot parse numeric fields in row for '{pub_id}'")
                continue
            if pub_id in seen_line:
                report.add(FATAL, fname, lineno, "duplicate_pub_id",
                           f"pub_id '{pub_id}' already defined at line {seen_line[pub_id]}")
                continue
            if citations < 0:
                report.add(FATAL, fname, lineno, "negative_citations",
                           f"citations must be >= 0, got {citations}")
                continue
            if total_authors < 1:
                report.add(FATAL, fname, lineno, "total_authors_range",
                           f"total_authors must be >= 1, got {total_authors}")
                continue
            if affiliation_count < 1:
                report.add(FATAL, fname, lineno, "affiliation_count_range",
                           f"affiliation_count must be >= 1, got {affiliation_count}")
                continue
            if journal_id not in journal_ids:
                report.add(FATAL, fname, lineno, "unknown_journal",
                           f"publication '{pub_id}' references unknown journal_id '{journal_id}'")
                continue
            seen_line[pub_id] = lineno
            publications.append(
                PublicationRecord(pub_id, year, journal_id, citations, total_authors, affiliation_count)
            )
            authors_of[pub_id] = total_authors

    aname = os.path.basename(authorships_path)
    arows = _read_rows(authorships_path, AUTHORSHIPS_HEADER, report)
    authorships: list[AuthorshipRecord] = []
    if arows is not None:
        seen_pair: set[tuple[str, str]] = set()
        seen_pos: set[tuple[str, int]] = set()
        for lineno, row in enumerate(arows, start=2):
            if len(row) != len(AUTHORSHIPS_HEADER):
                report.add(FATAL, aname, lineno, "field_count",
                           f"expected {len(AUTHORSHIPS_HEADER)} fields, got {len(row)}")
                continue
            pub_id, professor_id, pos_s = [f.strip() for f in row]
            try:
                position = int(pos_s)
            except ValueError:
                report.add(FATAL, aname, lineno, "malformed_integer",
                           f"cannot parse position '{pos_s}'")
                continue
            total = authors_of.get(pub_id)
            if total is None:
                report.add(FATAL, aname, lineno, "unknown_publication",
                           f"authorship references unknown pub_id '{pub_id}'")
                continue
            if not 1 <= position <= total:
                report.add(FATAL, aname, lineno, "position_out_of_range",
                           f"position {position} outside 1..{total} for '{pub_id}'")
                continue
            if (pub_id, professor_id) in seen_pair:
                report.add(FATAL, aname, lineno, "duplicate_authorship",
                           f"duplicate authorship ({pub_id}, {professor_id})")
                continue
            if (pub_id, position) in seen_pos:
                report.add(FATAL, aname, lineno, "duplicate_position",
                           f"position {position} of '{pub_id}' already claimed")
                continue
            seen_pair.add((pub_id, professor_id))
            seen_pos.add((pub_id, position))
            authorships.append(AuthorshipRecord(pub_id, professor_id, position))
    return publications, authorships


def parse_cost_and_scmap(
    salary_path: str,
    capital_path: str,
    scmap_path: str,
    report: ValidationReport,
) -> tuple[CostTable, SCMap]:
    """Parse the salary and capital tables and the SC -> discipline map.

    When scmap.csv omits the credit_regime column the regime defaults by
    discipline: position-weighted for the life sciences, uniform elsewhere.
    An SC mapped to two different disciplines is fatal.
    """
    salary: dict[tuple[str, str], float] = {}
    fname = os.path.basename(salary_path)
    rows = _read_rows(salary_path, SALARIES_HEADER, report)
    if rows is not None:
        for lineno, row in enumerate(rows, start=2):
            if len(row) != 3:
                report.add(FATAL, fname, lineno, "field_count", f"expected 3 fields, got {len(row)}")
                continue
            country, rank, value_s = [f.strip() for f in row]
            if rank not in RANKS:
                report.add(ROW_ERROR, fname, lineno, "unknown_rank",
                           f"unknown rank '{rank}', row excluded")
                continue
            try:
                value = float(value_s)
            except ValueError:
                report.add(FATAL, fname, lineno, "malformed_number",
                           f"cannot parse yearly_salary_eur '{value_s}'")
                continue
            if value <= 0:
                report.add(FATAL, fname, lineno, "non_positive_salary",
                           f"yearly_salary_eur must be > 0, got {value}")
                continue
            if (country, rank) in salary:
                report.add(FATAL, fname, lineno, "duplicate_salary_entry",
                           f"duplicate salary entry for ({country}, {rank})")
                continue
            salary[(country, rank)] = value

    capital: dict[tuple[str, str], float] = {}
    fname = os.path.basename(capital_path)
    rows = _read_rows(capital_path, CAPITAL_HEADER, report)
    if rows is not None:
        for lineno, row in enumerate(rows, start=2):
            if len(row) != 3:
                report.add(FATAL, fname, lineno, "field_count", f"expected 3 fields, got {len(row)}")
                continue
            country, discipline, value_s = [f.strip() for f in row]
            try:
                value = float(value_s)
            except ValueError:
                report.add(FATAL, fname, lineno, "malformed_number",
                           f"cannot parse yearly_capital_eur '{value_s}'")
                continue
            if value <= 0:
                report.add(FATAL, fname, lineno, "non_positive_capital",
                           f"yearly_capital_eur must be > 0, got {value}")
                continue
            if (country, discipline) in capital:
                report.add(FATAL, fname, lineno, "duplicate_capital_entry",
                           f"duplicate capital entry for ({country}, {discipline})")
                continue
            capital[(country, discipline)] = value

    entries: dict[str, tuple[str, str]] = {}
    fname = os.path.basename(scmap_path)
    rows = _read_rows(scmap_path, SCMAP_HEADER, report, alt_header=SCMAP_HEADER_FULL)
    if rows is not None:
        for lineno, row in enumerate(rows, start=2):
            if len(row) == 2:
                sc, discipline = [f.strip() for f in row]
                regime = ""
            elif len(row) == 3:
                sc, discipline, regime = [f.strip() for f in row]
            else:
                report.add(FATAL, fname, lineno, "field_count",
                           f"expected 2 or 3 fields, got {len(row)}")
                continue
            if not regime:
                regime = (REGIME_POSITION if discipline in POSITION_WEIGHTED_DISCIPLINES
                          else REGIME_UNIFORM)
            if regime not in (REGIME_UNIFORM, REGIME_POSITION):
                report.add(ROW_ERROR, fname, lineno, "unknown_regime",
                           f"unknown credit_regime '{regime}', row excluded")
                continue
            if sc in entries:
                prev_disc, prev_reg = entries[sc]
                if (prev_disc, prev_reg) == (discipline, regime):
                    report.add(WARNING, fname, lineno, "duplicate_sc_entry",
                               f"SC '{sc}' mapped twice to the same discipline")
                else:
                    report.add(FATAL, fname, lineno, "sc_multiple_disciplines",
                               f"SC '{sc}' mapped to both '{prev_disc}' and '{discipline}'")
                continue
            entries[sc] = (discipline, regime)
    return CostTable(salary, capital), SCMap(entries)


def load_dataset(paths: InputPaths) -> tuple[DatasetBundle, ValidationReport]:
    """Parse all input files into a canonical bundle plus the parse report.

    The bundle is structurally usable even when the report carries fatal
    issues; callers must gate on ``report.is_valid`` (or use
    :func:`require_valid`) before computing anything from it.
    """
    report = ValidationReport()
    professors = parse_personnel(paths.personnel, report)
    journals = parse_journals(paths.journals, report)
    journal_ids = {j.journal_id for j in journals}
    publications, authorships = parse_publications(
        paths.publications, paths.authorships, journal_ids, report
    )
    cost_table, sc_map = parse_cost_and_scmap(
        paths.salaries, paths.capital, paths.scmap, report
    )
    bundle = DatasetBundle(professors, publications, authorships, journals, cost_table, sc_map)
    return bundle, report


def validate_dataset(bundle: DatasetBundle, window: tuple[int, int],
                     report: Optional[ValidationReport] = None) -> ValidationReport:
    """Cross-file integrity checks over the merged bundle.

    Appends to (and returns) ``report``; the bundle is considered valid only
    when the combined report carries zero fatal issues.
    """
    if report is None:
        report = ValidationReport()
    start, end = window
    window_len = end - start + 1

    pub_countries: dict[str, set[str]] = {}
    for a in bundle.authorships:
        prof = bundle.professors_by_id.get(a.professor_id)
        if prof is None:
            report.add(FATAL, "authorships.csv", 0, "unknown_professor",
                       f"authorship ({a.pub_id}, {a.professor_id}) references an unregistered professor")
        else:
            pub_countries.setdefault(a.pub_id, set()).add(prof.country)

    if not bundle.publications:
        report.add(FATAL, "publications.csv", 0, "empty_corpus",
                   "no publications parsed, nothing to evaluate")

    for prof in bundle.professors:
        rank_years = sorted(prof.rank_by_year)
        for year in rank_years:
            if not start <= year <= end:
                report.add(FATAL, "personnel.csv", 0, "rank_year_outside_window",
                           f"professor '{prof.professor_id}' has rank year {year} "
                           f"outside window {start}-{end}")
        if prof.years_on_staff > window_len:
            report.add(FATAL, "personnel.csv", 0, "years_on_staff_range",
                       f"professor '{prof.professor_id}' has years_on_staff "
                       f"{prof.years_on_staff} > window length {window_len}")
        elif len(rank_years) > prof.years_on_staff:
            report.add(FATAL, "personnel.csv", 0, "rank_years_exceed_staff_years",
                       f"professor '{prof.professor_id}' lists {len(rank_years)} rank years "
                       f"but years_on_staff={prof.years_on_staff}")

    # publication-year checks: window membership, journal-year coverage and
    # rank coverage of the publishing professor
    for pub in bundle.publications:
        if not start <= pub.year <= end:
            report.add(FATAL, "publications.csv", 0, "year_outside_window",
                       f"publication '{pub.pub_id}' year {pub.year} outside window {start}-{end}")
            continue
        if (pub.journal_id, pub.year) not in bundle.journal_years:
            report.add(WARNING, "journals.csv", 0, "journal_year_fallback",
                       f"no ({pub.journal_id}, {pub.year}) entry; nearest year will be used "
                       f"for publication '{pub.pub_id}'")

    for prof_id, entries in bundle.authorships_by_professor.items():
        prof = bundle.professors_by_id.get(prof_id)
        if prof is None:
            continue
        missing_years = sorted({
            bundle.publications_by_id[pid].year
            for pid, _ in entries
            if pid in bundle.publications_by_id
            and bundle.publications_by_id[pid].year not in prof.rank_by_year
        })
        for year in missing_years:
            report.add(WARNING, "personnel.csv", 0, "rank_year_gap",
                       f"professor '{prof_id}' has a {year} publication but no {year} rank; "
                       f"cost imputed from nearest rank year")

    # every SC used by a hosting journal must resolve to a discipline
    known_scs = set(bundle.sc_map.entries)
    used_journals = {p.journal_id for p in bundle.publications}
    for j in bundle.journals:
        if j.journal_id not in used_journals:
            continue
        for sc in j.subject_categories:
            if sc not in known_scs:
                report.add(FATAL, "scmap.csv", 0, "unknown_sc",
                           f"SC '{sc}' of journal '{j.journal_id}' has no discipline mapping")

    # cost completeness: each (country, rank) held and each (country,
    # discipline) reachable through that country's publications needs an entry
    for prof in bundle.professors:
        for rank in set(prof.rank_by_year.values()):
            if (prof.country, rank) not in bundle.cost_table.salary:
                report.add(FATAL, "salaries.csv", 0, "missing_cost_entry",
                           f"no salary entry for ({prof.country}, {rank})")
    needed_capital: set[tuple[str, str]] = set()
    for pub in bundle.publications:
        countries = pub_countries.get(pub.pub_id)
        if not countries:
            continue
        journal = bundle.journal_years.get((pub.journal_id, pub.year))
        if journal is None:
            years = bundle.journal_year_index.get(pub.journal_id)
            if not years:
                report.add(FATAL, "journals.csv", 0, "unknown_journal",
                           f"publication '{pub.pub_id}' references unknown journal "
                           f"'{pub.journal_id}'")
                continue
            nearest = min(years, key=lambda y: (abs(y - pub.year), y))
            journal = bundle.journal_years[(pub.journal_id, nearest)]
        for sc in journal.subject_categories:
            if sc in known_scs:
                disc = bundle.sc_map.discipline_of(sc)
                for country in countries:
                    needed_capital.add((country, disc))
    for key in sorted(needed_capital):
        if key not in bundle.cost_table.capital:
            report.add(FATAL, "capital.csv", 0, "missing_cost_entry",
                       f"no capital entry for ({key[0]}, {key[1]})")

    dedup: set[tuple] = set()
    unique = []
    for issue in report.issues:
        key = (issue.severity, issue.file, issue.line, issue.rule, issue.message)
        if key not in dedup:
            dedup.add(key)
            unique.append(issue)
    report.issues[:] = unique
    return report


def require_valid(report: ValidationReport) -> None:
    """Raise DatasetError on the first fatal issue of an invalid report."""
    fatals = report.fatal_issues()
    if fatals:
        first = fatals[0]
        raise DatasetError(first.file, first.line, first.rule,
                           f"{first.message} ({len(fatals)} fatal issue(s) in total)")


def _format_money(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def write_bundle(bundle: DatasetBundle, directory: str) -> InputPaths:
    """Serialize a bundle back to the seven canonical CSV files.

    Output is byte-deterministic: records are written in canonical id order
    with LF line endings, so parse -> write -> parse round-trips to an equal
    bundle.
    """
    os.makedirs(directory, exist_ok=True)
    paths = InputPaths.in_dir(directory)

    def _writer(path: str, header: list[str], rows: Iterable[Iterable]) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)

    _writer(paths.personnel, PERSONNEL_HEADER, (
        (
            p.professor_id,
            p.country,
            p.gender,
            ";".join(f"{y}:{p.rank_by_year[y]}" for y in sorted(p.rank_by_year)),
            p.years_on_staff,
        )
        for p in bundle.professors
    ))
    _writer(paths.publications, PUBLICATIONS_HEADER, (
        (p.pub_id, p.year, p.journal_id, p.citations, p.total_authors, p.affiliation_count)
        for p in bundle.publications
    ))
    _writer(paths.authorships, AUTHORSHIPS_HEADER, (
        (a.pub_id, a.professor_id, a.position) for a in bundle.authorships
    ))
    _writer(paths.journals, JOURNALS_HEADER, (
        (
            j.journal_id,
            j.year,
            "" if j.impact_factor is None else repr(j.impact_factor),
            "|".join(j.subject_categories),
        )
        for j in bundle.journals
    ))
    _writer(paths.salaries, SALARIES_HEADER, (
        (country, rank, _format_money(v))
        for (country, rank), v in sorted(bundle.cost_table.salary.items())
    ))
    _writer(paths.capital, CAPITAL_HEADER, (
        (country, disc, _format_money(v))
        for (country, disc), v in sorted(bundle.cost_table.capital.items())
    ))
    _writer(paths.scmap, SCMAP_HEADER_FULL, (
        (sc, disc, regime)
        for sc, (disc, regime) in sorted(bundle.sc_map.entries.items())
    ))
    return paths
