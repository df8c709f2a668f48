"""End-to-end analysis pipeline.

Chains loading, validation, country-pair resolution, cohort construction,
baseline building, per-professor indicator computation, normalization, and
report assembly. The per-professor stage optionally fans out to a process
pool; chunks are mapped in a fixed order and each professor is computed
wholly inside one worker, so parallel output is byte-identical to serial.
"""
from __future__ import annotations

import logging
import multiprocessing
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .analytics import (
    NormalizedScores,
    ReportBundle,
    build_reports,
    normalize_within_sc,
)
from .baselines import BaselineTable, build_baselines
from .cohort import (
    Cohort,
    apply_eligibility_filters,
    publication_if_table,
    publication_sc_table,
)
from .config import RunConfig
from .indicators import IndicatorVector, compute_indicators, compute_professor
from .ingestion import load_dataset, require_valid, validate_dataset
from .models import DatasetBundle, DatasetError, ValidationReport
from .reports import render_reports, write_baselines, write_indicators

log = logging.getLogger("sciprod.pipeline")


@dataclass
class PipelineResult:
    """Everything a run produces, before any file is written."""

    bundle: DatasetBundle
    validation: ValidationReport
    countries: tuple[str, str]
    cohort: Cohort
    baselines: BaselineTable
    vectors: dict[str, IndicatorVector]
    normalized: NormalizedScores
    reports: ReportBundle


def resolve_country_pair(
    bundle: DatasetBundle,
    override: Optional[tuple[str, str]],
) -> tuple[str, str]:
    """The ordered (A, B) pair the comparison tables are built for.

    Defaults to the two countries present, in lexicographic order. An
    explicit pair controls the orientation of every delta; datasets with
    more or fewer than two countries require one.
    """
    present = bundle.countries()
    if override is not None:
        country_a, country_b = override
        if country_a == country_b:
            raise DatasetError("personnel.csv", 0, "country_pair",
                               "country pair must name two distinct countries")
        for country in override:
            if country not in present:
                raise DatasetError(
                    "personnel.csv", 0, "country_pair",
                    f"no professors from '{country}' in the dataset")
        return (country_a, country_b)
    if len(present) != 2:
        raise DatasetError(
            "personnel.csv", 0, "country_pair",
            f"dataset holds {len(present)} countries "
            f"({', '.join(sorted(present)) or 'none'}); "
            "pass an explicit pair to compare")
    first, second = sorted(present)
    return (first, second)


def restrict_to_pair(bundle: DatasetBundle,
                     pair: tuple[str, str]) -> DatasetBundle:
    """Drop professors (and their authorships) outside the pair.

    The publication corpus stays whole: baselines are corpus-level facts
    and do not depend on who authored what.
    """
    keep = set(pair)
    professors = [p for p in bundle.professors if p.country in keep]
    if len(professors) == len(bundle.professors):
        return bundle
    kept_ids = {p.professor_id for p in professors}
    authorships = [a for a in bundle.authorships
                   if a.professor_id in kept_ids]
    dropped = len(bundle.professors) - len(professors)
    log.info("restricted to %s/%s: dropped %d professor(s)",
             pair[0], pair[1], dropped)
    return replace(bundle, professors=professors, authorships=authorships)


# shared state for forked workers, set immediately before the pool starts
_WORK: Optional[tuple] = None


def _compute_batch(pids: list[str]) -> list[IndicatorVector]:
    bundle, cohort, baselines, credit, window, pub_scs, pub_ifs = _WORK
    out = []
    for pid in pids:
        assignment = cohort.assignments[pid]
        out.append(compute_professor(
            bundle.professors_by_id[pid], assignment.assigned_sc,
            assignment.discipline, bundle, baselines, credit, window,
            pub_scs, pub_ifs))
    return out


def _parallel_indicators(
    bundle: DatasetBundle,
    cohort: Cohort,
    baselines: BaselineTable,
    config: RunConfig,
    pub_scs: dict,
    pub_ifs: dict,
) -> dict[str, IndicatorVector]:
    global _WORK
    pids = cohort.eligible_ids
    workers = min(config.parallel, max(1, len(pids)))
    chunk = max(1, -(-len(pids) // (workers * 4)))
    batches = [pids[i:i + chunk] for i in range(0, len(pids), chunk)]
    _WORK = (bundle, cohort, baselines, config.credit,
             config.cohort.window, pub_scs, pub_ifs)
    try:
        context = multiprocessing.get_context("fork")
        with context.Pool(workers) as pool:
            results = pool.map(_compute_batch, batches)
    except ValueError:
        # no fork on this platform; the serial path is always equivalent
        log.warning("fork unavailable; computing indicators serially")
        results = [_compute_batch(batch) for batch in batches]
    finally:
        _WORK = None
    vectors: dict[str, IndicatorVector] = {}
    for batch in results:
        for vec in batch:
            vectors[vec.professor_id] = vec
    return vectors


def run_analysis(config: RunConfig) -> PipelineResult:
    """Run the whole pipeline in memory and return every stage's output."""
    config.validate()
    bundle, report = load_dataset(config.inputs)
    require_valid(report)
    pair = resolve_country_pair(bundle, config.countries)
    bundle = restrict_to_pair(bundle, pair)
    validate_dataset(bundle, config.cohort.window, report)
    require_valid(report)

    pub_scs = publication_sc_table(bundle)
    pub_ifs = publication_if_table(bundle)
    cohort = apply_eligibility_filters(bundle, config.cohort, pub_scs)
    baselines = build_baselines(bundle, pub_scs, pub_ifs)
    if config.parallel > 1 and len(cohort.eligible_ids) > 1:
        vectors = _parallel_indicators(bundle, cohort, baselines, config,
                                       pub_scs, pub_ifs)
    else:
        vectors = compute_indicators(bundle, cohort, baselines,
                                     config.credit, config.cohort.window,
                                     pub_scs, pub_ifs)
    normalized = normalize_within_sc(vectors)
    reports = build_reports(vectors, normalized, pair,
                            top_k=config.top_k, decile=config.decile)
    return PipelineResult(bundle, report, pair, cohort, baselines,
                          vectors, normalized, reports)


def write_outputs(result: PipelineResult, config: RunConfig,
                  indicators: bool = True,
                  reports: bool = True) -> list[Path]:
    """Write the requested output files under the configured directory."""
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    if indicators:
        paths.append(write_indicators(result.vectors, out_dir))
    if config.emit_baselines:
        paths.append(write_baselines(result.baselines,
                                     Path(config.emit_baselines)))
    if reports:
        paths.extend(render_reports(result.reports, out_dir,
                                    config.report_format))
    return paths
