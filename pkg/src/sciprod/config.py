"""Run configuration: thresholds, credit weights, report options.

A run is fully described by a :class:`RunConfig`; every analysis stage is a
deterministic function of (inputs, config). Configs can be built in code or
loaded from a TOML file, with command-line flags overriding file values.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from typing import Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .ingestion import InputPaths


def _load_toml(path) -> dict:
    with open(path, "rb") as fh:
        return tomllib.load(fh)


@dataclass(frozen=True)
class CreditConfig:
    """Byline credit-weight constants, overridable to suit other national
    byline practices. Defaults: 40/20 intramural, 30/15/10 extramural."""

    intramural_first_last: float = 0.40
    intramural_others_pool: float = 0.20
    extramural_first_last: float = 0.30
    extramural_second: float = 0.15
    extramural_others_pool: float = 0.10


@dataclass(frozen=True)
class CohortConfig:
    """Eligibility thresholds and the observation window."""

    min_years_on_staff: int = 3
    min_sc_professors: int = 10
    excluded_scs: tuple[str, ...] = ()
    window: tuple[int, int] = (2011, 2015)


@dataclass
class RunConfig:
    """Everything a validate/compute/report run needs."""

    inputs: InputPaths
    out_dir: str = "out"
    cohort: CohortConfig = field(default_factory=CohortConfig)
    credit: CreditConfig = field(default_factory=CreditConfig)
    report_format: str = "csv"
    top_k: int = 10
    decile: float = 0.10
    countries: Optional[tuple[str, str]] = None
    parallel: int = 1
    emit_baselines: Optional[str] = None
    snapshot_date: Optional[str] = None

    def validate(self) -> None:
        paths = self.inputs.as_list()
        if len(set(paths)) != len(paths):
            raise ValueError("input paths must be distinct")
        if not 0 < self.decile <= 1:
            raise ValueError(f"decile must be in (0, 1], got {self.decile}")
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")
        if self.parallel < 1:
            raise ValueError(f"parallel must be >= 1, got {self.parallel}")
        if self.report_format not in ("csv", "json", "text"):
            raise ValueError(f"unknown report format '{self.report_format}'")
        start, end = self.cohort.window
        if end < start:
            raise ValueError(f"observation window {start}-{end} is empty")


def load_run_config(path: str) -> RunConfig:
    """Load a RunConfig from a TOML file.

    The [inputs] table either names all seven files or gives a single
    ``dir`` holding them under their standard names.
    """
    raw = _load_toml(path)

    inputs_raw = raw.get("inputs", {})
    if "dir" in inputs_raw:
        inputs = InputPaths.in_dir(inputs_raw["dir"])
    else:
        try:
            inputs = InputPaths(**inputs_raw)
        except TypeError as exc:
            raise ValueError(f"bad [inputs] table in {path}: {exc}") from None

    window_raw = raw.get("window", {})
    cohort_raw = raw.get("cohort", {})
    cohort = CohortConfig(
        min_years_on_staff=cohort_raw.get("min_years_on_staff", 3),
        min_sc_professors=cohort_raw.get("min_sc_professors", 10),
        excluded_scs=tuple(cohort_raw.get("excluded_scs", ())),
        window=(window_raw.get("start", 2011), window_raw.get("end", 2015)),
    )
    credit = CreditConfig(**raw.get("credit", {}))

    reports_raw = raw.get("reports", {})
    countries = reports_raw.get("countries")
    config = RunConfig(
        inputs=inputs,
        out_dir=raw.get("out_dir", "out"),
        cohort=cohort,
        credit=credit,
        report_format=reports_raw.get("format", "csv"),
        top_k=reports_raw.get("top_k", 10),
        decile=reports_raw.get("decile", 0.10),
        countries=tuple(countries) if countries else None,
        parallel=raw.get("parallel", 1),
        emit_baselines=raw.get("emit_baselines"),
        snapshot_date=raw.get("snapshot_date"),
    )
    config.validate()
    return config


def with_overrides(config: RunConfig, **kwargs) -> RunConfig:
    """Copy a config with non-None keyword overrides applied."""
    updates = {k: v for k, v in kwargs.items() if v is not None}
    new = replace(config, **updates)
    new.validate()
    return new
