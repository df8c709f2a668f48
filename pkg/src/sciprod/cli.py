"""Command-line front end.

Subcommands: validate, compute, report, generate, and run (validate +
compute + report in one go). Exit codes: 0 success, 1 validation failure,
2 runtime failure; failures also emit one machine-readable JSON object on
stderr. SCIPROD_LOG sets the log level (DEBUG, INFO, WARNING, ERROR).
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional

from .config import RunConfig, load_run_config, with_overrides
from .ingestion import InputPaths, load_dataset, validate_dataset, write_bundle
from .models import FATAL, DatasetError
from .pipeline import (
    resolve_country_pair,
    restrict_to_pair,
    run_analysis,
    write_outputs,
)
from .synth import SynthConfigError, default_config, generate, load_synth_config

log = logging.getLogger("sciprod.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RUNTIME = 2


def _setup_logging() -> None:
    level = os.environ.get("SCIPROD_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr)


def _error_json(kind: str, message: str, **extra) -> None:
    payload = {"error": kind, "message": message}
    payload.update(extra)
    print(json.dumps(payload, sort_keys=True), file=sys.stderr)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("inputs", nargs="?",
                        help="directory holding the seven input CSV files")
    parser.add_argument("--config", help="TOML run configuration")
    parser.add_argument("--out", help="output directory (default: out)")
    parser.add_argument("--parallel", type=int, metavar="N",
                        help="worker processes for the indicator stage")
    parser.add_argument("--format", choices=("csv", "json", "text"),
                        help="report file format (default: csv)")
    parser.add_argument("--top-k", type=int, metavar="K",
                        help="rows per side in the gap tables")
    parser.add_argument("--decile", type=float, metavar="F",
                        help="top-share fraction selected by FSS")
    parser.add_argument("--emit-baselines", metavar="PATH",
                        help="also dump the baseline table to PATH")
    parser.add_argument("--countries", metavar="A,B",
                        help="ordered country pair for the comparisons")


def _parse_countries(raw: Optional[str]) -> Optional[tuple[str, str]]:
    if raw is None:
        return None
    parts = [part.strip() for part in raw.split(",")]
    if len(parts) != 2 or not all(parts):
        raise DatasetError("personnel.csv", 0, "country_pair",
                           f"--countries expects 'A,B', got '{raw}'")
    return (parts[0], parts[1])


def _run_config(args: argparse.Namespace) -> RunConfig:
    if args.config:
        config = load_run_config(args.config)
    elif args.inputs:
        config = RunConfig(inputs=InputPaths.in_dir(args.inputs))
    else:
        raise DatasetError("personnel.csv", 0, "no_inputs",
                           "pass a data directory or --config")
    overrides = dict(
        out_dir=args.out,
        parallel=args.parallel,
        report_format=args.format,
        top_k=args.top_k,
        decile=args.decile,
        emit_baselines=args.emit_baselines,
        countries=_parse_countries(args.countries),
    )
    if args.config and args.inputs:
        overrides["inputs"] = InputPaths.in_dir(args.inputs)
    return with_overrides(config, **overrides)


def _write_validation(report, out_dir: str) -> Path:
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    target = path / "validation.json"
    with open(target, "w", newline="", encoding="utf-8") as handle:
        json.dump(report.to_dict(), handle, indent=2, sort_keys=True)
        handle.write("\n")
    return target


def cmd_validate(args: argparse.Namespace) -> int:
    config = _run_config(args)
    bundle, report = load_dataset(config.inputs)
    if not report.fatal_issues():
        try:
            pair = resolve_country_pair(bundle, config.countries)
            bundle = restrict_to_pair(bundle, pair)
        except DatasetError as exc:
            report.add(FATAL, exc.file, exc.line, exc.rule, exc.message)
        validate_dataset(bundle, config.cohort.window, report)
    target = _write_validation(report, config.out_dir)
    fatals = report.fatal_issues()
    print(f"validation: {len(fatals)} fatal, {len(report.row_errors())} "
          f"row error(s), {len(report.warnings())} warning(s); "
          f"report at {target}")
    return EXIT_OK if not fatals else EXIT_INVALID


def cmd_compute(args: argparse.Namespace) -> int:
    config = _run_config(args)
    result = run_analysis(config)
    paths = write_outputs(result, config, indicators=True, reports=False)
    print(f"computed indicators for {len(result.vectors)} professors "
          f"({result.countries[0]}/{result.countries[1]}); "
          f"wrote {', '.join(str(p) for p in paths)}")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    config = _run_config(args)
    result = run_analysis(config)
    paths = write_outputs(result, config, indicators=False, reports=True)
    print(f"wrote {len(paths)} report file(s) to {config.out_dir}")
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    config = _run_config(args)
    result = run_analysis(config)
    _write_validation(result.validation, config.out_dir)
    paths = write_outputs(result, config, indicators=True, reports=True)
    eligible = len(result.vectors)
    total = len(result.bundle.professors)
    print(f"cohort: {eligible}/{total} professors eligible; "
          f"wrote {len(paths) + 1} file(s) to {config.out_dir}")
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    if args.config:
        config = load_synth_config(Path(args.config))
        if args.seed is not None:
            config = type(config)(**{**config.__dict__, "seed": args.seed})
    else:
        professors = {}
        for part in (args.professors or "AA=600,BB=200").split(","):
            name, _, count = part.partition("=")
            professors[name.strip()] = int(count)
        config = default_config(args.seed or 0, professors)
    bundle = generate(config)
    written = write_bundle(bundle, args.out)
    print(f"generated {len(bundle.professors)} professors, "
          f"{len(bundle.publications)} publications; "
          f"wrote {len(written.as_list())} file(s) to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sciprod",
        description="Research productivity indicators and country "
                    "comparison reports from publication data.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, blurb in (
            ("validate", cmd_validate, "check the input files and report"),
            ("compute", cmd_compute, "write per-professor indicators"),
            ("report", cmd_report, "write the comparison report files"),
            ("run", cmd_run, "validate, compute and report in one go")):
        cmd = sub.add_parser(name, help=blurb)
        _add_common_flags(cmd)
        cmd.set_defaults(func=func)

    gen = sub.add_parser("generate", help="write a synthetic dataset")
    gen.add_argument("--seed", type=int, help="generator seed (default 0)")
    gen.add_argument("--config", help="TOML generator configuration")
    gen.add_argument("--out", required=True, help="target directory")
    gen.add_argument("--professors", metavar="A=N,B=M",
                     help="per-country professor counts for the built-in "
                          "profile mix (ignored with --config)")
    gen.set_defaults(func=cmd_generate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging()
    try:
        return args.func(args)
    except DatasetError as exc:
        _error_json(exc.rule, exc.message, file=exc.file, line=exc.line)
        return EXIT_INVALID
    except SynthConfigError as exc:
        _error_json("synth_config", str(exc))
        return EXIT_RUNTIME
    except (OSError, ValueError, KeyError) as exc:
        _error_json("runtime", f"{type(exc).__name__}: {exc}")
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
