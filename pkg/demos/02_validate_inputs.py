"""Check a dataset before analysis and see how problems are reported.

Validation distinguishes fatal issues (the run cannot proceed), row
errors (the offending row is dropped) and warnings (noted, handled by a
documented fallback).

Run:  python3 demos/02_validate_inputs.py
"""
import tempfile
from pathlib import Path

from sciprod.ingestion import InputPaths, load_dataset, validate_dataset, write_bundle
from sciprod.synth import default_config, generate

with tempfile.TemporaryDirectory() as scratch:
    paths = write_bundle(generate(default_config(3, {"IT": 40, "NO": 25})),
                         scratch)

    bundle, report = load_dataset(paths)
    validate_dataset(bundle, (2011, 2015), report)
    print(f"clean dataset: valid={report.is_valid}, "
          f"{len(report.issues)} issue(s)")

    # now break things: an unparseable salary row and a bad byline position
    salaries = Path(paths.salaries)
    salaries.write_text(salaries.read_text().replace("full,", "full+,", 1),
                        encoding="utf-8")
    authorships = Path(paths.authorships)
    header, first, *rest = authorships.read_text().splitlines()
    pub_id, professor, _position = first.split(",")
    lines = [header, f"{pub_id},{professor},999"] + rest
    authorships.write_text("\n".join(lines) + "\n", encoding="utf-8")

    bundle, report = load_dataset(paths)
    validate_dataset(bundle, (2011, 2015), report)
    print(f"broken dataset: valid={report.is_valid}")
    for issue in report.issues[:6]:
        print(f"  [{issue.severity}] {issue.file}:{issue.line} "
              f"{issue.rule}: {issue.message}")
