"""End-to-end comparison run: synthesize, analyze, read the reports.

Produces the per-professor indicator file plus the seven report files,
then prints the headline table and the ranked per-field gaps.

Run:  python3 demos/05_country_comparison.py
"""
import csv
import tempfile
from pathlib import Path

from sciprod.config import RunConfig
from sciprod.ingestion import InputPaths, write_bundle
from sciprod.pipeline import run_analysis, write_outputs
from sciprod.synth import default_config, generate

with tempfile.TemporaryDirectory() as scratch:
    data_dir = Path(scratch) / "data"
    out_dir = Path(scratch) / "out"
    bundle = generate(default_config(seed=11,
                                     professors={"IT": 400, "NO": 200}))
    write_bundle(bundle, str(data_dir))

    config = RunConfig(inputs=InputPaths.in_dir(str(data_dir)),
                       out_dir=str(out_dir), top_k=5)
    result = run_analysis(config)
    write_outputs(result, config)

    print(f"eligible cohort: {len(result.vectors)} of "
          f"{len(result.bundle.professors)} professors")
    for reason, count in sorted(result.cohort.exclusion_counts.items()):
        if count:
            print(f"  excluded {count:>3} -> {reason}")

    print("\naverage normalized scores (1.0 = field average):")
    with open(out_dir / "summary_overall.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            print(f"  {row['cohort']:<11} {row['country']}: "
                  f"O={float(row['O']):.3f}  FO={float(row['FO']):.3f}  "
                  f"FSS={float(row['FSS']):.3f}  "
                  f"({row['professors']} professors)")

    print("\nlargest per-field FO gaps (negative = second country leads):")
    with open(out_dir / "gap_FO.csv", newline="") as fh:
        for row in csv.DictReader(fh):
            print(f"  {row['sc']:<14} {row['country_a']}={float(row['mean_a']):.3f} "
                  f"{row['country_b']}={float(row['mean_b']):.3f} "
                  f"delta={float(row['delta']):+.3f}")
