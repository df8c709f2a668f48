"""Synthesize a two-country evaluation dataset and look at its shape.

The generator draws professors, staffing histories, journals and
publications from one seeded random stream, so the same seed always
produces the same files.

Run:  python3 demos/01_generate_dataset.py
"""
import collections
import tempfile

from sciprod.ingestion import write_bundle
from sciprod.synth import default_config, generate

config = default_config(seed=7, professors={"IT": 300, "NO": 120})
bundle = generate(config)

print(f"professors:   {len(bundle.professors)}")
print(f"publications: {len(bundle.publications)}")
print(f"journal rows: {len(bundle.journals)}")
print(f"SCs:          {len(bundle.sc_map.entries)} "
      f"across {len(bundle.sc_map.disciplines())} disciplines")

per_country = collections.Counter(p.country for p in bundle.professors)
print(f"per country:  {dict(sorted(per_country.items()))}")

uncited = sum(1 for p in bundle.publications if p.citations == 0)
print(f"uncited share: {uncited / len(bundle.publications):.1%}")

top = max(bundle.publications, key=lambda p: p.citations)
print(f"most cited:   {top.pub_id} with {top.citations} citations")

# the bundle round-trips through seven CSV files
with tempfile.TemporaryDirectory() as scratch:
    paths = write_bundle(bundle, scratch)
    for path in paths.as_list():
        print(f"wrote {path}")
