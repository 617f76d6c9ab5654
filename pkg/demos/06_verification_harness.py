"""
Running the verification harness
================================

The harness enumerates equigenerated ideals (and seeded random ones),
runs each check, and collects discrepancies in JSON-ready reports.  This
script runs it at a reduced scale; ``monoreg verify`` and the acceptance
tests run it at full scale.
"""

import json
import tempfile

from monoreg.harness import HarnessConfig, read_results, run_all, write_results

config = HarnessConfig(n2_dmax=4, n3_dmax=3, n2_random_trials=500,
                       betti_oracle_trials=100, aux_trials=50, induced_trials=20,
                       n3_sample_size=200)
reports = run_all(config)
for r in reports:
    print(r.summary())

# Recorded observations sit in the notes, next to the pass/fail counts.
for r in reports:
    if r.check_name.startswith("conditions[") or r.check_name.startswith("closure_regularity["):
        print(r.check_name, r.notes)

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    path = fh.name
write_results(reports, path)
print("round trip ok:", [r.to_json() for r in read_results(path)] ==
      json.loads(open(path).read()))
