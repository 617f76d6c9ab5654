"""Acceptance criteria, each run at full scale and stated tolerance.

Every test appends one PASS/FAIL line to RESULTS; the lines are printed
in the pytest terminal summary (and directly when run as a script).
"""

import time
from functools import lru_cache

import pytest

from monoreg import harness
from monoreg.harness import (
    random_family,
    run_check,
    verify_betti_oracle,
    verify_closed_forms,
    verify_closure_regularity,
    verify_conditions,
    verify_disjoint,
    verify_exact_sequences,
    verify_induced,
    verify_lq_equivalence,
    verify_polarization,
    verify_splitting,
)

SEED = 0
N2_RANDOM = 10_000
RESULTS = []


def record(number, title, reports, extra="", ok=True):
    failures = sum(len(r.failures) for r in reports)
    instances = sum(r.instances_tested for r in reports)
    seconds = sum(r.wall_time_s for r in reports)
    passed = ok and failures == 0
    line = (f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: "
            f"{instances} instances, {failures} failures, {seconds:.1f}s{extra}")
    RESULTS.append(line)
    print(line)
    for r in reports:
        for f in r.failures[:3]:
            print(f"    {r.check_name}: {f.to_json()}")
    return passed


def n2_random():
    return random_family(SEED, N2_RANDOM, 2, 5, 5)


def test_criterion_1_two_variables_exhaustive():
    r = verify_lq_equivalence(2, 6)
    fast = r.wall_time_s < 120
    assert record(1, "n=2, d<=6: reg=d <=> gap criterion <=> linear quotients", [r],
                  f" (limit 120s)", ok=fast)


def test_criterion_2_two_variable_closure():
    r = verify_closure_regularity(2, 6, random_trials=N2_RANDOM, seed=SEED, max_gens=5, max_exp=5)
    assert record(2, "n=2: reg(closure) <= reg(I), exhaustive equigenerated + 10^4 seeded", [r])


def test_criterion_3_three_variables_exhaustive():
    r = verify_lq_equivalence(3, 4)
    fast = r.wall_time_s < 1800
    assert record(3, "n=3, d<=4: reg=d <=> linear quotients <=> linear resolution", [r],
                  " (limit 1800s)", ok=fast)


def test_criterion_4_three_variable_closure():
    r = verify_closure_regularity(3, 4)
    assert record(4, "n=3, d<=4: reg(closure) <= reg(I); reg=d gives equigenerated closure of reg d",
                  [r], f" (non-equigenerated closures recorded: {r.notes['non_equigenerated_closures']})")


def test_criterion_5_layer_conditions():
    r = verify_conditions(4)
    n = r.notes
    assert record(5, "n=3, d<=4: (**), (*) and constructive order agree with reg=d", [r],
                  f" ({n['multi_layer']} multi-layer, {n['two_layer']} two-layer; dropping the second "
                  f"half of 4** changes {n['furthermore_changes_verdict']} verdicts)")


def test_criterion_6_betti_oracle():
    r = verify_betti_oracle(SEED, 1000)
    assert record(6, "upper Koszul = lcm lattice over chars 2, 32003, 0 (1000 seeded ideals)", [r])


def test_criterion_7_closed_forms():
    reports = [verify_closed_forms(), verify_disjoint(SEED, 500)]
    assert record(7, "pure-power powers, disjoint sums/products, 3c-1 family", reports)


def test_criterion_8_auxiliary_lemmas():
    enumerated = ([I for d in range(1, 7) for I in harness.enumerate_equigenerated(2, d)]
                  + [I for d in range(1, 5) for I in harness.enumerate_equigenerated(3, d)]
                  + n2_random())
    reports = [
        verify_polarization(SEED, 500),
        run_check("delta_bounds[enumerated]", enumerated),
        verify_splitting(SEED, 500),
        verify_induced(SEED, 100),
        verify_exact_sequences(SEED, 500),
    ]
    detail = ", ".join(f"{r.check_name} {len(r.failures)}/{r.instances_tested}" for r in reports)
    assert record(8, "polarization, delta bounds, splitting, induced, exact sequences", reports,
                  f" [{detail}; splitting hypothesis met {reports[2].notes['hypothesis_detected']}x]")


@lru_cache(maxsize=None)
def closure_engine_reports():
    return (harness.verify_closure_engine(2, 6, N2_RANDOM, SEED, 5, 5),
            harness.verify_closure_engine(3, 4))


@pytest.mark.xfail(strict=True, reason="bounded power test (k <= 6) misses closure members "
                                       "that need k = 7..12 in three variables; see README")
def test_criterion_9_closure_engine():
    reports = closure_engine_reports()
    points = sum(r.notes["box_points"] for r in reports)
    ks = {}
    for r in reports:
        for k, c in r.notes["smallest_k"].items():
            ks[k] = ks.get(k, 0) + c
    only = sum(r.notes["closure_only"] for r in reports)
    assert record(9, "closure contains I, is idempotent, matches power oracle (k<=6)", reports,
                  f" ({points} box points; {only} in closure but not witnessed by k<=6, "
                  f"least witnessing k: {ks or 'n/a'}; oracle-only points: "
                  f"{sum(r.notes['oracle_only'] for r in reports)})")


def test_criterion_9_sound_parts():
    """Everything in criterion 9 except the k <= 6 bound must hold exactly."""
    for r in closure_engine_reports():
        assert r.notes["other_failures"] == 0, r.summary()
        assert r.notes["oracle_only"] == 0, r.summary()
        assert all(f.observed["smallest_k"] is not None for f in r.failures)


if __name__ == "__main__":
    start = time.perf_counter()
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and not name.endswith("sound_parts"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(["", *RESULTS, f"total {time.perf_counter() - start:.0f}s"]))
