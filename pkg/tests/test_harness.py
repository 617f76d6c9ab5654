import json

import pytest

from monoreg import harness
from monoreg.harness import (
    CHECKS,
    Failure,
    HarnessConfig,
    VerificationReport,
    enumerate_equigenerated,
    random_family,
    read_results,
    recheck,
    run_all,
    run_check,
    sample_equigenerated,
    verify_conditions,
    write_results,
)
from monoreg.ideal import minimalize

SMALL = HarnessConfig(n2_dmax=3, n3_dmax=2, n2_random_trials=40, betti_oracle_trials=20,
                      aux_trials=15, induced_trials=5, n3_sample_size=10)


def strip_times(reports):
    out = []
    for r in reports:
        obj = r.to_json()
        obj.pop("wall_time_s")
        out.append(obj)
    return json.dumps(out, sort_keys=True)


@pytest.mark.parametrize("n,d,count", [(2, 6, 127), (3, 2, 63), (3, 1, 7), (2, 1, 3)])
def test_enumeration_counts(n, d, count):
    ideals = list(enumerate_equigenerated(n, d))
    assert len(ideals) == count == len(set(ideals))
    assert all(len(I.generators) == len(set(I.generators)) for I in ideals)


def test_enumeration_size_range():
    assert [len(I) for I in enumerate_equigenerated(2, 2, (2, 2))] == [2, 2, 2]
    with pytest.raises(ValueError):
        list(enumerate_equigenerated(2, 0))


def test_seeded_families_are_reproducible():
    assert random_family(5, 30, 2, 5, 5) == random_family(5, 30, 2, 5, 5)
    assert sample_equigenerated(1, 3, 5, 20) == sample_equigenerated(1, 3, 5, 20)
    assert all(not I.is_unit for I in random_family(3, 200, 2, 5, 5))


def test_run_all_is_deterministic_and_clean():
    a, b = run_all(SMALL), run_all(SMALL)
    assert strip_times(a) == strip_times(b)
    assert all(r.passed for r in a), [r.summary() for r in a if not r.passed]


def _fake(I, shift=0):
    if (len(I) + shift) % 2 == 0:
        return [(f"odd size (shift {shift})", len(I))]
    return []


def _boom(I):
    raise RuntimeError("boom")


def test_failures_round_trip(monkeypatch, tmp_path):
    monkeypatch.setitem(CHECKS, "fake", _fake)
    ideals = list(enumerate_equigenerated(2, 3))
    instances = [I for I in ideals] + [((I,), {"shift": 1}) for I in ideals]
    report = run_check("fake[demo]", instances)
    assert report.failures and report.instances_tested == 2 * len(ideals)
    path = tmp_path / "results.json"
    write_results([report], str(path))
    (loaded,) = read_results(str(path))
    assert loaded.to_json()["failures"] == report.to_json()["failures"]
    for f in loaded.failures:
        assert recheck(loaded.check_name, f) == [(f.expected, f.observed)]


def test_exceptions_are_recorded(monkeypatch):
    monkeypatch.setitem(CHECKS, "boom", _boom)
    report = run_check("boom", [minimalize([(1, 0)])])
    assert len(report.failures) == 1
    assert "RuntimeError" in report.failures[0].observed


def test_pair_failures_serialize():
    I, J = minimalize([(1, 0)]), minimalize([(0, 1)])
    f = Failure((I, J), "x", "y")
    obj = f.to_json()
    assert isinstance(obj["ideal"], list)
    assert Failure.from_json(obj) == f


def test_report_json_schema():
    r = VerificationReport("demo", 3)
    obj = r.to_json()
    assert set(obj) == {"check_name", "instances_tested", "failures", "wall_time_s", "notes"}
    assert VerificationReport.from_json(obj).passed


def test_workers_give_identical_reports():
    ideals = list(enumerate_equigenerated(3, 2))
    one = run_check("lq_equivalence", ideals, workers=1)
    two = run_check("lq_equivalence", ideals, workers=2)
    assert strip_times([one]) == strip_times([two])


def test_conditions_notes():
    r = verify_conditions(2)
    assert r.passed
    assert r.notes["multi_layer"] + r.notes["single_layer"] == r.instances_tested == 70
    assert r.notes["furthermore_changes_verdict"] == 0


def test_closure_notes_record_equigenerated_status():
    r = harness.verify_closure_regularity(3, 2)
    assert r.passed and "non_equigenerated_closures" in r.notes
