"""Exhaustive and seeded verification of regularity statements.

Every check is a function of one instance (an ideal, or a tuple of
ideals) returning the discrepancies it found.  A report collects the
discrepancies over a family of instances; a recorded failure can be
re-run with :func:`recheck`.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .betti import has_linear_resolution as _has_linear_resolution
from .betti import lcm_lattice_betti, multigraded_betti
from .betti import regularity as _regularity
from .ideal import (
    MonomialIdeal,
    box_points,
    ideal_sum,
    intersect,
    is_equigenerated,
    minimalize,
    monomials_of_degree,
    power,
    product,
)
from .layers import (
    ConditionError,
    check_condition_double_star,
    check_condition_star,
    check_two_variable_criterion,
    constructive_lq_order,
    layer_decompose,
)
from .newton import (
    delta,
    dim_quotient,
    integral_closure,
    max_gen_degree,
    power_oracle,
    smallest_power_witness,
)
from .quotients import (
    betti_splitting_report,
    induced_subideal,
    linear_quotients_order,
    polarize,
    split_by_variable,
    validate_certificate,
)
from .textio import format_ideal, ideal_from_json, ideal_to_json

CHARACTERISTICS = (2, 32003, 0)

# every ideal the harness builds in three variables of degree <= 5 has at
# most 21 generators; the Betti engine does not enumerate generator subsets
BETTI_CAP = 32
# how far to push the power test when it disagrees with the LP
POWER_SEARCH_LIMIT = 24


def regularity(I: MonomialIdeal) -> int:
    return _regularity(I, cap=BETTI_CAP)


def has_linear_resolution(I: MonomialIdeal) -> bool:
    return _has_linear_resolution(I, cap=BETTI_CAP)


@dataclass
class Failure:
    ideals: tuple[MonomialIdeal, ...]
    expected: Any
    observed: Any

    def to_json(self) -> dict[str, Any]:
        ideal = ideal_to_json(self.ideals[0]) if len(self.ideals) == 1 else [
            ideal_to_json(I) for I in self.ideals]
        return {"ideal": ideal, "expected": self.expected, "observed": self.observed}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "Failure":
        raw = obj["ideal"]
        ideals = (ideal_from_json(raw),) if isinstance(raw, dict) else tuple(
            ideal_from_json(r) for r in raw)
        return cls(ideals, obj["expected"], obj["observed"])


@dataclass
class VerificationReport:
    check_name: str
    instances_tested: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time_s: float = 0.0
    notes: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return (f"{self.check_name}: {status}, {self.instances_tested} instances, "
                f"{self.wall_time_s:.1f}s")

    def to_json(self) -> dict[str, Any]:
        return {"check_name": self.check_name,
                "instances_tested": self.instances_tested,
                "failures": [f.to_json() for f in self.failures],
                "wall_time_s": round(self.wall_time_s, 3),
                "notes": self.notes}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "VerificationReport":
        return cls(obj["check_name"], obj["instances_tested"],
                   [Failure.from_json(f) for f in obj["failures"]],
                   obj["wall_time_s"], obj.get("notes", {}))


# ----------------------------------------------------------------- families

def enumerate_equigenerated(n: int, d: int,
                            m_range: Optional[tuple[int, int]] = None) -> Iterator[MonomialIdeal]:
    """Every ideal generated by a set of degree-d monomials in n variables.

    ``m_range`` bounds the number of generators (inclusive).  Order is by
    size, then by combinations of the canonically sorted monomials.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    mons = monomials_of_degree(n, d)
    lo, hi = m_range if m_range is not None else (1, len(mons))
    for size in range(max(lo, 1), min(hi, len(mons)) + 1):
        for combo in combinations(mons, size):
            # distinct monomials of one degree are already minimal and sorted
            yield MonomialIdeal(n, combo)


def random_ideal(rng: random.Random, n: int, max_gens: int, max_exp: int) -> MonomialIdeal:
    """A minimalized ideal from 1..max_gens random non-constant monomials."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        while True:
            g = tuple(rng.randint(0, max_exp) for _ in range(n))
            if any(g):
                break
        gens.append(g)
    return minimalize(gens, n)


# ------------------------------------------------------- per-instance checks

def check_closure_regularity(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    """reg(closure) <= reg(I); in three variables, reg(I) = d forces the
    closure to be equigenerated of degree d with regularity d."""
    out = []
    J = integral_closure(I)
    r, rj = regularity(I), regularity(J)
    if rj > r:
        out.append((f"reg(closure) <= {r}", f"reg(closure) = {rj}"))
    d = is_equigenerated(I)
    if I.ambient_n == 3 and d is not None and r == d:
        dj = is_equigenerated(J)
        if dj != d or rj != d:
            out.append((f"closure equigenerated of degree {d} with reg {d}",
                        f"closure degree {dj}, reg {rj}"))
    return out


def check_closure_engine(I: MonomialIdeal, k_max: int = 6) -> list[tuple[Any, Any]]:
    """Closure contains I, is integrally closed, and agrees pointwise with
    the power oracle (k <= k_max) on the box [0, max exponents of I].

    A disagreement records the least k <= POWER_SEARCH_LIMIT at which the
    power test does succeed, if any.
    """
    out = []
    J = integral_closure(I)
    if not all(J.contains(g) for g in I.generators):
        out.append(("closure contains I", "a generator of I is missing"))
    if integral_closure(J) != J:
        out.append(("closure idempotent", format_ideal(integral_closure(J))))
    pts = np.array(box_points(I.max_exponents()), dtype=np.int64)
    G = np.array(J.generators, dtype=np.int64)
    in_closure = (G[:, None, :] <= pts[None, :, :]).all(axis=2).any(axis=0)
    oracle = power_oracle(I, pts, k_max)
    for idx in np.flatnonzero(in_closure != oracle):
        a = tuple(int(v) for v in pts[idx])
        out.append((f"power oracle (k<={k_max}) says {bool(oracle[idx])} at {a}",
                    {"closure": bool(in_closure[idx]),
                     "smallest_k": smallest_power_witness(a, I, POWER_SEARCH_LIMIT)}))
    return out


def check_lq_equivalence(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    """reg = d, linear resolution, and linear quotients agree; in two
    variables the gap criterion agrees too."""
    d = is_equigenerated(I)
    verdicts = {"reg=d": regularity(I) == d, "linear resolution": has_linear_resolution(I)}
    cert = linear_quotients_order(I)
    verdicts["linear quotients"] = cert is not None
    if cert is not None and not validate_certificate(I, cert):
        return [("valid certificate", "certificate fails re-validation")]
    if I.ambient_n == 2:
        verdicts["gap criterion"] = check_two_variable_criterion(I)
    if len(set(verdicts.values())) > 1:
        return [("all verdicts equal", verdicts)]
    return []


def check_conditions(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    """Conditions (**), (*), the single-layer criterion and the
    constructive ordering against reg(I) = d."""
    out = []
    d = is_equigenerated(I)
    linear = regularity(I) == d
    D = layer_decompose(I)
    if D.t >= 2:
        report = check_condition_double_star(I)
        if report.holds != linear:
            out.append((f"(**) = {linear}", {"(**)": report.holds, **report.clauses}))
        if D.t == 2:
            star = check_condition_star(D)
            if star.holds != linear:
                out.append((f"(*) = {linear}", {"(*)": star.holds, **star.clauses}))
    else:
        inner = D.layers[0].inner
        if check_two_variable_criterion(inner) != linear:
            out.append((f"single-layer criterion = {linear}", not linear))
    try:
        cert = constructive_lq_order(I)
        built = cert is not None and validate_certificate(I, cert)
    except ConditionError:
        built = False
    if built != linear:
        out.append((f"constructive order succeeds = {linear}", built))
    return out


def check_delta_bounds(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    """delta <= d(closure) <= delta + dim S/I, same for reg(closure)."""
    J = integral_closure(I)
    lo = delta(I)
    hi = lo + dim_quotient(I)
    out = []
    for name, value in (("d(closure)", max_gen_degree(J)), ("reg(closure)", regularity(J))):
        if not lo <= value <= hi:
            out.append((f"{lo} <= {name} <= {hi}", value))
    return out


def check_characteristics(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    tables = {p: multigraded_betti(I, p, BETTI_CAP).multigraded for p in CHARACTERISTICS}
    if any(tables[p] != tables[2] for p in CHARACTERISTICS):
        return [("Betti tables independent of characteristic",
                 {str(p): len(t) for p, t in tables.items()})]
    return []


def check_betti_oracle(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    out = []
    for p in CHARACTERISTICS:
        a = multigraded_betti(I, p).multigraded
        b = lcm_lattice_betti(I, p).multigraded
        if a != b:
            diff = sorted(set(a.items()) ^ set(b.items()))
            out.append((f"upper Koszul = lcm lattice over char {p}",
                        [[i, list(m), v] for (i, m), v in diff[:6]]))
    return out


def check_regular_sequence_power(I: MonomialIdeal, t: int) -> list[tuple[Any, Any]]:
    """For I generated by a regular sequence of m forms of degree d,
    reg(I^t) = d t + (d - 1)(m - 1)."""
    d = is_equigenerated(I)
    m = len(I)
    want = d * t + (d - 1) * (m - 1)
    got = regularity(power(I, t))
    return [] if got == want else [(f"reg(I^{t}) = {want}", got)]


def check_disjoint_pair(I: MonomialIdeal, J: MonomialIdeal) -> list[tuple[Any, Any]]:
    rI, rJ = regularity(I), regularity(J)
    out = []
    s = regularity(ideal_sum(I, J))
    if s != rI + rJ - 1:
        out.append((f"reg(I+J) = {rI + rJ - 1}", s))
    p = regularity(product(I, J))
    if p != rI + rJ:
        out.append((f"reg(IJ) = {rI + rJ}", p))
    return out


def check_polarization(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    P, _ = polarize(I)
    a, b = multigraded_betti(I).graded, multigraded_betti(P).graded
    if a != b:
        return [("graded Betti numbers preserved",
                 {"I": [[i, j, v] for (i, j), v in a.items()],
                  "polarization": [[i, j, v] for (i, j), v in b.items()]})]
    return []


def check_induced_monotonicity(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    """reg of every induced subideal of the polarization is at most reg of
    the polarization (I is assumed unpolarized)."""
    P, _ = polarize(I)
    top = regularity(P)
    out = []
    for r in range(1, P.ambient_n + 1):
        for Y in combinations(range(P.ambient_n), r):
            H = induced_subideal(P, Y)
            if H.is_zero:
                continue
            rh = regularity(H)
            if rh > top:
                out.append((f"reg(induced on {list(Y)}) <= {top}", rh))
    return out


def splitting_hypothesis(I: MonomialIdeal, var: int) -> bool:
    """Is the x_var partition (J, K) of I one where J has a linear resolution?"""
    J, K = split_by_variable(I, var)
    if J.is_zero or K.is_zero or is_equigenerated(J) is None:
        return False
    return has_linear_resolution(J)


def check_splitting(I: MonomialIdeal) -> list[tuple[Any, Any]]:
    out = []
    for var in range(I.ambient_n):
        if splitting_hypothesis(I, var):
            J, K = split_by_variable(I, var)
            rep = betti_splitting_report(I, J, K)
            if not rep.holds:
                out.append((f"Betti splitting along x{var + 1}",
                            [list(m) for m in rep.mismatches]))
    return out


def check_exact_sequence(J: MonomialIdeal, K: MonomialIdeal) -> list[tuple[Any, Any]]:
    """Bounds for 0 -> J cap K -> J + K (direct sum) -> J + K -> 0.

    The quotient sequence 0 -> S/(J cap K) -> S/J + S/K -> S/(J+K) -> 0
    shifts every regularity by one and gives the same inequalities.
    """
    M = regularity(intersect(J, K))
    N = max(regularity(J), regularity(K))
    P = regularity(ideal_sum(J, K))
    out = []
    if N > max(M, P) or (P != M - 1 and N != max(M, P)):
        out.append((f"reg N <= max(reg M, reg P) (= when reg P != reg M - 1)",
                    {"M": M, "N": N, "P": P}))
    if P > max(M - 1, N) or (M != N and P != max(M - 1, N)):
        out.append((f"reg P <= max(reg M - 1, reg N) (= when reg M != reg N)",
                    {"M": M, "N": N, "P": P}))
    return out


CHECKS: dict[str, Callable[..., list[tuple[Any, Any]]]] = {
    "closure_regularity": check_closure_regularity,
    "closure_engine": check_closure_engine,
    "lq_equivalence": check_lq_equivalence,
    "conditions": check_conditions,
    "delta_bounds": check_delta_bounds,
    "characteristics": check_characteristics,
    "betti_oracle": check_betti_oracle,
    "regular_sequence_power": check_regular_sequence_power,
    "disjoint_variables": check_disjoint_pair,
    "polarization": check_polarization,
    "induced_monotonicity": check_induced_monotonicity,
    "betti_splitting": check_splitting,
    "exact_sequence": check_exact_sequence,
}


def _check_base(check_name: str) -> str:
    return check_name.split("[", 1)[0]


def _apply(fn, instance) -> list[tuple[Any, Any]]:
    ideals, kwargs = instance
    try:
        return fn(*ideals, **kwargs)
    except Exception as exc:  # recorded, never fatal
        return [("no exception", f"{type(exc).__name__}: {exc}")]


def _apply_named(args):
    name, instance = args
    return _apply(CHECKS[name], instance)


def run_check(check_name: str, instances: Iterable, workers: int = 1,
              notes: Optional[dict] = None) -> VerificationReport:
    """Run a registered check over instances.

    An instance is a MonomialIdeal, a tuple of ideals, or a pair
    ``(tuple_of_ideals, kwargs)``.
    """
    base = _check_base(check_name)
    fn = CHECKS[base]
    start = time.perf_counter()
    normalized = []
    for inst in instances:
        if isinstance(inst, MonomialIdeal):
            normalized.append(((inst,), {}))
        elif len(inst) == 2 and isinstance(inst[1], dict):
            normalized.append((tuple(inst[0]), inst[1]))
        else:
            normalized.append((tuple(inst), {}))
    report = VerificationReport(check_name, notes=dict(notes or {}))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_apply_named, ((base, i) for i in normalized), chunksize=64))
    else:
        results = [_apply(fn, i) for i in normalized]
    for (ideals, kwargs), found in zip(normalized, results):
        report.instances_tested += 1
        for expected, observed in found:
            if kwargs:
                expected = {"params": kwargs, "expected": expected}
            report.failures.append(Failure(ideals, expected, observed))
    report.wall_time_s = time.perf_counter() - start
    return report


def recheck(check_name: str, failure: Failure) -> list[tuple[Any, Any]]:
    """Recompute a recorded failure's instance."""
    kwargs = {}
    if isinstance(failure.expected, dict) and "params" in failure.expected:
        kwargs = failure.expected["params"]
    found = CHECKS[_check_base(check_name)](*failure.ideals, **kwargs)
    if kwargs:
        found = [({"params": kwargs, "expected": e}, o) for e, o in found]
    return found


# ------------------------------------------------------------------- suites

def _exhaustive(n: int, d_max: int) -> list[MonomialIdeal]:
    return [I for d in range(1, d_max + 1) for I in enumerate_equigenerated(n, d)]


def random_family(seed: int, trials: int, n: int, max_gens: int, max_exp: int) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    return [random_ideal(rng, n, max_gens, max_exp) for _ in range(trials)]


def verify_closure_regularity(n: int, d_max: int, random_trials: int = 0, seed: int = 0,
                              max_gens: int = 5, max_exp: int = 5,
                              workers: int = 1) -> VerificationReport:
    """reg(closure) <= reg(I) over the exhaustive equigenerated family (plus,
    when ``random_trials`` > 0, seeded arbitrary ideals)."""
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    ideals = _exhaustive(n, d_max) + random_family(seed, random_trials, n, max_gens, max_exp)
    report = run_check(f"closure_regularity[n={n},dmax={d_max}]", ideals, workers)
    # recorded only: closures of equigenerated ideals that are not equigenerated
    report.notes["non_equigenerated_closures"] = sum(
        1 for I in ideals[:len(ideals) - random_trials]
        if is_equigenerated(integral_closure(I)) is None)
    report.notes["random_trials"] = random_trials
    return report


def verify_closure_engine(n: int, d_max: int, random_trials: int = 0, seed: int = 0,
                          max_gens: int = 5, max_exp: int = 5, k_max: int = 6,
                          workers: int = 1) -> VerificationReport:
    ideals = _exhaustive(n, d_max) + random_family(seed, random_trials, n, max_gens, max_exp)
    tag = f"closure_engine[n={n},dmax={d_max},k<={k_max}]"
    report = run_check(tag, [((I,), {"k_max": k_max}) for I in ideals], workers)
    report.notes["box_points"] = sum(int(np.prod([e + 1 for e in I.max_exponents()]))
                                     for I in ideals)
    summarize_power_disagreements(report)
    return report


def summarize_power_disagreements(report: VerificationReport) -> None:
    """Split closure/oracle disagreements by direction.

    ``closure_only``: the LP puts the point in the closure but no k <= k_max
    does; ``smallest_k`` counts the least k that works.  ``oracle_only``
    would mean a genuine error, since the power test is sound.
    """
    closure_only, oracle_only, ks = 0, 0, {}
    for f in report.failures:
        obs = f.observed
        if isinstance(obs, dict) and "smallest_k" in obs:
            if obs["closure"]:
                closure_only += 1
                key = str(obs["smallest_k"])
                ks[key] = ks.get(key, 0) + 1
            else:
                oracle_only += 1
    report.notes["closure_only"] = closure_only
    report.notes["oracle_only"] = oracle_only
    report.notes["smallest_k"] = dict(sorted(ks.items(), key=lambda kv: (len(kv[0]), kv[0])))
    report.notes["other_failures"] = len(report.failures) - closure_only - oracle_only


def verify_lq_equivalence(n: int, d_max: int, workers: int = 1) -> VerificationReport:
    ideals = _exhaustive(n, d_max)
    report = run_check(f"lq_equivalence[n={n},dmax={d_max}]", ideals, workers)
    report.notes["linear"] = sum(1 for I in ideals if regularity(I) == is_equigenerated(I))
    return report


def verify_conditions(d_max: int, workers: int = 1,
                      ideals: Optional[Sequence[MonomialIdeal]] = None) -> VerificationReport:
    ideals = list(ideals) if ideals is not None else _exhaustive(3, d_max)
    report = run_check(f"conditions[n=3,dmax={d_max}]", ideals, workers)
    layered = [I for I in ideals if layer_decompose(I).t >= 2]
    report.notes["multi_layer"] = len(layered)
    report.notes["two_layer"] = sum(1 for I in layered if layer_decompose(I).t == 2)
    report.notes["single_layer"] = len(ideals) - len(layered)
    # recorded only: does the second half of clause 4** ever matter?
    report.notes["furthermore_changes_verdict"] = sum(
        1 for I in layered
        if (r := check_condition_double_star(I)).holds != r.holds_without_furthermore)
    return report


def verify_characteristics(ideals: Sequence[MonomialIdeal], name: str,
                           workers: int = 1) -> VerificationReport:
    return run_check(f"characteristics[{name}]", ideals, workers)


def verify_betti_oracle(seed: int, trials: int, max_gens: int = 6, max_exp: int = 5,
                        workers: int = 1) -> VerificationReport:
    rng = random.Random(seed)
    ideals = [random_ideal(rng, rng.randint(1, 3), max_gens, max_exp) for _ in range(trials)]
    return run_check("betti_oracle", ideals, workers)


def closed_form_instances() -> list:
    """Pure-power regular sequences (m, d, t <= 3) as (ideal, {t})."""
    out = []
    for m in range(1, 4):
        for d in range(1, 4):
            base = minimalize([tuple(d if j == i else 0 for j in range(3)) for i in range(m)], 3)
            for t in range(1, 4):
                out.append(((base,), {"t": t}))
    return out


def verify_closed_forms() -> VerificationReport:
    report = run_check("regular_sequence_power", closed_form_instances())
    # reg((x2x3)^c, (x1x3)^c, (x1x2)^c) = 3c - 1, c = 1 gives (x1x2, x1x3, x2x3)
    start = time.perf_counter()
    for c in range(1, 4):
        N = minimalize([(0, c, c), (c, 0, c), (c, c, 0)], 3)
        report.instances_tested += 1
        r = regularity(N)
        if r != 3 * c - 1:
            report.failures.append(Failure((N,), f"reg = {3 * c - 1}", r))
    report.wall_time_s += time.perf_counter() - start
    return report


def disjoint_pairs(seed: int, trials: int, max_gens: int = 3, max_exp: int = 3) -> list:
    """Pairs of ideals in complementary sets of variables of k[x1,x2,x3]."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        left = sorted(rng.sample(range(3), rng.randint(1, 2)))
        right = [v for v in range(3) if v not in left]
        pair = []
        for block in (left, right):
            small = random_ideal(rng, len(block), max_gens, max_exp)
            gens = []
            for g in small.generators:
                e = [0, 0, 0]
                for v, a in zip(block, g):
                    e[v] = a
                gens.append(tuple(e))
            pair.append(minimalize(gens, 3))
        out.append(tuple(pair))
    return out


def verify_disjoint(seed: int, trials: int) -> VerificationReport:
    return run_check("disjoint_variables", disjoint_pairs(seed, trials))


def polarizable_family(seed: int, trials: int, max_vars: int = 9,
                       max_gens: int = 6, max_exp: int = 5) -> list[MonomialIdeal]:
    """Random ideals in <= 3 variables whose polarization has <= max_vars variables."""
    rng = random.Random(seed)
    out = []
    while len(out) < trials:
        I = random_ideal(rng, rng.randint(1, 3), max_gens, max_exp)
        if sum(I.max_exponents()) <= max_vars:
            out.append(I)
    return out


def verify_polarization(seed: int, trials: int) -> VerificationReport:
    return run_check("polarization", polarizable_family(seed, trials))


def verify_induced(seed: int, trials: int) -> VerificationReport:
    return run_check("induced_monotonicity", polarizable_family(seed + 1, trials))


def verify_splitting(seed: int, trials: int) -> VerificationReport:
    """Betti splittings along each variable where the linear-resolution
    hypothesis holds, on random ideals and on their polarizations."""
    base = polarizable_family(seed + 2, trials)
    ideals = base + [polarize(I)[0] for I in base]
    report = run_check("betti_splitting", ideals)
    report.notes["hypothesis_detected"] = sum(
        1 for I in ideals for v in range(I.ambient_n) if splitting_hypothesis(I, v))
    return report


def verify_exact_sequences(seed: int, trials: int) -> VerificationReport:
    rng = random.Random(seed + 3)
    pairs = []
    for _ in range(trials):
        n = rng.randint(2, 3)
        pairs.append((random_ideal(rng, n, 4, 4), random_ideal(rng, n, 4, 4)))
    return run_check("exact_sequence", pairs)


def verify_delta_bounds(ideals: Sequence[MonomialIdeal], name: str,
                        workers: int = 1) -> VerificationReport:
    return run_check(f"delta_bounds[{name}]", ideals, workers)


def verify_auxiliary(seed: int, trials: int) -> VerificationReport:
    """All auxiliary lemma checks merged into one report; the individual
    sub-reports are kept under ``notes['subchecks']``."""
    subs = auxiliary_reports(seed, trials)
    merged = VerificationReport("auxiliary")
    for r in subs:
        merged.instances_tested += r.instances_tested
        merged.failures += r.failures
        merged.wall_time_s += r.wall_time_s
    merged.notes["subchecks"] = {r.check_name: {"instances": r.instances_tested,
                                                "failures": len(r.failures)} for r in subs}
    return merged


def auxiliary_reports(seed: int, trials: int, induced_trials: Optional[int] = None) -> list[VerificationReport]:
    induced_trials = trials if induced_trials is None else induced_trials
    small = random_family(seed + 4, trials, 2, 5, 5)
    return [
        verify_closed_forms(),
        verify_disjoint(seed, trials),
        verify_polarization(seed, trials),
        verify_induced(seed, induced_trials),
        verify_splitting(seed, trials),
        verify_exact_sequences(seed, trials),
        verify_delta_bounds(small, f"random n=2 seed={seed + 4}"),
    ]


@dataclass
class HarnessConfig:
    ns: tuple[int, ...] = (2, 3)
    n2_dmax: int = 6
    n3_dmax: int = 4
    seed: int = 0
    n2_random_trials: int = 10_000
    betti_oracle_trials: int = 1000
    aux_trials: int = 500
    induced_trials: int = 100
    # seeded sample beyond the exhaustive range (0 disables)
    n3_sample_degree: int = 5
    n3_sample_size: int = 10_000
    workers: int = 1


def sample_equigenerated(seed: int, n: int, d: int, size: int) -> list[MonomialIdeal]:
    """Uniform sample (with replacement) from the nonempty subsets of the
    degree-d monomials, matching the weighting of the exhaustive family."""
    rng = random.Random(seed)
    mons = monomials_of_degree(n, d)
    out = []
    while len(out) < size:
        mask = rng.getrandbits(len(mons))
        if mask:
            out.append(MonomialIdeal(n, tuple(m for i, m in enumerate(mons) if mask >> i & 1)))
    return out


def run_all(config: HarnessConfig = HarnessConfig()) -> list[VerificationReport]:
    """Run every check at the configured scale; failures never abort."""
    w = config.workers
    reports = []
    for n in config.ns:
        dmax = config.n2_dmax if n == 2 else config.n3_dmax
        trials = config.n2_random_trials if n == 2 else 0
        reports.append(verify_lq_equivalence(n, dmax, w))
        reports.append(verify_closure_regularity(n, dmax, trials, config.seed, workers=w))
        reports.append(verify_closure_engine(n, dmax, trials, config.seed, workers=w))
        reports.append(verify_delta_bounds(_exhaustive(n, dmax), f"n={n},dmax={dmax}", w))
        reports.append(verify_characteristics(_exhaustive(n, dmax), f"n={n},dmax={dmax}", w))
        if n == 3:
            reports.append(verify_conditions(dmax, w))
            if config.n3_sample_size:
                sample = sample_equigenerated(config.seed, 3, config.n3_sample_degree,
                                              config.n3_sample_size)
                tag = f"n=3,d={config.n3_sample_degree},sample={config.n3_sample_size}"
                reports.append(run_check(f"lq_equivalence[{tag}]", sample, w))
                reports.append(run_check(f"closure_regularity[{tag}]", sample, w))
                reports.append(run_check(f"conditions[{tag}]", sample, w))
    reports.append(verify_betti_oracle(config.seed, config.betti_oracle_trials, workers=w))
    reports += auxiliary_reports(config.seed, config.aux_trials, config.induced_trials)
    return reports


def write_results(reports: Sequence[VerificationReport], path: str):
    with open(path, "w") as fh:
        json.dump([r.to_json() for r in reports], fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_results(path: str) -> list[VerificationReport]:
    with open(path) as fh:
        return [VerificationReport.from_json(obj) for obj in json.load(fh)]
