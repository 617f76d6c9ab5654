"""Layered form of equigenerated ideals in three variables.

Grouping the generators of I by their exponent c along one variable x_k
writes I as a sum of layers (two-variable ideal) * x_k^c.  The checks
below decide the combinatorial conditions that characterise reg(I) = d
and build linear quotients orderings layer by layer.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .betti import regularity
from .ideal import Monomial, MonomialIdeal, is_equigenerated, minimalize
from .quotients import LQCertificate, colon_variables


class ConditionError(ValueError):
    """The ideal is outside the setting a check applies to."""


def other_axes(k: int) -> tuple[int, int]:
    """The two remaining variable indices (alpha, beta), alpha < beta."""
    a, b = (i for i in range(3) if i != k)
    return a, b


@dataclass(frozen=True)
class Layer:
    """Generators sharing exponent ``c`` along the axis.

    ``pairs`` holds the (alpha, beta) exponents in strictly increasing
    alpha order (hence strictly decreasing beta order).
    """

    c: int
    pairs: tuple[tuple[int, int], ...]

    @property
    def inner(self) -> MonomialIdeal:
        return minimalize(self.pairs, 2)

    @property
    def alphas(self) -> frozenset[int]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def betas(self) -> frozenset[int]:
        return frozenset(b for _, b in self.pairs)

    def gaps(self) -> list[int]:
        """Positions j with alpha_{j+1} - alpha_j >= 2."""
        return [j for j in range(len(self.pairs) - 1)
                if self.pairs[j + 1][0] - self.pairs[j][0] >= 2]


@dataclass(frozen=True)
class LayerDecomposition:
    axis: int
    layers: tuple[Layer, ...]

    @property
    def t(self) -> int:
        return len(self.layers)

    def monomial(self, layer: int, j: int) -> Monomial:
        """The generator at position j of the given layer, as a 3-vector."""
        alpha, beta = other_axes(self.axis)
        e = [0, 0, 0]
        e[self.axis] = self.layers[layer].c
        e[alpha], e[beta] = self.layers[layer].pairs[j]
        return tuple(e)

    def layer_generators(self, layer: int) -> list[Monomial]:
        return [self.monomial(layer, j) for j in range(len(self.layers[layer].pairs))]

    def reassemble(self) -> MonomialIdeal:
        return minimalize((g for i in range(self.t) for g in self.layer_generators(i)), 3)


def _require_equigenerated_3(I: MonomialIdeal) -> int:
    if I.ambient_n != 3:
        raise ConditionError("layer decompositions need exactly three variables")
    d = is_equigenerated(I)
    if d is None:
        raise ConditionError("ideal is not equigenerated")
    return d


def layer_decompose(I: MonomialIdeal, k: int = 2) -> LayerDecomposition:
    """Split I by the exponent of x_{k+1} (``k`` is 0-based; default x3)."""
    _require_equigenerated_3(I)
    if k not in (0, 1, 2):
        raise ValueError("axis must be 0, 1 or 2")
    alpha, beta = other_axes(k)
    groups: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for g in I.generators:
        groups[g[k]].append((g[alpha], g[beta]))
    layers = []
    for c in sorted(groups):
        pairs = tuple(sorted(groups[c]))
        # equal c and equal degree force distinct alpha exponents
        assert all(pairs[j][0] < pairs[j + 1][0] for j in range(len(pairs) - 1))
        layers.append(Layer(c, pairs))
    return LayerDecomposition(k, tuple(layers))


def _consecutive(pairs: Sequence[tuple[int, int]]) -> bool:
    return all(pairs[j + 1][0] - pairs[j][0] == 1 for j in range(len(pairs) - 1))


def check_two_variable_criterion(J: MonomialIdeal) -> bool:
    """For J equigenerated in two variables: reg(J) = d iff J has one
    generator or consecutive generators differ by one in the x1 degree."""
    if J.ambient_n != 2:
        raise ValueError("expected an ideal in two variables")
    if is_equigenerated(J) is None:
        raise ConditionError("ideal is not equigenerated")
    return _consecutive(sorted(J.generators))


@dataclass
class ConditionReport:
    """Verdict of a condition together with each clause's value."""

    holds: bool
    clauses: dict[str, bool]
    notes: list[str] = field(default_factory=list)
    # verdict with the second half of clause 4** dropped (only for **)
    holds_without_furthermore: Optional[bool] = None

    def __bool__(self) -> bool:
        return self.holds

    def format(self) -> str:
        lines = [f"holds: {self.holds}"]
        lines += [f"  ({name}) {'yes' if ok else 'NO'}" for name, ok in self.clauses.items()]
        lines += [f"  {note}" for note in self.notes]
        return "\n".join(lines)


def _shares_degree(lower: Layer, upper: Layer) -> bool:
    return bool(lower.alphas & upper.alphas or lower.betas & upper.betas)


def check_condition_star(D: LayerDecomposition) -> ConditionReport:
    """Conditions (1*)-(4*) for a two-layer decomposition along x3."""
    if D.axis != 2:
        raise ConditionError("condition (*) is stated along x3")
    if D.t != 2:
        raise ConditionError(f"condition (*) needs exactly two layers, got {D.t}")
    first, second = D.layers
    notes = []
    gap_ok = True
    for j in second.gaps():
        ok = second.pairs[j + 1][0] in first.alphas and second.pairs[j][1] in first.betas
        if not ok:
            notes.append(f"4*: gap after position {j + 1} of layer 2 is unmatched")
        gap_ok &= ok
    clauses = {
        "1*": second.c == first.c + 1,
        "2*": _consecutive(first.pairs),
        "3*": _shares_degree(first, second),
        "4*": gap_ok,
    }
    return ConditionReport(all(clauses.values()), clauses, notes)


def _gap_clause(I: MonomialIdeal, k: int, notes: list[str]) -> tuple[bool, bool]:
    """Clause (4**) along axis k: (matching part, 'furthermore' part)."""
    D = layer_decompose(I, k)
    alpha, beta = other_axes(k)
    match_ok = further_ok = True
    for i, layer in enumerate(D.layers):
        for j in layer.gaps():
            a_next = layer.pairs[j + 1][0]
            a_j, b_j = layer.pairs[j]
            if i == 0:
                ok = False
            else:
                prev = D.layers[i - 1]
                ok = a_next in prev.alphas and b_j in prev.betas
            if not ok:
                notes.append(f"4** (axis x{k + 1}): gap in layer {i + 1} at position {j + 1} unmatched")
            further = all(u[alpha] > a_j or u[beta] >= b_j for u in I.generators)
            if not further:
                notes.append(f"4** (axis x{k + 1}): 'furthermore' part fails in layer {i + 1}")
            match_ok &= ok
            further_ok &= further
    return match_ok, further_ok


def check_condition_double_star(I: MonomialIdeal) -> ConditionReport:
    """Conditions (1**)-(4**) with layers along x3.

    (1**) is read as "for every l in [t-1]"; (4**) is checked under the
    layer decomposition along each of the three variables.
    """
    d = _require_equigenerated_3(I)
    D = layer_decompose(I, 2)
    if D.t < 2:
        raise ConditionError("condition (**) needs at least two layers along x3")
    notes: list[str] = []
    partial_ok = True
    for ell in range(1, D.t):
        part = minimalize((g for i in range(ell) for g in D.layer_generators(i)), 3)
        if regularity(part) != d:
            partial_ok = False
            notes.append(f"1**: sum of the first {ell} layers has regularity != {d}")
    clauses = {
        "1**": partial_ok,
        "2**": all(_shares_degree(D.layers[r], D.layers[r + 1]) for r in range(D.t - 1)),
        "3**": all(D.layers[r + 1].c - D.layers[r].c == 1 for r in range(D.t - 1)),
    }
    match_all = further_all = True
    for k in range(3):
        match_ok, further_ok = _gap_clause(I, k, notes)
        clauses[f"4** x{k + 1}"] = match_ok and further_ok
        match_all &= match_ok
        further_all &= further_ok
    clauses["4**"] = match_all and further_all
    base = clauses["1**"] and clauses["2**"] and clauses["3**"]
    return ConditionReport(base and match_all and further_all, clauses, notes,
                           holds_without_furthermore=base and match_all)


def _layer_orders(prev: Layer, layer: Layer) -> list[list[int]]:
    """Candidate within-layer orders for a new layer.

    A generator sharing its x_alpha degree with the previous layer starts
    an order that runs right to the end and then back left; one sharing
    its x_beta degree runs left first, then right.
    """
    size = len(layer.pairs)
    out = []
    for j in reversed(range(size)):
        if layer.pairs[j][0] in prev.alphas:
            out.append([j] + list(range(j + 1, size)) + list(range(j - 1, -1, -1)))
    for j in range(size):
        if layer.pairs[j][1] in prev.betas:
            out.append([j] + list(range(j - 1, -1, -1)) + list(range(j + 1, size)))
    return out


def _extend(prefix: list[Monomial], block: Sequence[Monomial]) -> Optional[list[tuple[int, ...]]]:
    """Witnesses for appending ``block`` to ``prefix``, or None if some
    colon is not variable-generated."""
    current = list(prefix)
    wits = []
    for u in block:
        w = colon_variables(current, u, 3)
        if w is None:
            return None
        wits.append(w)
        current.append(u)
    return wits


def constructive_lq_order(I: MonomialIdeal) -> Optional[LQCertificate]:
    """Linear quotients ordering built layer by layer along x3.

    The first layer is taken in increasing x1 degree.  Each further layer
    starts at a generator sharing a degree with the layer below and then
    sweeps outward.  Raises ConditionError when the conditions fail;
    returns None if no order of this shape validates.
    """
    _require_equigenerated_3(I)
    D = layer_decompose(I, 2)
    if D.t == 1:
        if not _consecutive(D.layers[0].pairs):
            raise ConditionError("single layer without consecutive x1 degrees")
    elif D.t == 2:
        if not (check_condition_star(D).holds or check_condition_double_star(I).holds):
            raise ConditionError("conditions (*) and (**) both fail")
    elif not check_condition_double_star(I).holds:
        raise ConditionError("condition (**) fails")

    order = D.layer_generators(0)
    wits = _extend(order[:1], order[1:])
    if wits is None:
        return None
    for i in range(1, D.t):
        gens = D.layer_generators(i)
        for cand in _layer_orders(D.layers[i - 1], D.layers[i]):
            block = [gens[j] for j in cand]
            step = _extend(order, block)
            if step is not None:
                order += block
                wits += step
                break
        else:
            return None
    return LQCertificate(tuple(order), tuple(wits))
