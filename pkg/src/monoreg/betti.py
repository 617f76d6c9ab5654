"""Multigraded Betti numbers and Castelnuovo-Mumford regularity.

For a monomial ideal I and a multidegree a,

    beta_{i,a}(I) = dim H~_{i-1}(K^a(I)),

where K^a(I) is the upper Koszul simplicial complex of squarefree
sigma <= supp(a) with x^(a - sigma) in I.  Only lcms of generator subsets
can carry nonzero Betti numbers, so those are the only degrees visited.
``lcm_lattice_betti`` recomputes the same numbers from the order complex
of open intervals in the lcm lattice and serves as an oracle.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as _cartesian
from typing import Optional

import numpy as np

from .homology import SimplicialComplex, check_characteristic, reduced_homology_dims
from .ideal import (
    Monomial,
    MonomialIdeal,
    ResourceLimitError,
    UnitIdealError,
    ZeroIdealError,
    divides,
    is_equigenerated,
    mono_lcm,
    sort_key,
    support,
)

DEFAULT_CHAR = 2
DEFAULT_GENERATOR_CAP = 20


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers of an ideal (not of its quotient ring).

    ``multigraded`` maps ``(i, a)`` to beta_{i,a}; ``graded`` maps
    ``(i, j)`` to beta_{i,j}.  Only nonzero entries are stored.
    """

    multigraded: dict[tuple[int, Monomial], int]
    graded: dict[tuple[int, int], int] = field(init=False)
    field_char: int = DEFAULT_CHAR

    def __post_init__(self):
        graded: dict[tuple[int, int], int] = defaultdict(int)
        for (i, a), b in self.multigraded.items():
            graded[(i, sum(a))] += b
        object.__setattr__(self, "graded", dict(sorted(graded.items())))

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.graded.get(key, 0)

    def regularity(self) -> int:
        return max(j - i for i, j in self.graded)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.graded)

    def rows(self) -> list[tuple[int, list[int]]]:
        """Macaulay2-style rows: (j - i, [beta_{0,0+r}, beta_{1,1+r}, ...])."""
        pd = self.projective_dimension()
        lo = min(j - i for i, j in self.graded)
        return [(r, [self.graded.get((i, i + r), 0) for i in range(pd + 1)])
                for r in range(lo, self.regularity() + 1)]

    def format(self) -> str:
        pd = self.projective_dimension()
        lines = ["      " + " ".join(f"{i:>4}" for i in range(pd + 1))]
        for r, row in self.rows():
            lines.append(f"{r:>4}: " + " ".join(f"{v if v else '.':>4}" for v in row))
        return "\n".join(lines)


def _check_ideal(I: MonomialIdeal, cap: int):
    if I.is_zero:
        raise ZeroIdealError("Betti numbers of the zero ideal are all zero")
    if I.is_unit:
        raise UnitIdealError("the unit ideal is free; no regularity is defined here")
    if len(I) > cap:
        raise ResourceLimitError(f"{len(I)} generators exceed the cap of {cap}")


def upper_koszul(I: MonomialIdeal, a: Monomial) -> SimplicialComplex:
    """K^a(I); vertex k of the complex is the k-th variable of supp(a)."""
    if any(e < 0 for e in a):
        raise ValueError("multidegree must be non-negative")
    supp = support(a)
    faces = []
    for mask in range(1 << len(supp)):
        b = list(a)
        for k, v in enumerate(supp):
            if mask >> k & 1:
                b[v] -= 1
        if I.contains(tuple(b)):
            faces.append(mask)
    return SimplicialComplex(len(supp), frozenset(faces))


def _staircase(G: np.ndarray, upper: Monomial) -> np.ndarray:
    """Boolean table over the box [0, upper]: True where x^b lies in I."""
    table = np.zeros(tuple(u + 1 for u in upper), dtype=bool)
    table[tuple(G.T)] = True
    for axis in range(len(upper)):
        np.logical_or.accumulate(table, axis=axis, out=table)
    return table


def lcm_lattice_elements(I: MonomialIdeal) -> list[Monomial]:
    """Lcms of nonempty generator subsets, by checking every candidate
    degree a whose coordinates occur among the generators:
    a is an lcm iff it equals the lcm of the generators dividing it."""
    G = np.array(I.generators, dtype=np.int64)
    values = [sorted(set(G[:, j].tolist())) for j in range(I.ambient_n)]
    C = np.array(list(_cartesian(*values)), dtype=np.int64)
    div = (G[:, None, :] <= C[None, :, :]).all(axis=2)
    joined = np.where(div[:, :, None], G[:, None, :], -1).max(axis=0)
    keep = div.any(axis=0) & (joined == C).all(axis=1)
    return sorted((tuple(int(v) for v in row) for row in C[keep]), key=sort_key)


def multigraded_betti(I: MonomialIdeal, p: int = DEFAULT_CHAR,
                      cap: int = DEFAULT_GENERATOR_CAP) -> BettiTable:
    check_characteristic(p)
    _check_ideal(I, cap)
    return _multigraded_betti(I, p)


@lru_cache(maxsize=1 << 16)
def _multigraded_betti(I: MonomialIdeal, p: int) -> BettiTable:
    G = np.array(I.generators, dtype=np.int64)
    table = _staircase(G, I.max_exponents())
    entries = {}
    for a in lcm_lattice_elements(I):
        supp = support(a)
        k = len(supp)
        faces = []
        for mask in range(1 << k):
            b = list(a)
            for t in range(k):
                if mask >> t & 1:
                    b[supp[t]] -= 1
            if table[tuple(b)]:
                faces.append(mask)
        dims = reduced_homology_dims(SimplicialComplex(k, frozenset(faces)), p)
        for i, v in enumerate(dims):
            if v:
                entries[(i, a)] = v
    return BettiTable(entries, field_char=p)


def lcm_lattice(I: MonomialIdeal) -> list[Monomial]:
    """Lcm lattice (without its bottom) by closing G(I) under lcm."""
    gens = list(I.generators)
    elements = set(gens)
    frontier = set(gens)
    while frontier:
        new = {mono_lcm(a, g) for a in frontier for g in gens} - elements
        elements |= new
        frontier = new
    return sorted(elements, key=sort_key)


def _order_complex_below(elements: list[Monomial], top: Monomial) -> SimplicialComplex:
    """Order complex of the open interval (0, top) of the lcm lattice."""
    below = [b for b in elements if b != top and divides(b, top)]
    below.sort(key=sort_key)
    # chains stored as (mask, index of largest element); degree order is a
    # linear extension, so each chain grows only at its top
    chains: list[tuple[int, Optional[int]]] = [(0, None)]
    for idx, b in enumerate(below):
        chains += [(mask | 1 << idx, idx) for mask, t in chains
                   if t is None or divides(below[t], b)]
    return SimplicialComplex(len(below), frozenset(mask for mask, _ in chains))


def lcm_lattice_betti(I: MonomialIdeal, p: int = DEFAULT_CHAR,
                      cap: int = DEFAULT_GENERATOR_CAP) -> BettiTable:
    """Betti numbers from beta_{i,a}(I) = dim H~_{i-1}(order complex of (0, a))."""
    check_characteristic(p)
    _check_ideal(I, cap)
    elements = lcm_lattice(I)
    entries = {}
    for a in elements:
        dims = reduced_homology_dims(_order_complex_below(elements, a), p)
        for i, v in enumerate(dims):
            if v:
                entries[(i, a)] = v
    return BettiTable(entries, field_char=p)


def betti_table(I: MonomialIdeal, p: int = DEFAULT_CHAR) -> BettiTable:
    return multigraded_betti(I, p)


def regularity(I: MonomialIdeal, p: int = DEFAULT_CHAR, cap: int = DEFAULT_GENERATOR_CAP) -> int:
    """reg(I) = max{ j - i : beta_{i,j}(I) != 0 }."""
    return multigraded_betti(I, p, cap).regularity()


def regularity_quotient(I: MonomialIdeal, p: int = DEFAULT_CHAR) -> int:
    """reg(S/I) = reg(I) - 1."""
    return regularity(I, p) - 1


def has_linear_resolution(I: MonomialIdeal, p: int = DEFAULT_CHAR,
                          cap: int = DEFAULT_GENERATOR_CAP) -> bool:
    d = is_equigenerated(I)
    if d is None:
        raise ValueError("linear resolution is only defined here for equigenerated ideals")
    if I.is_unit:
        return True
    return all(j == i + d for i, j in multigraded_betti(I, p, cap).graded)
