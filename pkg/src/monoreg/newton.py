"""Newton polyhedron geometry and integral closure of monomial ideals.

Membership in conv(G(I)) + R^n_+ is decided exactly with a rational LP;
``power_membership`` is an independent check through powers of I.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .ideal import (
    Monomial,
    MonomialIdeal,
    UnitIdealError,
    ZeroIdealError,
    box_points,
    divides,
    minimalize,
    sort_key,
)
from .lp import phase_one

DEFAULT_POWER_BOUND = 6


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    """Non-negative integer weights tried before falling back to the LP."""
    W = np.array([w for w in product(range(4), repeat=n) if any(w)], dtype=np.int64)
    return W.reshape(-1, n)


def _cut_off(a: Sequence[int], points: np.ndarray, W: Optional[np.ndarray] = None) -> bool:
    """True if some weight w >= 0 (a row of W) has w.a < w.p for every point p.

    Then w.a is below the minimum of w over conv(points) + R^n_+, so ``a``
    is certainly outside.  False means undecided.
    """
    W = _weights(len(a)) if W is None else W
    return bool((W @ np.asarray(a, dtype=np.int64) < (points @ W.T).min(axis=0)).any())


def _require_nonzero(I: MonomialIdeal):
    if I.is_zero:
        raise ZeroIdealError("Newton polyhedron of the zero ideal is empty")


def _membership_lp(a: Sequence[int], points: Sequence[Monomial]):
    """Solve  sum_i lam_i * b_i + s = a,  sum_i lam_i = 1,  lam, s >= 0."""
    n = len(a)
    m = len(points)
    A = [[points[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)]
         for j in range(n)]
    A.append([1] * m + [0] * n)
    return phase_one(A, list(a) + [1])


def in_polyhedron(a: Sequence[int], points: Sequence[Monomial]) -> bool:
    """Is ``a`` in conv(points) + R^n_+ ?"""
    return _membership_lp(a, points)[0] is not None


def separating_weight(a: Sequence[int], points: Sequence[Monomial]) -> Optional[tuple[int, ...]]:
    """None if ``a`` is in conv(points) + R^n_+; otherwise an integer
    w >= 0 with w.a < w.p for every point p, read off the LP duals."""
    x, y = _membership_lp(a, points)
    if x is not None:
        return None
    n = len(a)
    scale = lcm(*(v.denominator for v in y))
    w = tuple(int(-v * scale) for v in y[:n])
    top = int(y[n] * scale)
    # the duals certify w >= 0, w.a < y_n <= w.p; recheck in integers
    assert min(w) >= 0 and sum(u * v for u, v in zip(w, a)) < top
    assert all(sum(u * v for u, v in zip(w, p)) >= top for p in points)
    return w


def hull_membership(a: Sequence[int], I: MonomialIdeal) -> bool:
    _require_nonzero(I)
    if len(a) != I.ambient_n or any(v < 0 for v in a):
        raise ValueError(f"bad exponent vector {tuple(a)}")
    return in_polyhedron(a, I.generators)


@lru_cache(maxsize=4096)
def _power_generators(I: MonomialIdeal, k: int) -> np.ndarray:
    """A (not necessarily minimal) generating set of I^k as an array."""
    G = np.array(I.generators, dtype=np.int64)
    if k == 1:
        return G
    prev = _power_generators(I, k - 1)
    sums = (prev[:, None, :] + G[None, :, :]).reshape(-1, I.ambient_n)
    return np.unique(sums, axis=0)


def power_oracle(I: MonomialIdeal, points: Sequence[Sequence[int]],
                 k_max: int = DEFAULT_POWER_BOUND) -> np.ndarray:
    """Vectorised ``power_membership`` over many points."""
    _require_nonzero(I)
    P = np.asarray(points, dtype=np.int64).reshape(-1, I.ambient_n)
    found = np.zeros(len(P), dtype=bool)
    for k in range(1, k_max + 1):
        todo = ~found
        if not todo.any():
            break
        G = _power_generators(I, k)
        kP = k * P[todo]
        hit = (G[:, None, :] <= kP[None, :, :]).all(axis=2).any(axis=0)
        found[np.flatnonzero(todo)[hit]] = True
    return found


def power_membership(a: Sequence[int], I: MonomialIdeal,
                     k_max: int = DEFAULT_POWER_BOUND) -> bool:
    """True iff (x^a)^k lies in I^k for some 1 <= k <= k_max."""
    if k_max < 1:
        raise ValueError("k_max must be positive")
    return bool(power_oracle(I, [tuple(a)], k_max)[0])


def smallest_power_witness(a: Sequence[int], I: MonomialIdeal, k_limit: int) -> Optional[int]:
    """Least k <= k_limit with (x^a)^k in I^k, or None."""
    _require_nonzero(I)
    a = np.asarray(a, dtype=np.int64)
    for k in range(1, k_limit + 1):
        if (_power_generators(I, k) <= k * a).all(axis=1).any():
            return k
    return None


@lru_cache(maxsize=1 << 16)
def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """The integral closure of I.

    Any point of conv(G(I)) has coordinate j at most max_i b_ij, and so
    does its ceiling; hence every minimal generator of the closure lies in
    the box [0, componentwise max of G(I)] and scanning that box suffices.
    """
    _require_nonzero(I)
    gens = I.generators
    if len(gens) == 1:
        return I
    min_deg = min(sum(g) for g in gens)
    G = np.array(gens, dtype=np.int64)
    W = _weights(I.ambient_n)
    found: list[Monomial] = []
    for a in sorted(box_points(I.max_exponents()), key=sort_key):
        # sum of coordinates is at least min_deg on the whole polyhedron
        if sum(a) < min_deg:
            continue
        if any(divides(f, a) for f in found):
            continue
        if any(divides(g, a) for g in gens):
            found.append(a)
        elif not _cut_off(a, G, W):
            w = separating_weight(a, gens)
            if w is None:
                found.append(a)
            else:
                # later points near the same facet are cut off without an LP
                W = np.vstack([W, np.array(w, dtype=np.int64)])
    return minimalize(found, I.ambient_n)


@dataclass(frozen=True)
class NewtonHull:
    """Vertices of the Newton polyhedron, as indices into ``source.generators``."""

    source: MonomialIdeal
    vertex_indices: tuple[int, ...]

    @property
    def vertices(self) -> tuple[Monomial, ...]:
        return tuple(self.source.generators[i] for i in self.vertex_indices)

    @property
    def delta(self) -> int:
        return max(sum(v) for v in self.vertices)


@lru_cache(maxsize=1 << 16)
def vertices(I: MonomialIdeal) -> NewtonHull:
    _require_nonzero(I)
    gens = I.generators
    G = np.array(gens, dtype=np.int64)
    keep = []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        if not others or _cut_off(g, np.delete(G, i, axis=0)) or not in_polyhedron(g, others):
            keep.append(i)
    return NewtonHull(I, tuple(keep))


def delta(I: MonomialIdeal) -> int:
    """Largest total degree of a vertex of the Newton polyhedron."""
    return vertices(I).delta


def max_gen_degree(I: MonomialIdeal) -> int:
    _require_nonzero(I)
    return max(I.degrees())


def dim_quotient(I: MonomialIdeal) -> int:
    """Krull dimension of S/I: n minus the smallest set of variables
    meeting the support of every generator."""
    _require_nonzero(I)
    if I.is_unit:
        raise UnitIdealError("S/I is the zero ring")
    n = I.ambient_n
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in I.generators]
    for size in range(n + 1):
        for cover in combinations(range(n), size):
            c = set(cover)
            if all(s & c for s in supports):
                return n - size
    raise AssertionError("unreachable: all variables always cover")
