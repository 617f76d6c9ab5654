"""Linear quotients, polarization, Betti splittings and induced subideals."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .betti import DEFAULT_CHAR, multigraded_betti
from .ideal import (
    Monomial,
    MonomialIdeal,
    ResourceLimitError,
    ZeroIdealError,
    colon,
    intersect,
    is_squarefree,
    minimalize,
)

DEFAULT_LQ_CAP = 24


@dataclass(frozen=True)
class LQCertificate:
    """An ordering of G(I) with linear quotients.

    ``witnesses[i]`` lists the (0-based) variables generating
    (u_1, ..., u_{i+1}) : u_{i+2}; there is one entry per generator after
    the first.
    """

    ordering: tuple[Monomial, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def format(self) -> str:
        from .textio import format_monomial

        lines = [format_monomial(self.ordering[0])]
        for u, w in zip(self.ordering[1:], self.witnesses):
            gens = ", ".join(f"x{v + 1}" for v in w)
            lines.append(f"{format_monomial(u)}  : ({gens})")
        return "\n".join(lines)


def colon_variables(prefix: Sequence[Monomial], u: Monomial, n: int) -> Optional[tuple[int, ...]]:
    """Variables generating (prefix) : u, or None if the colon is not
    generated by variables."""
    Q = colon(minimalize(prefix, n), u)
    if Q.is_zero or any(sum(g) != 1 for g in Q.generators):
        return None
    return tuple(g.index(1) for g in Q.generators)


def validate_certificate(I: MonomialIdeal, cert: LQCertificate) -> bool:
    """Re-check every colon step of ``cert`` from scratch."""
    if sorted(cert.ordering) != sorted(I.generators):
        return False
    if len(cert.witnesses) != max(len(cert.ordering) - 1, 0):
        return False
    for i in range(1, len(cert.ordering)):
        got = colon_variables(cert.ordering[:i], cert.ordering[i], I.ambient_n)
        if got is None or sorted(got) != sorted(cert.witnesses[i - 1]):
            return False
    return True


def _colon_tables(gens: Sequence[Monomial], n: int):
    """Bitmask tables for deciding whether (S) : u is variable-generated.

    For g != u let q = g / gcd(g, u).  (S) : u is generated by variables
    iff every q(g) for g in S is divisible by a variable x_i that itself
    equals some q(g') with g' in S.  ``single[u][i]`` marks the g with
    q(g) = x_i and ``good[u][V]`` marks the g whose q(g) meets the
    variable set V.
    """
    m = len(gens)
    single = []
    good = []
    for u in gens:
        s = [0] * n
        supp_masks = []
        for gi, g in enumerate(gens):
            q = tuple(a - b if a > b else 0 for a, b in zip(g, u))
            smask = sum(1 << i for i, e in enumerate(q) if e)
            supp_masks.append(smask)
            if sum(q) == 1:
                s[smask.bit_length() - 1] |= 1 << gi
        single.append(s)
        good.append([sum(1 << gi for gi in range(m) if supp_masks[gi] & V)
                     for V in range(1 << n)])
    return single, good


def linear_quotients_order(I: MonomialIdeal, cap: int = DEFAULT_LQ_CAP) -> Optional[LQCertificate]:
    """Search for a linear quotients ordering of G(I).

    Dynamic programming over generator subsets: S can be a prefix iff
    some u in S has (S - u) : u variable-generated and S - u can be a
    prefix.  The colon only depends on the prefix as a set, so this is
    exact.  Returns a certificate, or None if no ordering exists.
    """
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no generators")
    gens = I.generators
    m = len(gens)
    if m > cap:
        raise ResourceLimitError(f"{m} generators exceed the cap of {cap}")
    n = I.ambient_n
    single, good = _colon_tables(gens, n)
    memo: dict[int, Optional[tuple[int, int]]] = {}

    def reach(S: int) -> bool:
        if S & (S - 1) == 0:
            return True
        if S in memo:
            return memo[S] is not None
        memo[S] = None
        for u in reversed(range(m)):
            bit = 1 << u
            if not S & bit:
                continue
            rest = S ^ bit
            V = 0
            for i in range(n):
                if rest & single[u][i]:
                    V |= 1 << i
            if rest & ~good[u][V] == 0 and reach(rest):
                memo[S] = (u, V)
                return True
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * m + 100))
    try:
        if not reach((1 << m) - 1):
            return None
    finally:
        sys.setrecursionlimit(limit)

    order, wits = [], []
    S = (1 << m) - 1
    while S & (S - 1):
        u, V = memo[S]
        order.append(gens[u])
        wits.append(tuple(i for i in range(n) if V >> i & 1))
        S ^= 1 << u
    order.append(gens[S.bit_length() - 1])
    return LQCertificate(tuple(reversed(order)), tuple(reversed(wits)))


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, tuple[tuple[int, int], ...]]:
    """Polarization of I and the names of its variables.

    Variable x_{jk} (j-th original variable, k-th copy, both 1-based)
    gets index ``mapping.index((j, k))``, in row-major order.
    """
    if I.is_zero:
        raise ZeroIdealError("cannot polarize the zero ideal")
    tops = I.max_exponents()
    mapping = tuple((j + 1, k + 1) for j, top in enumerate(tops) for k in range(top))
    offset = [sum(tops[:j]) for j in range(len(tops))]
    N = len(mapping)
    gens = []
    for g in I.generators:
        e = [0] * N
        for j, a in enumerate(g):
            for k in range(a):
                e[offset[j] + k] = 1
        gens.append(tuple(e))
    return minimalize(gens, N), mapping


def is_squarefree_ideal(I: MonomialIdeal) -> bool:
    return all(is_squarefree(g) for g in I.generators)


def induced_subideal(I: MonomialIdeal, Y: Sequence[int]) -> MonomialIdeal:
    """Generators supported inside the variable set Y, re-indexed over Y.

    For a squarefree I this is the edge ideal of the induced
    subhypergraph on Y.
    """
    if not is_squarefree_ideal(I):
        raise ValueError("induced subideals are defined for squarefree ideals")
    Y = sorted(set(Y))
    if any(not 0 <= y < I.ambient_n for y in Y):
        raise ValueError("variable index out of range")
    outside = [i for i in range(I.ambient_n) if i not in Y]
    gens = [tuple(g[y] for y in Y) for g in I.generators if not any(g[i] for i in outside)]
    return minimalize(gens, len(Y))


def split_by_variable(I: MonomialIdeal, var: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """(J, K) with G(J) the generators divisible by x_var and K the rest."""
    J = [g for g in I.generators if g[var] > 0]
    K = [g for g in I.generators if g[var] == 0]
    return MonomialIdeal(I.ambient_n, tuple(J)), MonomialIdeal(I.ambient_n, tuple(K))


@dataclass(frozen=True)
class SplittingReport:
    holds: bool
    mismatches: tuple[tuple[int, int, int, int], ...]  # (i, j, lhs, rhs)


def betti_splitting_report(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                           p: int = DEFAULT_CHAR) -> SplittingReport:
    gi, gj, gk = set(I.generators), set(J.generators), set(K.generators)
    if gj & gk or gj | gk != gi or not gj or not gk:
        raise ValueError("G(J) and G(K) must partition G(I) into nonempty parts")
    bI = multigraded_betti(I, p)
    bJ = multigraded_betti(J, p)
    bK = multigraded_betti(K, p)
    bJK = multigraded_betti(intersect(J, K), p)
    keys = set(bI.graded) | set(bJ.graded) | set(bK.graded) | {(i + 1, j) for i, j in bJK.graded}
    bad = []
    for i, j in sorted(keys):
        rhs = bJ[i, j] + bK[i, j] + (bJK[i - 1, j] if i > 0 else 0)
        if bI[i, j] != rhs:
            bad.append((i, j, bI[i, j], rhs))
    return SplittingReport(not bad, tuple(bad))


def betti_splitting_verify(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal,
                           p: int = DEFAULT_CHAR) -> bool:
    """Does beta_{i,j}(I) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K) hold?"""
    return betti_splitting_report(I, J, K, p).holds
