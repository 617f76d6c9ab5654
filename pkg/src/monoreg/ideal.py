"""Monomials and monomial ideals with canonical minimal generating sets.

A monomial is a plain tuple of non-negative exponents.  A
:class:`MonomialIdeal` stores its minimal generators sorted by total
degree and then lexicographically with x1 > x2 > ..., so two ideals are
equal exactly when their fields are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Optional, Sequence

Monomial = tuple[int, ...]


class DimensionMismatchError(ValueError):
    """Monomials or ideals from different ambient rings were combined."""


class ZeroIdealError(ValueError):
    """The operation is undefined on the zero ideal."""


class UnitIdealError(ValueError):
    """The operation is undefined on the unit ideal."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation would exceed its configured cap."""


def degree(a: Monomial) -> int:
    return sum(a)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """x^a / gcd(x^a, x^b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def support(a: Monomial) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(a) if e)


def is_squarefree(a: Monomial) -> bool:
    return all(e <= 1 for e in a)


def variable(i: int, n: int) -> Monomial:
    """The exponent vector of x_{i+1} (0-based index i) in n variables."""
    return tuple(1 if j == i else 0 for j in range(n))


def _check_monomial(a: Sequence[int], n: int) -> Monomial:
    if len(a) != n:
        raise DimensionMismatchError(f"monomial {tuple(a)} has {len(a)} exponents, expected {n}")
    a = tuple(int(e) for e in a)
    if any(e < 0 for e in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def sort_key(a: Monomial):
    """Canonical order: total degree, then lex with x1 > x2 > ... ."""
    return (sum(a), tuple(-e for e in a))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its canonical minimal generators.

    Build instances through :func:`minimalize` (or the arithmetic below);
    the constructor trusts its input.  The zero ideal has no generators,
    the unit ideal has the single generator ``(0, ..., 0)``.
    """

    ambient_n: int
    generators: tuple[Monomial, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __contains__(self, a) -> bool:
        return self.contains(a)

    def __str__(self) -> str:
        from .textio import format_ideal

        return format_ideal(self)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.ambient_n}, ({str(self)}))"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    def contains(self, a: Monomial) -> bool:
        """Membership of the monomial x^a."""
        return any(divides(g, a) for g in self.generators)

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.generators)

    def max_exponents(self) -> Monomial:
        """Componentwise maximum over the generators."""
        if not self.generators:
            return (0,) * self.ambient_n
        return tuple(max(col) for col in zip(*self.generators))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, t: int) -> "MonomialIdeal":
        return power(self, t)


def minimalize(gens: Iterable[Sequence[int]], n: Optional[int] = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens``.

    ``n`` fixes the ambient variable count; it is required when ``gens``
    is empty (the zero ideal).
    """
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("ambient dimension needed for the zero ideal")
        n = len(gens[0])
    unique = sorted({_check_monomial(g, n) for g in gens}, key=sort_key)
    kept: list[Monomial] = []
    for g in unique:
        # sorted by degree, so only earlier generators can divide g
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return MonomialIdeal(n, tuple(kept))


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ((0,) * n,))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> int:
    if I.ambient_n != J.ambient_n:
        raise DimensionMismatchError(f"ambient dimensions differ: {I.ambient_n} vs {J.ambient_n}")
    return I.ambient_n


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(I, J)
    return minimalize(I.generators + J.generators, n)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(I, J)
    return minimalize({mono_mul(a, b) for a in I.generators for b in J.generators}, n)


def power(I: MonomialIdeal, t: int) -> MonomialIdeal:
    """I^t; by convention I^0 is the unit ideal."""
    if t < 0:
        raise ValueError("negative power")
    result = unit_ideal(I.ambient_n)
    for _ in range(t):
        result = product(result, I)
    return result


def colon(I: MonomialIdeal, u: Sequence[int]) -> MonomialIdeal:
    """The colon ideal (I : x^u)."""
    u = _check_monomial(u, I.ambient_n)
    return minimalize((mono_div(g, u) for g in I.generators), I.ambient_n)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(I, J)
    return minimalize({mono_lcm(a, b) for a in I.generators for b in J.generators}, n)


def is_equigenerated(I: MonomialIdeal) -> Optional[int]:
    """The common generator degree, or None if degrees differ."""
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no generators")
    degs = set(I.degrees())
    return degs.pop() if len(degs) == 1 else None


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree d in n variables, x1^d first."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in monomials_of_degree(n - 1, d - first):
            out.append((first,) + rest)
    return sorted(out, key=sort_key)


def box_points(upper: Sequence[int]) -> list[Monomial]:
    """All integer points of the box [0, upper] (componentwise)."""
    return [tuple(p) for p in _cartesian(*(range(u + 1) for u in upper))]
