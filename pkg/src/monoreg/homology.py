"""Finite simplicial complexes and their reduced homology over a field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


def check_characteristic(p: int) -> int:
    """Return p if it is 0 or a prime, else raise ValueError."""
    if p == 0:
        return 0
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"field characteristic must be 0 or prime, got {p}")
    return p


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on vertices ``0..vertex_count-1``.

    ``faces`` holds each face as a bitmask; bit 0 set means vertex 0 is
    in the face, and the empty face is ``0``.  A complex with no faces at
    all is the void complex, whose reduced homology vanishes.
    """

    vertex_count: int
    faces: frozenset[int]

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        masks = set()
        for f in faces:
            m = 0
            for v in f:
                if not 0 <= v < vertex_count:
                    raise ValueError(f"vertex {v} out of range")
                m |= 1 << v
            masks.add(m)
        C = cls(vertex_count, frozenset(masks))
        if not C.is_closed():
            raise ValueError("face set is not closed under taking subsets")
        return C

    @classmethod
    def generated_by(cls, vertex_count: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """The smallest complex containing every given facet."""
        masks = set()
        for f in facets:
            top = 0
            for v in f:
                top |= 1 << v
            sub = top
            while True:
                masks.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return cls(vertex_count, frozenset(masks))

    def is_closed(self) -> bool:
        for f in self.faces:
            m = f
            while m:
                low = m & -m
                if f ^ low not in self.faces:
                    return False
                m ^= low
        return True

    def face_sets(self) -> list[tuple[int, ...]]:
        out = []
        for f in self.faces:
            out.append(tuple(v for v in range(self.vertex_count) if f >> v & 1))
        return sorted(out, key=lambda t: (len(t), t))

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        if not self.faces:
            return []
        counts = [0] * (max(bin(f).count("1") for f in self.faces) + 1)
        for f in self.faces:
            counts[bin(f).count("1")] += 1
        return counts

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** (k - 1) * c for k, c in enumerate(self.f_vector()))


def matrix_rank(rows: Sequence[Mapping[int, int]], p: int) -> int:
    """Rank of a sparse integer matrix over GF(p), or over Q when p == 0.

    Rows are dicts from column index to entry.  Plain Gaussian elimination
    with exact arithmetic (Fractions for p == 0).
    """
    check_characteristic(p)
    pivots: dict[int, dict[int, object]] = {}
    for raw in rows:
        if p:
            row = {c: v % p for c, v in raw.items() if v % p}
        else:
            row = {c: Fraction(v) for c, v in raw.items() if v}
        while row:
            col = min(row)
            pivot = pivots.get(col)
            if pivot is None:
                inv = pow(row[col], -1, p) if p else 1 / row[col]
                if p:
                    pivots[col] = {c: v * inv % p for c, v in row.items()}
                else:
                    pivots[col] = {c: v * inv for c, v in row.items()}
                break
            f = row[col]
            for c, v in pivot.items():
                nv = row.get(c, 0) - f * v
                if p:
                    nv %= p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _boundary_rows(faces_by_size: list[list[int]], size: int) -> list[dict[int, int]]:
    """Boundary map from faces with ``size`` vertices to faces with one fewer."""
    index = {f: i for i, f in enumerate(faces_by_size[size - 1])}
    rows = []
    for f in faces_by_size[size]:
        row = {}
        sign = 1
        m = f
        while m:
            low = m & -m
            row[index[f ^ low]] = sign
            sign = -sign
            m ^= low
        rows.append(row)
    return rows


@lru_cache(maxsize=1 << 14)
def reduced_homology_dims(C: SimplicialComplex, p: int = 2) -> tuple[int, ...]:
    """Dimensions of reduced homology; entry q+1 is dim H~_q (q >= -1).

    The void complex gives ``(0,)``.
    """
    check_characteristic(p)
    if not C.faces:
        return (0,)
    top = max(bin(f).count("1") for f in C.faces)
    by_size: list[list[int]] = [[] for _ in range(top + 1)]
    for f in sorted(C.faces):
        by_size[bin(f).count("1")].append(f)
    # ranks[s] = rank of the boundary leaving faces with s vertices
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        if by_size[s] and by_size[s - 1]:
            ranks[s] = matrix_rank(_boundary_rows(by_size, s), p)
    return tuple(len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1))
