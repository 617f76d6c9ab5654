"""Text and JSON forms of monomial ideals.

Grammar (whitespace is ignored)::

    ideal  := term (',' term)*
    term   := factor ('*' factor)*
    factor := 'x' INDEX ('^' EXP)?

``INDEX`` and ``EXP`` are positive integers.  The unit ideal prints as
``1`` and the zero ideal as ``0``; both forms parse back.
"""

from __future__ import annotations

from typing import Any

from .ideal import Monomial, MonomialIdeal, minimalize, unit_ideal, zero_ideal


class IdealSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class IndexOutOfRangeError(ValueError):
    pass


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    if I.is_zero:
        return "0"
    return ", ".join(format_monomial(g) for g in I.generators)


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _integer(self, what: str) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise IdealSyntaxError(f"expected {what}", start)
        value = int(self.text[start:self.pos])
        if value < 1:
            raise IdealSyntaxError(f"{what} must be >= 1", start)
        return value

    def factor(self, exps: list[int]):
        if self._peek() != "x":
            raise IdealSyntaxError("expected 'x'", self.pos)
        self.pos += 1
        at = self.pos
        index = self._integer("variable index")
        if index > self.n:
            raise IndexOutOfRangeError(
                f"variable x{index} at position {at} exceeds ambient n={self.n}")
        exp = 1
        if self._peek() == "^":
            self.pos += 1
            exp = self._integer("exponent")
        exps[index - 1] += exp

    def term(self) -> Monomial:
        exps = [0] * self.n
        self.factor(exps)
        while self._peek() == "*":
            self.pos += 1
            self.factor(exps)
        return tuple(exps)

    def ideal(self) -> list[Monomial]:
        terms = [self.term()]
        while self._peek() == ",":
            self.pos += 1
            terms.append(self.term())
        if self._peek():
            raise IdealSyntaxError(f"unexpected {self._peek()!r}", self.pos)
        return terms


def parse_ideal(text: str, n: int) -> MonomialIdeal:
    """Parse ``text`` into a canonical ideal in ``n`` variables."""
    if n < 1:
        raise ValueError("ambient n must be positive")
    stripped = text.strip()
    if stripped == "1":
        return unit_ideal(n)
    if stripped == "0":
        return zero_ideal(n)
    return minimalize(_Parser(text, n).ideal(), n)


def ideal_to_json(I: MonomialIdeal) -> dict[str, Any]:
    return {"n": I.ambient_n, "text": format_ideal(I),
            "generators": [list(g) for g in I.generators]}


def ideal_from_json(obj: dict[str, Any]) -> MonomialIdeal:
    return minimalize((tuple(g) for g in obj["generators"]), obj["n"])
