"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars over the rationals are stdlib ``fractions.Fraction`` values, which are
always in lowest terms with a positive denominator.  Scalars over F_p are
``PrimeFieldElement`` instances holding a representative in [0, p).  Code that
manipulates scalars generically relies only on the arithmetic operators, which
both kinds support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import ParseError

MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True, slots=True)
class PrimeFieldElement:
    """An element of F_p, stored as its canonical representative in [0, p)."""

    value: int
    p: int

    def _lift(self, other: object) -> "PrimeFieldElement | None":
        if isinstance(other, PrimeFieldElement):
            return other if other.p == self.p else None
        if isinstance(other, int):
            return PrimeFieldElement(other % self.p, self.p)
        return None

    def __add__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement((self.value + o.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement((self.value - o.value) % self.p, self.p)

    def __rsub__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement((self.value * o.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return self * PrimeFieldElement(pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other: object) -> "PrimeFieldElement":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value % self.p, self.p)

    def __pow__(self, exponent: int) -> "PrimeFieldElement":
        if exponent < 0:
            return PrimeFieldElement(1, self.p) / self ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


Scalar = Fraction | PrimeFieldElement


@dataclass(frozen=True, slots=True)
class RationalField:
    """Descriptor for the field of rational numbers."""

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def tag(self) -> str:
        return "q"

    def scalar(self, numerator: int, denominator: int = 1) -> Fraction:
        return Fraction(numerator, denominator)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def scalar_from_str(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {text!r}") from exc

    def __str__(self) -> str:
        return self.tag


@dataclass(frozen=True, slots=True)
class PrimeField:
    """Descriptor for F_p, p an odd prime below 2^31."""

    p: int

    def __post_init__(self) -> None:
        if not (2 < self.p < MAX_PRIME) or not _is_prime(self.p):
            raise ValueError(f"modulus must be an odd prime below 2^31, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def tag(self) -> str:
        return f"fp:{self.p}"

    def scalar(self, numerator: int, denominator: int = 1) -> PrimeFieldElement:
        value = PrimeFieldElement(numerator % self.p, self.p)
        if denominator != 1:
            value = value / PrimeFieldElement(denominator % self.p, self.p)
        return value

    @property
    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    @property
    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def scalar_from_str(self, text: str) -> PrimeFieldElement:
        text = text.strip()
        if "/" in text:
            raise ParseError("rational literals are only accepted over the rationals")
        try:
            return self.scalar(int(text))
        except ValueError as exc:
            raise ParseError(f"bad integer literal {text!r}") from exc

    def __str__(self) -> str:
        return self.tag


Field = RationalField | PrimeField

QQ = RationalField()


def field_from_tag(tag: str) -> Field:
    """Parse a field descriptor string: ``q`` or ``fp:<p>`` (``fp <p>`` also accepted)."""
    text = tag.strip().lower()
    if text == "q":
        return QQ
    for sep in (":", " "):
        head, _, rest = text.partition(sep)
        if head == "fp" and rest:
            try:
                p = int(rest.strip())
            except ValueError as exc:
                raise ParseError(f"bad field descriptor {tag!r}") from exc
            try:
                return PrimeField(p)
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
    raise ParseError(f"bad field descriptor {tag!r} (expected 'q' or 'fp:<p>')")
