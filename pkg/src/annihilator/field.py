"""Exact coefficient arithmetic over GF(p) and the rationals.

Elements are handled in two layers.  Kernels (forms, inverse forms, the
engine) work on *raw* values: plain ``int`` in ``[0, p)`` for GF(p) and
``fractions.Fraction`` for Q.  They combine raw values with ``+ - *`` and
call :meth:`Field.reduce` to return to canonical form.  :class:`FieldElement`
wraps a raw value together with its field for the public API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, FieldMismatch, NonPrimeModulus

Raw = Union[int, Fraction]

_MR_BASES = (2, 3, 5, 7)  # deterministic below 3.2e9
_MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13):
        if n % small == 0:
            return n == small
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(r - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``char`` is a prime, the rationals when ``char == 0``."""

    char: int

    @property
    def is_rational(self) -> bool:
        return self.char == 0

    @property
    def is_finite(self) -> bool:
        return self.char != 0

    @property
    def name(self) -> str:
        return "q" if self.char == 0 else f"gf{self.char}"

    def __repr__(self) -> str:
        return "Q" if self.char == 0 else f"GF({self.char})"

    # raw layer

    def reduce(self, x: Raw) -> Raw:
        if self.char:
            return x % self.char
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv_raw(self, x: Raw) -> Raw:
        if x == 0:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        if self.char:
            # extended Euclid via three-argument pow
            return pow(x, -1, self.char)
        return 1 / x

    def div_raw(self, x: Raw, y: Raw) -> Raw:
        return self.reduce(x * self.inv_raw(y))

    def coerce(self, x) -> Raw:
        """Canonical raw value for an int, Fraction, string or FieldElement."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} element used in {self!r}")
            return x.value
        if isinstance(x, str):
            return self.parse_raw(x)
        if isinstance(x, Fraction) and self.char:
            if x.denominator == 1:
                return x.numerator % self.char
            return self.div_raw(x.numerator % self.char, x.denominator % self.char)
        if isinstance(x, (int, Fraction)):
            return self.reduce(x)
        raise TypeError(f"cannot interpret {x!r} as an element of {self!r}")

    def parse_raw(self, text: str) -> Raw:
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad field element {text!r}") from exc
        return self.coerce(value)

    def format_raw(self, x: Raw) -> str:
        return str(x)

    # element layer

    def __call__(self, x) -> "FieldElement":
        return FieldElement(self, self.coerce(x))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, self.reduce(0))

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, self.reduce(1))

    def elements(self):
        """All elements of a finite field in increasing order of representative."""
        if not self.char:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.char)


@lru_cache(maxsize=None)
def make_field(kind: str, p: int | None = None) -> Field:
    if kind == "rational":
        return Field(0)
    if kind != "prime":
        raise ValueError(f"unknown field kind {kind!r}")
    if p is None or not is_prime(p):
        raise NonPrimeModulus(f"{p} is not a prime modulus")
    if p >= _MAX_MODULUS:
        raise NonPrimeModulus(f"modulus {p} exceeds 2^31")
    return Field(p)


_FIELD_RE = re.compile(r"gf(\d+)")


def parse_field(text: str) -> Field:
    """Parse ``gf2``, ``gf101`` or ``q``."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational"):
        return make_field("rational")
    match = _FIELD_RE.fullmatch(t)
    if not match:
        raise ValueError(f"unknown field {text!r}; expected gf<p> or q")
    return make_field("prime", int(match.group(1)))


GF2 = make_field("prime", 2)
QQ = make_field("rational")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: Raw

    def _other(self, other) -> Raw:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.reduce(self.value + self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.reduce(self.value - self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.reduce(self._other(other) - self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.reduce(self.value * self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.reduce(-self.value))

    def __truediv__(self, other):
        return self * inv(FieldElement(self.field, self._other(other)))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.format_raw(self.value)

    def __repr__(self) -> str:
        return f"{self.field!r}({self.value})"


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv_raw(a.value))
