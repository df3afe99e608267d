"""Homogeneous bivariate polynomials in K[x, z] under grlex.

A form of degree ``d`` is stored densely by x-degree: ``coeffs[j]`` is the
coefficient of ``x^j z^(d-j)``.  The zero polynomial is never a ``Form``;
operations that can produce it return ``None`` instead.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .errors import FieldMismatch, ZeroForm, ZeroResult
from .field import Field, FieldElement, Raw


class Monomial(NamedTuple):
    x: int
    z: int

    @property
    def degree(self) -> int:
        return self.x + self.z

    def divides(self, other: "Monomial") -> bool:
        return self.x <= other.x and self.z <= other.z

    def __str__(self) -> str:
        return _monomial_str(self.x, self.z)


def grlex_key(M: Monomial) -> tuple[int, int]:
    return (M.x + M.z, M.x)


def grlex_cmp(M: Monomial, N: Monomial) -> int:
    """-1, 0 or 1 as M is grlex-less than, equal to or greater than N."""
    a, b = grlex_key(M), grlex_key(N)
    return (a > b) - (a < b)


def _monomial_str(i: int, k: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if k:
        parts.append("z" if k == 1 else f"z^{k}")
    return "*".join(parts) or "1"


def _term_str(c: Raw, mono: str, first: bool) -> str:
    neg = isinstance(c, Fraction) and c < 0
    mag = -c if neg else c
    if mono == "1":
        body = str(mag)
    elif mag == 1:
        body = mono
    else:
        body = f"{mag}*{mono}"
    if neg:
        return "-" + body
    return body if first else "+" + body


def terms_str(field: Field, terms) -> str:
    """Join ``(coeff, monomial string)`` pairs; ``terms`` is already ordered."""
    out = []
    for c, mono in terms:
        out.append(_term_str(c, mono, not out))
    return "".join(out) or "0"


class Form:
    """A nonzero form.  Immutable; build through :func:`form` or the operations."""

    __slots__ = ("field", "coeffs", "_top")

    def __init__(self, field: Field, coeffs: Sequence, *, _trusted: bool = False):
        if not _trusted:
            coeffs = tuple(field.coerce(c) for c in coeffs)
            if not coeffs:
                raise ValueError("a form needs at least one coefficient")
        top = len(coeffs) - 1
        while top >= 0 and coeffs[top] == 0:
            top -= 1
        if top < 0:
            raise ZeroForm("all-zero coefficient vector")
        self.field = field
        self.coeffs = coeffs
        self._top = top

    @classmethod
    def make(cls, field: Field, coeffs: Sequence) -> Optional["Form"]:
        """Like the constructor, but an all-zero vector gives ``None``."""
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if not any(coeffs):
            return None
        return cls(field, coeffs, _trusted=True)

    @classmethod
    def monomial(cls, field: Field, i: int, k: int, c=1) -> "Form":
        coeffs = [field.reduce(0)] * (i + k + 1)
        coeffs[i] = field.coerce(c)
        return cls(field, tuple(coeffs), _trusted=True)

    # grlex data

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def exponent(self) -> Monomial:
        return Monomial(self._top, len(self.coeffs) - 1 - self._top)

    lm = exponent

    @property
    def lc_raw(self) -> Raw:
        return self.coeffs[self._top]

    @property
    def lc(self) -> FieldElement:
        return FieldElement(self.field, self.coeffs[self._top])

    @property
    def is_monic(self) -> bool:
        return self.coeffs[self._top] == 1

    def z_divides(self) -> bool:
        return self.coeffs[-1] == 0

    def in_phi(self) -> bool:
        """Monic with leading monomial free of z."""
        return self.is_monic and self.coeffs[-1] != 0

    def terms(self):
        """``(j, coeff)`` for nonzero coefficients, grlex-decreasing."""
        return [(j, c) for j in range(self._top, -1, -1) if (c := self.coeffs[j]) != 0]

    def monomials(self) -> list[Monomial]:
        d = self.deg
        return [Monomial(j, d - j) for j, _ in self.terms()]

    # arithmetic

    def _check(self, other: "Form") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"cannot mix {self.field!r} and {other.field!r}")

    def scale(self, c) -> Optional["Form"]:
        c = self.field.coerce(c)
        if c == 0:
            return None
        red = self.field.reduce
        return Form(self.field, tuple(red(a * c) for a in self.coeffs), _trusted=True)

    def monic(self) -> "Form":
        if self.is_monic:
            return self
        return self.scale(self.field.inv_raw(self.lc_raw))

    def mul_x(self, k: int = 1) -> "Form":
        if k == 0:
            return self
        zero = self.field.reduce(0)
        return Form(self.field, (zero,) * k + self.coeffs, _trusted=True)

    def mul_z(self, k: int = 1) -> "Form":
        if k == 0:
            return self
        zero = self.field.reduce(0)
        return Form(self.field, self.coeffs + (zero,) * k, _trusted=True)

    def mul_monomial(self, i: int, k: int) -> "Form":
        return self.mul_x(i).mul_z(k)

    def __add__(self, other: "Form") -> Optional["Form"]:
        return _combine(self, other, 1)

    def __sub__(self, other: "Form") -> Optional["Form"]:
        return _combine(self, other, -1)

    def __mul__(self, other: "Form") -> "Form":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    # display and serialisation

    def __str__(self) -> str:
        d = self.deg
        return terms_str(self.field, [(c, _monomial_str(j, d - j)) for j, c in self.terms()])

    def __repr__(self) -> str:
        return f"Form({self.field!r}, {self})"

    def display(self, factor_z: bool = False) -> str:
        """Canonical text; with ``factor_z`` a multi-term z-multiple prints as ``(..)*z^p``."""
        p = z_valuation(self)
        if not factor_z or p == 0 or len(self.terms()) == 1:
            return str(self)
        zpart = "z" if p == 1 else f"z^{p}"
        return f"({strip_z(self)})*{zpart}"

    def to_json(self) -> dict:
        return {"deg": self.deg, "coeffs": [self.field.format_raw(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "Form":
        coeffs = obj["coeffs"]
        if len(coeffs) != obj["deg"] + 1:
            raise ValueError("form JSON: deg does not match coefficient count")
        return cls(field, [field.parse_raw(str(c)) for c in coeffs])


def form(field: Field, coeffs: Sequence) -> Form:
    """Form from coefficients ``c_0..c_d`` (``c_j`` multiplies ``x^j z^(d-j)``)."""
    return Form(field, coeffs)


def form_from_terms(field: Field, deg: int, terms: dict) -> Form:
    """Form of degree ``deg`` from ``{x_exponent: coeff}``."""
    coeffs = [0] * (deg + 1)
    for j, c in terms.items():
        coeffs[j] = c
    return Form(field, coeffs)


def _combine(f: Form, g: Form, sign: int) -> Optional[Form]:
    f._check(g)
    if f.deg != g.deg:
        raise ValueError("sum of forms of different degrees is not a form")
    red = f.field.reduce
    coeffs = tuple(red(a + sign * b) for a, b in zip(f.coeffs, g.coeffs))
    if not any(coeffs):
        return None
    return Form(f.field, coeffs, _trusted=True)


def leading(phi: Optional[Form]) -> tuple[FieldElement, Monomial]:
    if phi is None:
        raise ZeroForm("the zero polynomial has no leading term")
    return phi.lc, phi.exponent


def mul(phi: Optional[Form], psi: Optional[Form]) -> Optional[Form]:
    if phi is None or psi is None:
        return None
    phi._check(psi)
    field = phi.field
    a, b = phi.coeffs, psi.coeffs
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj != 0:
                out[i + j] += ai * bj
    return Form(field, tuple(field.reduce(c) for c in out), _trusted=True)


def ominus(f1: Form, f2: Form, q) -> Form:
    """``x^max(d,0) f1 - q x^-min(d,0) f2`` with ``d = |f2| - |f1|``; ``q = 0`` gives ``f1``."""
    f1._check(f2)
    field = f1.field
    q = field.coerce(q)
    if q == 0:
        return f1
    d = f2.deg - f1.deg
    left = f1.mul_x(d) if d > 0 else f1
    right = f2.mul_x(-d) if d < 0 else f2
    red = field.reduce
    coeffs = tuple(red(a - q * b) for a, b in zip(left.coeffs, right.coeffs))
    if not any(coeffs):
        raise ZeroResult("f1 (-) f2 vanished")
    return Form(field, coeffs, _trusted=True)


def rem(phi: Optional[Form], divisors: Sequence[Form]) -> Optional[Form]:
    """Remainder of grlex division of a form by a list of forms.

    The grlex-greatest reducible monomial is always reduced next, by the
    first divisor (in list order) whose leading monomial divides it.
    """
    if phi is None:
        return None
    field = phi.field
    red = field.reduce
    D = phi.deg
    r = list(phi.coeffs)
    heads = []
    for g in divisors:
        phi._check(g)
        e = g.exponent
        heads.append((e.x, e.z, field.inv_raw(g.lc_raw), g.coeffs))
    # Every monomial of x^(j-a) z^(..) * g has x-degree <= j, so one
    # downward sweep over x-degree visits monomials in grlex order.
    for j in range(D, -1, -1):
        c = r[j]
        if c == 0:
            continue
        for a, b, lc_inv, gc in heads:
            if a <= j and b <= D - j:
                t = c * lc_inv
                shift = j - a
                for k, gk in enumerate(gc):
                    if gk != 0:
                        r[shift + k] = red(r[shift + k] - t * gk)
                break
    if not any(r):
        return None
    return Form(field, tuple(r), _trusted=True)


def s_poly(phi: Form, psi: Form) -> Optional[Form]:
    e, f = phi.exponent, psi.exponent
    L = Monomial(max(e.x, f.x), max(e.z, f.z))
    a = phi.mul_monomial(L.x - e.x, L.z - e.z).scale(phi.field.inv_raw(phi.lc_raw))
    b = psi.mul_monomial(L.x - f.x, L.z - f.z).scale(psi.field.inv_raw(psi.lc_raw))
    return a - b


def z_valuation(phi: Form) -> int:
    """The ``p`` with ``z^p`` exactly dividing ``phi``."""
    return phi.deg - phi._top


def strip_z(phi: Form) -> Form:
    """``phi / z^p`` for the exact z-power ``p``."""
    p = z_valuation(phi)
    if p == 0:
        return phi
    return Form(phi.field, phi.coeffs[: phi.deg + 1 - p], _trusted=True)


def dehomogenize(phi: Form) -> "Poly":
    """``phi(x, 1)``; for forms this is positional since each x-degree occurs once."""
    return Poly(phi.field, phi.coeffs)


class Poly:
    """Univariate polynomial in x, ascending coefficients, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence, *, _trusted: bool = False):
        if not _trusted:
            coeffs = [field.coerce(c) for c in coeffs]
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def x_power(cls, field: Field, k: int) -> "Poly":
        return cls(field, [0] * k + [1])

    @property
    def deg(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> FieldElement:
        return FieldElement(self.field, self.coeffs[-1])

    def __getitem__(self, j: int) -> Raw:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.field.reduce(0)

    def shift(self, k: int) -> "Poly":
        if k == 0 or not self.coeffs:
            return self
        return Poly(self.field, (self.field.reduce(0),) * k + self.coeffs, _trusted=True)

    def scale(self, c) -> "Poly":
        c = self.field.coerce(c)
        red = self.field.reduce
        return Poly(self.field, [red(a * c) for a in self.coeffs], _trusted=True)

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        red = self.field.reduce
        return Poly(self.field, [red(self[j] - other[j]) for j in range(n)], _trusted=True)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        red = self.field.reduce
        return Poly(self.field, [red(self[j] + other[j]) for j in range(n)], _trusted=True)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.coeffs or not other.coeffs:
            return Poly(self.field, (), _trusted=True)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        red = self.field.reduce
        return Poly(self.field, [red(c) for c in out], _trusted=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        terms = [(c, _monomial_str(j, 0)) for j, c in reversed(list(enumerate(self.coeffs))) if c != 0]
        return terms_str(self.field, terms)

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {self})"

    def to_json(self) -> list[str]:
        return [self.field.format_raw(c) for c in self.coeffs]
