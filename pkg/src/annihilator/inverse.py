"""Inverse forms in K[x^-1, z^-1] and the contraction action of K[x, z].

An inverse form of total degree ``m <= 0`` is stored like a :class:`Form`
with negated bookkeeping: ``coeffs[k]`` is ``F_(m+k)``, the coefficient of
``x^(m+k) z^(-k)``.  So ``coeffs[0]`` multiplies ``x^m`` and ``coeffs[-1]``
is the constant ``F_0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence as Seq

from .errors import AllZeroSequence, FieldMismatch, IndexOutOfRange, ZeroForm
from .field import Field, FieldElement, Raw
from .forms import Form, terms_str


def _inv_monomial_str(i: int, k: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if k:
        parts.append("z" if k == 1 else f"z^{k}")
    return "*".join(parts) or "1"


class InverseForm:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Seq, *, _trusted: bool = False):
        if not _trusted:
            coeffs = tuple(field.coerce(c) for c in coeffs)
        if not any(coeffs):
            raise ZeroForm("inverse form must be nonzero")
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def monomial(cls, field: Field, m: int, c=1) -> "InverseForm":
        """``c * x^m``."""
        zero = field.reduce(0)
        return cls(field, (field.coerce(c),) + (zero,) * (-m), _trusted=True)

    @property
    def m(self) -> int:
        return 1 - len(self.coeffs)

    def __getitem__(self, j: int) -> Raw:
        """``F_j``, the coefficient of ``x^j z^(m-j)``; zero outside ``[m, 0]``."""
        k = j - self.m
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.reduce(0)

    def coeff(self, j: int) -> FieldElement:
        return FieldElement(self.field, self[j])

    @property
    def order(self) -> int:
        return order(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, InverseForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        m = self.m
        terms = [(c, _inv_monomial_str(m + k, -k)) for k, c in enumerate(self.coeffs) if c != 0]
        return terms_str(self.field, terms)

    def __repr__(self) -> str:
        return f"InverseForm({self.field!r}, {self})"

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [self.field.format_raw(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "InverseForm":
        coeffs = obj["coeffs"]
        if len(coeffs) != 1 - obj["m"]:
            raise ValueError("inverse form JSON: m does not match coefficient count")
        return cls(field, [field.parse_raw(str(c)) for c in coeffs])


@dataclass(frozen=True)
class Sequence:
    field: Field
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.field.coerce(t) for t in self.terms))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_trivial(self) -> bool:
        return not any(self.terms)

    @property
    def v(self) -> int:
        """Index of the first nonzero term."""
        for i, t in enumerate(self.terms):
            if t != 0:
                return i
        raise AllZeroSequence("all-zero sequence has no first nonzero term")

    def __str__(self) -> str:
        return ",".join(self.field.format_raw(t) for t in self.terms)

    @classmethod
    def parse(cls, field: Field, text: str) -> "Sequence":
        items = [t for t in text.replace(" ", "").split(",") if t != ""]
        if not items:
            raise ValueError("empty sequence")
        return cls(field, tuple(field.parse_raw(t) for t in items))


def from_sequence(s: Sequence) -> InverseForm:
    """``sum_i s_(-i) x^i z^(1-n-i)``; ``F_j = s_(-j)``, so the stored vector is ``s`` reversed."""
    if s.is_trivial:
        raise AllZeroSequence("the all-zero sequence has no inverse form")
    return InverseForm(s.field, tuple(reversed(s.terms)), _trusted=True)


def to_sequence(F: InverseForm) -> Sequence:
    return Sequence(F.field, tuple(reversed(F.coeffs)))


def order(F: InverseForm) -> int:
    m = F.m
    for k in range(len(F.coeffs) - 1, -1, -1):
        if F.coeffs[k] != 0:
            return m + k
    raise ZeroForm("zero inverse form has no order")


def augment(a, F: InverseForm) -> InverseForm:
    """``a x^(m-1) + F z^-1``."""
    return InverseForm(F.field, (F.field.coerce(a),) + F.coeffs, _trusted=True)


def subform(F: InverseForm, i: int) -> InverseForm:
    """``F^(i) = F_i x^i + ... + F_v x^v z^(i-v)`` for ``m <= i <= v``."""
    v = order(F)
    if not F.m <= i <= v:
        raise IndexOutOfRange(f"subform index {i} outside [{F.m}, {v}]")
    return InverseForm(F.field, F.coeffs[i - F.m :], _trusted=True)


def contract(phi: Form, F: InverseForm) -> Optional[InverseForm]:
    """``phi o F``: the product restricted to monomials with both exponents <= 0."""
    if phi.field != F.field:
        raise FieldMismatch(f"cannot mix {phi.field!r} and {F.field!r}")
    e, m = phi.deg, F.m
    d = e + m
    if d > 0:
        return None
    field = F.field
    pc, fc = phi.coeffs, F.coeffs
    out = []
    # coefficient of x^i: sum_j phi_j F_(i-j), needing m <= i-j <= 0
    for i in range(d, 1):
        acc = 0
        for j in range(max(0, i), min(e, i - m) + 1):
            a = pc[j]
            if a != 0:
                acc += a * fc[i - j - m]
        out.append(field.reduce(acc))
    if not any(out):
        return None
    return InverseForm(field, tuple(out), _trusted=True)


def annihilates(phi: Form, F: InverseForm) -> bool:
    return contract(phi, F) is None
