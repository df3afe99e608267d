"""Berlekamp-Massey variant working directly on sequence terms.

This is the dehomogenised form of the engine: the same pair update, with
``f2 <- f2 z`` dropped and the discrepancy written as a sum over sequence
terms.  There is no "last length change" bookkeeping; the gap
``d = deg mu2 - deg mu1`` (tracked on the homogeneous side) drives every
branch.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange
from .field import FieldElement, Raw
from .forms import Poly
from .inverse import Sequence


@dataclass(frozen=True)
class MinPolyResult:
    mu1: Poly
    mu2: Poly
    lc: int
    profile: tuple
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "field": self.mu1.field.name,
            "mu1": self.mu1.to_json(),
            "mu2": self.mu2.to_json(),
            "lc": self.lc,
            "profile": list(self.profile),
            "degenerate": self.degenerate,
        }


def _seq_discrepancy(mu1: Poly, terms: tuple, i: int, field) -> Raw:
    L = mu1.deg
    lo = i - L
    if lo < 0 or i >= len(terms):
        raise IndexOutOfRange(f"discrepancy at i={i} needs s_{lo}..s_{i}")
    acc = 0
    for j, c in enumerate(mu1.coeffs):
        if c != 0:
            acc += c * terms[lo + j]
    return field.reduce(acc)


def seq_discrepancy(mu1: Poly, s: Sequence, i: int) -> FieldElement:
    """``sum_j [mu1]_j s_(j + i - deg mu1)``."""
    return FieldElement(s.field, _seq_discrepancy(mu1, s.terms, i, s.field))


def minimal_polynomial(s: Sequence) -> MinPolyResult:
    field = s.field
    terms = s.terms
    n = len(terms)
    if s.is_trivial:
        one = Poly(field, [1])
        return MinPolyResult(one, one, 0, (0,) * n, degenerate=True)
    v = s.v
    mu1 = Poly.x_power(field, v + 1)
    mu2 = Poly(field, [1])
    # With s_v = 1 this is the usual Delta2 = 1; keeping s_v avoids rescaling s.
    delta2 = terms[v]
    d = -v
    profile = [0] * v + [v + 1]
    for i in range(v + 1, n):
        delta1 = _seq_discrepancy(mu1, terms, i, field)
        if delta1 != 0:
            q = field.div_raw(delta1, delta2)
            if d <= 0:
                mu1 = mu1 - mu2.shift(-d).scale(q)
            else:
                psi = mu1
                mu1 = mu1.shift(d) - mu2.scale(q)
                mu2 = psi
                delta2 = delta1
                d = -d
        d += 1
        profile.append(mu1.deg)
    return MinPolyResult(mu1, mu2, mu1.deg, tuple(profile))


def linear_complexity_profile(s: Sequence) -> list[int]:
    """Linear complexity of each prefix ``s_0..s_k``."""
    return list(minimal_polynomial(s).profile)


def annihilates_sequence(poly: Poly, s: Sequence) -> bool:
    """``sum_j [poly]_j s_(j + i - L) = 0`` for ``L <= i < n``, with ``L = deg poly``."""
    L = poly.deg
    return all(_seq_discrepancy(poly, s.terms, i, s.field) == 0 for i in range(L, len(s)))
