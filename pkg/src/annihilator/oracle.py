"""Brute-force verifiers.

Everything here is deliberately naive and shares as little code with the
engine as practical: annihilation is tested monomial-by-monomial from the
defining rule ``x^i o x^j = x^(i+j)`` (zero if any exponent turns positive),
minimal polynomials are found by exhaustive search, and Groebner bases are
certified by Buchberger's S-polynomial criterion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional

from .errors import InfiniteStaircase, SearchSpaceTooLarge
from .field import Field
from .forms import Form, Monomial, Poly, rem, s_poly
from .inverse import InverseForm, Sequence

SEARCH_LIMIT = 10**6


# annihilation from first principles


def naive_contract(phi: Form, F: InverseForm) -> dict:
    """``phi o F`` as ``{(x_exp, z_exp): coeff}`` with zero entries dropped."""
    field = F.field
    out: dict = {}
    dphi, m = phi.deg, F.m
    for j, a in enumerate(phi.coeffs):
        if a == 0:
            continue
        for k, b in enumerate(F.coeffs):
            if b == 0:
                continue
            # x^j z^(dphi-j) o x^(m+k) z^(-k)
            ex, ez = j + m + k, dphi - j - k
            if ex <= 0 and ez <= 0:
                out[(ex, ez)] = out.get((ex, ez), 0) + a * b
    return {key: c for key, c in ((key, field.reduce(c)) for key, c in out.items()) if c != 0}


def naive_annihilates(phi: Form, F: InverseForm) -> bool:
    return not naive_contract(phi, F)


def poly_annihilates(poly: Poly, terms: tuple, field: Field) -> bool:
    L = len(poly.coeffs) - 1
    for i in range(L, len(terms)):
        acc = 0
        for j, c in enumerate(poly.coeffs):
            acc += c * terms[j + i - L]
        if field.reduce(acc) != 0:
            return False
    return True


# minimal polynomials


def _guard(field: Field, k: int) -> None:
    if not field.is_finite:
        raise SearchSpaceTooLarge("exhaustive search needs a finite field")
    if field.char**k > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"{field.char}^{k} candidates exceed {SEARCH_LIMIT}")


def brute_min_poly(s: Sequence, max_deg: int) -> Optional[Poly]:
    """Least-degree monic annihilating polynomial, lexicographically least in ``(c_0, .., c_(L-1))``."""
    field = s.field
    _guard(field, max_deg)
    for L in range(max_deg + 1):
        for low in itertools.product(field.elements(), repeat=L):
            poly = Poly(field, low + (1,), _trusted=True)
            if poly_annihilates(poly, s.terms, field):
                return poly
    return None


def monic_forms(field: Field, deg: int, *, in_phi: bool = False, z_divisible: bool = False) -> Iterator[Form]:
    """All monic forms of degree ``deg``; optionally only those in Phi, or only z-multiples."""
    tops = range(deg, -1, -1)
    if in_phi:
        tops = [deg]
    if z_divisible:
        tops = range(deg - 1, -1, -1)
    zero = field.reduce(0)
    for t in tops:
        _guard(field, t)
        for low in itertools.product(field.elements(), repeat=t):
            yield Form(field, low + (1,) + (zero,) * (deg - t), _trusted=True)


def annihilating_forms(F: InverseForm, deg: int, *, limit: Optional[int] = None, **kw) -> list[Form]:
    found = []
    for phi in monic_forms(F.field, deg, **kw):
        if naive_annihilates(phi, F):
            found.append(phi)
            if limit is not None and len(found) >= limit:
                break
    return found


def brute_lambda(F: InverseForm) -> int:
    """Least degree of an annihilating form in Phi."""
    for deg in range(0, 2 - F.m):
        if annihilating_forms(F, deg, limit=1, in_phi=True):
            return deg
    raise AssertionError("x^(1-m) always annihilates")


# Groebner basis checks


def buchberger_failures(basis: list) -> list[tuple[int, int, Form]]:
    """Pairs ``(i, j, r)`` whose S-polynomial leaves a nonzero remainder ``r``."""
    out = []
    for i, j in itertools.combinations(range(len(basis)), 2):
        r = rem(s_poly(basis[i], basis[j]), basis)
        if r is not None:
            out.append((i, j, r))
    return out


def buchberger_certify(basis: list) -> bool:
    return not buchberger_failures(basis)


def staircase_monomials(basis: list) -> list[Monomial]:
    heads = [g.exponent for g in basis]
    xs = [h.x for h in heads if h.z == 0]
    zs = [h.z for h in heads if h.x == 0]
    if not xs or not zs:
        raise InfiniteStaircase("leading monomials miss a pure power of x or of z")
    X, Z = min(xs), min(zs)
    return [
        Monomial(a, b)
        for a in range(X)
        for b in range(Z)
        if not any(h.x <= a and h.z <= b for h in heads)
    ]


def staircase_dim_count(basis: list) -> int:
    return len(staircase_monomials(basis))


def minimal_gb_check(basis: list, F: InverseForm) -> bool:
    if not all(g.is_monic and naive_annihilates(g, F) for g in basis):
        return False
    heads = [g.exponent for g in basis]
    for i, j in itertools.permutations(range(len(heads)), 2):
        if heads[i].divides(heads[j]):
            return False
    return buchberger_certify(basis)


def textbook_reduce(basis: list) -> list[Form]:
    """Reduce each element by the others until nothing changes; lex-decreasing leading terms."""
    G = [g.monic() for g in basis]
    changed = True
    while changed:
        changed = False
        for i in range(len(G)):
            others = G[:i] + G[i + 1 :]
            r = rem(G[i], others)
            if r is None:
                G.pop(i)
                changed = True
                break
            r = r.monic()
            if r != G[i]:
                G[i] = r
                changed = True
    return sorted(G, key=lambda g: tuple(g.exponent), reverse=True)


def power_ideal_check(F: InverseForm, basis: Optional[list] = None) -> bool:
    """Every degree ``1-m`` monomial annihilates ``F`` and no basis element is constant."""
    field = F.field
    top = 1 - F.m
    for i in range(top + 1):
        if not naive_annihilates(Form.monomial(field, i, top - i), F):
            return False
    return not any(g.deg == 0 for g in (basis or ()))


# classical Berlekamp-Massey


@dataclass(frozen=True)
class ClassicalBM:
    lc: int
    connection: Poly

    @property
    def poly(self) -> Poly:
        """Annihilating polynomial ``x^L C(1/x)`` of degree ``lc``."""
        c = list(self.connection.coeffs) + [0] * (self.lc + 1 - len(self.connection.coeffs))
        return Poly(self.connection.field, list(reversed(c[: self.lc + 1])))


def classical_bm(s: Sequence) -> ClassicalBM:
    """Massey's shift-register synthesis with the length-change rule."""
    field = s.field
    red = field.reduce
    C = [red(1)]
    B = [red(1)]
    L, shift, b = 0, 1, red(1)
    for n, sn in enumerate(s.terms):
        d = sn
        for i in range(1, L + 1):
            if i < len(C):
                d += C[i] * s.terms[n - i]
        d = red(d)
        if d == 0:
            shift += 1
            continue
        coef = field.div_raw(d, b)
        T = C[:]
        need = len(B) + shift
        if len(C) < need:
            C += [red(0)] * (need - len(C))
        for i, bi in enumerate(B):
            C[i + shift] = red(C[i + shift] - coef * bi)
        if 2 * L <= n:
            L = n + 1 - L
            B, b, shift = T, d, 1
        else:
            shift += 1
    return ClassicalBM(L, Poly(field, C, _trusted=True))


# reports


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    checks: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=4)
        lines = [f"{'check':<{width}}  result  detail"]
        for c in self.checks:
            lines.append(f"{c.name:<{width}}  {'PASS' if c.passed else 'FAIL':<6}  {c.detail}")
        lines.append(f"{'overall':<{width}}  {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def verify_sequence(s: Sequence, *, exhaustive_limit: int = SEARCH_LIMIT) -> VerificationReport:
    """Run the engine, the BM variant and every oracle on ``s``."""
    from . import bm, engine
    from .forms import dehomogenize
    from .inverse import from_sequence

    rep = VerificationReport()
    F = from_sequence(s)
    out = engine.run(F)
    red = engine.run(F, reduced=True)
    mp = bm.minimal_polynomial(s)
    field = s.field

    rep.add("engine invariants", not engine.exp_violations(out), "; ".join(engine.exp_violations(out)))
    rep.add("minimal gb", minimal_gb_check(list(out.basis), F), f"{len(out.basis)} elements")
    rep.add("buchberger", buchberger_certify(list(out.basis)))
    count = staircase_dim_count(list(out.basis))
    rep.add("dimension", count == out.dim, f"staircase {count}, |f1||f2| = {out.dim}")
    rep.add("reduced basis", list(red.basis) == textbook_reduce(list(out.basis)))
    rep.add("bm agrees with engine", mp.mu1 == dehomogenize(out.f1) and mp.lc == out.lam, f"lc {mp.lc}")
    rep.add("mu1 annihilates s", poly_annihilates(mp.mu1, s.terms, field))
    cl = classical_bm(s)
    rep.add("classical bm lc", cl.lc == mp.lc, f"classical {cl.lc}")
    rep.add("power ideal", power_ideal_check(F, list(out.basis)))
    rep.add("factorisation", engine.factor_check(out))
    rep.add("next degree", engine.next_degree_check(out))
    if field.is_finite and field.char**mp.lc <= exhaustive_limit:
        brute = brute_min_poly(s, mp.lc)
        ok = brute is not None and brute.deg == mp.lc
        rep.add("exhaustive min poly", ok, f"brute degree {brute.deg if brute else None}")
    return rep
