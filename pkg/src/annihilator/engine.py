"""Inductive construction of the minimal grlex Groebner basis of an annihilator ideal.

Starting from ``F = c x^v`` (ideal ``<x^(1-v), z>``) the inverse form is
extended one coefficient at a time, ``G = a (augment) F``.  Each extension
updates the viable pair ``(f1, f2)`` with a single discrepancy and the
``(-)`` combination, and updates the accumulated basis tuple and its degree
tuple.  The pair stays monic throughout; the leading coefficient of ``F`` is
absorbed into the stored denominator.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field, replace
from typing import Optional

from .errors import InvariantViolation
from .field import Field, FieldElement, Raw
from .forms import Form, Monomial, ominus, rem, strip_z, z_valuation
from .inverse import InverseForm, augment, order

CHECKS = os.environ.get("ANNIH_CHECKS", "1") != "0"


@dataclass(frozen=True)
class ViablePair:
    f1: Form
    f2: Form
    m: int

    @property
    def d(self) -> int:
        return self.f2.deg - self.f1.deg

    @property
    def lam(self) -> int:
        return self.f1.deg

    def violations(self) -> list[str]:
        out = []
        if not (self.f1.is_monic and self.f2.is_monic):
            out.append("pair not monic")
        if self.f1.z_divides():
            out.append("z divides f1")
        if not self.f2.z_divides():
            out.append("z does not divide f2")
        if self.f1.deg + self.f2.deg != 2 - self.m:
            out.append(f"|f1|+|f2| = {self.f1.deg + self.f2.deg} != 2-m = {2 - self.m}")
        return out


@dataclass(frozen=True)
class StepInfo:
    """What happened on the step that produced a state."""

    a: Raw
    delta1: Raw
    delta2: Raw
    q: Raw
    d_before: int
    active: bool
    reduced_f1: bool = False


@dataclass(frozen=True)
class EngineState:
    form: InverseForm
    basis: tuple
    dtuple: tuple
    denom: Raw
    profile: tuple
    last: Optional[StepInfo] = None

    @property
    def field(self) -> Field:
        return self.form.field

    @property
    def m(self) -> int:
        return self.form.m

    @property
    def pair(self) -> ViablePair:
        return ViablePair(self.basis[0], self.basis[1], self.form.m)

    @property
    def d(self) -> int:
        return self.basis[1].deg - self.basis[0].deg


def discrepancy(phi: Form, G: InverseForm) -> FieldElement:
    return FieldElement(G.field, _discrepancy(phi, G))


def _discrepancy(phi: Form, G: InverseForm) -> Raw:
    # [phi . G] at x^(|phi|+|G|) z^0: sum_j phi_j G_(|phi|+|G|-j), and
    # G_(|phi|+|G|-j) is stored at index |phi|-j.
    e = phi.deg
    field = G.field
    if e + G.m > 0:
        return field.reduce(0)
    gc, pc = G.coeffs, phi.coeffs
    acc = 0
    for j in range(e + 1):
        a = pc[j]
        if a != 0:
            acc += a * gc[e - j]
    return field.reduce(acc)


def init_state(v: int, lc, field: Field | None = None) -> EngineState:
    """Base case ``F = lc x^v``: basis ``(x^(1-v), z)``, degree tuple ``(v, v+1)``."""
    if isinstance(lc, FieldElement):
        field = lc.field
    if field is None:
        raise ValueError("field required when lc is not a FieldElement")
    lc = field.coerce(lc)
    if v > 0:
        raise ValueError("order must be <= 0")
    F = InverseForm.monomial(field, v, lc)
    f1 = Form.monomial(field, 1 - v, 0)
    f2 = Form.monomial(field, 0, 1)
    return EngineState(F, (f1, f2), (v, v + 1), lc, (1 - v,))


def step(state: EngineState, a, *, check: bool = CHECKS, fast_gf2: bool = True) -> EngineState:
    """Extend ``F`` to ``a (augment) F`` and update the basis accordingly."""
    field = state.field
    a = field.coerce(a)
    G = augment(a, state.form)
    f = state.basis
    f1, f2 = f[0], f[1]
    d = f2.deg - f1.deg
    delta1 = _discrepancy(f1, G)
    if check:
        delta2 = _discrepancy(f2, G)
        if state.denom == 0 or delta2 != state.denom:
            raise InvariantViolation(f"stored denominator {state.denom} != Delta(f2; G) = {delta2}")
    else:
        delta2 = state.denom
    if delta1 == 0:
        q = field.reduce(0)
    elif fast_gf2 and field.char == 2:
        q = 1
    else:
        q = field.div_raw(delta1, state.denom)
    active = delta1 != 0 and d > 0
    g1 = ominus(f1, f2, q)
    if active:
        rest = tuple(fi.mul_z() for fi in f)
        dtuple = (state.m - 1,) + state.dtuple
        denom = delta1
    else:
        rest = tuple(fi.mul_z() for fi in f[1:])
        dtuple = (state.m - 1,) + state.dtuple[1:]
        denom = state.denom
    new = EngineState(
        G,
        (g1,) + rest,
        dtuple,
        denom,
        state.profile + (g1.deg,),
        StepInfo(a, delta1, delta2, q, d, active),
    )
    if check:
        _check_step(state, new)
    return new


def _check_step(old: EngineState, new: EngineState) -> None:
    pair = new.pair
    bad = pair.violations()
    f1, f2 = old.basis[0], old.basis[1]
    if new.last.delta1 != 0 and pair.f1.deg != max(f1.deg, f2.deg):
        bad.append("|g1| != max(|f1|, |f2|)")
    if new.last.delta1 == 0 and pair.f1 != f1:
        bad.append("g1 != f1 with zero discrepancy")
    d_old, d_new = old.d, new.d
    if new.last.delta1 != 0:
        if d_new != 1 - abs(d_old):
            bad.append(f"d flip: {d_old} -> {d_new}")
    elif d_new != d_old + 1:
        bad.append(f"d increment: {d_old} -> {d_new}")
    if new.denom == 0:
        bad.append("zero denominator")
    if bad:
        raise InvariantViolation(f"step to m={new.m}: " + "; ".join(bad))


def needs_reduction(state: EngineState) -> bool:
    f1, f2 = state.basis[0], state.basis[1]
    e = f2.exponent
    D = f1.deg
    return any(j >= e.x and D - j >= e.z for j, _ in f1.terms())


def reduce_basis(state: EngineState) -> EngineState:
    """Replace ``f1`` by its remainder modulo ``f2`` when ``LM(f2)`` divides a monomial of ``f1``."""
    if not needs_reduction(state):
        return state
    g1 = rem(state.basis[0], [state.basis[1]])
    last = replace(state.last, reduced_f1=True) if state.last else None
    return replace(state, basis=(g1,) + state.basis[1:], last=last)


@dataclass(frozen=True)
class TraceRow:
    m: int
    basis: tuple
    dtuple: tuple

    def to_json(self) -> dict:
        return {"m": self.m, "basis": [f.to_json() for f in self.basis], "degree_tuple": list(self.dtuple)}


@dataclass
class AnnihilatorBasis:
    form: InverseForm
    basis: tuple
    dtuple: tuple
    profile: tuple
    reduced: bool
    trace: Optional[list] = dc_field(default=None, repr=False)
    steps: Optional[list] = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.m = self.form.m
        self.v = order(self.form)

    @property
    def field(self) -> Field:
        return self.form.field

    @property
    def lam(self) -> int:
        return self.basis[0].deg

    @property
    def f1(self) -> Form:
        return self.basis[0]

    @property
    def f2(self) -> Form:
        return self.basis[1]

    @property
    def dim(self) -> int:
        return dimension(self)

    def lam_at(self, j: int) -> int:
        """``lambda_j`` for the subform ``F^(j)``, with ``lambda_(v+1) = 0``."""
        v = self.v
        if j == v + 1:
            return 0
        if not self.m <= j <= v:
            raise IndexError(f"lambda_{j} undefined for m={self.m}, v={v}")
        return self.profile[v - j]

    def min_poly(self):
        from .forms import dehomogenize

        return dehomogenize(self.f1)

    def to_json(self) -> dict:
        return {
            "field": self.field.name,
            "m": self.m,
            "lambda": self.lam,
            "degree_tuple": list(self.dtuple),
            "dim": self.dim,
            "reduced": self.reduced,
            "profile": list(self.profile),
            "basis": [f.to_json() for f in self.basis],
            "min_poly": self.min_poly().to_json(),
        }


def run(
    F: InverseForm,
    *,
    reduced: bool = False,
    trace: bool = False,
    check: bool = CHECKS,
    fast_gf2: bool = True,
    keep_steps: bool = False,
) -> AnnihilatorBasis:
    """Minimal (or, with ``reduced``, the reduced) grlex Groebner basis of the annihilator of ``F``."""
    v = order(F)
    state = init_state(v, F[v], F.field)
    rows = [TraceRow(state.m, state.basis, state.dtuple)] if trace else None
    steps = [state] if keep_steps else None
    for i in range(v - 1, F.m - 1, -1):
        state = step(state, F[i], check=check, fast_gf2=fast_gf2)
        if reduced:
            state = reduce_basis(state)
        if rows is not None:
            rows.append(TraceRow(state.m, state.basis, state.dtuple))
        if steps is not None:
            steps.append(state)
    if check and state.form != F:
        raise InvariantViolation("rebuilt inverse form differs from the input")
    out = AnnihilatorBasis(state.form, state.basis, state.dtuple, state.profile, False, rows, steps)
    out.reduced = is_reduced(out)
    return out


def is_reduced(basis: AnnihilatorBasis, full: bool = False) -> bool:
    """No monomial of any element divisible by another element's leading monomial.

    The fast path only tests ``f1`` against ``LM(f2)``, which suffices for
    the constructed tuples; ``full`` checks every pair.
    """
    elems = basis.basis if isinstance(basis, AnnihilatorBasis) else tuple(basis)
    if not full:
        f1, f2 = elems[0], elems[1]
        e = f2.exponent
        return not any(M.x >= e.x and M.z >= e.z for M in f1.monomials())
    return is_reduced_full(elems)


def is_reduced_full(elems) -> bool:
    heads = [g.exponent for g in elems]
    for i, g in enumerate(elems):
        for M in g.monomials():
            for k, h in enumerate(heads):
                if k != i and h.divides(M):
                    return False
    return True


def dimension(basis: AnnihilatorBasis) -> int:
    return basis.basis[0].deg * basis.basis[1].deg


def rectangle_sum(basis: AnnihilatorBasis) -> int:
    D = basis.dtuple
    return sum((D[i] - D[i - 1]) * basis.lam_at(D[i - 1]) for i in range(1, len(D)))


def staircase(basis: AnnihilatorBasis) -> list[Monomial]:
    """Leading exponents of the basis elements (the corners of the staircase)."""
    return [f.exponent for f in basis.basis]


def staircase_formula(basis: AnnihilatorBasis) -> list[Monomial]:
    """The same corners predicted from the degree tuple and the complexity profile."""
    return [Monomial(basis.lam_at(Di), Di - basis.m) for Di in basis.dtuple]


@dataclass(frozen=True)
class Uniqueness:
    f1_unique: bool
    witness: Optional[Form]


def classify_uniqueness(basis: AnnihilatorBasis) -> Uniqueness:
    f1, f2 = basis.f1, basis.f2
    d = f2.deg - f1.deg
    witness = None
    if d > 0:
        witness = f1.mul_z(d) - f2
    return Uniqueness(f1.deg < f2.deg, witness)


def factor_check(basis: AnnihilatorBasis) -> bool:
    return all(z_valuation(f) == Di - basis.m for f, Di in zip(basis.basis, basis.dtuple))


def factors(basis: AnnihilatorBasis) -> list[tuple[Form, int]]:
    """``(f_i / z^p, p)`` for each element."""
    return [(strip_z(f), z_valuation(f)) for f in basis.basis]


def next_degree_check(basis: AnnihilatorBasis) -> bool:
    D = basis.dtuple
    lo, hi = basis.m, basis.v + 1
    lams = [basis.lam_at(j) for j in range(lo, hi + 1)]
    for i in range(1, len(D) - 1):
        target = basis.lam_at(D[i - 1])
        least = next((lo + k for k, lam in enumerate(lams) if target > lam), None)
        if least != D[i]:
            return False
    return True


def exp_violations(basis: AnnihilatorBasis) -> list[str]:
    """Relations between degree tuple, leading exponents and profile that every output satisfies."""
    out = []
    D = basis.dtuple
    c = len(D)
    if len(basis.basis) != c:
        out.append("basis and degree tuple differ in length")
        return out
    if any(D[i - 1] >= D[i] for i in range(1, c)):
        out.append(f"degree tuple not increasing: {D}")
        return out
    if D[0] != basis.m or D[-1] != basis.v + 1:
        out.append(f"degree tuple endpoints {D[0]}, {D[-1]}")
        return out
    if staircase(basis) != staircase_formula(basis):
        out.append("leading exponents differ from (lambda_Di, Di - m)")
    for i in range(1, c):
        if basis.lam_at(D[i - 1]) + basis.lam_at(D[i]) != 2 - D[i]:
            out.append(f"lambda sum at i={i + 1}")
        run_vals = {basis.lam_at(j) for j in range(D[i - 1], D[i])}
        if len(run_vals) != 1 or basis.lam_at(D[i - 1]) <= basis.lam_at(D[i]):
            out.append(f"profile plateau broken between D_{i} and D_{i + 1}")
    lms = staircase(basis)
    if any(lms[i - 1] <= lms[i] for i in range(1, c)):
        out.append("leading monomials not strictly lex-decreasing")
    if c > basis.lam + 1:
        out.append("|F| > lambda + 1")
    return out
