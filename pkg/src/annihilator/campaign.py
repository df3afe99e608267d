"""Exhaustive and randomised cross-checks of the engine against the oracles.

Each ``*_violations`` function takes one sequence and returns a list of
human-readable problems; an empty list means every check passed.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator

from . import bm, engine, oracle
from .errors import InvariantViolation
from .field import Field
from .forms import dehomogenize
from .inverse import Sequence, from_sequence


def all_sequences(field: Field, max_len: int) -> Iterator[Sequence]:
    """Every nontrivial sequence of length ``1..max_len`` over a finite field."""
    for n in range(1, max_len + 1):
        for terms in itertools.product(field.elements(), repeat=n):
            if any(terms):
                yield Sequence(field, terms)


def random_sequences(fields: Iterable[Field], count: int, max_len: int, seed: int) -> Iterator[Sequence]:
    rng = random.Random(seed)
    fields = list(fields)
    for k in range(count):
        field = fields[k % len(fields)]
        n = rng.randint(1, max_len)
        terms = [rng.randrange(field.char) for _ in range(n)]
        if not any(terms):
            terms[rng.randrange(n)] = 1 + rng.randrange(field.char - 1)
        yield Sequence(field, tuple(terms))


def exhaustive_violations(s: Sequence) -> list[str]:
    """Oracle equivalence on one small instance."""
    out = []
    F = from_sequence(s)
    res = engine.run(F)
    red = engine.run(F, reduced=True)
    mp = bm.minimal_polynomial(s)
    brute = oracle.brute_min_poly(s, len(s))
    if brute is None or brute.deg != mp.lc:
        out.append(f"bm lc {mp.lc} != brute-force degree {brute.deg if brute else None}")
    mu = dehomogenize(res.f1)
    if not oracle.poly_annihilates(mu, s.terms, s.field):
        out.append("dehomogenised f1 does not annihilate s")
    if mu != mp.mu1:
        out.append(f"engine f1 {mu} != bm mu1 {mp.mu1}")
    basis = list(res.basis)
    if not oracle.minimal_gb_check(basis, F):
        out.append("minimal_gb_check failed")
    if not oracle.buchberger_certify(basis):
        out.append("buchberger_certify failed")
    count = oracle.staircase_dim_count(basis)
    if count != res.f1.deg * res.f2.deg:
        out.append(f"staircase count {count} != |f1||f2| = {res.dim}")
    if list(red.basis) != oracle.textbook_reduce(basis):
        out.append("reduced run differs from textbook reduction")
    return out


def uniqueness_violations(s: Sequence) -> list[str]:
    """The four equivalent conditions on ``f1`` and ``f2``, decided independently."""
    F = from_sequence(s)
    res = engine.run(F)
    f1, f2 = res.f1, res.f2
    lam, m = res.lam, res.m
    a = 2 * lam < 2 - m  # lambda < 1 - m/2
    b = f1.deg < f2.deg
    found = oracle.annihilating_forms(F, lam, limit=2, in_phi=True)
    c = len(found) == 1
    u = engine.classify_uniqueness(res)
    if u.witness is not None:
        w = u.witness
        d = (
            w.is_monic
            and w.z_divides()
            and w.deg == f2.deg
            and w != f2
            and oracle.naive_annihilates(w, F)
        )
    else:
        others = [g for g in oracle.annihilating_forms(F, f2.deg, limit=2, z_divisible=True) if g != f2]
        d = bool(others)
    out = []
    if not (a == b == c == d == u.f1_unique):
        out.append(f"conditions disagree: a={a} b={b} c={c} d={d} classify={u.f1_unique}")
    if 2 * lam <= 2 - m and not engine.is_reduced(res, full=True):
        out.append("lambda <= 1 - m/2 but the constructed basis is not reduced")
    if engine.is_reduced(res) != engine.is_reduced(res, full=True):
        out.append("fast and full reducedness checks disagree")
    return out


def structural_violations(s: Sequence) -> list[str]:
    """Invariants checked after every step of the construction."""
    F = from_sequence(s)
    try:
        res = engine.run(F, keep_steps=True, check=True)
    except InvariantViolation as exc:
        return [f"engine invariant: {exc}"]
    out = []
    for st in res.steps:
        view = engine.AnnihilatorBasis(st.form, st.basis, st.dtuple, st.profile, False)
        out += [f"m={st.m}: {msg}" for msg in st.pair.violations()]
        out += [f"m={st.m}: {msg}" for msg in engine.exp_violations(view)]
        if st.denom == 0:
            out.append(f"m={st.m}: zero denominator")
        if not engine.factor_check(view):
            out.append(f"m={st.m}: factor_check")
        if not engine.next_degree_check(view):
            out.append(f"m={st.m}: next_degree_check")
    if not oracle.power_ideal_check(F, list(res.basis)):
        out.append("power_ideal_check")
    mp = bm.minimal_polynomial(s)
    cl = oracle.classical_bm(s)
    if cl.lc != mp.lc or mp.lc != res.lam:
        out.append(f"lc mismatch: classical {cl.lc}, bm {mp.lc}, engine {res.lam}")
    if not oracle.poly_annihilates(cl.poly, s.terms, s.field):
        out.append("classical connection polynomial does not annihilate")
    if tuple(mp.profile[s.v :]) != res.profile:
        out.append("bm and engine profiles differ")
    return out
