import pytest

from annihilator import oracle
from annihilator.engine import run
from annihilator.errors import InfiniteStaircase, SearchSpaceTooLarge
from annihilator.field import GF2, QQ, make_field
from annihilator.forms import Form, Monomial, Poly
from annihilator.inverse import InverseForm, Sequence, from_sequence
from golden import parse_form

GF3 = make_field("prime", 3)
GF5 = make_field("prime", 5)
GF101 = make_field("prime", 101)


def basis(text, field=GF2):
    return [parse_form(p, field) for p in text.split(",")]


def example_basis():
    return basis("x^4+xz^3+z^4,(x^3+x^2z+xz^2+z^3)z^2,xz^5,z^8")


# exhaustive minimal polynomials


def test_brute_min_poly_examples(example_seq):
    assert oracle.brute_min_poly(example_seq, 5) == Poly(GF2, [1, 1, 0, 0, 1])
    assert oracle.brute_min_poly(Sequence(GF2, (1,)), 1) == Poly(GF2, [0, 1])
    s = Sequence(GF3, (1, 2, 1))
    assert oracle.brute_min_poly(s, 3).deg == 1  # s_(i+1) = 2 s_i


def test_brute_min_poly_none_below_bound(example_seq):
    assert oracle.brute_min_poly(example_seq, 3) is None


def test_search_guard():
    with pytest.raises(SearchSpaceTooLarge):
        oracle.brute_min_poly(Sequence(GF101, (1, 2, 3, 4)), 4)
    with pytest.raises(SearchSpaceTooLarge):
        oracle.brute_min_poly(Sequence(QQ, (1,)), 1)
    with pytest.raises(SearchSpaceTooLarge):
        list(oracle.monic_forms(GF2, 21))


def test_monic_form_enumeration():
    assert len(list(oracle.monic_forms(GF3, 2))) == 1 + 3 + 9
    phi = list(oracle.monic_forms(GF3, 2, in_phi=True))
    assert len(phi) == 9 and all(f.in_phi() for f in phi)
    zdiv = list(oracle.monic_forms(GF3, 2, z_divisible=True))
    assert len(zdiv) == 4 and all(f.z_divides() for f in zdiv)


def test_brute_lambda(example_form):
    assert oracle.brute_lambda(example_form) == 4
    assert oracle.brute_lambda(InverseForm.monomial(GF5, -3)) == 4


# annihilation by the monomial rule


def test_naive_contract(example_form):
    assert oracle.naive_annihilates(example_basis()[0], example_form)
    out = oracle.naive_contract(Form.monomial(GF2, 1, 0), example_form)
    # x z^-7 leaves the module; the other three terms shift by one x
    assert out == {(-5, -1): 1, (-3, -3): 1, (-2, -4): 1}


def test_naive_contract_drops_positive_exponents():
    F = InverseForm(GF2, [1, 1])  # x^-1 + z^-1
    # x^2 kills both terms; x kills z^-1 only
    assert oracle.naive_contract(Form.monomial(GF2, 2, 0), F) == {}
    assert oracle.naive_contract(Form.monomial(GF2, 1, 0), F) == {(0, 0): 1}


def test_poly_annihilates(example_seq):
    assert oracle.poly_annihilates(Poly(GF2, [1, 1, 0, 0, 1]), example_seq.terms, GF2)
    assert not oracle.poly_annihilates(Poly(GF2, [1, 0, 0, 1]), example_seq.terms, GF2)


# Groebner basis checks


def test_buchberger_examples():
    assert oracle.buchberger_certify(example_basis())
    assert oracle.buchberger_certify(basis("x^2+xz,z"))
    bad = basis("x^2+z^2,xz")
    fails = oracle.buchberger_failures(bad)
    assert [(i, j) for i, j, _ in fails] == [(0, 1)]
    assert fails[0][2] == parse_form("z^3")
    assert not oracle.buchberger_certify(bad)


def test_staircase_count():
    assert oracle.staircase_dim_count(example_basis()) == 20
    assert oracle.staircase_dim_count(basis("x,z")) == 1
    assert oracle.staircase_monomials(basis("x^2,xz,z^2")) == [Monomial(0, 0), Monomial(0, 1), Monomial(1, 0)]
    with pytest.raises(InfiniteStaircase):
        oracle.staircase_dim_count(basis("x^2,xz"))


def test_minimal_gb_check(example_form):
    assert oracle.minimal_gb_check(example_basis(), example_form)
    F = InverseForm.monomial(GF2, -1)
    assert not oracle.minimal_gb_check(basis("x,x^2"), F)
    assert not oracle.minimal_gb_check(basis("x^2,z"), InverseForm.monomial(GF2, -2))


def test_textbook_reduce():
    assert oracle.textbook_reduce(basis("x^2+xz+z^2,xz+z^2,z^3")) == basis("x^2,xz+z^2,z^3")
    assert oracle.textbook_reduce(example_basis()) == example_basis()
    # redundant elements disappear
    assert oracle.textbook_reduce(basis("x,x^2,z")) == basis("x,z")


def test_power_ideal_check(example_form):
    assert oracle.power_ideal_check(example_form)
    assert oracle.power_ideal_check(InverseForm.monomial(GF2, 0), basis("x,z"))
    assert not oracle.power_ideal_check(example_form, [Form(GF2, [1])])
    F = from_sequence(Sequence(GF5, (2, 0, 3, 1)))
    assert oracle.power_ideal_check(F, list(run(F).basis))


# classical shift-register synthesis


def test_classical_bm_examples(example_seq):
    cl = oracle.classical_bm(example_seq)
    assert cl.lc == 4
    assert oracle.poly_annihilates(cl.poly, example_seq.terms, GF2)
    assert oracle.classical_bm(Sequence(GF2, (1,))).lc == 1
    assert oracle.classical_bm(Sequence(GF2, (0, 0, 1))).lc == 3


def test_classical_bm_lengths_in_example(example_seq):
    prof = [oracle.classical_bm(Sequence(GF2, example_seq.terms[: k + 1])).lc for k in range(8)]
    assert prof == [1, 1, 1, 3, 3, 3, 4, 4]


# reports


def test_verify_sequence(example_seq):
    rep = oracle.verify_sequence(example_seq)
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert "exhaustive min poly" in names and "buchberger" in names
    assert rep.table().splitlines()[-1].split() == ["overall", "PASS"]
    assert rep.to_json()["passed"] is True


def test_verify_sequence_skips_exhaustive_search_when_too_large():
    s = Sequence(GF101, (1, 7, 3, 50, 2, 9))
    rep = oracle.verify_sequence(s)
    assert rep.passed
    assert "exhaustive min poly" not in [c.name for c in rep.checks]


def test_report_fails_when_any_check_fails():
    rep = oracle.VerificationReport()
    rep.add("a", True)
    rep.add("b", False, "broken")
    assert not rep.passed
    assert "FAIL" in rep.table()
