import pytest
from hypothesis import assume, given, strategies as st

from annihilator.engine import discrepancy
from annihilator.errors import AllZeroSequence, IndexOutOfRange, ZeroForm
from annihilator.field import GF2, QQ, make_field
from annihilator.forms import Form, form, form_from_terms
from annihilator.inverse import (
    InverseForm,
    Sequence,
    annihilates,
    augment,
    contract,
    from_sequence,
    order,
    subform,
    to_sequence,
)
from annihilator.oracle import naive_contract

GF3 = make_field("prime", 3)
GF5 = make_field("prime", 5)
GF101 = make_field("prime", 101)


def as_dict(G):
    if G is None:
        return {}
    return {(G.m + k, -k): c for k, c in enumerate(G.coeffs) if c != 0}


def test_from_sequence_example(example_form):
    assert str(example_form) == "x^-6*z^-1+x^-4*z^-3+x^-3*z^-4+z^-7"
    assert example_form.m == -7
    assert order(example_form) == 0


def test_from_sequence_small():
    one = from_sequence(Sequence(GF2, (1,)))
    assert one == InverseForm.monomial(GF2, 0) and one.m == 0
    F = from_sequence(Sequence(GF2, (0, 0, 1)))
    assert F == InverseForm.monomial(GF2, -2)
    assert order(F) == -2
    assert str(F) == "x^-2"


def test_all_zero_sequence():
    with pytest.raises(AllZeroSequence):
        from_sequence(Sequence(GF3, (0, 0)))
    with pytest.raises(ZeroForm):
        InverseForm(GF3, [0, 0])


def test_order_of_monomial():
    assert order(InverseForm.monomial(GF5, -4, 3)) == -4


def test_indexing_follows_layout(example_form):
    F = example_form
    assert [F[j] for j in range(-7, 1)] == [0, 1, 0, 1, 1, 0, 0, 1]
    assert F[1] == 0 and F[-8] == 0
    assert F.coeff(0) == GF2.one


def test_augment_examples():
    for m in (0, -1, -3):
        z_m = InverseForm(GF5, [0] * -m + [1])
        G = augment(2, z_m)
        assert G.m == m - 1
        assert as_dict(G) == {(m - 1, 0): 2, (0, m - 1): 1}
    assert augment(0, InverseForm.monomial(GF2, 0)) == InverseForm(GF2, [0, 1])
    assert str(augment(0, InverseForm.monomial(GF2, 0))) == "z^-1"
    assert str(augment(1, InverseForm(GF2, [0, 1]))) == "x^-2+z^-2"


def test_subform_examples(example_form):
    F = example_form
    assert str(subform(F, -3)) == "x^-3+z^-3"
    assert subform(F, 0) == InverseForm.monomial(GF2, 0)
    assert subform(F, -7) == F
    with pytest.raises(IndexOutOfRange):
        subform(F, -8)
    with pytest.raises(IndexOutOfRange):
        subform(from_sequence(Sequence(GF2, (0, 1))), 0)


def test_subform_recursion(example_form):
    F = example_form
    for i in range(-7, 0):
        assert subform(F, i) == augment(F[i], subform(F, i + 1))


def test_contract_examples():
    x = form(GF2, [0, 1])
    assert contract(x, InverseForm.monomial(GF2, -1)) == InverseForm.monomial(GF2, 0)
    assert contract(form(GF2, [0, 0, 1]), InverseForm.monomial(GF2, -1)) is None
    phi = form(GF5, [2, 1])  # x + 2z
    assert contract(phi, InverseForm(GF5, [1, 2])) is None
    z = form(GF3, [1, 0])
    F = InverseForm(GF3, [2, 0, 1])
    assert contract(z, augment(1, F)) == F


def test_annihilates_examples(example_form):
    F = example_form
    assert annihilates(form_from_terms(GF2, 4, {4: 1, 1: 1, 0: 1}), F)
    assert annihilates(Form.monomial(GF2, 0, 8), F)
    assert not annihilates(form(GF2, [0, 1]), F)
    assert (-5, -1) in naive_contract(form(GF2, [0, 1]), F)


# random inputs


def forms_over(field, max_deg=6):
    elems = st.integers(0, field.char - 1)
    return st.integers(0, max_deg).flatmap(
        lambda d: st.lists(elems, min_size=d + 1, max_size=d + 1).filter(any)
    ).map(lambda cs: Form(field, cs))


def inverse_over(field, max_len=8):
    elems = st.integers(0, field.char - 1)
    return st.lists(elems, min_size=1, max_size=max_len).filter(any).map(lambda cs: InverseForm(field, cs))


fields = st.sampled_from([GF2, GF3, GF5, GF101])


def pair(field):
    return st.tuples(forms_over(field), inverse_over(field), st.integers(0, field.char - 1))


@given(fields.flatmap(pair))
def test_contract_matches_monomial_rule(case):
    phi, F, _ = case
    assert as_dict(contract(phi, F)) == naive_contract(phi, F)


@given(fields.flatmap(pair))
def test_positive_degree_contracts_to_zero(case):
    phi, F, _ = case
    assume(phi.deg + F.m > 0)
    assert contract(phi, F) is None


@given(fields.flatmap(pair))
def test_annihilator_closed_under_variables(case):
    phi, F, _ = case
    if annihilates(phi, F):
        assert annihilates(phi.mul_x(), F)
        assert annihilates(phi.mul_z(), F)


@given(fields.flatmap(pair))
def test_z_multiples_and_augmentation(case):
    phi, F, a = case
    G = augment(a, F)
    assert contract(phi.mul_z(), G) == contract(phi, F)
    assert annihilates(phi.mul_z(), G) == annihilates(phi, F)


@given(fields.flatmap(pair))
def test_discrepancy_decomposition(case):
    phi, F, a = case
    G = augment(a, F)
    d = phi.deg + G.m
    assume(d <= 0)
    delta = discrepancy(phi, G).value
    expected = {(d, 0): delta} if delta else {}
    for (ex, ez), c in as_dict(contract(phi, F)).items():
        expected[(ex, ez - 1)] = c
    assert as_dict(contract(phi, G)) == expected


@given(fields.flatmap(lambda F: st.lists(st.integers(0, F.char - 1), min_size=1, max_size=10).filter(any).map(lambda t: Sequence(F, tuple(t)))))
def test_sequence_round_trip(s):
    F = from_sequence(s)
    assert to_sequence(F) == s
    assert order(F) == -s.v
    assert F.m == 1 - len(s)


def test_sequence_parse():
    s = Sequence.parse(QQ, "1, 2/4,-3")
    assert str(s) == "1,1/2,-3"
    with pytest.raises(ValueError):
        Sequence.parse(GF2, " , ")


def test_json_layout(example_form):
    assert example_form.to_json() == {"m": -7, "coeffs": ["0", "1", "0", "1", "1", "0", "0", "1"]}
    assert InverseForm.from_json(GF2, example_form.to_json()) == example_form
    with pytest.raises(ValueError):
        InverseForm.from_json(GF2, {"m": -2, "coeffs": ["1"]})


@given(st.sampled_from([GF3, GF101]).flatmap(inverse_over))
def test_json_round_trip(F):
    assert InverseForm.from_json(F.field, F.to_json()) == F
