"""Groebner bases of annihilator ideals of inverse forms and finite sequences."""
from .bm import MinPolyResult, linear_complexity_profile, minimal_polynomial
from .engine import AnnihilatorBasis, run
from .field import GF2, QQ, Field, FieldElement, make_field, parse_field
from .forms import Form, Monomial, Poly
from .inverse import InverseForm, Sequence, from_sequence

__all__ = [
    "AnnihilatorBasis",
    "Field",
    "FieldElement",
    "Form",
    "GF2",
    "InverseForm",
    "MinPolyResult",
    "Monomial",
    "Poly",
    "QQ",
    "Sequence",
    "from_sequence",
    "linear_complexity_profile",
    "make_field",
    "minimal_polynomial",
    "parse_field",
    "run",
]
