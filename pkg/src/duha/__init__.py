"""duha: exact Hochschild and cyclic homology of homogeneous down-up algebras.

The package builds the algebras A(alpha, beta, 0) = K<u, d> modulo

    d^2 u = alpha*dud + beta*ud^2,      d u^2 = alpha*udu + beta*u^2 d,

over an exact coefficient field K = Q[theta]/(m(theta)), computes Hochschild
homology and cohomology dimensions degree by degree from the length-3
bimodule resolution, derives cyclic homology, and verifies everything
against closed-form Hilbert series and explicit bases.
"""

__version__ = "0.1.0"

from .exactfield import (
    Rational,
    NumberField,
    RATIONALS,
    FieldElement,
    FieldSpec,
    FieldError,
    FieldMismatchError,
    ReducibleModulusError,
    cyclotomic,
    totient,
    root_of_unity_order,
    genericity_check,
)
from .pbw import CaseSpec, Monomial, AlgebraElement, classify_case
from .series import LaurentSeries, RationalFunction
from .verify import VerificationReport

__all__ = [
    "Rational",
    "NumberField",
    "RATIONALS",
    "FieldElement",
    "FieldSpec",
    "FieldError",
    "FieldMismatchError",
    "ReducibleModulusError",
    "cyclotomic",
    "totient",
    "root_of_unity_order",
    "genericity_check",
    "CaseSpec",
    "Monomial",
    "AlgebraElement",
    "classify_case",
    "LaurentSeries",
    "RationalFunction",
    "VerificationReport",
    "__version__",
]
