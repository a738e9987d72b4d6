"""Reduced Gröbner bases over the rationals with interchangeable
power-product representations: expanded strings under total-degree order,
exponent vectors, and prime images under the prime-based order, where each
variable is encoded by a distinct prime and products compare as integers.
"""

from .buchberger import (
    CriticalPair,
    GroebnerResult,
    GroebnerStats,
    compute_groebner,
    criterion_chain,
    criterion_coprime,
    groebner_basis,
    inter_reduce,
    make_pair,
    update_pairs,
)
from .corpus import (
    CORPUS_NAMES,
    PolySystem,
    builtin,
    first_appearance_order,
    parse_polynomial,
    parse_system,
    permute_vars,
)
from .errors import (
    CapacityError,
    CoefficientOverflow,
    EngineTimeout,
    ImageOverflow,
    InputError,
    InvalidPermutation,
    NotDivisible,
    ParseError,
    PrimeGBError,
    UnknownSystem,
    UnknownVariable,
    VerificationError,
    ZeroPolynomial,
)
from .polynomials import Monomial, Polynomial, Ring, normal_form, s_polynomial
from .powerprods import (
    Ordering,
    PowerProduct,
    Rep,
    VarTable,
    compare,
    natural_rep,
    prime_image,
)
from .rationals import (
    Backend,
    BigRational,
    Rational,
    Rational64,
    make_rational,
    parse_rational,
)
from .verify import (
    VerifyReport,
    check_groebner,
    check_ideal_preserved,
    check_reduced,
    verify_result,
)

__version__ = "0.1.0"
