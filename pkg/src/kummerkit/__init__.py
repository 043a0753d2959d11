"""kummerkit: exact-arithmetic certification that cyclic extensions with
enough roots of unity are radical extensions.

The pipeline takes E = K[X]/(f) of degree n, a primitive n-th root of unity
zeta in K, and a generating automorphism (as the image of the class of X),
then extracts x with sigma(x) = zeta*x and certifies x^n in K and E = K(x),
flag by flag.
"""

from .errors import KummerError, ValidationError, InputFormatError
from .scalars import (
    PrimeField,
    PrimeFieldElement,
    RationalField,
    Rational,
    rational,
    is_prime,
    invert_mod_p,
    multiplicative_order,
    find_nth_root_of_unity,
)
from .polynomials import (
    Polynomial,
    poly_divmod,
    poly_gcd,
    poly_gcd_extended,
    poly_pow_mod,
    cyclotomic_polynomial,
    is_irreducible_mod_p,
)
from .tower import (
    ExtensionField,
    ExtensionElement,
    ext_mul,
    ext_inverse,
    embed_base,
    is_in_base,
    element_pow,
)
from .linalg import (
    Matrix,
    rref,
    nullspace,
    mat_apply,
    operator_matrix,
    operator_min_poly,
    element_min_poly,
)
from .kummer import (
    CHECK_NAMES,
    CyclicExtensionInput,
    ValidatedContext,
    EigenReport,
    KummerCertificate,
    validate_setup,
    sigma_matrix,
    check_diagonalizability,
    eigen_spectrum,
    check_gamma_closure,
    check_spectrum_complete,
    check_fixed_field,
    extract_radical_generator,
    lagrange_resolvent,
    compute_certificate,
    certify,
    verify_certificate,
    verify_certificate_report,
)
from .families import (
    FamilyDescriptor,
    frobenius_family,
    builtin_cubic_over_eisenstein,
    parse_tower_spec,
    default_modulus,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
