"""Exact determinants of matrices built from quadratic forms over finite fields."""
from .characters import chi3, chi3_bracket, jacobi, legendre, lerch_sign, perm_sign_bruteforce, sigma_inverse_sign
from .exact_linalg import (
    RationalMatrix,
    SquareMatrix,
    cauchy_like_det,
    charpoly_rational,
    det_field,
    det_rational,
    vandermonde_product,
)
from .field_core import (
    FieldCtx,
    FieldElem,
    FieldError,
    enumerate_nonzero,
    field_of_order,
    is_irreducible,
    make_extension_field,
    make_prime_field,
)
from .paper_matrices import (
    build_tp_rational,
    build_tq,
    check_corollary,
    check_theorem,
    predicted_det_tq,
    theorem_assembly_check,
)
from .polyring import DensePoly, build_g, build_h, verify_lemma21
from .report import ClaimId, PreconditionError, VerificationReport

__version__ = "0.1.0"
