"""Vantieghem's primality criterion over repunit moduli (b**p - 1)/(b - 1).

Evaluates the product (b + 1)(b**2 + 1)...(b**(p-1) + 1) mod the repunit
modulus by two independent routes (a direct product and a coset-structured
telescoping product), builds and validates the underlying coset
decomposition, verifies the cyclotomic root-product identity, and ships
slow brute-force oracles for cross-validation.
"""

from .cosets import CosetDecomposition, VerificationReport, decompose, verify_partition
from .criterion import (
    Path,
    SweepEntry,
    SweepReport,
    TestReport,
    Verdict,
    coset_partial_products,
    product_naive,
    product_structured,
    run_test,
    sweep,
    telescope_check,
)
from .cyclotomic import IntPolynomial, ResiduePolynomial, cyclotomic_poly, verify_lemma
from .errors import DomainError, NotDivisible, PathUnavailable
from .modmath import (
    RepunitModulus,
    build_modulus,
    exact_div,
    fold_reduce_pow2,
    mult_order,
    powmod,
)
from .oracle import fermat_check, is_prime_trial, product_bruteforce

__version__ = "0.1.0"

__all__ = [
    "CosetDecomposition",
    "DomainError",
    "IntPolynomial",
    "NotDivisible",
    "Path",
    "PathUnavailable",
    "RepunitModulus",
    "ResiduePolynomial",
    "SweepEntry",
    "SweepReport",
    "TestReport",
    "Verdict",
    "VerificationReport",
    "build_modulus",
    "coset_partial_products",
    "cyclotomic_poly",
    "decompose",
    "exact_div",
    "fermat_check",
    "fold_reduce_pow2",
    "is_prime_trial",
    "mult_order",
    "powmod",
    "product_bruteforce",
    "product_naive",
    "product_structured",
    "run_test",
    "sweep",
    "telescope_check",
    "verify_lemma",
    "verify_partition",
]
