"""Quartic residues, Lucas sequences and sums of C(4k, 2k) modulo primes."""
from .errors import QuarticError
from .forms import QuadraticForm, reduced_forms, represents
from .gaussian import GaussianInt, QuarticValue, classify_Q, primary_associate, quartic_jacobi
from .lucas import LucasPair, lucas_uv, lucas_uv_naive
from .modular import ResidueClass, legendre, mod_inv, mod_pow, prime_sieve, reduce_rational, sqrt_mod
from .sums import SumKind, binom_mod, sum_eval
from .two_squares import QuarticPowerClass, TwoSquares, decompose, lemma24_normalize, power_class
from .verifier import TheoremId, VerificationReport, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "GaussianInt",
    "LucasPair",
    "QuadraticForm",
    "QuarticError",
    "QuarticPowerClass",
    "QuarticValue",
    "ResidueClass",
    "SumKind",
    "TheoremId",
    "TwoSquares",
    "VerificationReport",
    "binom_mod",
    "classify_Q",
    "decompose",
    "legendre",
    "lemma24_normalize",
    "lucas_uv",
    "lucas_uv_naive",
    "mod_inv",
    "mod_pow",
    "power_class",
    "prime_sieve",
    "primary_associate",
    "quartic_jacobi",
    "reduce_rational",
    "reduced_forms",
    "represents",
    "sqrt_mod",
    "sum_eval",
    "verify",
    "verify_all",
]
