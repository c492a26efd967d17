"""Arithmetic of Weierstrass-curve models: bad primes, elliptic curves, divisors."""

from .singular import (PlaneCurveModel, SingularPrimesResult, candidate_primes, charts, find_witness,
                       n_of_D, prime_support, singular_primes, singular_primes_hyperelliptic,
                       singular_primes_quartic)

__all__ = [
    "PlaneCurveModel", "SingularPrimesResult", "candidate_primes", "charts", "find_witness",
    "n_of_D", "prime_support", "singular_primes", "singular_primes_hyperelliptic",
    "singular_primes_quartic",
]
