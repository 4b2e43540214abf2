"""Arithmetic invariants of the congruence group Gamma_0(N) for squarefree N.

The whole package parameterizes its formulas by the index psi(N), the
elliptic-point counts nu2, nu3, the cusp count, and the genus of X_0(N).
Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonSquarefree, NotADivisor

__all__ = ["Gamma0Data", "invariants", "genus_quotient", "squarefree_factorization"]


@dataclass(frozen=True)
class Gamma0Data:
    """Invariants of Gamma_0(N), N squarefree.

    psi is the index [Gamma_0(1) : Gamma_0(N)], nu2 and nu3 count elliptic
    points of order 2 and 3, cusps counts the cusps, genus is the genus of
    the modular curve X_0(N).
    """

    N: int
    primes: tuple[int, ...]
    psi: int
    nu2: int
    nu3: int
    cusps: int
    genus: int


def squarefree_factorization(N: int) -> tuple[int, ...]:
    """Return the prime divisors of N, raising NonSquarefree on a square factor."""
    if not isinstance(N, int) or N < 1:
        raise NonSquarefree(f"level must be a positive integer, got {N!r}")
    primes = []
    n = N
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                raise NonSquarefree(f"{N} is divisible by {p}^2")
            primes.append(p)
        p += 1
    if n > 1:
        primes.append(n)
    return tuple(primes)


def _nu2_factor(p: int) -> int:
    # number of solutions of x^2 + 1 = 0 in F_p
    if p == 2:
        return 1
    return 2 if p % 4 == 1 else 0


def _nu3_factor(p: int) -> int:
    # number of solutions of x^2 + x + 1 = 0 in F_p
    if p == 3:
        return 1
    return 2 if p % 3 == 1 else 0


def invariants(N: int) -> Gamma0Data:
    """Compute the Gamma_0(N) invariants for squarefree N >= 1.

    psi(N) = N * prod_{p|N} (1 + 1/p); nu2 and nu3 come from the standard
    Legendre-symbol products; for squarefree N the cusp count is 2^(number
    of prime divisors).  The genus is

        g = 1 + psi/12 - nu2/4 - nu3/3 - cusps/2,

    which is always an integer.
    """
    primes = squarefree_factorization(N)
    psi = 1
    nu2 = 1
    nu3 = 1
    for p in primes:
        psi *= p + 1
        nu2 *= _nu2_factor(p)
        nu3 *= _nu3_factor(p)
    cusps = 2 ** len(primes)
    g = (
        Fraction(1)
        + Fraction(psi, 12)
        - Fraction(nu2, 4)
        - Fraction(nu3, 3)
        - Fraction(cusps, 2)
    )
    if g.denominator != 1:
        raise AssertionError(f"genus formula gave non-integer {g} at N={N}")
    return Gamma0Data(
        N=N, primes=primes, psi=psi, nu2=nu2, nu3=nu3, cusps=cusps, genus=int(g)
    )


def genus_quotient(N: int, p: int) -> int:
    """Genus of X_0(N/p) for a prime p dividing the squarefree level N."""
    primes = squarefree_factorization(N)
    if p not in primes:
        raise NotADivisor(f"{p} is not a prime divisor of {N}")
    return invariants(N // p).genus
