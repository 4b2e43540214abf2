"""Gamma_0(N) invariants against exhaustive enumeration oracles."""

import math

import numpy as np
import pytest

from eischow.errors import NonSquarefree, NotADivisor
from eischow.gamma0 import genus_quotient, invariants, squarefree_factorization


def p1_cardinality(N):
    """|P^1(Z/N)| by exhaustive enumeration of coprime pairs.

    The unit group acts freely on pairs (u, v) with gcd(u, v, N) = 1, so
    the cardinality is (number of such pairs) / phi(N).  Pairs are counted
    by running over all u and, for each, over all v; the v-count depends on
    u only through gcd(u, N), which keeps the enumeration affordable for
    N up to 1000 without using any multiplicative formula.
    """
    if N == 1:
        return 1
    u = np.arange(N)
    g_u = np.gcd(u, N)
    v_count = {}
    for g in np.unique(g_u):
        v_count[int(g)] = int(np.count_nonzero(np.gcd(np.gcd(u, int(g)), N) == 1))
    pairs = sum(v_count[int(g)] for g in g_u)
    phi = int(np.count_nonzero(np.gcd(u[1:], N) == 1))
    assert pairs % phi == 0
    return pairs // phi


def elliptic_counts_bruteforce(N):
    """(nu2, nu3) by counting solutions of x^2+1 and x^2+x+1 mod N."""
    x = np.arange(N)
    return (
        int(np.count_nonzero((x * x + 1) % N == 0)),
        int(np.count_nonzero((x * x + x + 1) % N == 0)),
    )


def squarefree_levels(bound):
    return [n for n in range(1, bound + 1) if all(n % (p * p) for p in range(2, int(n ** 0.5) + 1))]


def test_identity_level():
    inv = invariants(1)
    assert (inv.psi, inv.nu2, inv.nu3, inv.cusps, inv.genus) == (1, 1, 1, 1, 0)


def test_level_37_against_bruteforce():
    inv = invariants(37)
    assert inv.psi == p1_cardinality(37) == 38
    assert (inv.nu2, inv.nu3) == elliptic_counts_bruteforce(37) == (2, 2)
    assert inv.cusps == 2
    assert inv.genus == 2


def test_level_35_against_bruteforce():
    inv = invariants(35)
    assert inv.psi == p1_cardinality(35) == 48
    assert (inv.nu2, inv.nu3) == elliptic_counts_bruteforce(35) == (0, 0)
    assert inv.cusps == 4
    assert inv.genus == 3


def test_non_squarefree_rejected():
    for n in (4, 12, 18, 75, 0, -5):
        with pytest.raises(NonSquarefree):
            invariants(n)


def test_factorization():
    assert squarefree_factorization(2310) == (2, 3, 5, 7, 11)
    assert squarefree_factorization(1) == ()


def test_genus_quotient_examples():
    assert genus_quotient(37, 37) == 0
    assert genus_quotient(35, 5) == 0
    # genus of X_0(210), frozen from the brute-force oracle below
    assert genus_quotient(2 * 3 * 5 * 7 * 11, 11) == 41


def test_genus_210_bruteforce_oracle():
    psi = p1_cardinality(210)
    nu2, nu3 = elliptic_counts_bruteforce(210)
    cusps = 2 ** 4
    g = 1 + psi / 12 - nu2 / 4 - nu3 / 3 - cusps / 2
    assert g == 41
    inv = invariants(210)
    assert (inv.psi, inv.nu2, inv.nu3, inv.genus) == (psi, nu2, nu3, 41)


def test_genus_quotient_errors():
    with pytest.raises(NotADivisor):
        genus_quotient(35, 3)
    with pytest.raises(NotADivisor):
        genus_quotient(35, 1)
    with pytest.raises(NonSquarefree):
        genus_quotient(12, 2)


def test_elliptic_counts_match_formula_up_to_500():
    for n in squarefree_levels(500):
        inv = invariants(n)
        assert (inv.nu2, inv.nu3) == elliptic_counts_bruteforce(n), f"N={n}"


def test_multiplicativity():
    pairs = [(5, 7), (2, 15), (6, 35), (11, 13), (10, 21), (13, 30)]
    for m, n in pairs:
        assert math.gcd(m, n) == 1
        a, b, ab = invariants(m), invariants(n), invariants(m * n)
        assert ab.psi == a.psi * b.psi
        assert ab.nu2 == a.nu2 * b.nu2
        assert ab.nu3 == a.nu3 * b.nu3
