"""Shared fixtures: the internal level-11 form and a generated level-37
rank-one dataset.

The level-37 coefficients are produced by counting points on the rank-one
optimal quotient of J_0(37), the curve y^2 + y = x^3 - x of conductor 37,
and extending multiplicatively.  The generator is the test suite's oracle
for an "ingested" dataset: the package itself never fabricates eigenforms,
and the ingest path re-validates every structural invariant (a_1 = 1,
multiplicativity, Hecke recursion) before the data is used.  A handful of
point-counted a_p are additionally frozen here as literals so that a bug in
the generator cannot silently propagate.
"""

import json

import pytest

from eischow import EtaQuotient, eta_expand
from eischow.lseries import EigenformData, from_qexpansion, ingest

COEFF_COUNT = 2400

# frozen by the point-count oracle below (and the Hecke recursion)
FROZEN_37A_AP = {2: -2, 3: -3, 5: -2, 7: -1, 11: -5, 13: -2, 17: 0, 19: 0, 23: 2, 29: 6}


def _primes_upto(m):
    sieve = [True] * (m + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(m ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, flag in enumerate(sieve) if flag]


def _ap_37a(p):
    """a_p of the conductor-37 curve y^2 + y = x^3 - x by point counting."""
    if p == 37:
        # multiplicative reduction; count smooth points directly
        cnt = 0
        for x in range(p):
            rhs = (x * x * x - x) % p
            for y in range(p):
                if (y * y + y - rhs) % p == 0:
                    if (2 * y + 1) % p == 0 and (3 * x * x - 1) % p == 0:
                        continue  # the node
                    cnt += 1
        return p - (cnt + 1)
    if p == 2:
        cnt = sum(
            1 for x in range(2) for y in range(2) if (y * y + y - x * x * x + x) % 2 == 0
        )
        return p + 1 - (cnt + 1)
    cnt = 0
    for x in range(p):
        d = (1 + 4 * (x * x * x - x)) % p
        sym = pow(d, (p - 1) // 2, p) if d else 0
        cnt += 1 + (1 if sym == 1 else (-1 if sym == p - 1 else 0))
    return p + 1 - (cnt + 1)


def make_37a_an(count=COEFF_COUNT):
    a = [0] * (count + 1)
    a[1] = 1
    primes = _primes_upto(count)
    ap = {p: _ap_37a(p) for p in primes}
    for p, expected in FROZEN_37A_AP.items():
        assert ap[p] == expected, f"point count disagrees with frozen a_{p}"
    for n in range(2, count + 1):
        p = next(q for q in primes if n % q == 0)
        m = n // p
        if m % p:
            a[n] = ap[p] * a[m]
        elif p == 37:
            a[n] = ap[p] * a[m]
        else:
            a[n] = ap[p] * a[m] - p * a[m // p]
    return a[1:]


@pytest.fixture(scope="session")
def eigenform_37_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "eigenform_37a.jsonl"
    record = {
        "label": "37a",
        "level": 37,
        "weight": 2,
        "al_sign": 1,
        "an": make_37a_an(),
    }
    path.write_text(json.dumps(record) + "\n")
    return path


@pytest.fixture(scope="session")
def f37(eigenform_37_path) -> EigenformData:
    return ingest(eigenform_37_path)


@pytest.fixture(scope="session")
def f11() -> EigenformData:
    q = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 400)
    return from_qexpansion(q, label="11a", al_sign=-1)
