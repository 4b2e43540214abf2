"""Exact q-expansions of eta quotients, Hecke action on coefficients, and
Heegner divisor bookkeeping.

The eta quotient machinery is the package's only built-in cusp form
generator; it covers the discriminant form eta(z)^24 of level 1 and the
weight-2 level-11 generator eta(z)^2 eta(11z)^2.  Everything is integer
arithmetic on truncated power series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadHeckePrime,
    FractionalLeadingPower,
    LevelNotCoprimeTo6,
    PrecisionTooSmall,
)
from .gamma0 import invariants, squarefree_factorization

__all__ = [
    "QExpansion",
    "EtaQuotient",
    "eta_expand",
    "hecke_q",
    "HeegnerDivisor",
    "heegner_points",
    "CanonicalDecomposition",
    "canonical_decomposition",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class QExpansion:
    """Cuspidal q-expansion a_1 q + a_2 q^2 + ... + a_M q^M (a_0 = 0)."""

    weight: int
    level: int
    coeffs: tuple

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def a(self, n: int):
        if n < 1:
            raise IndexError("coefficients are indexed from 1")
        if n > len(self.coeffs):
            raise PrecisionTooSmall(f"a_{n} not available at precision {self.precision}")
        return self.coeffs[n - 1]

    def to_json_obj(self) -> dict:
        return {"weight": self.weight, "level": self.level, "an": list(self.coeffs)}


@dataclass(frozen=True)
class EtaQuotient:
    """A finite product prod_d eta(d z)^{r_d}, factors as (d, r) pairs."""

    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("eta quotient needs at least one factor")
        for d, r in self.factors:
            if d < 1 or r == 0:
                raise ValueError(f"bad eta factor (d={d}, r={r})")

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)

    @property
    def leading_power(self) -> Fraction:
        return Fraction(sum(d * r for d, r in self.factors), 24)

    @property
    def level_lcm(self) -> int:
        out = 1
        for d, _ in self.factors:
            out = out * d // math.gcd(out, d)
        return out

    def to_text(self) -> str:
        return "*".join(f"eta({d})^{r}" for d, r in self.factors)

    @staticmethod
    def from_text(text: str) -> "EtaQuotient":
        factors = []
        for tok in text.replace(" ", "").split("*"):
            if not (tok.startswith("eta(") and ")^" in tok):
                raise ValueError(f"cannot parse eta factor {tok!r}")
            d_str, r_str = tok[4:].split(")^")
            factors.append((int(d_str), int(r_str)))
        return EtaQuotient(factors=tuple(factors))


def _euler_factor_sparse(d: int, M: int) -> list:
    """Nonzero (exponent, sign) pairs of prod_{n>=1} (1 - q^{dn}) up to q^M."""
    out = [(0, 1)]
    k = 1
    while True:
        g1 = d * k * (3 * k - 1) // 2
        g2 = d * k * (3 * k + 1) // 2
        if g1 > M and g2 > M:
            break
        s = -1 if k % 2 else 1
        if g1 <= M:
            out.append((g1, s))
        if g2 <= M:
            out.append((g2, s))
        k += 1
    return out


def _mul_sparse(dense: list, sparse: list, M: int) -> list:
    out = [0] * (M + 1)
    for e, s in sparse:
        if s == 1:
            for i in range(M + 1 - e):
                out[i + e] += dense[i]
        else:
            for i in range(M + 1 - e):
                out[i + e] -= dense[i]
    return out


def _invert_series(a: list, M: int) -> list:
    # inverse of a unit power series with a[0] = 1; integer coefficients stay integer
    inv = [0] * (M + 1)
    inv[0] = 1
    for n in range(1, M + 1):
        acc = 0
        for k in range(1, n + 1):
            if a[k]:
                acc += a[k] * inv[n - k]
        inv[n] = -acc
    return inv


def eta_expand(q: EtaQuotient, M: int) -> QExpansion:
    """Exact integer coefficients a_1..a_M of the eta quotient.

    Rejects quotients whose leading power sum(d r_d)/24 is not a positive
    integer (FractionalLeadingPower) and quotients whose weight is not a
    positive even integer (ValueError): those are the only products this
    package accepts as cusp forms.
    """
    if M < 1:
        raise ValueError("precision M must be >= 1")
    t = q.leading_power
    if t.denominator != 1 or t <= 0:
        raise FractionalLeadingPower(f"leading q-power {t} is not a positive integer")
    w = q.weight
    if w.denominator != 1 or w <= 0 or w % 2 != 0:
        raise ValueError(f"weight {w} is not a positive even integer")
    t = int(t)
    prod = [0] * (M + 1)
    prod[0] = 1
    for d, r in q.factors:
        sparse = _euler_factor_sparse(d, M)
        if r > 0:
            for _ in range(r):
                prod = _mul_sparse(prod, sparse, M)
        else:
            dense = [0] * (M + 1)
            dense[0] = 1
            for _ in range(-r):
                dense = _mul_sparse(dense, sparse, M)
            inv = _invert_series(dense, M)
            prod = [
                sum(prod[i] * inv[n - i] for i in range(n + 1) if prod[i])
                for n in range(M + 1)
            ]
    coeffs = [prod[n - t] if n >= t else 0 for n in range(1, M + 1)]
    return QExpansion(weight=int(w), level=q.level_lcm, coeffs=tuple(coeffs))


def hecke_q(l: int, f: QExpansion) -> QExpansion:
    """Coefficient action of T_l: (T_l f)_n = a_{ln} + l^{k-1} a_{n/l}.

    Valid up to precision floor(M / l); requires l prime with l not
    dividing the level.
    """
    if not _is_prime(l) or f.level % l == 0:
        raise BadHeckePrime(f"l = {l} must be a prime not dividing the level {f.level}")
    mp = f.precision // l
    if mp < 1:
        raise PrecisionTooSmall(f"precision {f.precision} too small for T_{l}")
    lk = l ** (f.weight - 1)
    out = []
    for n in range(1, mp + 1):
        c = f.a(l * n)
        if n % l == 0:
            c += lk * f.a(n // l)
        out.append(c)
    return QExpansion(weight=f.weight, level=f.level, coeffs=tuple(out))


@dataclass(frozen=True)
class HeegnerDivisor:
    """The CM-point divisor block of one discriminant on X_0(N).

    ``roots`` lists the residues b mod 2N with b^2 = disc (mod 4N); each
    root contributes one point P and one block weight_per_point * ([P] -
    [infinity]) of degree zero.
    """

    level: int
    disc: int
    roots: tuple
    weight_per_point: Fraction

    @property
    def count(self) -> int:
        return len(self.roots)

    def degree(self) -> Fraction:
        return self.weight_per_point * self.count - self.weight_per_point * self.count

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "disc": self.disc,
            "roots": list(self.roots),
            "weight_per_point": str(self.weight_per_point),
            "count": self.count,
        }


def heegner_points(N: int, disc: int) -> HeegnerDivisor:
    """Enumerate b in [0, 2N) with b^2 = disc (mod 4N) by exhaustive search.

    Only discriminants -3 and -4 are accepted (class number one, the two
    CM orbits over j = 0 and j = 1728); the level must be squarefree and
    coprime to 6.
    """
    squarefree_factorization(N)
    if math.gcd(N, 6) != 1:
        raise LevelNotCoprimeTo6(f"gcd({N}, 6) != 1")
    if disc not in (-3, -4):
        raise ValueError(f"disc must be -3 or -4, got {disc}")
    roots = tuple(b for b in range(2 * N) if (b * b - disc) % (4 * N) == 0)
    return HeegnerDivisor(
        level=N,
        disc=disc,
        roots=roots,
        weight_per_point=Fraction(1, 2) if disc == -4 else Fraction(1, 3),
    )


@dataclass(frozen=True)
class CanonicalDecomposition:
    """The canonical divisor as (2g-2)[infinity] - H_i - 2 H_j."""

    N: int
    mult_infty: int
    h_i: HeegnerDivisor
    h_j: HeegnerDivisor

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "mult_infty": self.mult_infty,
            "h_i": self.h_i.to_json_obj(),
            "h_j": self.h_j.to_json_obj(),
        }


def canonical_decomposition(N: int) -> CanonicalDecomposition:
    """Multiplicity 2g-2 at infinity plus the two Heegner blocks."""
    inv = invariants(N)
    return CanonicalDecomposition(
        N=N,
        mult_infty=2 * inv.genus - 2,
        h_i=heegner_points(N, -4),
        h_j=heegner_points(N, -3),
    )
