"""Eta quotients against a naive product oracle; Hecke action; Heegner counts."""

import math
from fractions import Fraction

import pytest

from eischow.errors import (
    BadHeckePrime,
    FractionalLeadingPower,
    LevelNotCoprimeTo6,
    NonSquarefree,
    PrecisionTooSmall,
)
from eischow.gamma0 import invariants
from eischow.qexp import (
    EtaQuotient,
    QExpansion,
    canonical_decomposition,
    eta_expand,
    hecke_q,
    heegner_points,
)


def eta_product_oracle(factors, M):
    """Naive truncated expansion of prod_d (q^{d/24} prod_n (1 - q^{dn}))^{r_d}.

    Multiplies out every binomial factor one by one; independent of the
    pentagonal-number fast path.  Positive exponents only.
    """
    shift = sum(d * r for d, r in factors)
    assert shift % 24 == 0
    shift //= 24
    poly = [0] * (M + 1)
    poly[0] = 1
    for d, r in factors:
        assert r > 0
        for _ in range(r):
            for n in range(1, M // d + 1):
                # multiply by (1 - q^{dn})
                new = poly[:]
                for i in range(M + 1 - d * n):
                    new[i + d * n] -= poly[i]
                poly = new
    return [poly[n - shift] if n >= shift else 0 for n in range(1, M + 1)]


def test_delta_expansion_against_oracle():
    delta = eta_expand(EtaQuotient(factors=((1, 24),)), 30)
    assert list(delta.coeffs) == eta_product_oracle([(1, 24)], 30)
    assert delta.coeffs[:7] == (1, -24, 252, -1472, 4830, -6048, -16744)
    assert delta.weight == 12 and delta.level == 1


def test_level11_expansion_against_oracle():
    f = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 40)
    assert list(f.coeffs) == eta_product_oracle([(1, 2), (11, 2)], 40)
    assert f.coeffs[:10] == (1, -2, -1, 2, 1, 2, -2, 0, -2, -2)
    assert f.weight == 2 and f.level == 11


def test_negative_exponent_quotient():
    # eta(1)^48 / eta(1)^24 must reproduce Delta
    delta = eta_expand(EtaQuotient(factors=((1, 24),)), 20)
    quot = eta_expand(EtaQuotient(factors=((1, 48), (1, -24))), 20)
    assert quot.coeffs == delta.coeffs


def test_eta_rejections():
    with pytest.raises(FractionalLeadingPower):
        eta_expand(EtaQuotient(factors=((1, 26),)), 10)  # 26/24 fractional
    with pytest.raises(ValueError):
        eta_expand(EtaQuotient(factors=((1, 1), (23, 1))), 10)  # odd weight 1
    with pytest.raises(FractionalLeadingPower):
        eta_expand(EtaQuotient(factors=((1, 24), (1, -48))), 10)  # negative power


def test_eta_text_roundtrip():
    q = EtaQuotient(factors=((1, 2), (11, 2)))
    assert q.to_text() == "eta(1)^2*eta(11)^2"
    assert EtaQuotient.from_text(q.to_text()) == q


def test_hecke_q_delta_eigenvalue():
    delta = eta_expand(EtaQuotient(factors=((1, 24),)), 40)
    t2 = hecke_q(2, delta)
    assert t2.coeffs == tuple(-24 * c for c in delta.coeffs[: t2.precision])


def test_hecke_q_level11_eigenvalue():
    f = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 40)
    t2 = hecke_q(2, f)
    assert t2.coeffs == tuple(-2 * c for c in f.coeffs[: t2.precision])


def test_hecke_q_first_coefficient_is_al():
    f = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 60)
    for l in (2, 3, 5, 7, 13):
        assert hecke_q(l, f).a(1) == f.a(l)


def test_hecke_q_errors():
    f = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 12)
    with pytest.raises(BadHeckePrime):
        hecke_q(11, f)
    with pytest.raises(BadHeckePrime):
        hecke_q(6, f)
    with pytest.raises(PrecisionTooSmall):
        hecke_q(13, f)


def test_tau_multiplicativity_small():
    delta = eta_expand(EtaQuotient(factors=((1, 24),)), 120)
    for m in range(2, 11):
        for n in range(2, 121 // m):
            if math.gcd(m, n) == 1:
                assert delta.a(m * n) == delta.a(m) * delta.a(n)


def test_heegner_examples():
    assert heegner_points(11, -4).roots == ()
    assert heegner_points(37, -4).roots == (12, 62)
    assert (12 * 12 + 4) % 148 == 0
    h3 = heegner_points(37, -3)
    assert h3.count == 2 == invariants(37).nu3
    assert h3.weight_per_point == Fraction(1, 3)
    assert heegner_points(37, -4).weight_per_point == Fraction(1, 2)


def test_heegner_errors():
    with pytest.raises(LevelNotCoprimeTo6):
        heegner_points(35 * 2, -4)
    with pytest.raises(LevelNotCoprimeTo6):
        heegner_points(15, -3)
    with pytest.raises(NonSquarefree):
        heegner_points(49, -4)
    with pytest.raises(ValueError):
        heegner_points(37, -7)


def test_canonical_decomposition_37():
    cd = canonical_decomposition(37)
    assert cd.mult_infty == 2
    assert cd.h_i.count == 2
    assert cd.h_j.count == 2
    assert cd.h_i.degree() == 0
    assert cd.h_j.degree() == 0


def test_canonical_decomposition_empty_case():
    # search oracle: smallest squarefree N coprime to 6 with nu2 = nu3 = 0
    found = next(
        n
        for n in range(2, 200)
        if math.gcd(n, 6) == 1
        and all(n % (p * p) for p in range(2, int(n ** 0.5) + 1))
        and invariants(n).nu2 == 0
        and invariants(n).nu3 == 0
    )
    assert found == 11
    for n in (11, 35):
        cd = canonical_decomposition(n)
        assert cd.h_i.count == 0 and cd.h_j.count == 0


def test_qexpansion_json():
    f = eta_expand(EtaQuotient(factors=((1, 2), (11, 2))), 5)
    assert f.to_json_obj() == {"weight": 2, "level": 11, "an": [1, -2, -1, 2, 1]}
    assert isinstance(f, QExpansion)
