"""L-values, the Lambda-symmetry arbiter, Petersson norm, omega_f^2."""

import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import exp1

from eischow.errors import (
    InsufficientCoefficients,
    InvariantViolation,
    ParseError,
    WrongSign,
)
from eischow.lseries import (
    EigenformData,
    chi,
    completed_lambda,
    ingest,
    l_derivative,
    l_value,
    lambda_symmetry_residual,
    omega_f_sq,
    petersson,
)


# -- ingestion ---------------------------------------------------------------


def test_ingest_accepts_eta_generated_data(tmp_path, f11):
    path = tmp_path / "f11.jsonl"
    record = {
        "label": "11a",
        "level": 11,
        "weight": 2,
        "al_sign": -1,
        "an": list(f11.an[:100]),
    }
    path.write_text(json.dumps(record) + "\n")
    g = ingest(path)
    assert g.source == "ingested"
    assert g.an == f11.an[:100]
    assert f11.source == "eta-generated"


def test_ingest_rejects_unnormalized(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text(json.dumps({"label": "x", "level": 37, "weight": 2,
                                "al_sign": 1, "an": [2, 1, 1]}) + "\n")
    with pytest.raises(InvariantViolation) as exc:
        ingest(path)
    assert exc.value.index == 1


def test_ingest_rejects_nonmultiplicative(tmp_path, f37):
    an = list(f37.an[:30])
    an[5] = an[1] * an[2] + 1  # break a_6 = a_2 a_3
    path = tmp_path / "bad6.jsonl"
    path.write_text(json.dumps({"label": "x", "level": 37, "weight": 2,
                                "al_sign": 1, "an": an}) + "\n")
    with pytest.raises(InvariantViolation) as exc:
        ingest(path)
    assert exc.value.index == 6


def test_ingest_schema_errors(tmp_path):
    path = tmp_path / "broken.jsonl"
    path.write_text("{not json\n")
    with pytest.raises(ParseError):
        ingest(path)
    path.write_text(json.dumps({"label": "x", "level": 37, "weight": 2}) + "\n")
    with pytest.raises(ParseError):
        ingest(path)
    path.write_text(json.dumps({"label": "x", "level": 36, "weight": 2,
                                "al_sign": 1, "an": [1]}) + "\n")
    with pytest.raises(ParseError):
        ingest(path)


def test_ingest_label_selection(tmp_path, f37):
    rec1 = {"label": "a", "level": 37, "weight": 2, "al_sign": 1, "an": list(f37.an[:50])}
    rec2 = {"label": "b", "level": 37, "weight": 2, "al_sign": -1, "an": list(f37.an[:50])}
    path = tmp_path / "two.jsonl"
    path.write_text(json.dumps(rec1) + "\n" + json.dumps(rec2) + "\n")
    assert ingest(path).label == "a"
    assert ingest(path, label="b").al_sign == -1
    with pytest.raises(ParseError):
        ingest(path, label="c")


# -- the character ------------------------------------------------------------


def test_chi_examples():
    assert chi(-4, 5) == 1
    assert chi(-4, 2) == 0
    assert chi(-3, 5) == -1
    # oracle: squares mod 3 are {0, 1}, so -3 is a non-residue pattern at 5
    assert all((x * x) % 3 in (0, 1) for x in range(3))
    assert chi(-4, -1) == -1 and chi(-3, -1) == -1  # both characters are odd


@given(
    disc=st.sampled_from([-3, -4]),
    m=st.integers(min_value=-200, max_value=200),
    n=st.integers(min_value=-200, max_value=200),
)
@settings(max_examples=200, deadline=None)
def test_chi_completely_multiplicative(disc, m, n):
    assert chi(disc, m * n) == chi(disc, m) * chi(disc, n)


# -- L-values ------------------------------------------------------------------


def test_l_value_vanishes_at_odd_sign(f37):
    assert l_value(f37) == 0.0


def test_l_value_f11_doubling_stability(f11):
    # sign is +1 for al_sign = -1; compare explicit truncations
    c = 2.0 * math.pi / math.sqrt(11)

    def partial(m):
        return 2.0 * math.fsum(f11.an[n - 1] / n * math.exp(-c * n) for n in range(1, m + 1))

    v = l_value(f11)
    assert abs(partial(80) - partial(160)) < 1e-8
    assert abs(v - partial(160)) < 1e-8
    assert v > 0.2  # rank zero: central value visibly nonzero


def test_l_value_twist_defined_with_empty_heegner(f11):
    # X_0(11) has no discriminant -4 Heegner points, the L-value exists anyway
    assert l_value(f11, twist=-4) != 0.0


def test_l_value_insufficient_coefficients(f11):
    short = f11.truncated(5)
    with pytest.raises(InsufficientCoefficients) as exc:
        l_value(short, twist=-4)
    assert exc.value.required > 5


def test_l_derivative_value_and_stability(f37):
    c = 2.0 * math.pi / math.sqrt(37)

    def partial(m):
        n = np.arange(1, m + 1)
        an = np.array(f37.an[:m], dtype=float)
        return float(2.0 * np.sum(an / n * exp1(c * n)))

    v = l_derivative(f37)
    assert abs(partial(100) - partial(200)) < 1e-8
    assert abs(v - partial(200)) < 1e-8
    assert l_derivative(f37) == v  # deterministic


def test_l_derivative_wrong_sign(f11):
    with pytest.raises(WrongSign):
        l_derivative(f11)


# -- completed function and the sign arbiter -----------------------------------


def test_lambda_symmetry(f37, f11):
    for f in (f37, f11):
        for t in (0.05, 0.1):
            assert lambda_symmetry_residual(f, t) < 1e-8


def test_lambda_symmetry_detects_wrong_sign(f37):
    flipped = EigenformData(
        label=f37.label, level=f37.level, weight=2,
        al_sign=-f37.al_sign, an=f37.an, source=f37.source,
    )
    assert lambda_symmetry_residual(flipped, 0.1) > 1e-5


def test_lambda_split_independence(f37):
    # the value of Lambda(s) must not depend on the split point
    a = completed_lambda(f37, 1.1, split=1.0)
    b = completed_lambda(f37, 1.1, split=1.4)
    assert abs(a - b) < 1e-10


# -- Petersson norm --------------------------------------------------------------


def test_petersson_zero_form():
    zero = EigenformData(label="0", level=37, weight=2, al_sign=1,
                         an=(0,) * 50, source="ingested")
    assert petersson(zero) == 0.0


def test_petersson_positive_and_converged(f37):
    # doubling the quadrature order from the default moves the value < 1e-6
    fine = petersson(f37, quad_order=48)
    finer = petersson(f37, quad_order=96)
    assert fine > 0.0
    assert abs(finer - fine) < 1e-6 * finer


def test_petersson_rejects_hopeless_order(f37):
    from eischow.errors import QuadratureNotConverged

    with pytest.raises(QuadratureNotConverged):
        petersson(f37, quad_order=8, rtol=1e-6)


# -- omega_f^2 --------------------------------------------------------------------


def test_omega_f_sq_level_37(f37):
    res = omega_f_sq(f37)
    assert res.omega_f_sq < 0.0
    assert math.isfinite(res.omega_f_sq)
    assert res.h_i >= 0.0 and res.h_j >= 0.0
    # invariant: minus a square
    assert res.omega_f_sq == -((math.sqrt(res.h_i) + 2 * math.sqrt(res.h_j)) ** 2)


def test_omega_f_sq_wrong_sign(f11):
    with pytest.raises(WrongSign):
        omega_f_sq(f11)


def test_omega_f_sq_height_combination():
    from eischow.errors import NegativeHeightBeyondTolerance
    from eischow.lseries import _combine_heights

    assert _combine_heights(0.0, 0.0, 1e-9) == 0.0
    assert _combine_heights(-1e-12, 4.0, 1e-9) == -16.0
    with pytest.raises(NegativeHeightBeyondTolerance):
        _combine_heights(-1e-3, 0.0, 1e-9)


# -- aggregated values and tail bounds ---------------------------------------


def test_l_values_aggregate(f37):
    from eischow.lseries import l_values

    vals = l_values(f37)
    assert vals.l1 == 0.0
    assert vals.l1prime == l_derivative(f37)
    assert vals.err_bound > 0.0
    assert all(
        math.isfinite(v)
        for v in (vals.l1, vals.l1prime, vals.l_chi_m4, vals.l_chi_m3, vals.petersson)
    )
    with pytest.raises(WrongSign):
        l_values(EigenformData(label="x", level=37, weight=2, al_sign=-1,
                               an=f37.an, source="ingested"))


def test_tail_bounds_monotone_and_honest(f37):
    from eischow.lseries import central_series_tail

    bounds = [central_series_tail(37 * 16, m) for m in (20, 40, 80, 160)]
    assert all(b1 > b2 for b1, b2 in zip(bounds, bounds[1:]))
    # successive truncations differ by less than the larger bound
    c = 2.0 * math.pi / math.sqrt(37 * 16)

    def partial(m):
        return 2.0 * math.fsum(
            f37.an[n - 1] * chi(-4, n) / n * math.exp(-c * n) for n in range(1, m + 1)
        )

    for m in (20, 40, 80):
        assert abs(partial(m) - partial(2 * m)) < central_series_tail(37 * 16, m)
