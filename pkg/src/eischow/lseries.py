"""Special values of weight-2 L-series, the Petersson norm, and the
isotypical self-intersection invariant omega_f^2.

For a normalized newform f of prime level N coprime to 6 whose completed
L-function has sign -1, the invariant is

    omega_f^2 = -( sqrt(h_i) + 2 sqrt(h_j) )^2,

    h_i = L(f, chi_-4, 1) L'(f, 1) / (2 pi^2 (f,f)),
    h_j = sqrt(3) L(f, chi_-3, 1) L'(f, 1) / (4 pi^2 (f,f)),

with (f,f) the Petersson norm in the unnormalized convention
integral_{Gamma_0(N)\\H} |f(z)|^2 dx dy (no division by the hyperbolic
volume).  The functional-equation sign is taken to be -al_sign; if that
convention ever disagreed with a dataset, the Lambda-symmetry residual
check fails loudly, so the convention is verified at runtime rather than
trusted.

Numerical methods are standard: exponentially convergent series with
incomplete-gamma/exponential-integral kernels for the L-values, and
Gauss-Legendre quadrature over coset translates of the level-one
fundamental domain for the Petersson integral (prime level, using the
Fricke involution to fold the slash translates back to q-expansions).
Tail bounds use |a_n| <= d(n) sqrt(n) <= 2n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1, gammaincc
from scipy.special import gamma as _gamma_fn

from .errors import (
    InsufficientCoefficients,
    InvariantViolation,
    LevelNotCoprimeTo6,
    NegativeHeightBeyondTolerance,
    ParseError,
    QuadratureNotConverged,
    WrongSign,
)
from .qexp import QExpansion, _is_prime

__all__ = [
    "EigenformData",
    "ingest",
    "from_qexpansion",
    "chi",
    "l_value",
    "l_derivative",
    "completed_lambda",
    "lambda_symmetry_residual",
    "petersson",
    "OmegaFResult",
    "omega_f_sq",
]


@dataclass(frozen=True)
class EigenformData:
    """A normalized weight-2 newform given by its Hecke eigenvalues.

    ``al_sign`` is the eigenvalue of the Fricke involution w_N on f; the
    sign of the completed functional equation is -al_sign.
    """

    label: str
    level: int
    weight: int
    al_sign: int
    an: tuple
    source: str

    @property
    def precision(self) -> int:
        return len(self.an)

    def a(self, n: int) -> int:
        return self.an[n - 1]

    def truncated(self, m: int) -> "EigenformData":
        """The same form carrying only a_1..a_m (for stability probes)."""
        if not 1 <= m <= len(self.an):
            raise ValueError(f"cannot truncate to {m} of {len(self.an)} coefficients")
        return EigenformData(
            label=self.label,
            level=self.level,
            weight=self.weight,
            al_sign=self.al_sign,
            an=self.an[:m],
            source=self.source,
        )


def _validate(label, level, weight, al_sign, an):
    if weight != 2:
        raise ParseError(f"only weight 2 is supported, got {weight}")
    if not _is_prime(level):
        raise ParseError(f"level {level} is not prime")
    if math.gcd(level, 6) != 1:
        raise LevelNotCoprimeTo6(f"gcd({level}, 6) != 1")
    if al_sign not in (1, -1):
        raise ParseError(f"al_sign must be +1 or -1, got {al_sign}")
    if not an or an[0] != 1:
        raise InvariantViolation("a_1 must be 1 (normalized newform)", index=1)
    m = len(an)

    def a(n):
        return an[n - 1]

    # full multiplicativity check within precision
    for p in range(2, m + 1):
        if not _is_prime(p):
            continue
        for n in range(2, m // p + 1):
            if n % p == 0:
                continue
            if a(p * n) != a(p) * a(n):
                raise InvariantViolation(
                    f"multiplicativity fails at n = {p * n}", index=p * n
                )
    # Hecke recursion at prime powers
    for p in range(2, m + 1):
        if not _is_prime(p):
            continue
        k = 2
        while p ** k <= m:
            n = p ** k
            if p == level:
                expected = a(p) * a(n // p)
            else:
                expected = a(p) * a(n // p) - p * a(n // p // p)
            if a(n) != expected:
                raise InvariantViolation(f"Hecke recursion fails at n = {n}", index=n)
            k += 1


def ingest(path, label: str | None = None) -> EigenformData:
    """Read one eigenform from a JSON-lines file.

    Each line is an object {"label", "level", "weight", "al_sign", "an"}
    with integer entries and "an" listed a_1-first.  With ``label`` given,
    the matching line is selected; otherwise the first line wins.  Raises
    ParseError for schema problems and InvariantViolation (with the failing
    index) for coefficient data that is not a normalized Hecke eigenform.
    """
    records = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: invalid JSON ({exc})") from exc
            records.append((lineno, obj))
    if not records:
        raise ParseError(f"{path}: no eigenform records found")
    chosen = None
    for lineno, obj in records:
        if label is None or obj.get("label") == label:
            chosen = (lineno, obj)
            break
    if chosen is None:
        raise ParseError(f"{path}: no record with label {label!r}")
    lineno, obj = chosen
    for key in ("label", "level", "weight", "al_sign", "an"):
        if key not in obj:
            raise ParseError(f"line {lineno}: missing field {key!r}")
    an = obj["an"]
    if not isinstance(an, list) or not all(isinstance(x, int) for x in an):
        raise ParseError(f"line {lineno}: 'an' must be a list of integers")
    _validate(obj["label"], obj["level"], obj["weight"], obj["al_sign"], an)
    return EigenformData(
        label=str(obj["label"]),
        level=int(obj["level"]),
        weight=int(obj["weight"]),
        al_sign=int(obj["al_sign"]),
        an=tuple(an),
        source="ingested",
    )


def from_qexpansion(f: QExpansion, label: str, al_sign: int) -> EigenformData:
    """Wrap an exact q-expansion (e.g. an eta product) as eigenform data."""
    an = tuple(int(c) for c in f.coeffs)
    _validate(label, f.level, f.weight, al_sign, an)
    return EigenformData(
        label=label,
        level=f.level,
        weight=f.weight,
        al_sign=al_sign,
        an=an,
        source="eta-generated",
    )


_CHI_M4 = {0: 0, 1: 1, 2: 0, 3: -1}
_CHI_M3 = {0: 0, 1: 1, 2: -1}


def chi(disc: int, n: int) -> int:
    """The quadratic character of conductor |disc| for disc in {-3, -4}.

    This is the Kronecker symbol (disc/n): period 4 with values 1, -1 at
    1, 3 mod 4 for disc = -4; period 3 with values 1, -1 at 1, 2 mod 3 for
    disc = -3.  Defined on all integers; both characters are odd.
    """
    if disc == -4:
        return _CHI_M4[n % 4]
    if disc == -3:
        return _CHI_M3[n % 3]
    raise ValueError(f"disc must be -3 or -4, got {disc}")


def _fe_sign(f: EigenformData) -> int:
    # sign of Lambda(s) = sign * Lambda(2-s); standard w_N relation at weight 2
    return -f.al_sign


def _twist_data(f: EigenformData, twist):
    """(conductor, sign, character) of f or of its quadratic twist."""
    if twist is None:
        return f.level, _fe_sign(f), lambda n: 1
    if twist not in (-3, -4):
        raise ValueError(f"twist must be None, -3 or -4, got {twist}")
    cond = f.level * twist * twist
    sign = chi(twist, -f.level) * _fe_sign(f)
    return cond, sign, lambda n: chi(twist, n)


def _required_terms(c: float, tol: float) -> int:
    # smallest M with 4 e^{-c(M+1)} / (1 - e^{-c}) <= tol
    return max(1, math.ceil(math.log(4.0 / (tol * (1.0 - math.exp(-c)))) / c))


def central_series_tail(conductor: int, m: int) -> float:
    """Certified bound for the central-value series tail past m terms.

    From |a_n| <= d(n) sqrt(n) <= 2n: the terms 2 a_n/n e^{-cn} with
    c = 2 pi / sqrt(conductor) are bounded by 4 e^{-cn}, so the tail is at
    most 4 e^{-c(m+1)} / (1 - e^{-c}).  Strictly decreasing in m.
    """
    c = 2.0 * math.pi / math.sqrt(conductor)
    return 4.0 * math.exp(-c * (m + 1)) / (1.0 - math.exp(-c))


def l_value(f: EigenformData, twist=None, tol: float = 1e-12) -> float:
    """L(f, 1) or the twisted L(f, chi_disc, 1) with certified series tail.

    Uses the exponentially convergent central-value series: with c = 2 pi /
    sqrt(conductor) and eps the (twisted) functional-equation sign,

        L = (1 + eps) sum_n (a_n chi(n) / n) e^{-c n}.

    For eps = -1 the value is exactly 0.  Raises InsufficientCoefficients
    (carrying the required count) when the stored a_n cannot push the tail
    bound below tol.
    """
    cond, sign, character = _twist_data(f, twist)
    if sign == -1:
        return 0.0
    c = 2.0 * math.pi / math.sqrt(cond)
    need = _required_terms(c, tol)
    if need > f.precision:
        raise InsufficientCoefficients(
            f"need {need} coefficients for tolerance {tol:g}, have {f.precision}",
            required=need,
        )
    total = math.fsum(
        2.0 * f.an[n - 1] * character(n) / n * math.exp(-c * n)
        for n in range(1, need + 1)
    )
    return total


def l_derivative(f: EigenformData, tol: float = 1e-12) -> float:
    """L'(f, 1) for forms with functional-equation sign -1.

    L'(f, 1) = 2 sum_n (a_n / n) E_1(2 pi n / sqrt(N)), E_1 the exponential
    integral.  Raises WrongSign when the sign is +1 (the series computes
    the derivative only at odd sign, where L(f,1) = 0).
    """
    if _fe_sign(f) != -1:
        raise WrongSign("L'(f,1) series requires functional-equation sign -1")
    c = 2.0 * math.pi / math.sqrt(f.level)
    # E_1(cn) <= e^{-cn}/(cn), so the same geometric bound applies with a 1/c(M+1) factor
    need = _required_terms(c, tol)
    if need > f.precision:
        raise InsufficientCoefficients(
            f"need {need} coefficients for tolerance {tol:g}, have {f.precision}",
            required=need,
        )
    n = np.arange(1, need + 1)
    an = np.array(f.an[:need], dtype=float)
    return float(2.0 * np.sum(an / n * exp1(c * n)))


def completed_lambda(f: EigenformData, s: float, split: float = 1.0) -> float:
    """The completed function Lambda(s) = N^{s/2} (2 pi)^{-s} Gamma(s) L(f, s).

    Computed by cutting the Mellin integral at height y0 = split / sqrt(N)
    and reflecting the lower part through the Fricke involution:

        Lambda(s) = sum_n a_n [ N^{s/2} (2 pi n)^{-s} Gamma(s, 2 pi n y0)
                   + eps N^{(2-s)/2} (2 pi n)^{s-2} Gamma(2-s, 2 pi n/(N y0)) ].

    At split = 1 the two kernels coincide and the formula is symmetric by
    construction; an asymmetric split (e.g. 1.3) makes the identity
    Lambda(s) = eps Lambda(2-s) a genuine test of the coefficient data and
    of the sign convention, which is how ``lambda_symmetry_residual`` uses
    it.
    """
    N = f.level
    eps = _fe_sign(f)
    y0 = split / math.sqrt(N)
    two_pi = 2.0 * math.pi
    # keep terms until both exponential kernels are below 1e-18
    c1, c2 = two_pi * y0, two_pi / (N * y0)
    need = min(f.precision, int(45.0 / min(c1, c2)) + 2)
    n = np.arange(1, need + 1, dtype=float)
    an = np.array(f.an[:need], dtype=float)
    x1 = c1 * n
    x2 = c2 * n
    t1 = N ** (s / 2.0) * (two_pi * n) ** (-s) * gammaincc(s, x1) * _gamma_fn(s)
    t2 = (
        eps
        * N ** ((2.0 - s) / 2.0)
        * (two_pi * n) ** (s - 2.0)
        * gammaincc(2.0 - s, x2)
        * _gamma_fn(2.0 - s)
    )
    return float(np.sum(an * (t1 + t2)))


def lambda_symmetry_residual(f: EigenformData, t: float, split: float = 1.3) -> float:
    """|Lambda(1+t) - eps Lambda(1-t)| at an asymmetric split point.

    Vanishes (to quadrature accuracy) exactly when the stored coefficients
    satisfy the weight-2 functional equation with sign -al_sign; a wrong
    sign or corrupted coefficients produce an O(Lambda) residual.
    """
    eps = _fe_sign(f)
    return abs(completed_lambda(f, 1.0 + t, split) - eps * completed_lambda(f, 1.0 - t, split))


# -- Petersson norm ---------------------------------------------------------


def _gauss(n: int, lo: float, hi: float):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (hi - lo) * x + 0.5 * (hi + lo), 0.5 * (hi - lo) * w


def _coefficient_cutoff(an, y_min: float, rel: float = 1e-16) -> int:
    # smallest M with sum_{n>M} 2n e^{-2 pi n y_min} below rel * leading term
    c = 2.0 * math.pi * y_min
    m = 1
    while 2.0 * (m + 1) * math.exp(-c * (m + 1)) / (1.0 - math.exp(-c)) > rel * math.exp(-c):
        m += 1
        if m >= len(an):
            return len(an)
    return m


def _f_values(an: np.ndarray, z: np.ndarray) -> np.ndarray:
    q = np.exp(2j * np.pi * z)
    out = np.zeros_like(q)
    for a in an[::-1]:
        out = out * q + a
    return out * q


def _petersson_once(f: EigenformData, quad_order: int, y_main: float, y_factor: float) -> float:
    N = f.level
    # coset translates ST^j fold back to f((z+j)/N)/N via the Fricke involution,
    # so all evaluations use the q-expansion at Im >= sqrt(3)/(2N)
    cutoff = _coefficient_cutoff(f.an, math.sqrt(3.0) / (2.0 * N))
    an = np.array(f.an[:cutoff], dtype=float)
    xs, wx = _gauss(quad_order, -0.5, 0.5)
    total = 0.0
    y_top = y_factor * N
    for x, w in zip(xs, wx):
        y_min = math.sqrt(1.0 - x * x)
        ys, wy = _gauss(quad_order, y_min, y_main)
        total += w * float(np.sum(wy * np.abs(_f_values(an, x + 1j * ys)) ** 2))
        ys2, wy2 = _gauss(2 * quad_order, y_min, y_top)
        z = (x + 1j * ys2)[:, None]
        j = np.arange(N)[None, :]
        vals = np.abs(_f_values(an, (z + j) / N)) ** 2
        total += w * float(np.sum(wy2 * np.sum(vals, axis=1))) / N ** 2
    return total


def petersson(f: EigenformData, quad_order: int = 48, y_main: float = 8.0,
              y_factor: float = 3.0, rtol: float = 1e-5) -> float:
    """Petersson norm (f,f) = integral over a fundamental domain of |f|^2 dx dy.

    Unnormalized (Gross-Zagier) convention; weight 2 makes the hyperbolic
    weight y^2 cancel the measure.  The domain is the union of the level-one
    domain and its ST^j translates (prime level), truncated at Im z = y_main
    and y_factor * N respectively; both truncation tails are exponentially
    certified and far below rtol at the defaults.  Raises
    QuadratureNotConverged when the half-order companion rule moves the
    result by more than rtol relative (that difference is a conservative
    error estimate for the returned full-order value).
    """
    if all(a == 0 for a in f.an):
        return 0.0
    if not _is_prime(f.level):
        raise ValueError("the coset construction is implemented for prime level only")
    coarse = _petersson_once(f, quad_order // 2, y_main, y_factor)
    fine = _petersson_once(f, quad_order, y_main, y_factor)
    if abs(fine - coarse) > rtol * max(abs(fine), 1e-300):
        raise QuadratureNotConverged(
            f"Petersson quadrature moved by {abs(fine - coarse):.3e} at order {quad_order}"
        )
    # certified truncation tails: |f(x+iy)| <= A(y) = sum 2n e^{-2 pi n y}
    def _amp(y):
        e = math.exp(-2.0 * math.pi * y)
        return 2.0 * e / (1.0 - e) ** 2

    tail = _amp(y_main) ** 2 / (4.0 * math.pi) + _amp(y_factor) ** 2 / (4.0 * math.pi)
    if tail > rtol * abs(fine):
        raise QuadratureNotConverged(f"truncation tail {tail:.3e} too large")
    return fine


@dataclass(frozen=True)
class LValues:
    """All special values of one form, with the reported error bound.

    ``err_bound`` dominates the certified series tails of every L-value at
    the coefficient count actually used, plus the Petersson quadrature
    estimate; successive coefficient truncations move each value by less
    than the larger of their bounds.
    """

    l1: float
    l1prime: float
    l_chi_m4: float
    l_chi_m3: float
    petersson: float
    err_bound: float


def l_values(f: EigenformData, quad_order: int = 48, series_tol: float = 1e-12) -> LValues:
    """Evaluate every special value the invariant pipeline consumes.

    Defined for functional-equation sign -1 (the derivative evaluator's
    domain); WrongSign otherwise.
    """
    l1prime = l_derivative(f, tol=series_tol)
    pet_coarse = _petersson_once(f, quad_order // 2, 8.0, 3.0)
    pet = petersson(f, quad_order=quad_order)
    m = f.precision
    bound = max(
        central_series_tail(f.level, m),
        central_series_tail(f.level * 16, m),
        central_series_tail(f.level * 9, m),
        abs(pet - pet_coarse),
        series_tol,
    )
    return LValues(
        l1=l_value(f, tol=series_tol),
        l1prime=l1prime,
        l_chi_m4=l_value(f, twist=-4, tol=series_tol),
        l_chi_m3=l_value(f, twist=-3, tol=series_tol),
        petersson=pet,
        err_bound=bound,
    )


@dataclass(frozen=True)
class OmegaFResult:
    """Heights of the isotypical Heegner blocks and the resulting invariant."""

    h_i: float
    h_j: float
    omega_f_sq: float
    l_chi4: float
    l_chi3: float
    l_prime: float
    petersson: float

    def to_json_obj(self) -> dict:
        return {
            "h_i": self.h_i,
            "h_j": self.h_j,
            "omega_f_sq": self.omega_f_sq,
            "l_chi4": self.l_chi4,
            "l_chi3": self.l_chi3,
            "l_prime": self.l_prime,
            "petersson": self.petersson,
        }


def _combine_heights(h_i: float, h_j: float, tol: float) -> float:
    """-(sqrt(h_i) + 2 sqrt(h_j))^2 with noise clamping.

    Heights are nonnegative; values in [-tol, 0) are numerical noise and
    clamp to 0 before the square roots, anything below -tol raises.
    Vanishing heights give 0.
    """
    clamped = []
    for name, h in (("h_i", h_i), ("h_j", h_j)):
        if h < -tol:
            raise NegativeHeightBeyondTolerance(f"{name} = {h:.3e} < -{tol:g}")
        clamped.append(max(h, 0.0))
    return -((math.sqrt(clamped[0]) + 2.0 * math.sqrt(clamped[1])) ** 2)


def omega_f_sq(f: EigenformData, tol: float = 1e-9, quad_order: int = 48,
               series_tol: float = 1e-12) -> OmegaFResult:
    """The isotypical invariant omega_f^2 = -(sqrt(h_i) + 2 sqrt(h_j))^2.

    Heights h_i, h_j from the module-level formulas; tiny negative values
    (|h| <= tol, pure numerical noise on a nonnegative height) are clamped
    to zero before the square roots, larger negatives raise
    NegativeHeightBeyondTolerance.  Requires prime level coprime to 6 and
    functional-equation sign -1 (WrongSign otherwise).
    """
    if _fe_sign(f) != -1:
        raise WrongSign("omega_f^2 requires functional-equation sign -1")
    lp = l_derivative(f, tol=series_tol)
    l4 = l_value(f, twist=-4, tol=series_tol)
    l3 = l_value(f, twist=-3, tol=series_tol)
    pet = petersson(f, quad_order=quad_order)
    pi2 = math.pi ** 2
    h_i = l4 * lp / (2.0 * pi2 * pet)
    h_j = math.sqrt(3.0) * l3 * lp / (4.0 * pi2 * pet)
    value = _combine_heights(h_i, h_j, tol)
    return OmegaFResult(
        h_i=max(h_i, 0.0), h_j=max(h_j, 0.0), omega_f_sq=value,
        l_chi4=l4, l_chi3=l3, l_prime=lp, petersson=pet,
    )
