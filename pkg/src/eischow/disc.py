"""Numerical verification kernel for Dirichlet-form identities on the unit
disc under the model covering z -> z^n.

The identities checked here are the analytic engine behind functoriality of
the arithmetic intersection pairing; this module verifies each of them by
quadrature on a polar grid:

* the Dirichlet seminorm  ||f||_1^2 = i int_D df ^ conj(df),
* push-forward (root sum) and pull-back (composition) along z -> z^n and
  the adjointness  (phi^* f, g)_1 = (f, phi_* g)_1,
* the dbar equality  int |f_z|^2 = int |f_zbar|^2 for boundary-vanishing f,
* the weighted Poincare (Hardy-type) inequality
      i int |f|^2 / |z|^{2-delta}  <=  (4/delta)^2  i int |f_z|^2,
* integration by parts  2 pi int f dd^c conj(g) = -(f, g)_1,
  with dd^c = (i / 2 pi) d dbar.

Conventions: i dz ^ dzbar = 2 dx dy, so every i-integral below is computed
as twice a plain area integral.  Certified checks sample functions from
closed forms so quadrature is the only error source; grid-sampled
functions fall back to spectral angular and finite-difference radial
derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    BoundaryNonVanishing,
    GridIncompatibleWithDegree,
    GridTooCoarse,
    QuadratureNotConverged,
)

__all__ = [
    "ClosedForm",
    "DiscGrid",
    "DiscFunction",
    "SeminormResult",
    "seminorm1",
    "dirichlet_pairing",
    "pullback_pow",
    "pushforward_pow",
    "CheckResult",
    "HardyResult",
    "check_dbar_equality",
    "check_hardy",
    "check_adjoint",
    "check_ibp",
    "verification_report",
    "DEFAULT_RADIAL",
    "DEFAULT_ANGULAR",
    "DEFAULT_TOL",
]

DEFAULT_RADIAL = 256
DEFAULT_ANGULAR = 512
DEFAULT_TOL = 1e-6


@dataclass(frozen=True)
class ClosedForm:
    """Callable description of a smooth function on the closed disc.

    ``value``, ``dz`` and ``dzbar`` take a complex ndarray and return one;
    ``dzdzbar`` (the mixed second derivative, needed only by the
    integration-by-parts check) is optional.
    """

    value: Callable
    dz: Callable
    dzbar: Callable
    dzdzbar: Callable | None = None


class DiscGrid:
    """Polar quadrature grid: Gauss-Legendre radii in (0,1), equispaced angles.

    The radial rule's stated polynomial exactness is validated at
    construction; grids derived by pushing radii through r -> r^n carry
    ``exact_degree = None`` (no polynomial exactness claim) but inherit
    correct quadrature weights for smooth integrands.
    """

    def __init__(self, radial_nodes, radial_weights, angular_count, exact_degree):
        self.radial_nodes = np.asarray(radial_nodes, dtype=float)
        self.radial_weights = np.asarray(radial_weights, dtype=float)
        self.angular_count = int(angular_count)
        self.exact_degree = exact_degree
        if np.any(self.radial_weights <= 0):
            raise ValueError("radial weights must be positive")
        if np.any((self.radial_nodes <= 0) | (self.radial_nodes >= 1)):
            raise ValueError("radial nodes must lie in (0, 1)")
        if exact_degree is not None:
            self._validate_exactness(exact_degree)
        self.angles = 2.0 * np.pi * np.arange(self.angular_count) / self.angular_count
        self.nodes = self.radial_nodes[:, None] * np.exp(1j * self.angles)[None, :]

    def _validate_exactness(self, degree):
        for k in (0, 1, 2, 3, 7, degree // 2, degree):
            exact = 1.0 / (k + 1)
            got = float(np.sum(self.radial_weights * self.radial_nodes ** k))
            if abs(got - exact) > 1e-11 * max(1.0, exact):
                raise ValueError(f"radial rule fails exactness at degree {k}")

    @staticmethod
    def gauss(radial: int = DEFAULT_RADIAL, angular: int = DEFAULT_ANGULAR) -> "DiscGrid":
        x, w = np.polynomial.legendre.leggauss(radial)
        return DiscGrid(0.5 * (x + 1.0), 0.5 * w, angular, exact_degree=2 * radial - 1)

    def integrate(self, values) -> complex:
        """integral over D of values dA (polar measure r dr dtheta)."""
        vals = np.asarray(values)
        row = np.sum(vals, axis=1) * (2.0 * np.pi / self.angular_count)
        return complex(np.sum(self.radial_weights * self.radial_nodes * row))

    def coarsened(self) -> "DiscGrid":
        """Half-resolution companion grid used for refinement estimates."""
        q = max(4, len(self.radial_nodes) // 2)
        k = max(8, self.angular_count // 2)
        return DiscGrid.gauss(q, k)


class DiscFunction:
    """Function on the disc: values on a grid, optionally with a closed form."""

    def __init__(self, grid: DiscGrid, values, closed_form: ClosedForm | None = None):
        self.grid = grid
        self.values = np.asarray(values, dtype=complex)
        if self.values.shape != grid.nodes.shape:
            raise ValueError("values shape does not match the grid")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("non-finite function values")
        self.closed_form = closed_form

    @staticmethod
    def sample(closed_form: ClosedForm, grid: DiscGrid | None = None) -> "DiscFunction":
        grid = grid or DiscGrid.gauss()
        return DiscFunction(grid, closed_form.value(grid.nodes), closed_form)

    def on_grid(self, grid: DiscGrid) -> "DiscFunction":
        if grid is self.grid:
            return self
        if self.closed_form is None:
            raise ValueError("cannot resample a grid-only function")
        return DiscFunction.sample(self.closed_form, grid)

    # -- derivative samples -------------------------------------------------

    def dz_values(self) -> np.ndarray:
        if self.closed_form is not None:
            return np.asarray(self.closed_form.dz(self.grid.nodes), dtype=complex)
        fr, fth = self._numeric_gradient()
        r = self.grid.radial_nodes[:, None]
        phase = np.exp(-1j * self.grid.angles)[None, :]
        return 0.5 * phase * (fr - 1j * fth / r)

    def dzbar_values(self) -> np.ndarray:
        if self.closed_form is not None:
            return np.asarray(self.closed_form.dzbar(self.grid.nodes), dtype=complex)
        fr, fth = self._numeric_gradient()
        r = self.grid.radial_nodes[:, None]
        phase = np.exp(1j * self.grid.angles)[None, :]
        return 0.5 * phase * (fr + 1j * fth / r)

    def _numeric_gradient(self):
        # spectral derivative in theta, second-order differences in r
        k = np.fft.fftfreq(self.grid.angular_count, d=1.0 / self.grid.angular_count)
        fth = np.fft.ifft(1j * k[None, :] * np.fft.fft(self.values, axis=1), axis=1)
        r = self.grid.radial_nodes
        fr = np.empty_like(self.values)
        fr[0] = (self.values[1] - self.values[0]) / (r[1] - r[0])
        fr[-1] = (self.values[-1] - self.values[-2]) / (r[-1] - r[-2])
        h1 = (r[1:-1] - r[:-2])[:, None]
        h2 = (r[2:] - r[1:-1])[:, None]
        fr[1:-1] = (
            h1 * self.values[2:] / (h2 * (h1 + h2))
            - (h1 - h2) * self.values[1:-1] / (h1 * h2)
            - h2 * self.values[:-2] / (h1 * (h1 + h2))
        )
        return fr, fth

    def boundary_max(self, samples: int = 1024) -> float:
        """max |f| on the unit circle (closed form) or the outermost ring."""
        if self.closed_form is not None:
            theta = 2.0 * np.pi * np.arange(samples) / samples
            return float(np.max(np.abs(self.closed_form.value(np.exp(1j * theta)))))
        return float(np.max(np.abs(self.values[-1])))


def _require_boundary_vanishing(f: DiscFunction, tol: float):
    m = f.boundary_max()
    if m > tol:
        raise BoundaryNonVanishing(f"max |f| on the boundary is {m:.3e} > {tol:g}")


@dataclass(frozen=True)
class SeminormResult:
    value: float
    refinement_estimate: float


def seminorm1(f: DiscFunction, tol: float = DEFAULT_TOL) -> SeminormResult:
    """The Dirichlet seminorm ||f||_1^2 = i int df ^ conj(df) = 2 int |f_z|^2 dA.

    The refinement estimate compares against a half-resolution grid (exact
    resampling for closed forms, angular subsampling otherwise); raises
    GridTooCoarse when the estimate exceeds tol.
    """
    value = 2.0 * f.grid.integrate(np.abs(f.dz_values()) ** 2).real
    if f.closed_form is not None:
        coarse_f = DiscFunction.sample(f.closed_form, f.grid.coarsened())
        coarse = 2.0 * coarse_f.grid.integrate(np.abs(coarse_f.dz_values()) ** 2).real
    else:
        sub = DiscFunction(
            _angular_subgrid(f.grid), f.values[:, ::2], None
        )
        coarse = 2.0 * sub.grid.integrate(np.abs(sub.dz_values()) ** 2).real
    estimate = abs(value - coarse)
    if estimate > tol:
        raise GridTooCoarse(f"refinement estimate {estimate:.3e} > {tol:g}")
    return SeminormResult(value=value, refinement_estimate=estimate)


def _angular_subgrid(grid: DiscGrid) -> DiscGrid:
    if grid.angular_count % 2:
        raise GridIncompatibleWithDegree("angular count must be even to subsample")
    return DiscGrid(grid.radial_nodes, grid.radial_weights, grid.angular_count // 2,
                    exact_degree=grid.exact_degree)


def dirichlet_pairing(f: DiscFunction, g: DiscFunction) -> complex:
    """(f, g)_1 = i int df ^ conj(dg) = 2 int f_z conj(g_z) dA."""
    if f.grid is not g.grid and f.grid.nodes.shape != g.grid.nodes.shape:
        raise ValueError("functions live on incompatible grids")
    return 2.0 * f.grid.integrate(f.dz_values() * np.conj(g.dz_values()))


def pullback_pow(f: DiscFunction, n: int) -> DiscFunction:
    """phi^* f = f(z^n) for the covering phi(z) = z^n.

    Closed-form inputs compose analytically (chain rule for both
    derivatives); grid-only inputs land on the derived grid with radii
    r^(1/n) and n-fold angular count, on which every image node z^n is an
    original node.
    """
    if n < 1:
        raise ValueError("covering degree must be >= 1")
    if f.closed_form is not None:
        cf = f.closed_form

        def value(z):
            return cf.value(z ** n)

        def dz(z):
            return n * z ** (n - 1) * cf.dz(z ** n)

        def dzbar(z):
            return n * np.conj(z) ** (n - 1) * cf.dzbar(z ** n)

        dzdzbar = None
        if cf.dzdzbar is not None:
            def dzdzbar(z):
                return n ** 2 * np.abs(z) ** (2 * (n - 1)) * cf.dzdzbar(z ** n)

        return DiscFunction.sample(
            ClosedForm(value=value, dz=dz, dzbar=dzbar, dzdzbar=dzdzbar), f.grid
        )
    grid = f.grid
    new_grid = DiscGrid(
        grid.radial_nodes ** (1.0 / n),
        grid.radial_weights / n * grid.radial_nodes ** (1.0 / n - 1.0),
        grid.angular_count * n,
        exact_degree=None,
    )
    values = np.tile(f.values, (1, n))
    return DiscFunction(new_grid, values)


def pushforward_pow(g: DiscFunction, n: int) -> DiscFunction:
    """phi_* g (w) = sum over the n-th roots u of w of g(u).

    With a closed form the root sum (fixed principal branch; the sum is
    branch-independent) is formed analytically together with its
    derivatives.  Grid-only inputs require n to divide the angular count,
    in which case all roots of image nodes are grid nodes and the result
    lives on the image grid with radii r^n.
    """
    if n < 1:
        raise ValueError("covering degree must be >= 1")
    if g.closed_form is not None:
        cf = g.closed_form
        roots = np.exp(2j * np.pi * np.arange(n) / n)

        def value(w):
            u = w ** (1.0 / n)
            return sum(cf.value(rho * u) for rho in roots)

        def dz(w):
            u = w ** (1.0 / n)
            du = (1.0 / n) * w ** (1.0 / n - 1.0)
            return sum(cf.dz(rho * u) * rho * du for rho in roots)

        def dzbar(w):
            u = w ** (1.0 / n)
            du = (1.0 / n) * w ** (1.0 / n - 1.0)
            return sum(cf.dzbar(rho * u) * np.conj(rho * du) for rho in roots)

        return DiscFunction.sample(ClosedForm(value=value, dz=dz, dzbar=dzbar), g.grid)
    grid = g.grid
    if grid.angular_count % n:
        raise GridIncompatibleWithDegree(
            f"angular count {grid.angular_count} not divisible by degree {n}"
        )
    new_grid = DiscGrid(
        grid.radial_nodes ** n,
        grid.radial_weights * n * grid.radial_nodes ** (n - 1),
        grid.angular_count // n,
        exact_degree=None,
    )
    k_out = grid.angular_count // n
    values = np.zeros((len(grid.radial_nodes), k_out), dtype=complex)
    for m in range(k_out):
        for j in range(n):
            values[:, m] += g.values[:, (m + j * k_out) % grid.angular_count]
    return DiscFunction(new_grid, values)


@dataclass(frozen=True)
class CheckResult:
    lhs: complex
    rhs: complex

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class HardyResult:
    lhs: float
    rhs: float
    holds: bool


def check_dbar_equality(f: DiscFunction, tol: float = DEFAULT_TOL,
                        boundary_tol: float = 1e-9) -> CheckResult:
    """int |f_z|^2 versus int |f_zbar|^2 for f vanishing on the boundary."""
    _require_boundary_vanishing(f, boundary_tol)
    lhs = 2.0 * f.grid.integrate(np.abs(f.dz_values()) ** 2).real
    rhs = 2.0 * f.grid.integrate(np.abs(f.dzbar_values()) ** 2).real
    return CheckResult(lhs=lhs, rhs=rhs)


def check_hardy(f: DiscFunction, delta: float, tol: float = DEFAULT_TOL,
                boundary_tol: float = 1e-9) -> HardyResult:
    """Weighted Poincare inequality with the explicit constant (4/delta)^2.

    lhs = i int |f|^2 / |z|^{2-delta} dz^dzbar, integrated after the
    singularity-absorbing substitution r = u^(1/delta) (which turns
    r^{delta-1} dr into du/delta, keeping nodes off the singularity);
    rhs = (4/delta)^2 i int |f_z|^2 dz^dzbar.  Requires a closed form for
    the resampled radii.
    """
    if not 0.0 < delta < 2.0:
        raise ValueError("delta must lie in (0, 2)")
    if f.closed_form is None:
        raise ValueError("check_hardy needs a closed form to resample radii")
    _require_boundary_vanishing(f, boundary_tol)

    def weighted_integral(grid):
        u = grid.radial_nodes
        z = (u ** (1.0 / delta))[:, None] * np.exp(1j * grid.angles)[None, :]
        vals = np.abs(f.closed_form.value(z)) ** 2
        row = np.sum(vals, axis=1) * (2.0 * np.pi / grid.angular_count)
        return (2.0 / delta) * float(np.sum(grid.radial_weights * row))

    lhs = weighted_integral(f.grid)
    if abs(lhs - weighted_integral(f.grid.coarsened())) > max(tol, 1e-12 * abs(lhs)):
        raise QuadratureNotConverged("weighted integral not converged on this grid")
    rhs = (4.0 / delta) ** 2 * 2.0 * f.grid.integrate(np.abs(f.dz_values()) ** 2).real
    return HardyResult(lhs=lhs, rhs=rhs, holds=lhs <= rhs + tol)


def check_adjoint(f: DiscFunction, g: DiscFunction, n: int) -> CheckResult:
    """(phi^* f, g)_{1,D} versus (f, phi_* g)_{1,D} for phi(z) = z^n."""
    lhs = dirichlet_pairing(pullback_pow(f, n), g)
    rhs = dirichlet_pairing(f, pushforward_pow(g, n))
    return CheckResult(lhs=lhs, rhs=rhs)


def check_ibp(f: DiscFunction, g: DiscFunction,
              boundary_tol: float = 1e-9) -> CheckResult:
    """2 pi int f dd^c conj(g) versus -(f, g)_1 for boundary-vanishing f.

    With dd^c = (i/2pi) d dbar the left side is i int f conj(g_zbar_z)
    dz^dzbar, which needs the mixed second derivative of g in closed form.
    """
    _require_boundary_vanishing(f, boundary_tol)
    if g.closed_form is None or g.closed_form.dzdzbar is None:
        raise ValueError("check_ibp needs the mixed second derivative of g")
    mixed = np.conj(g.closed_form.dzdzbar(f.grid.nodes))
    lhs = 2.0 * f.grid.integrate(f.values * mixed)
    rhs = -dirichlet_pairing(f, g.on_grid(f.grid))
    return CheckResult(lhs=lhs, rhs=rhs)


# -- canned closed forms and the certified report ---------------------------


def cf_one_minus_abs2() -> ClosedForm:
    """f(z) = 1 - |z|^2 (real, vanishes on the boundary)."""
    return ClosedForm(
        value=lambda z: 1.0 - np.abs(z) ** 2,
        dz=lambda z: -np.conj(z),
        dzbar=lambda z: -z,
        dzdzbar=lambda z: -np.ones_like(z),
    )


def cf_coordinate() -> ClosedForm:
    """f(z) = z."""
    return ClosedForm(
        value=lambda z: z,
        dz=lambda z: np.ones_like(z),
        dzbar=lambda z: np.zeros_like(z),
        dzdzbar=lambda z: np.zeros_like(z),
    )


def cf_abs2() -> ClosedForm:
    """f(z) = |z|^2."""
    return ClosedForm(
        value=lambda z: (np.abs(z) ** 2).astype(complex),
        dz=lambda z: np.conj(z),
        dzbar=lambda z: z,
        dzdzbar=lambda z: np.ones_like(z),
    )


def cf_bump_times_z() -> ClosedForm:
    """f(z) = z (1 - |z|^2), complex valued, vanishes on the boundary."""
    return ClosedForm(
        value=lambda z: z * (1.0 - np.abs(z) ** 2),
        dz=lambda z: 1.0 - 2.0 * z * np.conj(z),
        dzbar=lambda z: -(z ** 2),
        dzdzbar=lambda z: -2.0 * z,
    )


def cf_re() -> ClosedForm:
    """g(z) = Re z (harmonic)."""
    return ClosedForm(
        value=lambda z: (z + np.conj(z)) / 2.0,
        dz=lambda z: np.full_like(z, 0.5),
        dzbar=lambda z: np.full_like(z, 0.5),
        dzdzbar=lambda z: np.zeros_like(z),
    )


def _entry(name, lhs, rhs, tol):
    lhs_c, rhs_c = complex(lhs), complex(rhs)
    residual = abs(lhs_c - rhs_c)
    return {
        "name": name,
        "lhs": {"re": lhs_c.real, "im": lhs_c.imag},
        "rhs": {"re": rhs_c.real, "im": rhs_c.imag},
        "residual": residual,
        "tolerance": tol,
        "passed": residual <= tol,
    }


def verification_report(radial: int = DEFAULT_RADIAL, angular: int = DEFAULT_ANGULAR,
                        tol: float = DEFAULT_TOL) -> dict:
    """Run the certified identity suite at the given grid and tolerance.

    Returns a JSON-ready report with one entry per check (name, lhs, rhs,
    residual, tolerance, pass flag) plus the overall verdict.  This is the
    regression gate behind the verify-analysis command.
    """
    grid = DiscGrid.gauss(radial, angular)
    bump = DiscFunction.sample(cf_one_minus_abs2(), grid)
    coord = DiscFunction.sample(cf_coordinate(), grid)
    abs2 = DiscFunction.sample(cf_abs2(), grid)
    zbump = DiscFunction.sample(cf_bump_times_z(), grid)
    harmonic = DiscFunction.sample(cf_re(), grid)
    checks = []

    s_bump = seminorm1(bump, tol)
    checks.append(_entry("seminorm1(1-|z|^2) = pi", s_bump.value, math.pi, tol))
    checks.append(_entry("seminorm1(z) = 2 pi", seminorm1(coord, tol).value, 2 * math.pi, tol))

    for n in (2, 3):
        lifted = seminorm1(pullback_pow(bump, n), tol).value
        checks.append(
            _entry(f"pullback degree identity n={n}", lifted, n * s_bump.value, tol)
        )

    push = pushforward_pow(abs2, 2)
    target = 2.0 * np.abs(grid.nodes)
    checks.append(
        _entry(
            "pushforward(|z|^2, 2) = 2|w| (max node error)",
            float(np.max(np.abs(push.values - target))),
            0.0,
            tol,
        )
    )
    log_cf = ClosedForm(
        value=lambda z: -np.log(np.abs(z) ** 2).astype(complex),
        dz=lambda z: -1.0 / z,
        dzbar=lambda z: -1.0 / np.conj(z),
    )
    push_log = pushforward_pow(DiscFunction.sample(log_cf, grid), 2)
    checks.append(
        _entry(
            "pushforward(-log|z|^2, 2) telescopes (max node error)",
            float(np.max(np.abs(push_log.values - (-np.log(np.abs(grid.nodes) ** 2))))),
            0.0,
            tol,
        )
    )

    for name, fn in (("1-|z|^2", bump), ("z(1-|z|^2)", zbump)):
        r = check_dbar_equality(fn, tol)
        checks.append(_entry(f"dbar equality, f={name}", r.lhs, r.rhs, tol))
    r = check_dbar_equality(zbump, tol)
    checks.append(_entry("dbar lhs for z(1-|z|^2) = 2 pi/3", r.lhs, 2 * math.pi / 3, tol))

    hardy = check_hardy(bump, 1.0, tol)
    checks.append(_entry("hardy lhs at delta=1 = 32 pi/15", hardy.lhs, 32 * math.pi / 15, tol))
    checks.append(_entry("hardy rhs at delta=1 = 16 pi", hardy.rhs, 16 * math.pi, tol))
    for delta in (0.25, 0.5, 1.0, 1.5):
        h = check_hardy(bump, delta, tol)
        checks.append(
            {
                "name": f"hardy inequality holds at delta={delta}",
                "lhs": {"re": h.lhs, "im": 0.0},
                "rhs": {"re": h.rhs, "im": 0.0},
                "residual": max(0.0, h.lhs - h.rhs),
                "tolerance": tol,
                "passed": h.holds,
            }
        )

    adj = check_adjoint(abs2, abs2, 2)
    checks.append(_entry("adjoint lhs (|w|^2,|z|^2,n=2) = 4 pi/3", adj.lhs, 4 * math.pi / 3, tol))
    checks.append(_entry("adjoint residual (|w|^2,|z|^2,n=2)", adj.lhs, adj.rhs, tol))
    for n in (2, 3):
        energy = dirichlet_pairing(pullback_pow(bump, n), pullback_pow(bump, n))
        checks.append(
            _entry(f"(phi^*f, phi^*f)_1 = n (f,f)_1, n={n}", energy, n * s_bump.value, tol)
        )

    ibp = check_ibp(bump, abs2)
    checks.append(_entry("ibp f=1-|z|^2, g=|z|^2", ibp.lhs, ibp.rhs, tol))
    checks.append(_entry("ibp value = pi", ibp.lhs, math.pi, tol))
    ibp_h = check_ibp(bump, harmonic)
    checks.append(_entry("ibp harmonic g: both sides 0", ibp_h.lhs, ibp_h.rhs, tol))

    return {
        "grid": {"radial": radial, "angular": angular},
        "tolerance": tol,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }
