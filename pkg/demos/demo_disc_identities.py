"""The unit-disc verification kernel behind the functoriality machinery.

Every identity is checked by quadrature against closed forms: Dirichlet
seminorms, push-forward/pull-back along z -> z^n, the dbar equality, the
weighted Hardy-type inequality with constant (4/delta)^2, adjointness, and
integration by parts.

Run:  python demos/demo_disc_identities.py
"""

import math

from eischow.disc import (
    DiscFunction,
    DiscGrid,
    cf_abs2,
    cf_bump_times_z,
    cf_one_minus_abs2,
    check_adjoint,
    check_dbar_equality,
    check_hardy,
    check_ibp,
    pullback_pow,
    pushforward_pow,
    seminorm1,
    verification_report,
)

grid = DiscGrid.gauss(128, 256)
bump = DiscFunction.sample(cf_one_minus_abs2(), grid)   # 1 - |z|^2
abs2 = DiscFunction.sample(cf_abs2(), grid)             # |z|^2

s = seminorm1(bump)
print(f"||1-|z|^2||_1^2 = {s.value:.12f}   (pi = {math.pi:.12f},"
      f" refinement estimate {s.refinement_estimate:.1e})")

for n in (2, 3):
    lifted = seminorm1(pullback_pow(bump, n)).value
    print(f"pull-back along z^{n} multiplies the seminorm by {lifted / s.value:.9f}")

push = pushforward_pow(abs2, 2)
err = abs(push.values - 2.0 * abs(grid.nodes)).max()
print(f"push-forward of |z|^2 along z^2 equals 2|w| up to {err:.1e}")

r = check_dbar_equality(DiscFunction.sample(cf_bump_times_z(), grid))
print(f"\ndbar equality for z(1-|z|^2): lhs {r.lhs.real:.9f},"
      f" rhs {r.rhs.real:.9f}, residual {r.residual:.1e}")

h = check_hardy(bump, 1.0)
print(f"hardy at delta=1: {h.lhs:.6f} <= {h.rhs:.6f}"
      f"  (32 pi/15 = {32 * math.pi / 15:.6f}, 16 pi = {16 * math.pi:.6f})")

adj = check_adjoint(abs2, abs2, 2)
print(f"adjointness (|w|^2, |z|^2, n=2): both sides {adj.lhs.real:.9f}"
      f" = 4 pi/3 = {4 * math.pi / 3:.9f}")

ibp = check_ibp(bump, abs2)
print(f"integration by parts: {ibp.lhs.real:.9f} vs {ibp.rhs.real:.9f}")

rep = verification_report()
print(f"\nfull certified suite at 256x512: "
      f"{sum(c['passed'] for c in rep['checks'])}/{len(rep['checks'])} checks pass")
