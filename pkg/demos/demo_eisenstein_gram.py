"""The Eisenstein intersection pairing and the invariant omega_Eis^2.

All numbers here are exact: rational combinations of ONE, KAPPA (the
zeta-value constant (1/2) zeta(-1) + zeta'(-1)) and LOG(p).

Run:  python demos/demo_eisenstein_gram.py
"""

from eischow import EisVector, gram, omega_eis_sq, pair, w_square, w_vector
from eischow.eis import dinf_gp_discrepancy, omega_eis_vector

for n in (37, 35):
    g = gram(n)
    print(f"Gram matrix of the Eisenstein basis at N = {n}:")
    labels = g.basis.labels
    width = max(len(e.to_text()) for row in g.entries for e in row) + 2
    print(" " * 7 + "".join(f"{l:>{width}}" for l in labels))
    for lab, row in zip(labels, g.entries):
        print(f"{lab:>6} " + "".join(f"{e.to_text():>{width}}" for e in row))
    print()

# The vertical correction class W-hat, normalized against the cusp divisor.
w = w_vector(37)
print("W-hat at N = 37:", w)
print("  <W, DINF> =", pair(w, EisVector.unit(w.basis, "DINF")))
print("  W^2       =", w_square(37))

# The headline invariant, exactly and numerically.
for n in (11, 37, 35, 210):
    value = omega_eis_sq(n)
    print(f"omega_Eis^2({n}) = {value.to_text()}  ~ {value.evaluate(8):.8f}")

# It agrees with the Gram pairing of (2g-2) DINF + W-hat, and is blind to
# the <DINF, G(p)> convention:
v = omega_eis_vector(37)
print("\npair(v, v) =", pair(v, v), " (v = (2g-2) DINF + W-hat)")
print("zero-convention value:", omega_eis_sq(37, gram(37, "zero")))
print("\nconvention diagnostic:", dinf_gp_discrepancy(37)["entries"])
