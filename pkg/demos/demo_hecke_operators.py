"""Hecke operators T-hat_l and Atkin-Lehner involutions on the Eisenstein space.

Run:  python demos/demo_hecke_operators.py
"""

from eischow import commutator_is_zero, gram, is_self_adjoint, t_hat, w_hat
from eischow.hecke import hecke_shift, identity_operator

# T-hat_l multiplies every basis vector by l+1 and shifts DINF by the
# constant c_{N,l} in the purely archimedean direction F.
for l, n in ((2, 37), (2, 1), (3, 35)):
    op = t_hat(l, n)
    print(f"T-hat_{l} at N={n}: DINF |-> {op.column('DINF')}")
    print(f"   shift c_{{N,l}} = {hecke_shift(l, n)}")

# Self-adjointness with respect to the intersection pairing is an exact
# matrix identity A^T G = G A, under either <DINF, G(p)> convention.
op = t_hat(2, 37)
for conv in ("log", "zero"):
    print(f"T-hat_2 self-adjoint at N=37 ({conv} convention):",
          is_self_adjoint(op, gram(37, conv)))

# The operators commute with each other and with the involutions.
print("\n[T-hat_2, T-hat_3] = 0 at N=35:",
      commutator_is_zero(t_hat(2, 35), t_hat(3, 35)))
w5 = w_hat(5, 35)
print("[T-hat_2, w-hat_5] = 0 at N=35:", commutator_is_zero(t_hat(2, 35), w5))

# w-hat_d negates G(p) exactly when p | d and fixes F; the cusp divisor
# lies outside its domain, so the DINF column stays undefined.
print("\nw-hat_5 at N=35: domain =", w5.domain)
for lab in ("F", "G(5)", "G(7)"):
    print(f"   {lab} |-> {w5.column(lab)}")
sq = w5.compose(w5)
ident = identity_operator(w5.basis)
print("involution on its domain:",
      all(sq.columns[j] == ident.columns[j]
          for j in range(w5.basis.dimension) if sq.columns[j] is not None))
