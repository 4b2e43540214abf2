"""Walk through the Gamma_0(N) invariants that drive every other formula.

Run:  python demos/demo_gamma0_invariants.py
"""

from eischow import genus_quotient, invariants

print("Invariants of Gamma_0(N) for a few squarefree levels")
print(f"{'N':>5} {'psi':>6} {'nu2':>4} {'nu3':>4} {'cusps':>6} {'genus':>6}")
for n in (1, 2, 11, 35, 37, 101, 210, 2310):
    inv = invariants(n)
    print(f"{n:>5} {inv.psi:>6} {inv.nu2:>4} {inv.nu3:>4} {inv.cusps:>6} {inv.genus:>6}")

# The genus formula 12(g-1) + 3 nu2 + 4 nu3 + 6 cusps = psi holds exactly;
# spot check it on a larger sample.
print("\nCleared genus identity on all squarefree N <= 200:")
bad = [
    n
    for n in range(1, 201)
    if all(n % (p * p) for p in range(2, 15))
    and (lambda i: 12 * (i.genus - 1) + 3 * i.nu2 + 4 * i.nu3 + 6 * i.cusps != i.psi)(
        invariants(n)
    )
]
print("  violations:", bad or "none")

# Bad-fiber components of X_0(N) at p | N look like two copies of X_0(N/p);
# their genus enters the intersection numbers through g - 2 g_{N/p} + 1.
print("\nQuotient genera for N = 210:")
for p in (2, 3, 5, 7):
    print(f"  genus X_0(210/{p}) = {genus_quotient(210, p)}")
