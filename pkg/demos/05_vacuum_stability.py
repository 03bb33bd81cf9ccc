#!/usr/bin/env python3
"""Vacuum stability of a two-doublet-plus-singlet scalar potential.

The quartic part of the potential packs into an order-4 dim-3 coupling
tensor whose copositivity for every orbit parameter rho in [0, 1] means
the potential is bounded from below.  Two routes are compared: the
general sum-of-squares criterion and the sharper condition list written
for this one-parameter family.
"""

from copos import (Z3Params, check_stability, coupling_tensor, min_on_simplex,
                   scan_rho)

base = dict(lam1=1.0, lam2=1.0, lam_s=1.0)

# sweep the portal coupling; the two routes part ways between 4/9 and 8/9
print("|l_s12|   theorem route   printed route   (rho = 1)")
for s12 in (0.0, 0.2, 4.0 / 9.0, 0.6, 0.8, 8.0 / 9.0, 1.0, 1.5):
    rep = check_stability(Z3Params(abs_lam_s12=s12, rho=1.0, **base))
    print(f"  {s12:5.3f}     {rep.theorem_verdict.value:12s}"
          f"   {rep.printed_verdict.value}")

# a full rho scan tracks the worst orbit direction
rep = scan_rho(Z3Params(abs_lam_s12=0.4, **base), steps=100)
print(f"\nscan with |l_s12| = 0.4: theorem {rep.theorem_verdict.value},"
      f" worst rho = {rep.worst_rho}")

# far past the stability region the oracle exhibits a negative direction
bad = Z3Params(abs_lam_s12=4.0, rho=1.0, **base)
r = min_on_simplex(coupling_tensor(bad))
print(f"\n|l_s12| = 4: oracle min {r.min_value:.6f} at"
      f" {tuple(round(v, 4) for v in r.argmin)} -> {r.classification.value}")

# the certificate for the worst rho shows which inequality gives out first
rep = check_stability(Z3Params(abs_lam_s12=1.0, rho=1.0, **base))
print("\nprinted conditions at |l_s12| = 1, rho = 1:")
for row in rep.printed_at_worst.conditions:
    mark = "ok  " if row.satisfied else "FAIL"
    print(f"  [{mark}] {row.description}  value={row.value}")
