#!/usr/bin/env python3
"""Brute-force minimization over the unit simplex.

By homogeneity, a form is copositive exactly when its minimum over the
probability simplex is nonnegative, so a dense lattice scan plus local
refinement gives an independent check on every closed-form criterion.
The classification is banded: a minimum within +-band*scale of zero is
reported as indeterminate rather than forced to a side.
"""

import dataclasses

from copos import OracleConfig, build, default_config, min_on_simplex

t = build(3, 2, {(1, 1, 1): 1.0, (1, 2, 2): -1.0, (2, 2, 2): 1.0})

# coarse to fine: watch the reported minimum settle
for resolution in (10, 100, 2000):
    cfg = OracleConfig(resolution=resolution, refine_rounds=0, band=1e-8)
    r = min_on_simplex(t, cfg)
    print(f"resolution {resolution:5d}: min = {r.min_value:.12f}"
          f" at {tuple(round(v, 6) for v in r.argmin)}")

# refinement rounds shrink the lattice around the best cell
cfg = default_config(2)
r = min_on_simplex(t, cfg)
print(f"\nwith refinement: min = {r.min_value!r}")
print(f"argmin           = {r.argmin}")
print(f"classification   = {r.classification.value}")

# the band turns "numerically zero" into an explicit indeterminate
flat = build(3, 3, {})
for band in (1e-8, 0.0):
    cfg = dataclasses.replace(default_config(3), band=band)
    r = min_on_simplex(flat, cfg)
    print(f"\nzero tensor, band {band}: {r.classification.value}"
          f" (min = {r.min_value})")
