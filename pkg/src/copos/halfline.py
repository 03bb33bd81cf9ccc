"""Nonnegativity of low-degree polynomials on the half-line t >= 0.

These are the scalar building blocks behind every closed-form tensor
criterion in :mod:`copos.criteria`: an exact sign characterisation for
cubics, a cheaper sufficient square-root test, the exact quadratic test,
and a brute-force grid minimiser used as an independent oracle.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np


class CubicCoeffs(NamedTuple):
    """Coefficients of ``P(t) = a t^3 + b t^2 + c t + d``."""
    a: float
    b: float
    c: float
    d: float


class QuadCoeffs(NamedTuple):
    """Coefficients of ``p(t) = alpha t^2 + beta t + gamma``."""
    alpha: float
    beta: float
    gamma: float


class GridMin(NamedTuple):
    """Result of a half-line grid scan.

    ``negative_at_infinity`` flags a negative leading nonzero coefficient,
    i.e. P(t) -> -inf (or P == d < 0 for a constant); the scan interval is
    a root bound, so the grid minimum already reflects the divergence sign.
    """
    min_value: float
    argmin: float
    negative_at_infinity: bool


def _coeffs(cc, n: int) -> tuple[float, ...]:
    out = tuple(float(v) for v in cc)
    if len(out) != n:
        raise ValueError(f"expected {n} coefficients, got {len(out)}")
    if not all(math.isfinite(v) for v in out):
        raise ValueError(f"coefficients must be finite, got {out}")
    return out


def cubic_nonneg_exact(cc) -> bool:
    """Exact test: P(t) >= 0 for all t >= 0.

    Holds iff one of two systems is satisfied:
      (1) a, b, c, d all >= 0;
      (2) max(a, d) > 0, a >= 0, d >= 0, and
          4ac^3 + 4b^3d + 27a^2d^2 - 18abcd - b^2c^2 >= 0.
    """
    a, b, c, d = _coeffs(cc, 4)
    if a >= 0 and b >= 0 and c >= 0 and d >= 0:
        return True
    if max(a, d) > 0 and a >= 0 and d >= 0:
        disc = 4*a*c**3 + 4*b**3*d + 27*a*a*d*d - 18*a*b*c*d - b*b*c*c
        return disc >= 0
    return False


def cubic_nonneg_sufficient(cc) -> bool:
    """Sufficient test: a >= 0, d >= 0, b >= a - 2*sqrt(ad), c >= d - 2*sqrt(ad)."""
    a, b, c, d = _coeffs(cc, 4)
    if a < 0 or d < 0:
        return False
    s = math.sqrt(a * d) if a * d > 0 else 0.0
    return b >= a - 2.0 * s and c >= d - 2.0 * s


def quad_nonneg(qc) -> bool:
    """Exact test: alpha t^2 + beta t + gamma >= 0 for all t >= 0.

    Holds iff alpha >= 0, gamma >= 0 and beta + 2*sqrt(alpha*gamma) >= 0.
    """
    alpha, beta, gamma = _coeffs(qc, 3)
    if alpha < 0 or gamma < 0:
        return False
    s = math.sqrt(alpha * gamma) if alpha * gamma > 0 else 0.0
    return beta + 2.0 * s >= 0


def _grid_min(coeffs: tuple[float, ...], grid_points: int) -> GridMin:
    # Cauchy-style bound: all real roots lie in [0, B], so the sign pattern
    # past B is the leading coefficient's.
    if grid_points < 2:
        raise ValueError(f"grid_points must be >= 2, got {grid_points}")
    if all(v == 0.0 for v in coeffs):
        return GridMin(0.0, 0.0, False)
    lead = next(v for v in coeffs if v != 0.0)
    if coeffs[0] > 0:
        bound = 1.0 + max(abs(v) for v in coeffs[1:]) / coeffs[0]
    else:
        bound = 1.0 + max(abs(v) for v in coeffs) / abs(lead)
    ts = np.linspace(0.0, bound, grid_points)
    vals = np.full_like(ts, coeffs[0])
    for v in coeffs[1:]:
        vals = vals * ts + v
    i = int(vals.argmin())  # first index on ties: smallest t
    return GridMin(float(vals[i]), float(ts[i]), lead < 0)


def cubic_min_bruteforce(cc, grid_points: int = 10_000) -> GridMin:
    """Grid minimum of the cubic on [0, B] with B a root bound."""
    return _grid_min(_coeffs(cc, 4), grid_points)


def quad_min_bruteforce(qc, grid_points: int = 10_000) -> GridMin:
    """Grid minimum of the quadratic on [0, B] with B a root bound."""
    return _grid_min(_coeffs(qc, 3), grid_points)
