"""Brute-force minimisation of a symmetric form over the unit simplex.

Because the form is homogeneous and the positive orthant is the cone over
the simplex ``{x >= 0, sum(x) = 1}``, the sign of the simplex minimum
decides copositivity.  The oracle scans the lattice of compositions
``k/N``, optionally adds uniform random simplex samples, then refines
locally around the incumbent.  It is deliberately independent of the
closed-form criteria: every certificate in :mod:`copos.criteria` is
validated against this module.

Determinism: the scan order is fixed, ties in the argmin are broken by the
lexicographically smallest point, and the reported minimum is an exact
re-evaluation at the reported argmin, so equal inputs give bit-equal
results regardless of environment parallelism.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .tensors import SymmetricTensor, Vector


class Classification(enum.Enum):
    COPOSITIVE_UP_TO_BAND = "copositive-up-to-band"
    NOT_COPOSITIVE = "not-copositive"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class OracleConfig:
    """Scan parameters.

    ``resolution`` is the lattice denominator N; refinement re-grids the
    box of one spacing around the incumbent at the same resolution, each
    round shrinking the spacing by a factor N/2.  ``band`` is the relative
    classification tolerance (scaled by 1 + max|entry|).
    """

    resolution: int
    refine_rounds: int = 3
    band: float = 1e-8
    samples: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise ValueError(f"resolution must be >= 1, got {self.resolution}")
        if self.refine_rounds < 0 or self.samples < 0:
            raise ValueError("refine_rounds and samples must be >= 0")
        if not (math.isfinite(self.band) and self.band >= 0):
            raise ValueError(f"band must be finite and >= 0, got {self.band}")


@dataclass(frozen=True)
class OracleResult:
    min_value: float
    argmin: Vector
    resolution_used: int
    classification: Classification


def default_config(dim: int) -> OracleConfig:
    """Default scan: N=2000 for dim <= 2, N=120 above (count grows as N^(dim-1))."""
    return OracleConfig(resolution=2000 if dim <= 2 else 120)


def simplex_grid(dim: int, resolution: int) -> Iterator[Vector]:
    """Lattice points k/N on the simplex, first coordinate decreasing.

    Yields C(N+dim-1, dim-1) points; for dim=2, N=2 the order is
    (1,0), (0.5,0.5), (0,1).
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if resolution < 1:
        raise ValueError(f"resolution must be >= 1, got {resolution}")
    for comp in _compositions(resolution, dim):
        yield tuple(k / resolution for k in comp)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for k in range(total, -1, -1):
        for rest in _compositions(total - k, parts - 1):
            yield (k, *rest)


@functools.lru_cache(maxsize=8)
def _lattice(dim: int, resolution: int) -> np.ndarray:
    pts = np.array(list(_compositions(resolution, dim)), dtype=float)
    pts /= resolution
    pts.setflags(write=False)
    return pts


def _evaluate_many(tensor: SymmetricTensor, pts: np.ndarray) -> np.ndarray:
    # Same term order and multiplication order as SymmetricTensor.evaluate.
    acc = np.zeros(len(pts))
    for idx, coeff in tensor.weighted_terms():
        monom = pts[:, idx[0] - 1].copy()
        for j in idx[1:]:
            monom *= pts[:, j - 1]
        acc += coeff * monom
    return acc


def _best_point(pts: np.ndarray, vals: np.ndarray) -> tuple[float, Vector]:
    m = vals.min()
    rows = np.flatnonzero(vals == m)
    point = min(tuple(map(float, pts[r])) for r in rows)
    return float(m), point


def _random_simplex(dim: int, count: int, seed: int) -> np.ndarray:
    # sorted uniform spacings: gaps of sorted U[0,1] draws are uniform on the simplex
    rng = np.random.default_rng(seed)
    u = np.sort(rng.random((count, dim - 1)), axis=1)
    padded = np.hstack([np.zeros((count, 1)), u, np.ones((count, 1))])
    return np.diff(padded, axis=1)


def _box_lattice(center: Vector, radius: float, resolution: int) -> np.ndarray:
    # l_inf box around the incumbent intersected with the simplex,
    # re-gridded at `resolution` points per free coordinate.
    dim = len(center)
    axes = []
    for i in range(dim - 1):
        lo = max(0.0, center[i] - radius)
        hi = min(1.0, center[i] + radius)
        axes.append(np.linspace(lo, hi, resolution + 1))
    grids = np.meshgrid(*axes, indexing="ij") if axes else []
    free = np.column_stack([g.ravel() for g in grids]) if axes else np.zeros((1, 0))
    last = 1.0 - free.sum(axis=1)
    keep = (last >= -1e-12) & (np.abs(last - center[-1]) <= radius + 1e-12)
    pts = np.column_stack([free[keep], np.clip(last[keep], 0.0, None)])
    return pts


def min_on_simplex(tensor: SymmetricTensor, config: Optional[OracleConfig] = None) -> OracleResult:
    """Grid minimum of ``T x^m`` over the unit simplex, with local refinement.

    The reported minimum is evaluate() at the reported argmin, an upper
    bound on the true simplex minimum; more refinement rounds never
    increase it.
    """
    cfg = config if config is not None else default_config(tensor.dim)
    dim = tensor.dim
    pts = _lattice(dim, cfg.resolution)
    if cfg.samples > 0 and dim > 1:
        pts = np.vstack([pts, _random_simplex(dim, cfg.samples, cfg.seed)])
    vals = _evaluate_many(tensor, pts)
    _, point = _best_point(pts, vals)
    best = tensor.evaluate(point)

    spacing = 1.0 / cfg.resolution
    if dim > 1:
        for _ in range(cfg.refine_rounds):
            box = _box_lattice(point, spacing, cfg.resolution)
            box_vals = _evaluate_many(tensor, box)
            _, cand = _best_point(box, box_vals)
            cand_val = tensor.evaluate(cand)
            if cand_val < best:
                best, point = cand_val, cand
            spacing = 2.0 * spacing / cfg.resolution

    scale = 1.0 + tensor.max_abs_entry()
    return OracleResult(
        min_value=best,
        argmin=point,
        resolution_used=cfg.resolution,
        classification=classify(best, cfg.band, scale),
    )


def classify(min_value: float, band: float, scale: float = 1.0) -> Classification:
    """Three-way sign call on a grid minimum.

    Below ``-band*scale`` the tensor is definitely not copositive (a
    negative value was evaluated).  Above ``+band*scale`` it is copositive
    up to the band.  An exact 0.0 -- the signature of a boundary form whose
    minimum sits on the lattice, or of the zero tensor -- counts as within
    any positive band, but with ``band == 0`` a zero minimum stays
    indeterminate: the grid alone cannot separate a boundary root from a
    sign change.  Anything else is too close to zero to call.
    """
    threshold = band * scale
    if min_value < -threshold:
        return Classification.NOT_COPOSITIVE
    if min_value > threshold or (min_value == 0.0 and threshold > 0):
        return Classification.COPOSITIVE_UP_TO_BAND
    return Classification.INDETERMINATE
