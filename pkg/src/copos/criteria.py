"""Closed-form copositivity criteria for symmetric tensors.

Each criterion inspects the canonical entries of an order-3 or order-4
tensor in dimension 2 or 3 (plus two generic strict tests that work for
any shape) and returns a :class:`Certificate`: a verdict together with
every inequality that was checked and its computed value.  Evaluation is
short-circuit free -- all conditions of all branches are computed and
reported even once the outcome is settled.

Verdict semantics.  ``CERTIFIED`` means the inequalities prove the tensor
copositive (strictly copositive for the two generic tests).  ``REFUTED``
is emitted only by the exact tests (the order-3 dimension-2
characterisation and diagonal necessity); for every other criterion a
failed condition list means ``UNKNOWN`` -- the test is sufficient, not
necessary.  Certified-with-failed-branch never happens: the fired branch's
conditions are all satisfied by construction.

Square roots appear only over products of quantities whose signs are
pinned by companion conditions in the same system; radicands that come out
negative (failed sign conditions, or -0.0 style rounding) are clamped to
zero so that every condition row is still computable.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .tensors import SymmetricTensor

_C74 = float(3**7 * 4**3)   # 139968
_C8 = float(3**8)           # 6561
_C64 = float(3**6 * 4)      # 2916
_C34 = float(3**3 * 4)      # 108


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Condition:
    """One checked inequality: its text, the computed margin, and the outcome.

    ``value`` is the left-hand side brought to ``>= 0`` (or ``> 0``) form,
    so a satisfied condition has nonnegative (positive) value up to the
    literal float comparison actually performed.
    """

    description: str
    value: float
    satisfied: bool


@dataclass(frozen=True)
class Certificate:
    criterion_id: str
    outcome: Verdict
    conditions: tuple[Condition, ...]
    branch: Optional[str] = None

    @property
    def certified(self) -> bool:
        return self.outcome is Verdict.CERTIFIED

    @property
    def margin(self) -> float:
        """Smallest condition value; the tightest inequality of the run."""
        return min(c.value for c in self.conditions)


def _ge(desc: str, value: float, strict: bool = False) -> Condition:
    return Condition(desc, value, value > 0 if strict else value >= 0)


def _threshold(desc: str, lhs: float, rhs: float, strict: bool = False) -> Condition:
    # compare lhs to rhs directly; the reported value is the margin
    return Condition(desc, lhs - rhs, lhs > rhs if strict else lhs >= rhs)


def _sqrt0(x: float) -> float:
    """sqrt clamped at zero; negative radicands only arise from rounding or
    from branches whose sign preconditions already failed."""
    return math.sqrt(x) if x > 0 else 0.0


def _require(tensor: SymmetricTensor, order: int, dim: int, name: str) -> None:
    if (tensor.order, tensor.dim) != (order, dim):
        raise ValueError(f"{name} applies to order-{order} dim-{dim} tensors, "
                         f"got order-{tensor.order} dim-{tensor.dim}")


def _verdict(conditions: list[Condition], branches: list[tuple[Optional[str], list[Condition]]],
             criterion_id: str, on_fail: Verdict) -> Certificate:
    for name, conds in branches:
        if all(c.satisfied for c in conds):
            return Certificate(criterion_id, Verdict.CERTIFIED, tuple(conditions), name)
    return Certificate(criterion_id, on_fail, tuple(conditions), None)


# ---------------------------------------------------------------------------
# diagonal necessity (any shape)

def diag_necessity(tensor: SymmetricTensor) -> Certificate:
    """Necessary condition: every diagonal entry T[i,...,i] must be >= 0.

    A negative diagonal refutes copositivity outright (take x = e_i);
    otherwise the test says nothing.
    """
    conds = [_ge(f"g[{str(i) * tensor.order}] >= 0", tensor.get((i,) * tensor.order))
             for i in range(1, tensor.dim + 1)]
    outcome = Verdict.REFUTED if not all(c.satisfied for c in conds) else Verdict.UNKNOWN
    return Certificate("diag", outcome, tuple(conds))


# ---------------------------------------------------------------------------
# order 3, dimension 2

def thm31_exact_c3d2(tensor: SymmetricTensor) -> Certificate:
    """Exact characterisation for order-3 dim-2: copositive iff (1) or (2).

    (1) all four entries nonnegative; (2) max(g111, g222) > 0, both
    diagonals nonnegative, and the half-line cubic discriminant combination
    4*g111*g122^3 + 4*g112^3*g222 + g111^2*g222^2
      - 6*g111*g112*g122*g222 - 3*g112^2*g122^2 >= 0.
    Failure of both systems refutes.
    """
    _require(tensor, 3, 2, "thm3.1")
    g111, g112 = tensor.get((1, 1, 1)), tensor.get((1, 1, 2))
    g122, g222 = tensor.get((1, 2, 2)), tensor.get((2, 2, 2))
    disc = (4.0 * g111 * g122**3 + 4.0 * g112**3 * g222 + g111**2 * g222**2
            - 6.0 * g111 * g112 * g122 * g222 - 3.0 * g112**2 * g122**2)
    sys1 = [
        _ge("(1) g111 >= 0", g111),
        _ge("(1) g112 >= 0", g112),
        _ge("(1) g122 >= 0", g122),
        _ge("(1) g222 >= 0", g222),
    ]
    sys2 = [
        _ge("(2) max(g111, g222) > 0", max(g111, g222), strict=True),
        _ge("(2) g111 >= 0", g111),
        _ge("(2) g222 >= 0", g222),
        _ge("(2) 4*g111*g122^3 + 4*g112^3*g222 + g111^2*g222^2"
            " - 6*g111*g112*g122*g222 - 3*g112^2*g122^2 >= 0", disc),
    ]
    return _verdict(sys1 + sys2, [("(1)", sys1), ("(2)", sys2)], "thm3.1", Verdict.REFUTED)


def thm32_sqrt_c3d2(tensor: SymmetricTensor) -> Certificate:
    """Sufficient square-root bound for order-3 dim-2 copositivity."""
    _require(tensor, 3, 2, "thm3.2")
    g111, g112 = tensor.get((1, 1, 1)), tensor.get((1, 1, 2))
    g122, g222 = tensor.get((1, 2, 2)), tensor.get((2, 2, 2))
    root = _sqrt0(g111 * g222)
    conds = [
        _ge("g111 >= 0", g111),
        _ge("g222 >= 0", g222),
        _threshold("g112 >= (g111 - 2*sqrt(g111*g222))/3", g112, (g111 - 2.0 * root) / 3.0),
        _threshold("g122 >= (g222 - 2*sqrt(g111*g222))/3", g122, (g222 - 2.0 * root) / 3.0),
    ]
    return _verdict(conds, [(None, conds)], "thm3.2", Verdict.UNKNOWN)


def thm33_mixed_c3d2(tensor: SymmetricTensor) -> Certificate:
    """Sufficient mixed-sign test for order-3 dim-2: one cross entry may be
    negative if the opposite one compensates through a square-root bound."""
    _require(tensor, 3, 2, "thm3.3")
    g111, g112 = tensor.get((1, 1, 1)), tensor.get((1, 1, 2))
    g122, g222 = tensor.get((1, 2, 2)), tensor.get((2, 2, 2))
    sys1 = [
        _ge("(1) g111 >= 0", g111),
        _ge("(1) g222 >= 0", g222),
        _ge("(1) g122 >= 0", g122),
        _threshold("(1) g112 >= -(2/3)*sqrt(3*g122*g111)", g112,
                   -2.0 * _sqrt0(3.0 * g122 * g111) / 3.0),
    ]
    sys2 = [
        _ge("(2) g111 >= 0", g111),
        _ge("(2) g222 >= 0", g222),
        _ge("(2) g112 >= 0", g112),
        _threshold("(2) g122 >= -(2/3)*sqrt(3*g112*g222)", g122,
                   -2.0 * _sqrt0(3.0 * g112 * g222) / 3.0),
    ]
    return _verdict(sys1 + sys2, [("(1)", sys1), ("(2)", sys2)], "thm3.3", Verdict.UNKNOWN)


# ---------------------------------------------------------------------------
# order 3, dimension 3

def _pair_disc3(gaaa: float, gaab: float, gabb: float, gbbb: float) -> float:
    return (32.0 * gaaa * gabb**3 + 32.0 * gaab**3 * gbbb + gaaa**2 * gbbb**2
            - 24.0 * gaaa * gaab * gabb * gbbb - 48.0 * gaab**2 * gabb**2)


def thm34_disc_c3d3(tensor: SymmetricTensor) -> Certificate:
    """Sufficient test for order-3 dim-3: nonnegative diagonals and g123,
    plus one discriminant inequality per coordinate pair."""
    _require(tensor, 3, 3, "thm3.4")
    g = tensor.get
    conds = [
        _ge("g111 >= 0", g((1, 1, 1))),
        _ge("g222 >= 0", g((2, 2, 2))),
        _ge("g333 >= 0", g((3, 3, 3))),
        _ge("g123 >= 0", g((1, 2, 3))),
    ]
    for i, j in ((1, 2), (1, 3), (2, 3)):
        disc = _pair_disc3(g((i,) * 3), g((i, i, j)), g((i, j, j)), g((j,) * 3))
        conds.append(_ge(
            f"32*g{i}{i}{i}*g{i}{j}{j}^3 + 32*g{i}{i}{j}^3*g{j}{j}{j} + g{i}{i}{i}^2*g{j}{j}{j}^2"
            f" - 24*g{i}{i}{i}*g{i}{i}{j}*g{i}{j}{j}*g{j}{j}{j}"
            f" - 48*g{i}{i}{j}^2*g{i}{j}{j}^2 >= 0", disc))
    return _verdict(conds, [(None, conds)], "thm3.4", Verdict.UNKNOWN)


def thm35_sqrt_c3d3(tensor: SymmetricTensor) -> Certificate:
    """Sufficient square-root bounds for order-3 dim-3, pair by pair."""
    _require(tensor, 3, 3, "thm3.5")
    g = tensor.get
    conds = [
        _ge("g111 >= 0", g((1, 1, 1))),
        _ge("g222 >= 0", g((2, 2, 2))),
        _ge("g333 >= 0", g((3, 3, 3))),
        _ge("g123 >= 0", g((1, 2, 3))),
    ]
    for i, j in ((1, 2), (1, 3), (2, 3)):
        gi, gj = g((i,) * 3), g((j,) * 3)
        root = _sqrt0(gi * gj)
        conds.append(_threshold(
            f"g{i}{i}{j} >= (g{i}{i}{i} - 2*sqrt(g{i}{i}{i}*g{j}{j}{j}))/6",
            g((i, i, j)), (gi - 2.0 * root) / 6.0))
        conds.append(_threshold(
            f"g{i}{j}{j} >= (g{j}{j}{j} - 2*sqrt(g{i}{i}{i}*g{j}{j}{j}))/6",
            g((i, j, j)), (gj - 2.0 * root) / 6.0))
    return _verdict(conds, [(None, conds)], "thm3.5", Verdict.UNKNOWN)


# ---------------------------------------------------------------------------
# order 4, dimension 2

def thm41_disc_c4d2(tensor: SymmetricTensor) -> Certificate:
    """Sufficient discriminant test for order-4 dim-2 with positive diagonals."""
    _require(tensor, 4, 2, "thm4.1")
    a1111, a1112 = tensor.get((1, 1, 1, 1)), tensor.get((1, 1, 1, 2))
    a1122, a1222 = tensor.get((1, 1, 2, 2)), tensor.get((1, 2, 2, 2))
    a2222 = tensor.get((2, 2, 2, 2))
    pre = [
        _ge("a1111 > 0", a1111, strict=True),
        _ge("a2222 > 0", a2222, strict=True),
    ]
    disc1 = (54.0 * a1111 * a1122**3 + 64.0 * a1112**3 * a1222 + 27.0 * a1111**2 * a1222**2
             - 108.0 * a1111 * a1112 * a1122 * a1222 - 36.0 * a1112**2 * a1122**2)
    disc2 = (64.0 * a1112 * a1222**3 + 54.0 * a1122**3 * a2222 + 27.0 * a1112**2 * a2222**2
             - 108.0 * a1112 * a1122 * a1222 * a2222 - 36.0 * a1122**2 * a1222**2)
    sys1 = [
        _ge("(1) a1222 >= 0", a1222),
        _ge("(1) 54*a1111*a1122^3 + 64*a1112^3*a1222 + 27*a1111^2*a1222^2"
            " - 108*a1111*a1112*a1122*a1222 - 36*a1112^2*a1122^2 >= 0", disc1),
    ]
    sys2 = [
        _ge("(2) a1112 >= 0", a1112),
        _ge("(2) 64*a1112*a1222^3 + 54*a1122^3*a2222 + 27*a1112^2*a2222^2"
            " - 108*a1112*a1122*a1222*a2222 - 36*a1122^2*a1222^2 >= 0", disc2),
    ]
    return _verdict(pre + sys1 + sys2,
                    [("(1)", pre + sys1), ("(2)", pre + sys2)],
                    "thm4.1", Verdict.UNKNOWN)


def thm42_sqrt_c4d2(tensor: SymmetricTensor) -> Certificate:
    """Sufficient square-root test for order-4 dim-2."""
    _require(tensor, 4, 2, "thm4.2")
    a1111, a1112 = tensor.get((1, 1, 1, 1)), tensor.get((1, 1, 1, 2))
    a1122, a1222 = tensor.get((1, 1, 2, 2)), tensor.get((1, 2, 2, 2))
    a2222 = tensor.get((2, 2, 2, 2))
    pre = [
        _ge("a1111 >= 0", a1111),
        _ge("a2222 >= 0", a2222),
    ]
    # Each branch is the order-3 square-root test applied to one cubic
    # cofactor of Ax^4 = x1*f(x) + a2222*x2^4 = a1111*x1^4 + x2*g(x).
    # The a1122 thresholds carry a single radical; with the cofactor
    # scaling gamma122 = 2*a1122 a doubled radical over-certifies.
    r1 = _sqrt0(a1111 * a1222)
    sys1 = [
        _ge("(1) a1222 >= 0", a1222),
        _threshold("(1) a1112 >= a1111/4 - sqrt(a1111*a1222)", a1112, a1111 / 4.0 - r1),
        _threshold("(1) a1122 >= (2/3)*(a1222 - sqrt(a1111*a1222))",
                   a1122, 2.0 * (a1222 - r1) / 3.0),
    ]
    r2 = _sqrt0(a1112 * a2222)
    sys2 = [
        _ge("(2) a1112 >= 0", a1112),
        _threshold("(2) a1222 >= a2222/4 - sqrt(a1112*a2222)", a1222, a2222 / 4.0 - r2),
        _threshold("(2) a1122 >= (2/3)*(a1112 - sqrt(a1112*a2222))",
                   a1122, 2.0 * (a1112 - r2) / 3.0),
    ]
    return _verdict(pre + sys1 + sys2,
                    [("(1)", pre + sys1), ("(2)", pre + sys2)],
                    "thm4.2", Verdict.UNKNOWN)


# ---------------------------------------------------------------------------
# order 4, dimension 3

def _pair_disc4(alpha: float, beta: float, gamma: float, delta: float) -> float:
    # discriminant combination of the boundary cubics 4a t^3 + 6b t^2 + 6c t + 4d
    return (8.0 * alpha * gamma**3 + 8.0 * beta**3 * delta + 16.0 * alpha**2 * delta**2
            - 24.0 * alpha * beta * gamma * delta - 3.0 * beta**2 * gamma**2)


def thm43_disc_c4d3(tensor: SymmetricTensor) -> Certificate:
    """Sufficient test for order-4 dim-3 built from boundary-cubic
    discriminants and pairwise quadratic conditions."""
    _require(tensor, 4, 3, "thm4.3")
    a = tensor.get
    a1111, a2222, a3333 = a((1,) * 4), a((2,) * 4), a((3,) * 4)
    a1112, a1113 = a((1, 1, 1, 2)), a((1, 1, 1, 3))
    a1222, a2223 = a((1, 2, 2, 2)), a((2, 2, 2, 3))
    a1333, a2333 = a((1, 3, 3, 3)), a((2, 3, 3, 3))
    a1122, a1133, a2233 = a((1, 1, 2, 2)), a((1, 1, 3, 3)), a((2, 2, 3, 3))
    a1123, a1223, a1233 = a((1, 1, 2, 3)), a((1, 2, 2, 3)), a((1, 2, 3, 3))
    conds = [
        _ge("a1111 >= 0", a1111),
        _ge("a2222 >= 0", a2222),
        _ge("a3333 >= 0", a3333),
        _ge("a1112 >= 0", a1112),
        _ge("a1113 >= 0", a1113),
        _ge("a1222 >= 0", a1222),
        _ge("a2223 >= 0", a2223),
        _ge("a1333 >= 0", a1333),
        _ge("a2333 >= 0", a2333),
        _ge("max(a1222, a1333) > 0", max(a1222, a1333), strict=True),
        _ge("max(a1112, a2333) > 0", max(a1112, a2333), strict=True),
        _ge("max(a1113, a2223) > 0", max(a1113, a2223), strict=True),
        _ge("6*a1122 + sqrt(a1111*a2222) >= 0", 6.0 * a1122 + _sqrt0(a1111 * a2222)),
        _ge("6*a1133 + sqrt(a1111*a3333) >= 0", 6.0 * a1133 + _sqrt0(a1111 * a3333)),
        _ge("6*a2233 + sqrt(a3333*a2222) >= 0", 6.0 * a2233 + _sqrt0(a3333 * a2222)),
        _ge("8*a1222*a1233^3 + 8*a1223^3*a1333 + 16*a1222^2*a1333^2"
            " - 24*a1222*a1223*a1233*a1333 - 3*a1223^2*a1233^2 >= 0",
            _pair_disc4(a1222, a1223, a1233, a1333)),
        _ge("8*a1112*a1233^3 + 8*a1123^3*a2333 + 16*a1112^2*a2333^2"
            " - 24*a1112*a1123*a1233*a2333 - 3*a1123^2*a1233^2 >= 0",
            _pair_disc4(a1112, a1123, a1233, a2333)),
        _ge("8*a1113*a1223^3 + 8*a1123^3*a2223 + 16*a1113^2*a2223^2"
            " - 24*a1113*a1123*a1223*a2223 - 3*a1123^2*a1223^2 >= 0",
            _pair_disc4(a1113, a1123, a1223, a2223)),
    ]
    return _verdict(conds, [(None, conds)], "thm4.3", Verdict.UNKNOWN)


def thm44_sqrt_c4d3(tensor: SymmetricTensor) -> Certificate:
    """Sufficient square-root test for order-4 dim-3."""
    _require(tensor, 4, 3, "thm4.4")
    a = tensor.get
    a1111, a2222, a3333 = a((1,) * 4), a((2,) * 4), a((3,) * 4)
    a1112, a1113 = a((1, 1, 1, 2)), a((1, 1, 1, 3))
    a1222, a2223 = a((1, 2, 2, 2)), a((2, 2, 2, 3))
    a1333, a2333 = a((1, 3, 3, 3)), a((2, 3, 3, 3))
    a1122, a1133, a2233 = a((1, 1, 2, 2)), a((1, 1, 3, 3)), a((2, 2, 3, 3))
    a1123, a1223, a1233 = a((1, 1, 2, 3)), a((1, 2, 2, 3)), a((1, 2, 3, 3))
    conds = [
        _ge("a1111 >= 0", a1111),
        _ge("a2222 >= 0", a2222),
        _ge("a3333 >= 0", a3333),
        _ge("a1112 >= 0", a1112),
        _ge("a1113 >= 0", a1113),
        _ge("a1222 >= 0", a1222),
        _ge("a2223 >= 0", a2223),
        _ge("a1333 >= 0", a1333),
        _ge("a2333 >= 0", a2333),
        _threshold("a1122 >= -sqrt(a1111*a2222)/6", a1122, -_sqrt0(a1111 * a2222) / 6.0),
        _threshold("a1133 >= -sqrt(a1111*a3333)/6", a1133, -_sqrt0(a1111 * a3333) / 6.0),
        _threshold("a2233 >= -sqrt(a3333*a2222)/6", a2233, -_sqrt0(a3333 * a2222) / 6.0),
        # each threshold pairs the two cubic cofactors that share the entry;
        # a1223 sits in the (x2,x3) cofactor of x1 and the (x1,x2) cofactor
        # of x3, so its second arm carries a1113, not a1112
        _threshold("a1223 >= (2/3)*max(a1222 - 2*sqrt(a1222*a1333),"
                   " a2223 - 2*sqrt(a1113*a2223))",
                   a1223, 2.0 * max(a1222 - 2.0 * _sqrt0(a1222 * a1333),
                                    a2223 - 2.0 * _sqrt0(a1113 * a2223)) / 3.0),
        _threshold("a1233 >= (2/3)*max(a2333 - 2*sqrt(a1112*a2333),"
                   " a1333 - 2*sqrt(a1222*a1333))",
                   a1233, 2.0 * max(a2333 - 2.0 * _sqrt0(a1112 * a2333),
                                    a1333 - 2.0 * _sqrt0(a1222 * a1333)) / 3.0),
        _threshold("a1123 >= (2/3)*max(a1113 - 2*sqrt(a1113*a2223),"
                   " a1112 - 2*sqrt(a1112*a2333))",
                   a1123, 2.0 * max(a1113 - 2.0 * _sqrt0(a1113 * a2223),
                                    a1112 - 2.0 * _sqrt0(a1112 * a2333)) / 3.0),
    ]
    return _verdict(conds, [(None, conds)], "thm4.4", Verdict.UNKNOWN)


def thm45_sos_c4d3(tensor: SymmetricTensor, strict: bool = False) -> Certificate:
    """Sufficient test for order-4 dim-3 via a sum-of-squares split.

    Writes A x^4 as a sum of three squares, three cubic cofactors
    x_i * F_i and three quadratic cofactors x_i^2 * p_i, then certifies
    every piece: the q conditions make the p_i copositive and the three
    large inequalities are the exact cubic discriminants of the F_i.

    With ``strict=True`` every non-strict inequality becomes strict and a
    certificate asserts strict copositivity.
    """
    _require(tensor, 4, 3, "thm4.5")
    a = tensor.get
    a1111, a2222, a3333 = a((1,) * 4), a((2,) * 4), a((3,) * 4)
    a1112, a1113 = a((1, 1, 1, 2)), a((1, 1, 1, 3))
    a1222, a2223 = a((1, 2, 2, 2)), a((2, 2, 2, 3))
    a1333, a2333 = a((1, 3, 3, 3)), a((2, 3, 3, 3))
    a1122, a1133, a2233 = a((1, 1, 2, 2)), a((1, 1, 3, 3)), a((2, 2, 3, 3))
    a1123, a1223, a1233 = a((1, 1, 2, 3)), a((1, 2, 2, 3)), a((1, 2, 3, 3))

    q12 = 9.0 * a1122 + _sqrt0(a1111 * a2222)
    q13 = 9.0 * a1133 + _sqrt0(a1111 * a3333)
    q23 = 9.0 * a2233 + _sqrt0(a3333 * a2222)

    d1 = (2.0 * a1111 * q12**3 + _C74 * a1222 * a1112**3 + _C8 * a1111**2 * a1222**2
          - _C64 * a1111 * a1112 * a1222 * q12 - _C34 * a1112**2 * q12**2)
    # d2/d3 are the exact cubic discriminants of the second and third
    # cofactors; in each, the entry next to the strict diagonal is cubed
    # (a2223 for d2, a1333 for d3) and the far corner enters linearly
    d2 = (2.0 * a2222 * q23**3 + _C74 * a2333 * a2223**3 + _C8 * a2222**2 * a2333**2
          - _C64 * a2222 * a2223 * a2333 * q23 - _C34 * a2223**2 * q23**2)
    d3 = (2.0 * a3333 * q13**3 + _C74 * a1113 * a1333**3 + _C8 * a3333**2 * a1113**2
          - _C64 * a3333 * a1113 * a1333 * q13 - _C34 * a1333**2 * q13**2)

    s = strict
    op = ">" if strict else ">="
    conds = [
        _ge("a1111 > 0", a1111, strict=True),
        _ge("a2222 > 0", a2222, strict=True),
        _ge("a3333 > 0", a3333, strict=True),
        _ge(f"a1113 {op} 0", a1113, strict=s),
        _ge(f"a1222 {op} 0", a1222, strict=s),
        _ge(f"a2333 {op} 0", a2333, strict=s),
        _ge(f"9*a1122 + sqrt(a1111*a2222) {op} 0", q12, strict=s),
        _ge(f"9*a1133 + sqrt(a1111*a3333) {op} 0", q13, strict=s),
        _ge(f"9*a2233 + sqrt(a3333*a2222) {op} 0", q23, strict=s),
        _ge(f"27*a1123 + sqrt(q12*q13) {op} 0", 27.0 * a1123 + _sqrt0(q12 * q13), strict=s),
        _ge(f"27*a1223 + sqrt(q12*q23) {op} 0", 27.0 * a1223 + _sqrt0(q12 * q23), strict=s),
        _ge(f"27*a1233 + sqrt(q13*q23) {op} 0", 27.0 * a1233 + _sqrt0(q13 * q23), strict=s),
        _ge("2*a1111*q12^3 + 3^7*4^3*a1222*a1112^3 + 3^8*a1111^2*a1222^2"
            f" - 3^6*4*a1111*a1112*a1222*q12 - 3^3*4*a1112^2*q12^2 {op} 0", d1, strict=s),
        _ge("2*a2222*q23^3 + 3^7*4^3*a2333*a2223^3 + 3^8*a2222^2*a2333^2"
            f" - 3^6*4*a2222*a2223*a2333*q23 - 3^3*4*a2223^2*q23^2 {op} 0", d2, strict=s),
        _ge("2*a3333*q13^3 + 3^7*4^3*a1113*a1333^3 + 3^8*a3333^2*a1113^2"
            f" - 3^6*4*a3333*a1113*a1333*q13 - 3^3*4*a1333^2*q13^2 {op} 0", d3, strict=s),
    ]
    return _verdict(conds, [(None, conds)], "thm4.5", Verdict.UNKNOWN)


def thm4remark_decompose(tensor: SymmetricTensor) -> tuple[SymmetricTensor, ...]:
    """Split an order-4 dim-3 form as A x^4 = sum_i x_i * (G_i x^3).

    Returns the three order-3 dim-3 component tensors G_1, G_2, G_3.  The
    split distributes every monomial of A over the coordinate factors it
    contains, so the identity holds for all x (not just x >= 0).
    """
    _require(tensor, 4, 3, "thm4remark_decompose")
    a = tensor.get
    a1111, a2222, a3333 = a((1,) * 4), a((2,) * 4), a((3,) * 4)
    a1112, a1113 = a((1, 1, 1, 2)), a((1, 1, 1, 3))
    a1222, a2223 = a((1, 2, 2, 2)), a((2, 2, 2, 3))
    a1333, a2333 = a((1, 3, 3, 3)), a((2, 3, 3, 3))
    a1122, a1133, a2233 = a((1, 1, 2, 2)), a((1, 1, 3, 3)), a((2, 2, 3, 3))
    a1123, a1223, a1233 = a((1, 1, 2, 3)), a((1, 2, 2, 3)), a((1, 2, 3, 3))
    g1 = SymmetricTensor(3, 3, {
        (1, 1, 1): a1111,
        (1, 1, 2): 2.0 * a1112 / 3.0,
        (1, 2, 2): a1122,
        (2, 2, 2): 2.0 * a1222,
        (3, 3, 3): 2.0 * a1333,
        (1, 3, 3): a1133,
        (1, 1, 3): 2.0 * a1113 / 3.0,
        (1, 2, 3): 2.0 * a1123 / 3.0,
        (2, 2, 3): 4.0 * a1223 / 3.0,
        (2, 3, 3): 4.0 * a1233 / 3.0,
    })
    g2 = SymmetricTensor(3, 3, {
        (1, 1, 1): 2.0 * a1112,
        (1, 1, 2): a1122,
        (1, 2, 2): 2.0 * a1222 / 3.0,
        (2, 2, 2): a2222,
        (3, 3, 3): 2.0 * a2333,
        (1, 3, 3): 4.0 * a1233 / 3.0,
        (1, 1, 3): 4.0 * a1123 / 3.0,
        (1, 2, 3): 2.0 * a1223 / 3.0,
        (2, 2, 3): 2.0 * a2223 / 3.0,
        (2, 3, 3): a2233,
    })
    g3 = SymmetricTensor(3, 3, {
        (1, 1, 1): 2.0 * a1113,
        (1, 1, 2): 4.0 * a1123 / 3.0,
        (1, 2, 2): 4.0 * a1223 / 3.0,
        (2, 2, 2): 2.0 * a2223,
        (3, 3, 3): a3333,
        (1, 3, 3): 2.0 * a1333 / 3.0,
        (1, 1, 3): a1133,
        (1, 2, 3): 2.0 * a1233 / 3.0,
        (2, 2, 3): a2233,
        (2, 3, 3): 2.0 * a2333 / 3.0,
    })
    return g1, g2, g3


def thm4remark_check(tensor: SymmetricTensor) -> Certificate:
    """Certify an order-4 dim-3 tensor by certifying each component of the
    x_i-split with one of the order-3 dim-3 tests.

    Copositivity of every G_i makes each x_i * (G_i x^3) nonnegative on the
    orthant, hence the sum.
    """
    components = thm4remark_decompose(tensor)
    conds = []
    fired: list[str] = []
    ok = True
    for i, comp in enumerate(components, start=1):
        c34 = thm34_disc_c3d3(comp)
        c35 = thm35_sqrt_c3d3(comp)
        conds.append(Condition(f"component {i} passes thm3.4", c34.margin, c34.certified))
        conds.append(Condition(f"component {i} passes thm3.5", c35.margin, c35.certified))
        if c34.certified:
            fired.append("thm3.4")
        elif c35.certified:
            fired.append("thm3.5")
        else:
            ok = False
    outcome = Verdict.CERTIFIED if ok else Verdict.UNKNOWN
    branch = "(" + ",".join(fired) + ")" if ok else None
    return Certificate("remark", outcome, tuple(conds), branch)


# ---------------------------------------------------------------------------
# generic strict tests (any order >= 2, any dimension)

@functools.lru_cache(maxsize=32)
def _offdiag_slice_keys(order: int, dim: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # for slice i: canonical keys of (i, tail) over ordered tails != (i,..,i)
    out = []
    for i in range(1, dim + 1):
        diag_tail = (i,) * (order - 1)
        keys = [tuple(sorted((i, *tail)))
                for tail in itertools.product(range(1, dim + 1), repeat=order - 1)
                if tail != diag_tail]
        out.append(tuple(keys))
    return tuple(out)


def qi_strict_generic(tensor: SymmetricTensor) -> Certificate:
    """Strict copositivity if every diagonal entry dominates the negative
    mass of its slice, counted over ordered index tuples."""
    if tensor.order < 2:
        raise ValueError("qi requires order >= 2")
    conds = []
    for i in range(1, tensor.dim + 1):
        value = tensor.get((i,) * tensor.order)
        for key in _offdiag_slice_keys(tensor.order, tensor.dim)[i - 1]:
            value += min(tensor.entries.get(key, 0.0), 0.0)
        conds.append(_ge(f"slice {i}: diagonal + sum of negative off-diagonal"
                         " entries (ordered count) > 0", value, strict=True))
    return _verdict(conds, [(None, conds)], "qi", Verdict.UNKNOWN)


def songqi_strict_generic(tensor: SymmetricTensor) -> Certificate:
    """Strict copositivity if every slice sum is positive and its ordered
    mean strictly exceeds every off-diagonal entry of the slice."""
    if tensor.order < 2:
        raise ValueError("songqi requires order >= 2")
    conds = []
    count = float(tensor.dim ** (tensor.order - 1))
    for i in range(1, tensor.dim + 1):
        keys = _offdiag_slice_keys(tensor.order, tensor.dim)[i - 1]
        total = tensor.get((i,) * tensor.order)
        worst = -math.inf
        for key in keys:
            v = tensor.entries.get(key, 0.0)
            total += v
            worst = max(worst, v)
        conds.append(_ge(f"slice {i}: ordered sum > 0", total, strict=True))
        conds.append(_ge(f"slice {i}: mean of ordered sum exceeds every"
                         " off-diagonal entry", total / count - worst, strict=True))
    return _verdict(conds, [(None, conds)], "songqi", Verdict.UNKNOWN)


# ---------------------------------------------------------------------------
# dispatch

_SHAPE_SPECIFIC: dict[tuple[int, int], tuple[Callable[[SymmetricTensor], Certificate], ...]] = {
    (3, 2): (thm31_exact_c3d2, thm32_sqrt_c3d2, thm33_mixed_c3d2),
    (3, 3): (thm34_disc_c3d3, thm35_sqrt_c3d3),
    (4, 2): (thm41_disc_c4d2, thm42_sqrt_c4d2),
    (4, 3): (thm43_disc_c4d3, thm44_sqrt_c4d3, thm45_sos_c4d3, thm4remark_check),
}


def applicable_criteria(order: int, dim: int) -> tuple[str, ...]:
    """Criterion identifiers certify_all runs for this shape, in order."""
    ids = ["diag"]
    for fn in _SHAPE_SPECIFIC.get((order, dim), ()):
        ids.append(_CRITERION_IDS[fn])
    ids += ["qi", "songqi"]
    return tuple(ids)


_CRITERION_IDS: dict[Callable, str] = {
    diag_necessity: "diag",
    thm31_exact_c3d2: "thm3.1",
    thm32_sqrt_c3d2: "thm3.2",
    thm33_mixed_c3d2: "thm3.3",
    thm34_disc_c3d3: "thm3.4",
    thm35_sqrt_c3d3: "thm3.5",
    thm41_disc_c4d2: "thm4.1",
    thm42_sqrt_c4d2: "thm4.2",
    thm43_disc_c4d3: "thm4.3",
    thm44_sqrt_c4d3: "thm4.4",
    thm45_sos_c4d3: "thm4.5",
    thm4remark_check: "remark",
    qi_strict_generic: "qi",
    songqi_strict_generic: "songqi",
}

_RUNNERS: dict[str, Callable[..., Certificate]] = {
    "diag": diag_necessity,
    "thm3.1": thm31_exact_c3d2,
    "thm3.2": thm32_sqrt_c3d2,
    "thm3.3": thm33_mixed_c3d2,
    "thm3.4": thm34_disc_c3d3,
    "thm3.5": thm35_sqrt_c3d3,
    "thm4.1": thm41_disc_c4d2,
    "thm4.2": thm42_sqrt_c4d2,
    "thm4.3": thm43_disc_c4d3,
    "thm4.4": thm44_sqrt_c4d3,
    "thm4.5": thm45_sos_c4d3,
    "remark": thm4remark_check,
    "qi": qi_strict_generic,
    "songqi": songqi_strict_generic,
}


def run_criterion(criterion_id: str, tensor: SymmetricTensor, strict: bool = False) -> Certificate:
    """Run one criterion by identifier.  The strict flag only affects thm4.5."""
    try:
        fn = _RUNNERS[criterion_id]
    except KeyError:
        known = ", ".join(sorted(_RUNNERS))
        raise ValueError(f"unknown criterion {criterion_id!r}; known: {known}") from None
    if criterion_id == "thm4.5":
        return fn(tensor, strict=strict)
    return fn(tensor)


def certify_all(tensor: SymmetricTensor, strict: bool = False) -> list[Certificate]:
    """Run every criterion applicable to the tensor's shape, in fixed order."""
    return [run_criterion(cid, tensor, strict=strict)
            for cid in applicable_criteria(tensor.order, tensor.dim)]


def aggregate(certificates: list[Certificate]) -> Verdict:
    """Combined verdict: any refutation wins, then any certification."""
    outcomes = {c.outcome for c in certificates}
    if Verdict.REFUTED in outcomes:
        return Verdict.REFUTED
    if Verdict.CERTIFIED in outcomes:
        return Verdict.CERTIFIED
    return Verdict.UNKNOWN
