"""Canonical storage and evaluation of real symmetric tensors.

A symmetric tensor of order ``m`` and dimension ``n`` is stored as a map
from canonical multi-indices to float entries.  A multi-index is a 1-based
tuple ``(i_1, ..., i_m)``; its canonical form is sorted non-decreasing, so
the map holds one value per permutation class -- ``C(n+m-1, m)`` possible
keys.  Absent keys read as zero.  Evaluation weighs each stored entry by
the number of distinct permutations of its index, which makes

    T.evaluate(x) == sum over all ordered index tuples of T[idx] * prod(x_i)

without ever materialising the full ``n**m`` array.

Tensors are immutable after construction; ``scale``, ``add`` and ``slice``
return new objects.  Dimensions above 3 are supported generically (the
closed-form criteria in :mod:`copos.criteria` restrict shape themselves).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

Index = tuple[int, ...]
Vector = tuple[float, ...]


def canonicalize(idx: Sequence[int], dim: int) -> Index:
    """Sorted (non-decreasing) form of a 1-based multi-index.

    Raises ValueError if any component falls outside ``1..dim``.
    """
    out = tuple(sorted(int(i) for i in idx))
    if out and (out[0] < 1 or out[-1] > dim):
        raise ValueError(f"index {tuple(idx)} has components outside 1..{dim}")
    return out


def multiplicity(idx: Sequence[int]) -> int:
    """Number of distinct permutations of a multi-index.

    For an index with component counts ``c_1, ..., c_k`` this is the
    multinomial ``m! / (c_1! * ... * c_k!)``.
    """
    m = len(idx)
    out = math.factorial(m)
    for c in Counter(idx).values():
        out //= math.factorial(c)
    return out


def all_indices(order: int, dim: int) -> Iterator[Index]:
    """All canonical multi-indices of the given shape, lexicographically."""
    return itertools.combinations_with_replacement(range(1, dim + 1), order)


@dataclass(frozen=True, eq=False)
class SymmetricTensor:
    """Immutable symmetric tensor in canonical-entry storage.

    ``entries`` maps canonical indices to floats and is treated as frozen;
    use :func:`build` (which validates and canonicalizes) rather than the
    raw constructor.
    """

    order: int
    dim: int
    entries: Mapping[Index, float] = field(default_factory=dict)

    def get(self, idx: Sequence[int]) -> float:
        """Entry at ``idx`` (any permutation); absent entries are 0."""
        return self.entries.get(canonicalize(idx, self.dim), 0.0)

    def evaluate(self, x: Sequence[float]) -> float:
        """The homogeneous form ``T x^m`` at a point with ``dim`` components."""
        if len(x) != self.dim:
            raise ValueError(f"point has {len(x)} components, tensor dimension is {self.dim}")
        acc = 0.0
        for idx, value in sorted(self.entries.items()):
            monom = x[idx[0] - 1]
            for j in idx[1:]:
                monom *= x[j - 1]
            acc += multiplicity(idx) * value * monom
        return acc

    def slice(self, i: int) -> "SymmetricTensor":
        """Order ``m-1`` tensor ``S`` with ``S[j_2..j_m] = T[i, j_2..j_m]``."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"slice index {i} outside 1..{self.dim}")
        out: dict[Index, float] = {}
        for rest in all_indices(self.order - 1, self.dim):
            v = self.get((i, *rest))
            if v != 0.0:
                out[rest] = v
        return SymmetricTensor(self.order - 1, self.dim, out)

    def scale(self, c: float) -> "SymmetricTensor":
        return SymmetricTensor(self.order, self.dim, {k: c * v for k, v in self.entries.items()})

    def add(self, other: "SymmetricTensor") -> "SymmetricTensor":
        if (self.order, self.dim) != (other.order, other.dim):
            raise ValueError("shape mismatch: cannot add "
                             f"({self.order},{self.dim}) and ({other.order},{other.dim})")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0.0) + v
        return SymmetricTensor(self.order, self.dim, out)

    def max_abs_entry(self) -> float:
        return max((abs(v) for v in self.entries.values()), default=0.0)

    def weighted_terms(self) -> list[tuple[Index, float]]:
        """Sorted ``(index, multiplicity * value)`` pairs, for evaluation loops."""
        return [(idx, multiplicity(idx) * value) for idx, value in sorted(self.entries.items())]

    def __eq__(self, other: object) -> bool:
        # semantic equality: absent keys count as zero
        if not isinstance(other, SymmetricTensor):
            return NotImplemented
        if (self.order, self.dim) != (other.order, other.dim):
            return False
        return all(self.get(idx) == other.get(idx) for idx in all_indices(self.order, self.dim))

    def __repr__(self) -> str:
        return f"SymmetricTensor(order={self.order}, dim={self.dim}, {len(self.entries)} entries)"


def build(order: int, dim: int,
          entries: Mapping[Sequence[int], float] | Iterable[tuple[Sequence[int], float]],
          ) -> SymmetricTensor:
    """Construct a tensor from (index, value) pairs in any index order.

    Indices are canonicalized; two pairs may name the same permutation
    class only if their values are exactly equal.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    items = entries.items() if isinstance(entries, Mapping) else entries
    out: dict[Index, float] = {}
    for idx, value in items:
        key = canonicalize(idx, dim)
        if len(key) != order:
            raise ValueError(f"index {tuple(idx)} has {len(key)} components, expected {order}")
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"entry {key} is not finite: {value}")
        if key in out and out[key] != value:
            raise ValueError(f"conflicting values for entry {key}: {out[key]} vs {value}")
        out[key] = value
    return SymmetricTensor(order, dim, out)


def zero(order: int, dim: int) -> SymmetricTensor:
    """The zero tensor of the given shape."""
    return build(order, dim, {})
