"""Shared helpers: an independent naive evaluator and random generators.

The naive evaluator sums over all n**m ordered index tuples, so it shares
no code with SymmetricTensor.evaluate beyond entry lookup; tests use it as
the ground truth for the multiplicity-weighted fast path.
"""

import itertools

import numpy as np
import pytest

from copos import all_indices, build

SHAPES = ((3, 2), (3, 3), (4, 2), (4, 3))


def naive_evaluate(tensor, x):
    acc = 0.0
    for idx in itertools.product(range(1, tensor.dim + 1), repeat=tensor.order):
        term = tensor.get(idx)
        for i in idx:
            term *= x[i - 1]
        acc += term
    return acc


def random_tensor(rng, order, dim, lo=-1.0, hi=1.0):
    return build(order, dim,
                 {idx: rng.uniform(lo, hi) for idx in all_indices(order, dim)})


def random_point(rng, dim, lo=0.0, hi=1.0):
    return tuple(rng.uniform(lo, hi) for _ in range(dim))


def rel_err(got, want):
    return abs(got - want) / max(1.0, abs(want))


@pytest.fixture
def rng():
    return np.random.default_rng(20250818)
