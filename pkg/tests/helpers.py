"""Brute-force oracles and random corpora shared by the tests.

Everything here is written directly from the definitions with plain loops
over multi-indices, independent of the vectorized library code.
"""
import itertools

import numpy as np

from hbounds import Tensor


def tails(order, dim):
    return itertools.product(range(dim), repeat=order - 1)


def brute_row(A, i):
    """(r, beta, gamma, Delta, Theta) of row i by enumeration."""
    m, n = A.order, A.dim
    diag_tail = (i,) * (m - 1)
    off = [A[(i,) + t] for t in tails(m, n) if t != diag_tail]
    beta = max([0.0] + off)
    gamma = min([0.0] + off)
    return (
        sum(abs(v) for v in off),
        beta,
        gamma,
        sum(beta - v for v in off),
        sum(v - gamma for v in off),
    )


def brute_pair(A, i, j):
    """(a_ji, r_j^i, Delta_j^i, Theta_j^i) by enumeration."""
    m, n = A.order, A.dim
    _, beta, gamma, _, _ = brute_row(A, j)
    skip = {(i,) * (m - 1), (j,) * (m - 1)}
    rest = [A[(j,) + t] for t in tails(m, n) if t not in skip]
    return (
        A[(j,) + (i,) * (m - 1)],
        sum(abs(v) for v in rest),
        sum(beta - v for v in rest),
        sum(v - gamma for v in rest),
    )


def brute_apply_power(A, x):
    m, n = A.order, A.dim
    out = np.zeros(n)
    for i in range(n):
        for t in tails(m, n):
            out[i] += A[(i,) + t] * np.prod([x[k] for k in t])
    return out


def random_symmetric(rng, order, dim, lo=-3, hi=3):
    arr = np.zeros((dim,) * order)
    for idx in itertools.combinations_with_replacement(range(dim), order):
        v = rng.integers(lo, hi + 1)
        for p in set(itertools.permutations(idx)):
            arr[p] = v
    return Tensor(arr)


def random_integer(rng, order, dim, lo=-3, hi=3):
    return Tensor(rng.integers(lo, hi + 1, size=(dim,) * order).astype(float))


def random_z_abar(rng, order, dim):
    """Integer tensor whose sign-normalized form is a Z-tensor.

    Off-diagonal entries are nonpositive and diagonals positive; each row is
    then multiplied by a random sign.
    """
    data = -np.abs(rng.integers(-3, 4, size=(dim,) * order)).astype(float)
    idx = np.arange(dim)
    data[(idx,) * order] = rng.integers(1, 13, size=dim)
    signs = rng.choice([-1.0, 1.0], size=dim)
    return Tensor(data * signs.reshape((-1,) + (1,) * (order - 1)))


def with_boosted_diagonal(rng, A, top=12):
    """Add a random positive amount to the diagonal so dominance classes get hit."""
    data = np.array(A.data)
    idx = np.arange(A.dim)
    data[(idx,) * A.order] += rng.integers(0, top + 1, size=A.dim)
    return Tensor(data)


def containment_corpus(count=500, seed=2024):
    """The even-order symmetric corpus: m in {2, 4}, n in {2, 3}, entries in -3..3."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        m = (2, 4)[k % 2]
        n = (2, 3)[(k // 2) % 2]
        yield random_symmetric(rng, m, n)


def subsets(n):
    for r in range(1, n + 1):
        yield from itertools.combinations(range(n), r)


# Outcomes recorded by test_acceptance.py: (criterion, label, passed, detail).
ACCEPTANCE = []


def record(criterion, label, passed, detail=""):
    ACCEPTANCE.append((criterion, label, bool(passed), detail))
    return passed
