"""Spot-check the inclusion sets on random symmetric tensors.

Dimension 2 uses the exact solver; dimension 3 falls back to shifted power
iteration from both ends of the spectrum. Sets whose boundaries come from
strict/non-strict bookkeeping are fattened by a tiny eps first.

    python demos/random_containment.py [count] [seed]
"""
import itertools
import sys

import numpy as np

from hbounds import Tensor, heig_exact_n2, verify_containment
from hbounds.heig import sshopm_both_ends
from hbounds.inclusion import all_sets


def random_symmetric(rng, m, n):
    data = np.zeros((n,) * m)
    for idx in itertools.combinations_with_replacement(range(n), m):
        v = rng.integers(-3, 4)
        for perm in set(itertools.permutations(idx)):
            data[perm] = v
    return Tensor(data)


count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
rng = np.random.default_rng(int(sys.argv[2]) if len(sys.argv) > 2 else 0)
misses = 0
eigs = 0
for k in range(count):
    A = random_symmetric(rng, (2, 4)[k % 2], (2, 3)[(k // 2) % 2])
    pairs = heig_exact_n2(A) if A.dim == 2 else sshopm_both_ends(A, starts=20)
    rows = verify_containment(A, pairs, all_sets(A))
    eigs += len(rows)
    misses += sum(not r.ok for r in rows)
print(f"{eigs} eigenvalues from {count} tensors, {misses} outside some set")
