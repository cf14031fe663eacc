"""Nodal distance: the topology-only baseline metric.

Sums |path_T1(u,v) - path_T2(u,v)| over unordered leaf pairs, where the
path length counts edges (level[u] + level[v] - 2*level[lca]). Mutation
times are invisible to it, which is exactly the discrimination gap the
mixture distance closes: same-topology trees with different times give
nodal 0 but mixture > 0.

O(n^2) pairs, evaluated row-by-row with vectorized LCA batches so memory
stays O(n).
"""

from __future__ import annotations

import numpy as np

from .lca import LcaIndex
from .tree import MixtureTree, check_comparable


def nodal_distance(t1: MixtureTree, t2: MixtureTree) -> int:
    """Integer edge-count distance; symmetric, triangle inequality holds."""
    bij = check_comparable(t1, t2)
    n = t1.n
    if n < 2:
        return 0
    i1 = LcaIndex(t1)
    i2 = LcaIndex(t2)
    leaves1 = np.array(t1.leaf_ids, dtype=np.int64)
    image = np.array([bij[int(x)] for x in leaves1], dtype=np.int64)
    lev1 = np.array(t1.level, dtype=np.int64)
    lev2 = np.array(t2.level, dtype=np.int64)

    total = 0
    for i in range(n - 1):
        ys1 = leaves1[i + 1 :]
        xs1 = np.full(ys1.shape[0], leaves1[i], dtype=np.int64)
        ys2 = image[i + 1 :]
        xs2 = np.full(ys2.shape[0], image[i], dtype=np.int64)
        a = i1.query_many(xs1, ys1)
        b = i2.query_many(xs2, ys2)
        p1 = lev1[xs1] + lev1[ys1] - 2 * lev1[a]
        p2 = lev2[xs2] + lev2[ys2] - 2 * lev2[b]
        total += int(np.abs(p1 - p2).sum())
    return total
