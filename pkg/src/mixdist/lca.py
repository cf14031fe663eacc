"""Constant-time lowest common ancestor queries.

Classic reduction: an Euler tour of the tree turns LCA into a range-minimum
query over tour depths, answered in O(1) from a sparse table built in
O(N log N). The table rows are numpy int32 so a tree with 2**17 leaves
stays a few tens of megabytes.

`tree.lca_naive` (parent walk-up) is the oracle this index is tested
against; both tie-break identically because the minimum-depth node in the
tour range is unique (it is the LCA).
"""

from __future__ import annotations

import numpy as np

from .tree import MixtureTree


class LcaIndex:
    """Euler-tour sparse-table RMQ over one tree.

    query(u, v) returns the LCA node id; query(u, u) returns u. When two
    tour positions tie on depth, the smaller position wins, which makes
    every internal choice deterministic.
    """

    __slots__ = ("tree", "tour", "depth", "first", "table", "log2")

    def __init__(self, tree: MixtureTree):
        self.tree = tree
        node_count = tree.node_count
        left, right, level = tree.left, tree.right, tree.level

        tour = []
        first = [-1] * node_count
        # Iterative Euler tour: an internal node appears before, between
        # and after its two child tours.
        stack = [(0, 0)]
        while stack:
            v, phase = stack.pop()
            if first[v] < 0:
                first[v] = len(tour)
            tour.append(v)
            if left[v] < 0:
                continue
            if phase == 0:
                stack.append((v, 1))
                stack.append((left[v], 0))
            elif phase == 1:
                stack.append((v, 2))
                stack.append((right[v], 0))

        m = len(tour)
        self.tour = tour
        self.first = first
        depth = np.fromiter((level[v] for v in tour), dtype=np.int32, count=m)
        self.depth = depth

        log2 = [0] * (m + 1)
        for i in range(2, m + 1):
            log2[i] = log2[i >> 1] + 1
        self.log2 = log2

        rows = [np.arange(m, dtype=np.int32)]
        k = 1
        while (1 << k) <= m:
            half = 1 << (k - 1)
            prev = rows[-1]
            a = prev[: m - (half << 1) + 1]
            b = prev[half : half + a.shape[0]]
            # Strict < keeps the left (smaller) position on depth ties.
            rows.append(np.where(depth[b] < depth[a], b, a))
            k += 1
        self.table = rows

    def query(self, u: int, v: int) -> int:
        l = self.first[u]
        r = self.first[v]
        if l > r:
            l, r = r, l
        k = self.log2[r - l + 1]
        row = self.table[k]
        i = int(row[l])
        j = int(row[r - (1 << k) + 1])
        depth = self.depth
        if depth[j] < depth[i] or (depth[j] == depth[i] and j < i):
            i = j
        return self.tour[i]

    def query_many(self, us, vs) -> np.ndarray:
        """Vectorized query over parallel index arrays of node ids."""
        first = np.asarray(self.first, dtype=np.int64)
        l = first[np.asarray(us, dtype=np.int64)]
        r = first[np.asarray(vs, dtype=np.int64)]
        l, r = np.minimum(l, r), np.maximum(l, r)
        log2 = np.asarray(self.log2, dtype=np.int64)
        k = log2[r - l + 1]
        depth = self.depth
        out = np.empty(l.shape[0], dtype=np.int64)
        tour = np.asarray(self.tour, dtype=np.int64)
        for kk in np.unique(k):
            sel = k == kk
            row = self.table[kk]
            i = row[l[sel]].astype(np.int64)
            j = row[r[sel] - (1 << int(kk)) + 1].astype(np.int64)
            di, dj = depth[i], depth[j]
            pick_j = (dj < di) | ((dj == di) & (j < i))
            out[sel] = tour[np.where(pick_j, j, i)]
        return out


def build_index(tree: MixtureTree) -> LcaIndex:
    return LcaIndex(tree)
