"""The improved three-stage mixture-distance engine, O(nh) time.

h is the smaller of the two heights; the shorter input is processed as
T1 (ties keep the argument order). The insight: the 2-coloring sweep for
an internal node v of T1 only needs the part of T2 that touches v's
leaves, i.e. the minimal compressed subtree of T2 spanning leaf(v).

Stage 1  rank T2's leaves 1..n in postorder (left-to-right) and give each
         T1 leaf the rank of its label-matched image.
Stage 2  walking T1's internal nodes deepest-first, build leaf(v) by
         two-way merge of the children's ranked lists (left side red,
         right side green), then build the minimal virtual subtree of T2
         over those leaves.
Stage 3  run the coloring count on the virtual subtree: every red-green
         pair is counted at its T2 LCA, which the virtual tree preserves.

A node's ranked list is released once its parent consumes it, keeping
live list memory O(n). Per level the lists sum to at most n entries,
which is where the O(nh) bound comes from.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInputError
from .lca import LcaIndex
from .tree import MixtureTree, check_comparable, postorder_leaf_ranks
from .distance import _checked, check_distance_bound

RED = 0
GREEN = 1


def rank_leaves(t1: MixtureTree, t2: MixtureTree, bij: dict) -> tuple[dict, dict]:
    """Rank maps (t1 leaf -> rank, t2 leaf -> rank); T2's postorder is the
    shared rank space and T1 leaves inherit through the bijection."""
    rank2 = postorder_leaf_ranks(t2)
    rank1 = {x: rank2[bij[x]] for x in t1.leaf_ids}
    return rank1, rank2


def merge_leaf_lists(left, right) -> list:
    """Two-way merge of ranked lists into (rank, t2_leaf, color) entries.

    Colors are assigned by side (left red, right green), overriding any
    colors the entries carried at the previous, deeper level.
    """
    out = []
    i = j = 0
    nl, nr = len(left), len(right)
    while i < nl and j < nr:
        a = left[i]
        b = right[j]
        if a[0] < b[0]:
            out.append((a[0], a[1], RED))
            i += 1
        else:
            out.append((b[0], b[1], GREEN))
            j += 1
    while i < nl:
        a = left[i]
        out.append((a[0], a[1], RED))
        i += 1
    while j < nr:
        b = right[j]
        out.append((b[0], b[1], GREEN))
        j += 1
    return out


@dataclass
class VirtualSubtree:
    """Minimal compressed subtree of T2 spanning a ranked leaf list.

    Parallel per-virtual-node arrays; `edges` holds (parent, child) pairs
    in attachment order, which is bottom-up: a child's subtree is complete
    before its edge is emitted. `red`/`green` are the leaf color vectors,
    zero for internal nodes.
    """

    origin: list[int]  # virtual node -> T2 node id
    time: list[int]  # mutation time copied from T2 (0 for leaves)
    red: list[int]
    green: list[int]
    edges: list[tuple[int, int]]
    root: int

    def children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for p, c in self.edges:
            out.setdefault(p, []).append(c)
        return out


def build_virtual_subtree(t2: MixtureTree, index: LcaIndex, leaves) -> VirtualSubtree:
    """Single left-to-right pass keeping the rightmost path on a stack.

    For each next leaf w, the LCA a of w with the previous leaf tells how
    far up the rightmost path closes: nodes deeper than a are popped and
    attached, a is pushed if new, then w. Internal virtual nodes come out
    as exactly the deduplicated consecutive-pair LCAs. Depths compare by
    T2 level, which is tie-free; mutation times may tie under weak
    monotonicity.
    """
    if len(leaves) < 2:
        raise DegenerateInputError(f"virtual subtree needs at least 2 leaves, got {len(leaves)}")
    level2 = t2.level
    time2 = t2.time

    origin: list[int] = []
    time: list[int] = []
    red: list[int] = []
    green: list[int] = []
    edges: list[tuple[int, int]] = []
    stack: list[int] = []

    def add(node: int, r: int, g: int) -> int:
        origin.append(node)
        time.append(time2[node])
        red.append(r)
        green.append(g)
        return len(origin) - 1

    query = index.query
    first = leaves[0]
    prev_leaf = first[1]
    stack.append(add(prev_leaf, 1 - first[2], first[2]))
    for entry in leaves[1:]:
        w = entry[1]
        a = query(prev_leaf, w)
        la = level2[a]
        while len(stack) >= 2 and level2[origin[stack[-2]]] >= la:
            edges.append((stack[-2], stack[-1]))
            stack.pop()
        top = stack[-1]
        if level2[origin[top]] > la:
            va = add(a, 0, 0)
            edges.append((va, top))
            stack[-1] = va
        else:
            # Two ancestors of the previous leaf at one level coincide.
            assert origin[top] == a
        stack.append(add(w, 1 - entry[2], entry[2]))
        prev_leaf = w
    while len(stack) >= 2:
        edges.append((stack[-2], stack[-1]))
        stack.pop()
    return VirtualSubtree(origin, time, red, green, edges, stack[0])


def partial_distance(v_time: int, vt: VirtualSubtree) -> int:
    """Coloring count over a virtual subtree: sum over its internal nodes
    of |v_time - node time| * (red-green pairs meeting there).

    Works directly off the bottom-up edge order: when a child attaches,
    the new pairs are the cross product of its color vector with what the
    parent accumulated so far, which lands on each internal node exactly
    its two children's pair product.
    """
    red = list(vt.red)
    green = list(vt.green)
    time = vt.time
    total = 0
    for p, c in vt.edges:
        num = red[p] * green[c] + green[p] * red[c]
        if num:
            total += abs(v_time - time[p]) * num
        red[p] += red[c]
        green[p] += green[c]
    return total


def mixture_distance_fast(t1: MixtureTree, t2: MixtureTree, stats: dict | None = None) -> int:
    """All three stages; exactly equals the other engines.

    `stats` (optional dict) receives pair_total = total red-green pairs
    counted (must be C(n,2)) and per_level = {T1 level: sum of |leaf(v)|},
    each of which is bounded by n.
    """
    if t2.height < t1.height:
        t1, t2 = t2, t1
    bij = check_comparable(t1, t2)
    check_distance_bound(t1, t2)
    if t1.n < 2:
        return 0
    index = LcaIndex(t2)
    rank1, _ = rank_leaves(t1, t2, bij)

    left1, right1, time1, level1 = t1.left, t1.right, t1.time, t1.level
    lists: dict[int, list] = {}
    total = 0
    pair_total = 0
    per_level: dict[int, int] = {}

    # Descending ids = reverse BFS: every child is handled before its parent.
    for v in range(t1.node_count - 1, -1, -1):
        l = left1[v]
        if l < 0:
            lists[v] = [(rank1[v], bij[v], RED)]
            continue
        left_list = lists.pop(l)
        right_list = lists.pop(right1[v])
        merged = merge_leaf_lists(left_list, right_list)
        vt = build_virtual_subtree(t2, index, merged)
        total += partial_distance(time1[v], vt)
        lists[v] = merged
        if stats is not None:
            lvl = level1[v]
            per_level[lvl] = per_level.get(lvl, 0) + len(merged)
            pair_total += len(left_list) * len(right_list)
    if stats is not None:
        stats["pair_total"] = pair_total
        stats["per_level"] = per_level
    return _checked(total)
