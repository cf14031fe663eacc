"""Mixture distance: brute-force oracle and the O(n^2) 2-coloring engine.

The metric sums |P_T1(u,v) - P_T2(u,v)| over unordered pairs of distinct
leaves, where P_T(u,v) is the mutation time of the pair's lowest common
ancestor. "Unordered" is a deliberate convention shared by every engine
(an ordered sum would just double each term).

Engines
-------
bruteforce : the definition, verbatim, using only parent walk-ups
             (lca_naive). It never touches LcaIndex so that index bugs
             cannot mask engine bugs.
coloring   : for each internal v of T1 (BFS order), color the leaves of
             v's left subtree red and right subtree green, mirror the
             colors onto T2, then sweep T2's internal nodes in reverse
             BFS order counting red-green pairs below each node u via
             (a,b)*(c,d) = ad+bc and adding |m1(v) - m2(u)| * number(u).

Both have a compiled int64 kernel used when the distance bound
n^2 * max_ticks fits 63 bits, and a pure-Python big-integer fallback that
is also the readable reference. Results are exactly equal by contract.

The color scratch is reset between v-iterations with an epoch counter,
not a full clear; a clear per v would break the O(n^2) bound.
"""

from __future__ import annotations

from .errors import DistanceOverflowError, SameLeafError
from .tree import MixtureTree, check_comparable, lca_naive

ACCUMULATOR_BITS = 128
_INT64_SAFE = 2**63
_ACC_LIMIT = 2**ACCUMULATOR_BITS - 1

try:
    import numba
    import numpy as np

    _HAS_NUMBA = True
except ImportError:  # pragma: no cover - the test environment has numba
    _HAS_NUMBA = False


def lca_time(tree: MixtureTree, index, u: int, v: int) -> int:
    """P_T(u,v): mutation time of the LCA of two distinct leaves, in ticks."""
    if u == v:
        raise SameLeafError(f"P_T is defined on distinct leaves, got {u} twice")
    return tree.time[index.query(u, v)]


def pair_product(a, b) -> int:
    """(a,b)*(c,d) = ad + bc: red-green pairs across two color vectors."""
    return a[0] * b[1] + a[1] * b[0]


def distance_bound(t1: MixtureTree, t2: MixtureTree) -> int:
    """Upper bound n^2 * max_ticks used for overflow pre-screening."""
    return t1.n * t1.n * max(t1.max_ticks(), t2.max_ticks(), 1)


def check_distance_bound(t1: MixtureTree, t2: MixtureTree) -> int:
    bound = distance_bound(t1, t2)
    if bound > _ACC_LIMIT:
        raise DistanceOverflowError(
            f"distance bound {bound} exceeds the {ACCUMULATOR_BITS}-bit accumulator range"
        )
    return bound


def _checked(total: int) -> int:
    # Final conversion check of the accumulator contract. Unreachable when
    # the pre-screen passed; kept as a guard on the engines themselves.
    if not 0 <= total <= _ACC_LIMIT:
        raise DistanceOverflowError(f"accumulated distance {total} left the accumulator range")
    return total


def _bijection_array(t1: MixtureTree, t2: MixtureTree, bij: dict):
    arr = np.full(t1.node_count, -1, dtype=np.int64)
    for x, y in bij.items():
        arr[x] = y
    return arr


# --- brute force ------------------------------------------------------------


def mixture_distance_bruteforce(t1: MixtureTree, t2: MixtureTree) -> int:
    """Definition-faithful oracle: enumerate all unordered leaf pairs."""
    bij = check_comparable(t1, t2)
    bound = check_distance_bound(t1, t2)
    if _HAS_NUMBA and bound < _INT64_SAFE:
        a1, a2 = t1.kernel_arrays(), t2.kernel_arrays()
        leaves = np.array(t1.leaf_ids, dtype=np.int64)
        total = int(
            _brute_kernel(
                a1["parent"],
                a1["level"],
                a1["time"],
                a2["parent"],
                a2["level"],
                a2["time"],
                leaves,
                _bijection_array(t1, t2, bij),
            )
        )
        return _checked(total)
    return _checked(_bruteforce_python(t1, t2, bij))


def _bruteforce_python(t1: MixtureTree, t2: MixtureTree, bij: dict) -> int:
    time1, time2 = t1.time, t2.time
    leaves = t1.leaf_ids
    total = 0
    for i, x in enumerate(leaves):
        for y in leaves[i + 1 :]:
            p1 = time1[lca_naive(t1, x, y)]
            p2 = time2[lca_naive(t2, bij[x], bij[y])]
            total += abs(p1 - p2)
    return total


# --- 2-coloring -------------------------------------------------------------


def mixture_distance_coloring(t1: MixtureTree, t2: MixtureTree, stats: dict | None = None) -> int:
    """The O(n^2) algorithm; `stats` (optional dict) receives instrumentation:
    pair_total = sum of number(u) over the whole run, per_v = one
    (red_count, green_count, number_sum) triple per internal v of T1."""
    bij = check_comparable(t1, t2)
    bound = check_distance_bound(t1, t2)
    if stats is None and _HAS_NUMBA and bound < _INT64_SAFE:
        a1, a2 = t1.kernel_arrays(), t2.kernel_arrays()
        total, pairs = _coloring_kernel(
            a1["left"],
            a1["right"],
            a1["time"],
            _bijection_array(t1, t2, bij),
            a2["left"],
            a2["right"],
            a2["time"],
        )
        return _checked(int(total))
    return _checked(_coloring_python(t1, t2, bij, stats))


def _coloring_python(t1: MixtureTree, t2: MixtureTree, bij: dict, stats: dict | None) -> int:
    left1, right1, time1 = t1.left, t1.right, t1.time
    left2, right2, time2 = t2.left, t2.right, t2.time
    nc1, nc2 = t1.node_count, t2.node_count

    red = [0] * nc2
    green = [0] * nc2
    seen = [-1] * nc2  # epoch stamp; a stale entry reads as uncolored
    per_v = []
    pair_total = 0
    total = 0

    # Node ids are BFS order, so ascending ids = BFS and descending = its
    # reverse; leaves are skipped inline.
    for v in range(nc1):
        if left1[v] < 0:
            continue
        vt = time1[v]
        epoch = v
        for child, color in ((left1[v], red), (right1[v], green)):
            stack = [child]
            while stack:
                node = stack.pop()
                if left1[node] < 0:
                    w = bij[node]
                    red[w] = 0
                    green[w] = 0
                    color[w] = 1
                    seen[w] = epoch
                else:
                    stack.append(left1[node])
                    stack.append(right1[node])
        number_sum = 0
        for u in range(nc2 - 1, -1, -1):
            if left2[u] < 0:
                continue
            a, b = left2[u], right2[u]
            ra, ga = (red[a], green[a]) if seen[a] == epoch else (0, 0)
            rb, gb = (red[b], green[b]) if seen[b] == epoch else (0, 0)
            num = ra * gb + ga * rb
            if num:
                total += abs(vt - time2[u]) * num
                number_sum += num
            red[u] = ra + rb
            green[u] = ga + gb
            seen[u] = epoch
        pair_total += number_sum
        if stats is not None:
            root_red = red[0] if seen[0] == epoch else 0
            root_green = green[0] if seen[0] == epoch else 0
            per_v.append((root_red, root_green, number_sum))
    if stats is not None:
        stats["pair_total"] = pair_total
        stats["per_v"] = per_v
    return total


# --- dispatch ---------------------------------------------------------------

ALGORITHMS = ("naive", "coloring", "fast")


def mixture_distance(t1: MixtureTree, t2: MixtureTree, algo: str = "fast") -> int:
    """Dispatch façade over the three interchangeable engines (result in ticks)."""
    if algo == "naive":
        return mixture_distance_bruteforce(t1, t2)
    if algo == "coloring":
        return mixture_distance_coloring(t1, t2)
    if algo == "fast":
        from .fast import mixture_distance_fast

        return mixture_distance_fast(t1, t2)
    raise ValueError(f"unknown algorithm {algo!r}; choose from {ALGORITHMS}")


def max_discrepancy_pair(t1: MixtureTree, t2: MixtureTree):
    """The leaf pair maximizing |P_T1 - P_T2| and that maximum, in ticks.

    Ties break toward the lexicographically smallest (label, label) pair,
    so the answer is invariant under tick rescaling of both trees.
    """
    bij = check_comparable(t1, t2)
    if t1.n < 2:
        raise ValueError("need at least two leaves")
    labels = sorted(t1.label_to_leaf)
    time1, time2 = t1.time, t2.time
    best = None
    best_val = -1
    for i, la in enumerate(labels):
        x1 = t1.label_to_leaf[la]
        for lb in labels[i + 1 :]:
            y1 = t1.label_to_leaf[lb]
            p1 = time1[lca_naive(t1, x1, y1)]
            p2 = time2[lca_naive(t2, bij[x1], bij[y1])]
            val = abs(p1 - p2)
            if val > best_val:
                best_val = val
                best = (la, lb)
    return best, best_val


# --- compiled kernels -------------------------------------------------------

if _HAS_NUMBA:

    @numba.njit(cache=True)
    def _brute_kernel(p1, lv1, tm1, p2, lv2, tm2, leaves, bij):  # pragma: no cover
        total = 0
        k = leaves.shape[0]
        for i in range(k):
            for j in range(i + 1, k):
                u = leaves[i]
                v = leaves[j]
                du = lv1[u]
                dv = lv1[v]
                while du > dv:
                    u = p1[u]
                    du -= 1
                while dv > du:
                    v = p1[v]
                    dv -= 1
                while u != v:
                    u = p1[u]
                    v = p1[v]
                a = tm1[u]
                u = bij[leaves[i]]
                v = bij[leaves[j]]
                du = lv2[u]
                dv = lv2[v]
                while du > dv:
                    u = p2[u]
                    du -= 1
                while dv > du:
                    v = p2[v]
                    dv -= 1
                while u != v:
                    u = p2[u]
                    v = p2[v]
                d = a - tm2[u]
                total += d if d >= 0 else -d
        return total

    @numba.njit(cache=True)
    def _coloring_kernel(l1, r1, tm1, bij, l2, r2, tm2):  # pragma: no cover
        nc1 = l1.shape[0]
        nc2 = l2.shape[0]
        red = np.zeros(nc2, dtype=np.int64)
        green = np.zeros(nc2, dtype=np.int64)
        seen = np.full(nc2, -1, dtype=np.int64)
        stack = np.empty(nc1, dtype=np.int64)
        total = 0
        pairs = 0
        for v in range(nc1):
            if l1[v] < 0:
                continue
            vt = tm1[v]
            for side in range(2):
                child = l1[v] if side == 0 else r1[v]
                sp = 0
                stack[sp] = child
                sp += 1
                while sp > 0:
                    sp -= 1
                    node = stack[sp]
                    if l1[node] < 0:
                        w = bij[node]
                        if side == 0:
                            red[w] = 1
                            green[w] = 0
                        else:
                            red[w] = 0
                            green[w] = 1
                        seen[w] = v
                    else:
                        stack[sp] = l1[node]
                        sp += 1
                        stack[sp] = r1[node]
                        sp += 1
            for u in range(nc2 - 1, -1, -1):
                if l2[u] < 0:
                    continue
                a = l2[u]
                b = r2[u]
                if seen[a] == v:
                    ra = red[a]
                    ga = green[a]
                else:
                    ra = 0
                    ga = 0
                if seen[b] == v:
                    rb = red[b]
                    gb = green[b]
                else:
                    rb = 0
                    gb = 0
                num = ra * gb + ga * rb
                if num != 0:
                    d = vt - tm2[u]
                    total += (d if d >= 0 else -d) * num
                    pairs += num
                red[u] = ra + rb
                green[u] = ga + gb
                seen[u] = v
        return total, pairs
