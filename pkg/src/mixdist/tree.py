"""Mixture-tree data model.

A mixture tree is a rooted full binary tree (every node has 0 or 2
children) whose internal nodes carry a mutation time and whose leaves
carry unique labels. Times are held as exact integer *ticks*, one tick
being 10**-6 of the decimal time unit used in input files, so that all
distance engines agree bit-for-bit.

Trees are immutable after construction and addressed by integer node ids:
the root is always id 0 and ids follow breadth-first order (per level,
left child before right child). All traversals are iterative; caterpillar
trees make recursion-based code blow the stack.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    CycleError,
    DuplicateLabelError,
    EmptyInputError,
    MissingTimeError,
    MultipleRootsError,
    NegativeTimeError,
    NonMonotoneTimeError,
    NotBinaryError,
    NotComparableError,
    TreeValidationError,
)

TICKS_PER_UNIT = 10**6
MAX_TICKS = 2**63 - 1  # times must fit a signed 64-bit word

STRICT = "strict"
WEAK = "weak"


@dataclass(frozen=True)
class RawNode:
    """Input record for :func:`build_tree`.

    A leaf sets `label` only; an internal node sets `time` (ticks) plus
    `left`/`right` child indices into the same record sequence.
    """

    label: str | None = None
    time: int | None = None
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class NodeRecord:
    """One node of a built tree. `time` is present iff internal, `label` iff leaf."""

    parent: int | None
    left: int | None
    right: int | None
    time: int | None
    label: str | None
    level: int

    @property
    def is_leaf(self) -> bool:
        return self.label is not None


@dataclass(frozen=True)
class Violation:
    code: str
    node: int | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        return "\n".join(f"{v.code} node={v.node}: {v.message}" for v in self.violations)


class MixtureTree:
    """Immutable rooted full binary tree with integer mutation times.

    Attributes
    ----------
    records       : tuple[NodeRecord]  node table, root at id 0, BFS order
    parent, left, right, level, time : parallel per-node lists (-1 where absent;
                    `time` holds 0 for leaves, matching the metric's convention)
    label         : per-node list, None for internal nodes
    leaf_ids      : tuple of leaf ids in left-to-right order
    label_to_leaf : dict label -> leaf id
    n             : leaf count
    height        : max leaf level (root has level 0)
    """

    __slots__ = (
        "records",
        "parent",
        "left",
        "right",
        "level",
        "time",
        "label",
        "leaf_ids",
        "label_to_leaf",
        "n",
        "height",
        "_arrays",
    )

    def __init__(self, records: tuple[NodeRecord, ...]):
        self.records = records
        self.parent = [-1 if r.parent is None else r.parent for r in records]
        self.left = [-1 if r.left is None else r.left for r in records]
        self.right = [-1 if r.right is None else r.right for r in records]
        self.level = [r.level for r in records]
        self.time = [0 if r.time is None else r.time for r in records]
        self.label = [r.label for r in records]
        self.leaf_ids = tuple(v for v in _postorder(self) if records[v].is_leaf)
        self.label_to_leaf = {records[v].label: v for v in self.leaf_ids}
        self.n = len(self.leaf_ids)
        self.height = max((records[v].level for v in self.leaf_ids), default=0)
        self._arrays = None

    @property
    def node_count(self) -> int:
        return len(self.records)

    def is_leaf(self, v: int) -> bool:
        return self.left[v] < 0

    def kernel_arrays(self):
        """int64 numpy views of the per-node lists, built once on demand."""
        if self._arrays is None:
            import numpy as np

            self._arrays = {
                "parent": np.array(self.parent, dtype=np.int64),
                "left": np.array(self.left, dtype=np.int64),
                "right": np.array(self.right, dtype=np.int64),
                "level": np.array(self.level, dtype=np.int64),
                "time": np.array(self.time, dtype=np.int64),
            }
        return self._arrays

    def max_ticks(self) -> int:
        return max(self.time)

    def __repr__(self) -> str:
        return f"MixtureTree(n={self.n}, height={self.height})"


def _postorder(tree: MixtureTree):
    """Iterative postorder (left, right, node) over node ids."""
    out = []
    stack = [(0, False)]
    left, right = tree.left, tree.right
    while stack:
        v, done = stack.pop()
        if done or left[v] < 0:
            out.append(v)
        else:
            stack.append((v, True))
            stack.append((right[v], False))
            stack.append((left[v], False))
    return out


def build_tree(records, strictness: str = STRICT) -> MixtureTree:
    """Assemble and validate a MixtureTree from RawNode records.

    Node ids are renumbered to breadth-first order (root becomes id 0);
    the caller's record indices are only used to wire children. Raises the
    error for the first violation found; `strictness` selects whether time
    monotonicity requires parent > child (strict) or >= (weak).
    """
    records = list(records)
    if not records:
        raise EmptyInputError("no nodes given")

    count = len(records)
    referenced = [0] * count
    for i, r in enumerate(records):
        has_left = r.left is not None
        has_right = r.right is not None
        if has_left != has_right:
            raise NotBinaryError(f"node {i} has exactly one child", node=i)
        if has_left:
            if r.label is not None:
                raise NotBinaryError(f"node {i} has both a label and children", node=i)
            if r.time is None:
                raise MissingTimeError(f"internal node {i} has no mutation time", node=i)
            for c in (r.left, r.right):
                if not 0 <= c < count:
                    raise CycleError(f"node {i} references nonexistent child {c}", node=i)
                referenced[c] += 1
        else:
            if r.label is None:
                raise NotBinaryError(f"node {i} is a leaf without a label", node=i)
            if r.time is not None:
                raise NotBinaryError(f"leaf node {i} carries a mutation time", node=i)

    roots = [i for i, k in enumerate(referenced) if k == 0]
    if not roots:
        raise CycleError("no root: every node is referenced as a child")
    if len(roots) > 1:
        raise MultipleRootsError(f"multiple roots: {roots}")
    for i, k in enumerate(referenced):
        if k > 1:
            raise CycleError(f"node {i} is referenced as a child {k} times", node=i)

    # BFS renumbering from the root; left child before right child.
    order = []
    new_id = {}
    queue = deque([roots[0]])
    while queue:
        old = queue.popleft()
        new_id[old] = len(order)
        order.append(old)
        r = records[old]
        if r.left is not None:
            queue.append(r.left)
            queue.append(r.right)
    if len(order) != count:
        raise CycleError("tree is not connected (unreachable nodes present)")

    built = []
    parent_of = {new_id[roots[0]]: None}
    for old in order:
        r = records[old]
        me = new_id[old]
        if r.left is not None:
            parent_of[new_id[r.left]] = me
            parent_of[new_id[r.right]] = me
    level_of = {0: 0}
    for me in range(count):
        p = parent_of[me]
        if p is not None:
            level_of[me] = level_of[p] + 1
    for old in order:
        r = records[old]
        me = new_id[old]
        built.append(
            NodeRecord(
                parent=parent_of[me],
                left=None if r.left is None else new_id[r.left],
                right=None if r.right is None else new_id[r.right],
                time=r.time,
                label=r.label,
                level=level_of[me],
            )
        )

    tree = MixtureTree(tuple(built))
    report = validate(tree, strictness)
    if not report.ok:
        first = report.violations[0]
        raise _EXC_BY_CODE.get(first.code, TreeValidationError)(first.message, node=first.node)
    return tree


_EXC_BY_CODE = {
    "DUPLICATE_LABEL": DuplicateLabelError,
    "EMPTY_LABEL": DuplicateLabelError,
    "NEGATIVE_TIME": NegativeTimeError,
    "TIME_RANGE": NegativeTimeError,
    "NON_MONOTONE_TIME": NonMonotoneTimeError,
    "MISSING_TIME": MissingTimeError,
}


def validate(tree: MixtureTree, strictness: str = STRICT) -> ValidationReport:
    """Check every invariant and report all violations (never raises).

    Strict mode requires m(parent) > m(child) along every edge, treating
    leaves as time 0; weak mode relaxes both comparisons to >=.
    """
    if strictness not in (STRICT, WEAK):
        raise ValueError(f"unknown strictness {strictness!r}")
    out = []
    seen_labels = {}
    for v, rec in enumerate(tree.records):
        if rec.is_leaf:
            if not rec.label:
                out.append(Violation("EMPTY_LABEL", v, "leaf has an empty label"))
            elif rec.label in seen_labels:
                out.append(Violation("DUPLICATE_LABEL", v, f"duplicate leaf label {rec.label!r}"))
            else:
                seen_labels[rec.label] = v
        else:
            t = rec.time
            if t is None:
                out.append(Violation("MISSING_TIME", v, "internal node has no mutation time"))
                continue
            if t < 0:
                out.append(Violation("NEGATIVE_TIME", v, f"negative mutation time {t}"))
            elif t > MAX_TICKS:
                out.append(Violation("TIME_RANGE", v, f"mutation time {t} exceeds 64-bit tick range"))
            for c in (rec.left, rec.right):
                ct = tree.time[c]
                if strictness == STRICT:
                    if t <= ct:
                        out.append(
                            Violation(
                                "NON_MONOTONE_TIME",
                                v,
                                f"time {t} is not greater than child {c} time {ct}",
                            )
                        )
                elif t < ct:
                    out.append(
                        Violation(
                            "NON_MONOTONE_TIME",
                            v,
                            f"time {t} is smaller than child {c} time {ct}",
                        )
                    )
    order = {"EMPTY_LABEL": 0, "DUPLICATE_LABEL": 1, "MISSING_TIME": 2, "NEGATIVE_TIME": 3, "TIME_RANGE": 4, "NON_MONOTONE_TIME": 5}
    out.sort(key=lambda vi: (order[vi.code], vi.node))
    return ValidationReport(tuple(out))


def level_order(tree: MixtureTree, internal_only: bool = False) -> list[int]:
    """Breadth-first node ids from the root, left child before right child."""
    out = []
    queue = deque([0])
    left, right = tree.left, tree.right
    while queue:
        v = queue.popleft()
        l = left[v]
        if l >= 0:
            out.append(v)
            queue.append(l)
            queue.append(right[v])
        elif not internal_only:
            out.append(v)
    return out


def postorder_leaf_ranks(tree: MixtureTree) -> dict[int, int]:
    """Rank leaves 1..n in postorder, i.e. left-to-right leaf order."""
    return {v: i + 1 for i, v in enumerate(tree.leaf_ids)}


def check_comparable(t1: MixtureTree, t2: MixtureTree) -> dict[int, int]:
    """Return the label-matching bijection t1 leaf id -> t2 leaf id.

    Raises NotComparableError with the symmetric difference of label sets.
    """
    if t1.label_to_leaf.keys() != t2.label_to_leaf.keys():
        only_1 = set(t1.label_to_leaf) - set(t2.label_to_leaf)
        only_2 = set(t2.label_to_leaf) - set(t1.label_to_leaf)
        raise NotComparableError(missing=only_2, extra=only_1)
    t2map = t2.label_to_leaf
    return {v: t2map[t1.label[v]] for v in t1.leaf_ids}


def lca_naive(tree: MixtureTree, u: int, v: int) -> int:
    """Walk-up lowest common ancestor; the correctness oracle for lca.LcaIndex.

    Under strict time monotonicity this is also the common ancestor with
    the smallest mutation time.
    """
    parent, level = tree.parent, tree.level
    lu, lv = level[u], level[v]
    while lu > lv:
        u = parent[u]
        lu -= 1
    while lv > lu:
        v = parent[v]
        lv -= 1
    while u != v:
        u = parent[u]
        v = parent[v]
    return u


def trees_identical(t1: MixtureTree, t2: MixtureTree) -> bool:
    """True iff a label- and time-preserving isomorphism exists.

    Child order is not significant: the distance metric cannot see sibling
    swaps, so identity must not either. Hash-consed bottom-up signatures in
    a table shared by both trees; equal subtrees get equal signature ids,
    so comparing root ids decides in O(n).
    """
    if t1.n != t2.n or t1.node_count != t2.node_count:
        return False
    sig: dict = {}
    return _signature_root(t1, sig) == _signature_root(t2, sig)


def _signature_root(tree: MixtureTree, sig: dict) -> int:
    key = [0] * tree.node_count
    for v in _postorder(tree):
        if tree.is_leaf(v):
            k = ("L", tree.label[v])
        else:
            a, b = key[tree.left[v]], key[tree.right[v]]
            if a > b:
                a, b = b, a
            k = ("I", tree.time[v], a, b)
        key[v] = sig.setdefault(k, len(sig))
    return key[0]


def scale_times(tree: MixtureTree, factor: int) -> MixtureTree:
    """Return a copy with every mutation time multiplied by a positive integer."""
    if factor <= 0:
        raise ValueError("scale factor must be a positive integer")
    raws = []
    for rec in tree.records:
        if rec.is_leaf:
            raws.append(RawNode(label=rec.label))
        else:
            raws.append(RawNode(time=rec.time * factor, left=rec.left, right=rec.right))
    return build_tree(raws)


def from_nested(nested, strictness: str = STRICT) -> MixtureTree:
    """Build from nested tuples: a leaf is a label string, an internal node
    is (left_nested, right_nested, time_ticks)."""
    raws = []
    values = []  # record indices of completed subtrees, postorder
    stack = [(nested, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, str):
            raws.append(RawNode(label=node))
            values.append(len(raws) - 1)
        elif expanded:
            right = values.pop()
            left = values.pop()
            raws.append(RawNode(time=node[2], left=left, right=right))
            values.append(len(raws) - 1)
        else:
            stack.append((node, True))
            stack.append((node[1], False))
            stack.append((node[0], False))
    return build_tree(raws, strictness)
