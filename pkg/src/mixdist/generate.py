"""Seeded generation of valid mixture trees and comparable pairs.

Shapes
------
random      : coalescent-style repeated uniform pairwise merging of live
              subtrees; natively yields strictly increasing merge times.
complete    : balanced topology (n a power of two), merged level by level.
caterpillar : comb topology, height n-1.

Time models
-----------
unit_coalescent      : merge i gets exactly i * 10**6 ticks.
uniform_jitter       : merge i gets i * 10**6 + U[0..max_step] ticks with
                       max_step < 10**6, so times stay strictly increasing.

All randomness flows through SplitMix64, so any implementation of that
generator reproduces these trees bit for bit from (n, seed, shape,
time_model, max_step).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .rng import SplitMix64
from .tree import TICKS_PER_UNIT, MixtureTree, RawNode, build_tree

SHAPES = ("random", "complete", "caterpillar")
TIME_MODELS = ("unit_coalescent", "uniform_jitter")
PAIR_MODES = ("independent", "same_topology_jittered_times", "permuted_leaves")


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one deterministic generation request.

    `max_step` only matters under uniform_jitter; it is the inclusive
    upper bound of the per-merge jitter in ticks.
    """

    n: int
    seed: int
    shape: str = "random"
    time_model: str = "unit_coalescent"
    max_step: int = 999_999

    def check(self) -> None:
        if self.n < 1:
            raise InvalidSpecError(f"leaf count must be >= 1, got {self.n}")
        if self.shape not in SHAPES:
            raise InvalidSpecError(f"unknown shape {self.shape!r}; choose from {SHAPES}")
        if self.time_model not in TIME_MODELS:
            raise InvalidSpecError(
                f"unknown time model {self.time_model!r}; choose from {TIME_MODELS}"
            )
        if self.shape == "complete" and self.n & (self.n - 1):
            raise InvalidSpecError(f"complete shape requires a power-of-two leaf count, got {self.n}")
        if not 0 <= self.max_step < TICKS_PER_UNIT:
            raise InvalidSpecError(
                f"max_step must lie in [0, {TICKS_PER_UNIT - 1}] ticks, got {self.max_step}"
            )

    def labels(self) -> list[str]:
        return [f"L{i}" for i in range(1, self.n + 1)]


def _merge_time(spec: GenSpec, index: int, rng: SplitMix64) -> int:
    base = index * TICKS_PER_UNIT
    if spec.time_model == "uniform_jitter":
        return base + rng.below(spec.max_step + 1)
    return base


def _random_tree(spec: GenSpec, rng: SplitMix64) -> MixtureTree:
    labels = spec.labels()
    raws = [RawNode(label=name) for name in labels]
    if spec.n == 1:
        return build_tree(raws)

    if spec.shape == "random":
        live = list(range(spec.n))
        for i in range(1, spec.n):
            # Swap-pop keeps removal O(1); the draw order is part of the
            # deterministic contract.
            a = rng.below(len(live))
            live[a], live[-1] = live[-1], live[a]
            u = live.pop()
            b = rng.below(len(live))
            live[b], live[-1] = live[-1], live[b]
            v = live.pop()
            raws.append(RawNode(time=_merge_time(spec, i, rng), left=u, right=v))
            live.append(len(raws) - 1)
    elif spec.shape == "complete":
        layer = list(range(spec.n))
        i = 1
        while len(layer) > 1:
            nxt = []
            for j in range(0, len(layer), 2):
                raws.append(RawNode(time=_merge_time(spec, i, rng), left=layer[j], right=layer[j + 1]))
                nxt.append(len(raws) - 1)
                i += 1
            layer = nxt
    else:  # caterpillar
        spine = 0
        for i in range(1, spec.n):
            raws.append(RawNode(time=_merge_time(spec, i, rng), left=spine, right=i))
            spine = len(raws) - 1
    return build_tree(raws)


def random_mixture_tree(spec: GenSpec) -> MixtureTree:
    """Deterministic tree for the spec; passes validate(strict) by construction."""
    spec.check()
    return _random_tree(spec, SplitMix64(spec.seed))


def _retime(tree: MixtureTree, spec: GenSpec, rng: SplitMix64) -> MixtureTree:
    # Redraw times while keeping topology: the time-sorted order of the
    # internal nodes defines their merge indices, which get fresh times.
    internal = sorted(
        (v for v in range(tree.node_count) if not tree.is_leaf(v)),
        key=lambda v: tree.time[v],
    )
    new_time = {}
    for i, v in enumerate(internal, start=1):
        new_time[v] = _merge_time(spec, i, rng)
    raws = []
    for v, rec in enumerate(tree.records):
        if rec.is_leaf:
            raws.append(RawNode(label=rec.label))
        else:
            raws.append(RawNode(time=new_time[v], left=rec.left, right=rec.right))
    return build_tree(raws)


def _permute_labels(tree: MixtureTree, rng: SplitMix64) -> MixtureTree:
    names = [tree.label[v] for v in tree.leaf_ids]
    rng.shuffle(names)
    relabel = dict(zip(tree.leaf_ids, names))
    raws = []
    for v, rec in enumerate(tree.records):
        if rec.is_leaf:
            raws.append(RawNode(label=relabel[v]))
        else:
            raws.append(RawNode(time=rec.time, left=rec.left, right=rec.right))
    return build_tree(raws)


def random_comparable_pair(spec: GenSpec, mode: str) -> tuple[MixtureTree, MixtureTree]:
    """Two trees over the same label set L1..Ln.

    independent                  : two fresh draws of the spec's shape
    same_topology_jittered_times : copy of the first with re-drawn times
    permuted_leaves              : copy of the first with labels permuted
    """
    spec.check()
    if mode not in PAIR_MODES:
        raise InvalidSpecError(f"unknown pair mode {mode!r}; choose from {PAIR_MODES}")
    base = SplitMix64(spec.seed)
    r1 = base.split()
    r2 = base.split()
    t1 = _random_tree(spec, r1)
    if mode == "independent":
        t2 = _random_tree(spec, r2)
    elif mode == "same_topology_jittered_times":
        t2 = _retime(t1, spec, r2)
    else:
        t2 = _permute_labels(t1, r2)
    return t1, t2
