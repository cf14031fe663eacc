"""Shared fixtures: small hand-built trees and seeded random pair factories.

Hand trees use from_nested with explicit tick values so tests stay
readable; random trees come from the package's own seeded generator,
which every property test treats as an arbitrary-valid-tree source.
"""

import pytest

from mixdist import GenSpec, from_nested, random_comparable_pair, random_mixture_tree

U = 10**6  # ticks per time unit


@pytest.fixture(scope="module")
def three_leaf():
    """((A,B)1,C)2 - the running example tree."""
    return from_nested((("A", "B", 1 * U), "C", 2 * U))


@pytest.fixture(scope="module")
def three_leaf_swapped():
    """((A,C)1,B)2 - same labels, A's sibling changed."""
    return from_nested((("A", "C", 1 * U), "B", 2 * U))


@pytest.fixture(scope="module")
def three_leaf_retimed():
    """((A,B)2,C)5 - same topology as three_leaf, times changed."""
    return from_nested((("A", "B", 2 * U), "C", 5 * U))


def two_clade_tree():
    """(((A,B)2,(C,D)1)5,((G,H)3,(E,F)4)6)10 in units: eight leaves in four
    clades, used to pin the shape of compressed spanning subtrees."""
    return from_nested(
        (
            (("A", "B", 2 * U), ("C", "D", 1 * U), 5 * U),
            (("G", "H", 3 * U), ("E", "F", 4 * U), 6 * U),
            10 * U,
        )
    )


def make_tree(n, seed, shape="random", time_model="uniform_jitter", max_step=999_999):
    return random_mixture_tree(
        GenSpec(n=n, seed=seed, shape=shape, time_model=time_model, max_step=max_step)
    )


def make_pair(n, seed, mode="independent", shape="random", time_model="uniform_jitter"):
    spec = GenSpec(n=n, seed=seed, shape=shape, time_model=time_model)
    return random_comparable_pair(spec, mode)


@pytest.fixture(scope="session")
def tree_factory():
    return make_tree


@pytest.fixture(scope="session")
def pair_factory():
    return make_pair
