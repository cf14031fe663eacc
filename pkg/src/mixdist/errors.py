"""Exception hierarchy for the mixdist package.

Grouped by CLI exit code: tree/Newick/spec problems exit 2, label-set
mismatches exit 3, accumulator range violations exit 4.
"""

from __future__ import annotations


class MixdistError(Exception):
    """Base class for all mixdist errors."""

    code = "E_SPEC"


class TreeValidationError(MixdistError):
    """A tree violates a structural or time invariant (exit 2).

    `node` is set when the violation is tied to a built node id, `offset`
    when it is tied to a byte position in Newick input.
    """

    code = "E_PARSE"

    def __init__(self, message: str, node: int | None = None, offset: int | None = None):
        super().__init__(message)
        self.node = node
        self.offset = offset


class EmptyInputError(TreeValidationError):
    pass


class NotBinaryError(TreeValidationError):
    pass


class MultipleRootsError(TreeValidationError):
    pass


class CycleError(TreeValidationError):
    pass


class DuplicateLabelError(TreeValidationError):
    pass


class MissingTimeError(TreeValidationError):
    pass


class NonMonotoneTimeError(TreeValidationError):
    pass


class NegativeTimeError(TreeValidationError):
    pass


class TooManyFractionDigitsError(TreeValidationError):
    pass


class NewickSyntaxError(TreeValidationError):
    """Malformed Newick text. `offset` is a byte offset into the input."""

    def __init__(self, message: str, offset: int, expected: str = ""):
        super().__init__(f"{message} at offset {offset}" + (f" (expected {expected})" if expected else ""))
        self.offset = offset
        self.expected = expected


class NotComparableError(MixdistError):
    """Leaf label sets differ (exit 3)."""

    code = "E_COMPARE"

    def __init__(self, missing: set[str], extra: set[str]):
        super().__init__(
            "trees are not comparable: "
            f"missing from second tree {sorted(extra)}, missing from first tree {sorted(missing)}"
        )
        # `missing`: labels only in the second tree; `extra`: labels only in the first.
        self.missing = missing
        self.extra = extra


class SameLeafError(MixdistError):
    """Pairwise LCA time requested for a leaf against itself."""

    code = "E_SPEC"


class DistanceOverflowError(MixdistError):
    """The distance bound n**2 * max_ticks exceeds the 128-bit accumulator range (exit 4)."""

    code = "E_OVERFLOW"


class DegenerateInputError(MixdistError):
    """Virtual-subtree construction needs at least two leaves."""

    code = "E_SPEC"


class InvalidSpecError(MixdistError):
    """A generator or benchmark specification is out of range (exit 2)."""

    code = "E_SPEC"
