"""Newick dialect with mutation times as internal-node annotations.

Grammar (whitespace allowed between tokens, never emitted):

    tree    := subtree ";"
    subtree := leaf | "(" subtree "," subtree ")" time
    leaf    := name
    name    := [A-Za-z0-9_.|-]+
    time    := digits ["." 1-6 digits]

The time sits where standard Newick puts an internal node label, e.g.
"((A,B)1.5,C)2;". It is not a branch length: mutation time is a node
attribute, and branch lengths would force a redundant encoding that
every consumer would have to cross-check.

Times are converted to integer ticks (10**6 per unit) during parsing, so
round trips are exact. The parser is iterative and reports byte offsets.
"""

from __future__ import annotations

import string

from .errors import (
    EmptyInputError,
    MissingTimeError,
    NegativeTimeError,
    NewickSyntaxError,
    TooManyFractionDigitsError,
)
from .tree import STRICT, TICKS_PER_UNIT, MixtureTree, RawNode, build_tree

NAME_CHARS = frozenset(string.ascii_letters + string.digits + "_.|-")
_WS = frozenset(" \t\r\n")
_DIGITS = frozenset(string.digits)

MAX_FRACTION_DIGITS = 6


def ticks_from_decimal(text: str) -> int:
    """Parse a nonnegative decimal literal with at most 6 fractional digits."""
    if text.startswith("-"):
        raise NegativeTimeError(f"negative time {text!r}")
    whole, dot, frac = text.partition(".")
    if not whole or not whole.isdigit() or (dot and not frac.isdigit()) or (dot and not frac):
        raise ValueError(f"not a decimal time literal: {text!r}")
    if len(frac) > MAX_FRACTION_DIGITS:
        raise TooManyFractionDigitsError(
            f"time {text!r} has {len(frac)} fractional digits; at most {MAX_FRACTION_DIGITS} are allowed"
        )
    return int(whole) * TICKS_PER_UNIT + int(frac.ljust(MAX_FRACTION_DIGITS, "0"))


def ticks_to_decimal(ticks: int) -> str:
    """Shortest decimal form: no trailing zeros, no dot when fraction is 0."""
    if ticks < 0:
        return "-" + ticks_to_decimal(-ticks)
    whole, frac = divmod(ticks, TICKS_PER_UNIT)
    if frac == 0:
        return str(whole)
    return f"{whole}.{frac:06d}".rstrip("0")


def parse_newick(text: str, strictness: str = STRICT) -> MixtureTree:
    """Parse one tree; errors carry the byte offset of the offending token."""
    n = len(text)
    i = 0

    def skip_ws(i):
        while i < n and text[i] in _WS:
            i += 1
        return i

    raws: list[RawNode] = []
    # Each frame is the list of child record indices of an open "(".
    frames: list[list[int]] = []
    completed: int | None = None  # record index of the last finished subtree
    expect_subtree = True

    while True:
        i = skip_ws(i)
        if expect_subtree:
            if i >= n:
                raise (
                    EmptyInputError("empty input: no tree before end of text")
                    if completed is None and not frames
                    else NewickSyntaxError("unexpected end of input", i, expected="subtree")
                )
            c = text[i]
            if c == "(":
                frames.append([])
                i += 1
                continue
            if c in NAME_CHARS:
                j = i
                while j < n and text[j] in NAME_CHARS:
                    j += 1
                raws.append(RawNode(label=text[i:j]))
                completed = len(raws) - 1
                i = j
                expect_subtree = False
                continue
            raise NewickSyntaxError(f"unexpected character {c!r}", i, expected="'(' or leaf name")
        # After a completed subtree: ',' continues a pair, ')' closes one,
        # ';' ends the tree.
        if i >= n:
            raise NewickSyntaxError("unexpected end of input", i, expected="',' or ')' or ';'")
        c = text[i]
        if c == ",":
            if not frames:
                raise NewickSyntaxError("',' outside parentheses", i, expected="';'")
            if len(frames[-1]) >= 1:
                raise NewickSyntaxError(
                    "more than two children in a group", i, expected="')'"
                )
            frames[-1].append(completed)
            completed = None
            i += 1
            expect_subtree = True
            continue
        if c == ")":
            if not frames:
                raise NewickSyntaxError("unmatched ')'", i, expected="';'")
            if len(frames[-1]) != 1:
                raise NewickSyntaxError("group closed with a single subtree", i, expected="','")
            left = frames.pop()[0]
            right = completed
            i += 1
            ticks, i = _scan_time(text, skip_ws(i))
            raws.append(RawNode(time=ticks, left=left, right=right))
            completed = len(raws) - 1
            continue
        if c == ";":
            if frames:
                raise NewickSyntaxError("';' inside an open group", i, expected="',' or ')'")
            i = skip_ws(i + 1)
            if i < n:
                raise NewickSyntaxError("trailing characters after ';'", i, expected="end of input")
            return build_tree(raws, strictness)
        raise NewickSyntaxError(f"unexpected character {c!r}", i, expected="',' or ')' or ';'")


def _scan_time(text: str, i: int):
    """Scan `digits ["." 1-6 digits]` at offset i; return (ticks, next offset)."""
    n = len(text)
    if i < n and text[i] == "-":
        raise NegativeTimeError(f"negative mutation time at offset {i}", offset=i)
    if i >= n or text[i] not in _DIGITS:
        raise MissingTimeError(f"missing mutation time at offset {i}", offset=i)
    j = i
    while j < n and text[j] in _DIGITS:
        j += 1
    whole = int(text[i:j])
    if j < n and text[j] == ".":
        j += 1
        k = j
        while k < n and text[k] in _DIGITS:
            k += 1
        if k == j:
            raise NewickSyntaxError("'.' without fractional digits", j, expected="digit")
        if k - j > MAX_FRACTION_DIGITS:
            raise TooManyFractionDigitsError(
                f"more than {MAX_FRACTION_DIGITS} fractional digits at offset {j + MAX_FRACTION_DIGITS}",
                offset=j + MAX_FRACTION_DIGITS,
            )
        frac = int(text[j:k].ljust(MAX_FRACTION_DIGITS, "0"))
        return whole * TICKS_PER_UNIT + frac, k
    return whole * TICKS_PER_UNIT, j


def write_newick(tree: MixtureTree) -> str:
    """Canonical serialization: stored child order, shortest decimals, no
    whitespace, terminating ';'. parse(write(t)) reproduces t node for node."""
    parts: list[str] = []
    stack: list[tuple[int, int]] = [(0, 0)]  # (node, phase)
    left, right, time, label = tree.left, tree.right, tree.time, tree.label
    while stack:
        v, phase = stack.pop()
        if left[v] < 0:
            parts.append(label[v])
        elif phase == 0:
            parts.append("(")
            stack.append((v, 1))
            stack.append((left[v], 0))
        elif phase == 1:
            parts.append(",")
            stack.append((v, 2))
            stack.append((right[v], 0))
        else:
            parts.append(")")
            parts.append(ticks_to_decimal(time[v]))
    parts.append(";")
    return "".join(parts)


def read_trees(text: str, strictness: str = STRICT) -> list[tuple[int, MixtureTree]]:
    """Parse a multi-tree document, one tree per line, blank lines ignored.

    Returns (1-based line number, tree) pairs; parse errors are annotated
    with the line number in the message and a `.line` attribute.
    """
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            out.append((lineno, parse_newick(line, strictness)))
        except Exception as exc:
            exc.line = lineno
            if exc.args:
                exc.args = (f"line {lineno}: {exc.args[0]}",) + exc.args[1:]
            raise
    return out


def read_tree_file(path: str, strictness: str = STRICT) -> list[tuple[int, MixtureTree]]:
    with open(path, "r", encoding="ascii") as fh:
        return read_trees(fh.read(), strictness)
