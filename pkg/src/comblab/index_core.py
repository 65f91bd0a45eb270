"""Finite index sequences over the four-letter alphabet {0,1}x{0,1}.

A Node is a finite word of letters (i,j) with i,j bits.  In the compact text
encoding each letter is the digit 2*i+j, and the empty node prints as "-".
All values here are immutable and safe to share across threads.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple

from .errors import ArgumentError, ParseError, ResourceError

DEFAULT_DEPTH_BOUND = 12
_DIGITS = "0123"


class Letter(NamedTuple):
    first: int
    second: int

    @property
    def digit(self) -> str:
        return _DIGITS[2 * self.first + self.second]

    @classmethod
    def from_digit(cls, ch: str) -> "Letter":
        if ch not in _DIGITS:
            raise ParseError(f"invalid letter digit {ch!r}")
        c = int(ch)
        return _LETTERS[c]


#: The four letters, indexed by their digit value.
_LETTERS = tuple(Letter(i, j) for i in (0, 1) for j in (0, 1))
LETTERS = _LETTERS


def depth_bound() -> int:
    """Configured maximum depth; COMBLAB_MAX_DEPTH overrides the default of 12."""
    raw = os.environ.get("COMBLAB_MAX_DEPTH")
    if raw is None:
        return DEFAULT_DEPTH_BOUND
    try:
        return int(raw)
    except ValueError:
        raise ArgumentError(f"COMBLAB_MAX_DEPTH must be an integer, got {raw!r}")


class Node:
    """An element of the index tree: a finite sequence of letters.

    Internally a node is its compact digit string, which keeps equality,
    hashing, and prefix tests cheap.
    """

    __slots__ = ("_digits",)

    def __init__(self, digits: str = ""):
        for pos, ch in enumerate(digits):
            if ch not in _DIGITS:
                raise ParseError(f"invalid letter digit {ch!r}", position=pos)
        self._digits = digits

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Node":
        node = cls.__new__(cls)
        node._digits = "".join(let.digit for let in letters)
        return node

    @classmethod
    def _raw(cls, digits: str) -> "Node":
        # Internal fast path: digits already validated.
        node = cls.__new__(cls)
        node._digits = digits
        return node

    @property
    def digits(self) -> str:
        return self._digits

    @property
    def depth(self) -> int:
        return len(self._digits)

    def __len__(self) -> int:
        return len(self._digits)

    def letter_at(self, i: int) -> Letter:
        if not 0 <= i < len(self._digits):
            raise ArgumentError(f"position {i} out of range for node of depth {len(self._digits)}")
        return _LETTERS[int(self._digits[i])]

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(_LETTERS[int(ch)] for ch in self._digits)

    def extend(self, letter: Letter) -> "Node":
        return Node._raw(self._digits + letter.digit)

    def is_prefix_of(self, other: "Node") -> bool:
        return other._digits.startswith(self._digits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Node) and self._digits == other._digits

    def __hash__(self) -> int:
        return hash(self._digits)

    def __lt__(self, other: "Node") -> bool:
        if not isinstance(other, Node):
            return NotImplemented
        return (len(self._digits), self._digits) < (len(other._digits), other._digits)

    def __le__(self, other: "Node") -> bool:
        if not isinstance(other, Node):
            return NotImplemented
        return self == other or self < other

    def __repr__(self) -> str:
        return f"Node({encode(self)!r})"


EMPTY = Node("")


def extend(node: Node, letter: Letter) -> Node:
    """Append one letter; the result has depth |node|+1."""
    return node.extend(letter)


def meet(a: Node, b: Node) -> Node:
    """Longest common prefix of two nodes."""
    da, db = a.digits, b.digits
    n = min(len(da), len(db))
    i = 0
    while i < n and da[i] == db[i]:
        i += 1
    return Node._raw(da[:i])


def meet_all(nodes: Iterable[Node]) -> Node:
    """Longest common prefix of a nonempty collection of nodes."""
    digits = [node.digits for node in nodes]
    if not digits:
        raise ArgumentError("meet of an empty collection is undefined")
    return Node._raw(common_prefix(digits))


def common_prefix(digit_strings: list[str]) -> str:
    # For equal-length words the common prefix of min and max is the common
    # prefix of all; for mixed lengths the same trick still works because
    # string comparison is lexicographic.
    lo = min(digit_strings)
    hi = max(digit_strings)
    n = min(len(lo), len(hi))
    i = 0
    while i < n and lo[i] == hi[i]:
        i += 1
    return lo[:i]


@lru_cache(maxsize=32)
def _level_nodes(d: int) -> tuple[Node, ...]:
    return tuple(Node._raw("".join(p)) for p in product(_DIGITS, repeat=d))


def enumerate_level(d: int) -> tuple[Node, ...]:
    """All 4^d nodes of depth d, lexicographic by compact encoding.

    The bound is re-read on every call so COMBLAB_MAX_DEPTH always applies.
    """
    if d < 0:
        raise ArgumentError(f"depth must be nonnegative, got {d}")
    bound = depth_bound()
    if d > bound:
        raise ResourceError(f"depth {d} exceeds the configured bound {bound}")
    return _level_nodes(d)


def encode(node: Node) -> str:
    """Compact text encoding; the empty node encodes as "-"."""
    return node.digits or "-"


def decode(text: str) -> Node:
    """Inverse of :func:`encode`; raises ParseError with the offending position."""
    if text == "-":
        return EMPTY
    if not text:
        raise ParseError("empty text; the empty node is written '-'", position=0)
    return Node(text)


def node_to_pairs(node: Node) -> list[list[int]]:
    """JSON form of a node: an array of [i, j] bit pairs."""
    return [[let.first, let.second] for let in node.letters]


def node_from_pairs(pairs: Iterable[Iterable[int]]) -> Node:
    letters = []
    for pos, pair in enumerate(pairs):
        pair = list(pair)
        if len(pair) != 2 or any(bit not in (0, 1) for bit in pair):
            raise ParseError(f"letter must be a pair of bits, got {pair!r}", position=pos)
        letters.append(Letter(pair[0], pair[1]))
    return Node.from_letters(letters)
