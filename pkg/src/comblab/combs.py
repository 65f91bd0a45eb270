"""Split relations on node sets, comb recognition, and comb enumeration.

Three branch relations are distinguished by which coordinate of the first
differing letter varies (narrow-below, narrow-left, wide-left), and three comb
classes are built inductively from them (up, right, wide-right).  Recognition
recurses at the meet of the set: in any inductive build of A∪B the outermost
split happens exactly at the longest common prefix, so grouping by the letter
there is forced and recognition is deterministic.

The wide class carries a reading switch.  Under the "recursive" reading the
two parts of a wide combination may themselves be wide; under the "literal"
reading they must be narrow right-combs.  Only the recursive reading makes
wide-right-omega-combs coincide with the up-pair-free sets, which is what the
rest of the library relies on, so it is the default.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .errors import ArgumentError, ResourceError
from .index_core import Node, common_prefix, depth_bound, encode, enumerate_level

UP_ONE = "UpOne"
WIDE_RIGHT_ONE = "WideRightOne"

RECURSIVE = "recursive"
LITERAL = "literal"

DEFAULT_ENUM_LIMIT = 5_000_000


class _Omega:
    """Explicit no-size-bound marker for comb parameters."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "omega"


OMEGA = _Omega()


def size_within(size: int, bound) -> bool:
    return bound is OMEGA or size <= bound


def _check_bound(n) -> None:
    if n is OMEGA:
        return
    if not isinstance(n, int) or n < 0:
        raise ArgumentError(f"comb size bound must be a nonnegative integer or OMEGA, got {n!r}")


NARROW_BELOW = "narrow-below"
NARROW_LEFT = "narrow-left"
WIDE_LEFT = "wide-left"


@dataclass(frozen=True)
class SplitKind:
    kind: str
    bit: Optional[int] = None

    def to_json(self):
        if self.kind == WIDE_LEFT:
            return {"kind": self.kind}
        key = "i" if self.kind == NARROW_BELOW else "j"
        return {"kind": self.kind, key: self.bit}


def narrow_below(i: int) -> SplitKind:
    return SplitKind(NARROW_BELOW, i)


def narrow_left(j: int) -> SplitKind:
    return SplitKind(NARROW_LEFT, j)


def wide_left() -> SplitKind:
    return SplitKind(WIDE_LEFT)


@dataclass(frozen=True)
class SplitWitness:
    tau: Node
    kind: SplitKind

    def to_json(self):
        return {"tau": encode(self.tau), "kind": self.kind.to_json()}


@dataclass(frozen=True)
class CombClass:
    kind: str  # "up" | "right" | "wide-right"
    n: object  # int or OMEGA
    reading: str = RECURSIVE

    def __post_init__(self):
        if self.kind not in ("up", "right", "wide-right"):
            raise ArgumentError(f"unknown comb kind {self.kind!r}")
        _check_bound(self.n)
        if self.reading not in (RECURSIVE, LITERAL):
            raise ArgumentError(f"unknown wide reading {self.reading!r}")
        if self.kind != "wide-right" and self.reading != RECURSIVE:
            raise ArgumentError("the reading switch only applies to wide-right combs")

    def __repr__(self):
        if self.kind == "wide-right":
            return f"CombClass(wide-right, n={self.n!r}, {self.reading})"
        return f"CombClass({self.kind}, n={self.n!r})"


def up(n) -> CombClass:
    return CombClass("up", n)


def right(n) -> CombClass:
    return CombClass("right", n)


def wide_right(n, reading: str = RECURSIVE) -> CombClass:
    return CombClass("wide-right", n, reading)


@dataclass(frozen=True)
class CombCertificate:
    """Binary proof tree: leaves are singletons, internal vertices carry the
    split witness and the size of the lower/left part."""

    nodes: frozenset
    split: Optional[SplitWitness] = None
    a_size: Optional[int] = None
    a: Optional["CombCertificate"] = None
    b: Optional["CombCertificate"] = None

    @property
    def is_leaf(self) -> bool:
        return self.split is None

    def to_json(self):
        if self.is_leaf:
            (node,) = self.nodes
            return {"leaf": encode(node)}
        return {
            "split": self.split.to_json(),
            "a_size": self.a_size,
            "A": self.a.to_json(),
            "B": self.b.to_json(),
        }


def _as_digit_set(nodes: Iterable[Node]) -> list[str]:
    out = []
    for node in nodes:
        if not isinstance(node, Node):
            raise ArgumentError(f"expected Node, got {type(node).__name__}")
        out.append(node.digits)
    return out


def split_relation(a_set: Iterable[Node], b_set: Iterable[Node]) -> tuple[SplitWitness, ...]:
    """All branch relations that hold between A and B, as witnesses.

    A narrow-left witness is always accompanied by a wide-left one; a
    narrow-below witness excludes wide-left.  Returns () when no relation
    holds.
    """
    a_digits = _as_digit_set(a_set)
    b_digits = _as_digit_set(b_set)
    if not a_digits or not b_digits:
        raise ArgumentError("split_relation requires nonempty sets")
    if set(a_digits) & set(b_digits):
        raise ArgumentError("split_relation requires disjoint sets")
    prefix = common_prefix(a_digits + b_digits)
    p = len(prefix)
    if any(len(s) <= p for s in a_digits) or any(len(s) <= p for s in b_digits):
        return ()
    a_letters = {s[p] for s in a_digits}
    b_letters = {s[p] for s in b_digits}
    tau = Node._raw(prefix)
    found = []
    for i, (lo, hi) in enumerate((("0", "1"), ("2", "3"))):
        if a_letters == {lo} and b_letters == {hi}:
            found.append(SplitWitness(tau, narrow_below(i)))
    for j, (lo, hi) in enumerate((("0", "2"), ("1", "3"))):
        if a_letters == {lo} and b_letters == {hi}:
            found.append(SplitWitness(tau, narrow_left(j)))
    if a_letters <= {"0", "1"} and b_letters <= {"2", "3"}:
        found.append(SplitWitness(tau, wide_left()))
    return tuple(found)


def classify_pair(a: Node, b: Node) -> str:
    """Dichotomy for a pair of distinct equal-depth nodes.

    UpOne when the letters at the meet position share their first coordinate,
    WideRightOne otherwise; exactly one verdict applies.
    """
    da, db = a.digits, b.digits
    if len(da) != len(db):
        raise ArgumentError("classify_pair requires nodes of equal depth")
    if da == db:
        raise ArgumentError("classify_pair requires distinct nodes")
    i = 0
    while da[i] == db[i]:
        i += 1
    return UP_ONE if (da[i] < "2") == (db[i] < "2") else WIDE_RIGHT_ONE


# Digit groups per class at a split position: (A-digits, B-digits, witness kind).
_UP_SPLITS = ((frozenset("0"), frozenset("1"), narrow_below(0)),
              (frozenset("2"), frozenset("3"), narrow_below(1)))
_RIGHT_SPLITS = ((frozenset("0"), frozenset("2"), narrow_left(0)),
                 (frozenset("1"), frozenset("3"), narrow_left(1)))


def is_comb(nodes: Iterable[Node], cls: CombClass) -> Optional[CombCertificate]:
    """Recognize membership in a comb class; returns a certificate or None."""
    node_list = list(nodes)
    if not node_list:
        raise ArgumentError("is_comb requires a nonempty set")
    depths = {node.depth for node in node_list}
    if len(depths) != 1:
        raise ArgumentError("is_comb requires nodes of equal depth")
    digit_map = {}
    for node in node_list:
        digit_map[node.digits] = node
    return _recognize(sorted(digit_map), digit_map, cls)


def _recognize(digits: list[str], digit_map, cls: CombClass) -> Optional[CombCertificate]:
    if len(digits) == 1:
        return CombCertificate(frozenset((digit_map[digits[0]],)))
    lo, hi = digits[0], digits[-1]
    p = 0
    while lo[p] == hi[p]:
        p += 1
    tau = Node._raw(lo[:p])
    if cls.kind == "up" or cls.kind == "right":
        splits = _UP_SPLITS if cls.kind == "up" else _RIGHT_SPLITS
        letters = {s[p] for s in digits}
        for a_digits_set, b_digits_set, kind in splits:
            if letters == a_digits_set | b_digits_set:
                a_part = [s for s in digits if s[p] in a_digits_set]
                b_part = [s for s in digits if s[p] in b_digits_set]
                break
        else:
            return None
        sub_cls = cls
    else:
        a_part = [s for s in digits if s[p] < "2"]
        b_part = [s for s in digits if s[p] >= "2"]
        if not a_part or not b_part:
            return None
        kind = wide_left()
        sub_cls = cls if cls.reading == RECURSIVE else CombClass("right", cls.n)
    if not size_within(len(a_part), cls.n):
        return None
    cert_a = _recognize(a_part, digit_map, sub_cls)
    if cert_a is None:
        return None
    cert_b = _recognize(b_part, digit_map, sub_cls)
    if cert_b is None:
        return None
    return CombCertificate(
        frozenset(digit_map[s] for s in digits),
        split=SplitWitness(tau, kind),
        a_size=len(a_part),
        a=cert_a,
        b=cert_b,
    )


def is_binary_right_comb(strings: Iterable[str], n) -> bool:
    """Right-comb recognition for finite sets of binary strings.

    The same meet-splitting recursion as :func:`is_comb`, over the binary
    alphabet with mixed lengths allowed: at the greatest common initial
    segment the 0-side is the bounded part.
    """
    _check_bound(n)
    items = set()
    for s in strings:
        if any(ch not in "01" for ch in s):
            raise ArgumentError(f"binary string expected, got {s!r}")
        items.add(s)
    if not items:
        raise ArgumentError("is_binary_right_comb requires a nonempty set")
    return _binary_recognize(sorted(items), n)


def _binary_recognize(strings: list[str], n) -> bool:
    if len(strings) == 1:
        return True
    lo, hi = strings[0], strings[-1]
    limit = min(len(lo), len(hi))
    p = 0
    while p < limit and lo[p] == hi[p]:
        p += 1
    if any(len(s) <= p for s in strings):
        return False
    a_part = [s for s in strings if s[p] == "0"]
    b_part = [s for s in strings if s[p] == "1"]
    if not size_within(len(a_part), n):
        return False
    return _binary_recognize(a_part, n) and _binary_recognize(b_part, n)


# --- enumeration ---------------------------------------------------------
#
# Combs of depth d are generated structurally: a comb either lives inside a
# single first-letter block (a prepended depth-(d-1) comb) or its top split is
# at position 0, in which case the two parts are block-confined combs of the
# part class.  Entries keep links to their two parts so downstream checkers
# can fold set intersections bottom-up.
#
# A comb is stored as a bitmask over the node indices of its level (node at
# level position i is bit i).  Prepending a block letter is then a shift and
# a cross union is a bitwise or, which keeps generation cheap and compact.


@dataclass
class CombEntry:
    mask: int  # node-index bitmask within enumerate_level(d)
    size: int
    a_index: Optional[int] = None  # indices into the owning entry list
    b_index: Optional[int] = None


def mask_indices(mask: int) -> tuple:
    """Level positions selected by an entry mask, ascending."""
    out = []
    while mask:
        bit = mask & -mask
        out.append(bit.bit_length() - 1)
        mask ^= bit
    return tuple(out)


def mask_nodes(mask: int, level) -> list:
    """Level nodes selected by an entry mask, ascending."""
    return [level[i] for i in mask_indices(mask)]


def _class_key(cls: CombClass) -> tuple:
    return (cls.kind, cls.n if isinstance(cls.n, int) else "omega", cls.reading)


# Block pairings for top splits, by digit of the first letter.
_CROSS_BLOCKS = {
    "up": (("0", "1"), ("2", "3")),
    "right": (("0", "2"), ("1", "3")),
    "wide-right": (("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")),
}


def comb_entries(d: int, cls: CombClass, max_size: int, limit: int = DEFAULT_ENUM_LIMIT) -> list[CombEntry]:
    """All combs of the class at depth d with size <= max_size, with structure.

    Entries are topologically ordered: parts precede the compounds built from
    them.  Raises ResourceError when the count would exceed `limit`.  Results
    are cached (callers must not mutate them).
    """
    if d < 0:
        raise ArgumentError(f"depth must be nonnegative, got {d}")
    bound = depth_bound()
    if d > bound:
        raise ResourceError(f"depth {d} exceeds the configured bound {bound}")
    if max_size < 1:
        raise ArgumentError("max_size must be at least 1")
    estimate = _count_combs(d, _class_key(cls), max_size)
    if estimate > limit:
        raise ResourceError(
            f"enumeration would produce {estimate} combs, over the limit {limit}")
    return _comb_entries_cached(d, _class_key(cls), max_size)


@lru_cache(maxsize=6)
def _comb_entries_cached(d: int, class_key: tuple, max_size: int) -> list[CombEntry]:
    kind, n, reading = class_key
    cls = CombClass(kind, OMEGA if n == "omega" else n, reading)
    cache: dict = {}
    entries = _build_entries(d, cls, max_size, cache)
    if cls.kind == "wide-right" and cls.reading == LITERAL:
        entries = _dedupe_entries(entries)
    return entries


def _part_class(cls: CombClass) -> CombClass:
    if cls.kind == "wide-right" and cls.reading == LITERAL:
        return CombClass("right", cls.n)
    return cls


def _build_entries(d: int, cls: CombClass, max_size: int, cache: dict) -> list[CombEntry]:
    key = (d, _class_key(cls), max_size)
    if key in cache:
        return cache[key]
    if d == 0:
        result = [CombEntry(1, 1)]
        cache[key] = result
        return result
    part_cls = _part_class(cls)
    sub = _build_entries(d - 1, cls, max_size, cache)
    part_sub = sub if part_cls is cls else _build_entries(d - 1, part_cls, max_size, cache)
    block_width = 4 ** (d - 1)

    def prepended(source: list[CombEntry]) -> tuple[dict, int]:
        # Prepending block letter L shifts every node index by L * 4^(d-1).
        offsets = {}
        for block, digit in enumerate("0123"):
            offset = len(entries)
            offsets[digit] = offset
            shift = block * block_width
            for entry in source:
                entries.append(CombEntry(
                    entry.mask << shift,
                    entry.size,
                    None if entry.a_index is None else entry.a_index + offset,
                    None if entry.b_index is None else entry.b_index + offset,
                ))
        return offsets

    entries: list[CombEntry] = []
    # Combs confined to one block.  For the literal reading the block contents
    # recurse through the *wide* class (nested wide splits sit below a block),
    # so `sub` is correct here.
    block_offsets = prepended(sub)
    # Cross-block combs: the top split is at position 0 and the two parts are
    # block-confined combs of the part class.
    if part_cls is cls:
        part_offsets, part_list = block_offsets, sub
    else:
        part_list = part_sub
        part_offsets = prepended(part_list)
    for a_digit, b_digit in _CROSS_BLOCKS[cls.kind]:
        a_off, b_off = part_offsets[a_digit], part_offsets[b_digit]
        for ia, part_a in enumerate(part_list):
            if not size_within(part_a.size, cls.n):
                continue
            budget = max_size - part_a.size
            if budget < 1:
                continue
            for ib, part_b in enumerate(part_list):
                if part_b.size > budget:
                    continue
                entries.append(CombEntry(
                    entries[a_off + ia].mask | entries[b_off + ib].mask,
                    part_a.size + part_b.size,
                    a_off + ia,
                    b_off + ib,
                ))
    cache[key] = entries
    return entries


def _dedupe_entries(entries: list[CombEntry]) -> list[CombEntry]:
    # The literal wide class overlaps with the narrow right class, so the two
    # generation routes can produce the same node set; keep the first.
    seen: dict[int, int] = {}
    remap: list[int] = []
    out: list[CombEntry] = []
    for entry in entries:
        if entry.mask in seen:
            remap.append(seen[entry.mask])
            continue
        new_index = len(out)
        seen[entry.mask] = new_index
        remap.append(new_index)
        out.append(CombEntry(
            entry.mask,
            entry.size,
            None if entry.a_index is None else remap[entry.a_index],
            None if entry.b_index is None else remap[entry.b_index],
        ))
    return out


def _count_combs(d: int, class_key: tuple, max_size: int) -> int:
    counts = _count_vector(d, class_key, max_size)
    return sum(counts)


@lru_cache(maxsize=None)
def _count_vector(d: int, class_key: tuple, max_size: int) -> tuple:
    """counts[s] = number of size-(s+1) combs of the class at depth d."""
    kind, n, reading = class_key
    if d == 0:
        return tuple([1] + [0] * (max_size - 1))
    sub = _count_vector(d - 1, class_key, max_size)
    if kind == "wide-right" and reading == LITERAL:
        part = _count_vector(d - 1, ("right", n, RECURSIVE), max_size)
    else:
        part = sub
    out = [4 * c for c in sub]
    pairings = len(_CROSS_BLOCKS[kind])
    for sa in range(1, max_size):
        if not size_within(sa, OMEGA if n == "omega" else n):
            continue
        ca = part[sa - 1]
        if ca == 0:
            continue
        for sb in range(1, max_size - sa + 1):
            cb = part[sb - 1]
            if cb:
                out[sa + sb - 1] += pairings * ca * cb
    # Literal-wide overlaps with narrow-right; this overestimates, which is
    # fine for a resource guard.
    return tuple(out)


def enumerate_combs(d: int, cls: CombClass, max_size: int,
                    limit: int = DEFAULT_ENUM_LIMIT) -> Iterator[frozenset]:
    """Yield every comb of the class at depth d with size <= max_size.

    Deterministic order: by size, then lexicographically by the sorted node
    encodings.  No duplicates.
    """
    entries = comb_entries(d, cls, max_size, limit)
    level = enumerate_level(d)
    keyed = sorted((entry.size, mask_indices(entry.mask)) for entry in entries)
    for _, indices in keyed:
        yield frozenset(level[i] for i in indices)


def has_up_pair(nodes: Iterable[Node]) -> bool:
    """Whether some 2-subset classifies UpOne (the wide-comb obstruction)."""
    node_list = list(nodes)
    for i, a in enumerate(node_list):
        for b in node_list[i + 1:]:
            if classify_pair(a, b) == UP_ONE:
                return True
    return False
