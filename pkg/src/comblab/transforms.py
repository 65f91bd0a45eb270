"""Constructive maps between configurations.

- strongify: interleave a marker letter so narrow-left splits become wide,
  turning plain weave witnesses into strong ones by pullback.
- truncation pullback: reindex along any prefix-respecting map.
- grid embedding: a closed-form map into the square under which up-pairs land
  incomparable and wide-right pairs land strictly comparable, so grid families
  pull back to strong weave families.
- epsilon scaling: symbolic a - b*eps coordinates for the chain/strict-chain
  comparison; ties in a coordinate survive scaling, which is recorded as a
  known limitation rather than repaired.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import ArgumentError, ResourceError
from .index_core import (Letter, Node, decode, encode, enumerate_level,
                         depth_bound)
from .patterns import PredicateOracle, SetSystem

GridPoint = tuple  # (x, y) under the product order


@dataclass(frozen=True)
class EpsCoord:
    """The value a - b*eps for an infinitesimal eps > 0.

    Ordered lexicographically with the epsilon part reversed: more epsilon
    subtracted means smaller.
    """

    a: int
    b: int

    def key(self) -> tuple:
        return (self.a, -self.b)

    def __lt__(self, other: "EpsCoord") -> bool:
        return self.key() < other.key()

    def __le__(self, other: "EpsCoord") -> bool:
        return self.key() <= other.key()

    def to_json(self) -> list:
        return [self.a, self.b]


@dataclass(frozen=True)
class IndexMap:
    """A total injective reindexing of one level into nodes or grid points."""

    depth: int
    codomain: str  # "level" | "grid"
    mapping: dict

    def __post_init__(self):
        level = enumerate_level(self.depth)
        missing = [node for node in level if node not in self.mapping]
        if missing:
            raise ArgumentError(f"index map is missing {encode(missing[0])}")
        targets = list(self.mapping.values())
        if len(set(targets)) != len(targets):
            raise ArgumentError("index map must be injective")

    def apply(self, node: Node):
        try:
            return self.mapping[node]
        except KeyError:
            raise ArgumentError(f"node {encode(node)} outside the map's domain")

    def to_json(self) -> dict:
        def enc(target):
            if isinstance(target, Node):
                return encode(target)
            return list(target)

        pairs = [[encode(node), enc(self.mapping[node])]
                 for node in sorted(self.mapping)]
        return {"depth": self.depth, "codomain": self.codomain, "map": pairs}

    @classmethod
    def from_json(cls, payload: dict) -> "IndexMap":
        codomain = payload["codomain"]
        mapping = {}
        for source, target in payload["map"]:
            node = decode(source)
            if codomain == "level":
                mapping[node] = decode(target)
            else:
                mapping[node] = (int(target[0]), int(target[1]))
        return cls(payload["depth"], codomain, mapping)


def strongify_index(d: int) -> IndexMap:
    """The depth-doubling map: position 2t records the first coordinate of
    letter t (paired with 0), position 2t+1 records letter t itself."""
    if 2 * d > depth_bound():
        raise ResourceError(f"doubled depth {2 * d} exceeds the bound {depth_bound()}")
    mapping = {}
    for node in enumerate_level(d):
        letters = []
        for letter in node.letters:
            letters.append(Letter(letter.first, 0))
            letters.append(letter)
        mapping[node] = Node.from_letters(letters)
    return IndexMap(d, "level", mapping)


def _reindex(ci, mapping: dict):
    """b'_new = b_old along new -> old; preserves the interface flavor."""
    if isinstance(ci, SetSystem):
        return ci.reindexed(mapping)
    image = {}
    for new_index, old_index in mapping.items():
        if old_index not in ci.indices:
            raise ArgumentError(f"target index {old_index!r} is not in the family")
        image[new_index] = old_index

    def predicate(family):
        return ci.consistent(frozenset(image[i] for i in family))

    return PredicateOracle(image, predicate)


def strongify_weave(ci):
    """Pull a family on level 2d back to level d along the strongify map.

    If the input satisfies the plain weave conditions, the output satisfies
    the strong ones: narrow-below splits are preserved and narrow-left splits
    become wide-left ones.
    """
    depths = {node.depth for node in ci.indices if isinstance(node, Node)}
    if len(depths) != 1:
        raise ArgumentError("expected a family indexed by a single level")
    (depth2,) = depths
    if depth2 % 2:
        raise ArgumentError(f"expected an even depth, got {depth2}")
    d = depth2 // 2
    fmap = strongify_index(d)
    missing = [t for t in fmap.mapping.values() if t not in ci.indices]
    if missing:
        raise ArgumentError(f"family is missing image index {encode(missing[0])}")
    return _reindex(ci, fmap.mapping)


def pullback(ci, mapping: Union[IndexMap, dict]):
    """Reindex along a prefix-respecting map into a deeper family.

    Every source node must be an initial segment of its image; this is what
    keeps comb structure intact under the pullback.
    """
    table = mapping.mapping if isinstance(mapping, IndexMap) else dict(mapping)
    if not table:
        raise ArgumentError("pullback requires a nonempty map")
    depths = {node.depth for node in table}
    if len(depths) != 1:
        raise ArgumentError("pullback domain must be a single level")
    (d0,) = depths
    level = enumerate_level(d0)
    for node in level:
        if node not in table:
            raise ArgumentError(f"pullback map is missing {encode(node)}")
    for node, target in table.items():
        if not isinstance(target, Node) or not node.is_prefix_of(target):
            raise ArgumentError(
                f"prefix condition violated at {encode(node)}: image {encode(target) if isinstance(target, Node) else target!r}")
        if target not in ci.indices:
            raise ArgumentError(f"image index {encode(target)} is not in the family")
    return _reindex(ci, table)


# Offsets of the four first-letter blocks inside a box of side 4W: chosen so
# same-first-coordinate blocks sit crosswise (incomparable) and the
# first-coordinate-1 blocks dominate the first-coordinate-0 blocks in both
# axes.
BASE_OFFSETS = {
    "0": (0, 1),  # letter (0,0)
    "1": (1, 0),  # letter (0,1)
    "2": (2, 3),  # letter (1,0)
    "3": (3, 2),  # letter (1,1)
}


def grid_embed_index(d: int) -> IndexMap:
    """Closed-form embedding of level d into [0, 4^d)^2.

    At each letter the block offset is BASE_OFFSETS scaled by the remaining
    box width; up-pairs map to incomparable points and wide-right pairs to
    strictly comparable ones.
    """
    if d > depth_bound():
        raise ResourceError(f"depth {d} exceeds the bound {depth_bound()}")
    mapping = {}
    for node in enumerate_level(d):
        x = y = 0
        width = 4 ** (d - 1) if d else 1
        for ch in node.digits:
            bx, by = BASE_OFFSETS[ch]
            x += bx * width
            y += by * width
            width //= 4
        mapping[node] = (x, y)
    return IndexMap(d, "grid", mapping)


def grid_to_weave(ci, d: int):
    """Pull a 4^d x 4^d grid family back onto level d along the embedding.

    A family passing the plain grid check pulls back to one passing the
    strong weave check with unbounded comb parameters: up-combs are pairwise
    incomparable images (antichains) and wide-right combs are pairwise
    strictly comparable images (strict chains).
    """
    side = 4 ** d
    expected = {(i, j) for i in range(side) for j in range(side)}
    if set(ci.indices) != expected:
        raise ArgumentError(f"family must be indexed by the full {side}x{side} square")
    fmap = grid_embed_index(d)
    return _reindex(ci, fmap.mapping)


def scale_point(point: GridPoint) -> tuple:
    """(i, j) as the symbolic pair ((1-eps)i, (1-eps)j)."""
    i, j = point
    return (EpsCoord(i, i), EpsCoord(j, j))


def epsilon_scale(ci):
    """Reindex a grid family by the symbolic scaling (i,j) -> ((1-eps)i, (1-eps)j).

    Antichains stay antichains and strict chains stay strict; a chain whose
    points have pairwise distinct coordinates on both axes becomes strict.  A
    chain with a tied coordinate keeps the tie, so it does not become strict;
    this limitation is deliberate and covered by tests.
    """
    mapping = {scale_point(pt): pt for pt in ci.indices}
    return _reindex(ci, mapping)


def eps_leq(p: tuple, q: tuple) -> bool:
    return p[0] <= q[0] and p[1] <= q[1]


def eps_strictly_below(p: tuple, q: tuple) -> bool:
    return p[0] < q[0] and p[1] < q[1]


def eps_comparable(p: tuple, q: tuple) -> bool:
    return eps_leq(p, q) or eps_leq(q, p)


def is_eps_strict_chain(points: Iterable[tuple]) -> bool:
    pts = sorted(set(points), key=lambda p: (p[0].key(), p[1].key()))
    return all(eps_strictly_below(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def is_eps_antichain(points: Iterable[tuple]) -> bool:
    pts = sorted(set(points), key=lambda p: (p[0].key(), p[1].key()))
    return all(not eps_comparable(pts[i], pts[j])
               for i in range(len(pts)) for j in range(i + 1, len(pts)))
