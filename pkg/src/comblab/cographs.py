"""Cograph algebra and recognition, the up-pair comb graph, and the two
bridges between vertex-indexed patterns and level-indexed families.

Recognition uses the complement-connectivity recursion: a graph with at
least two vertices is a cograph exactly when it or its complement is
disconnected, recursing into the pieces.  Graphs carry adjacency bitmasks so
recognition and induced-path search stay fast on exhaustive sweeps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Union

from . import combs as combs_mod
from . import patterns as patterns_mod
from .combs import UP_ONE
from .errors import ArgumentError, ResourceError
from .index_core import EMPTY, Letter, Node, enumerate_level
from .transforms import _reindex

UNION = "union"
JOIN = "join"
LEAF = "leaf"

COMB_GRAPH_DEPTH_BOUND = 4


class Graph:
    """Finite simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ArgumentError(f"vertex count must be nonnegative, got {n}")
        masks = [0] * n
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge {edge!r} out of range for n={n}")
            if u == v:
                raise ArgumentError(f"loop at vertex {u} not allowed")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._edges = None

    @classmethod
    def from_masks(cls, n: int, masks) -> "Graph":
        graph = cls.__new__(cls)
        graph.n = n
        graph._masks = tuple(masks)
        graph._edges = None
        return graph

    def adjacency_masks(self) -> tuple:
        return self._masks

    @property
    def edges(self) -> frozenset:
        if self._edges is None:
            out = []
            for u in range(self.n):
                mask = self._masks[u] >> (u + 1)
                v = u + 1
                while mask:
                    if mask & 1:
                        out.append((u, v))
                    mask >>= 1
                    v += 1
            self._edges = frozenset(out)
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, payload: dict) -> "Graph":
        return cls(payload["n"], [tuple(e) for e in payload["edges"]])

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for v in range(self.n):
            lines.append(f"  {v};")
        for u, v in sorted(self.edges):
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class P4Certificate(NamedTuple):
    """Vertices of an induced four-path a-b-c-d."""

    a: int
    b: int
    c: int
    d: int

    def to_json(self) -> list:
        return list(self)


@dataclass(frozen=True)
class Cotree:
    """Decomposition tree: leaves carry vertices, internal vertices combine
    children by disjoint union or join."""

    op: str
    vertex: Optional[int] = None
    children: tuple = ()

    def __post_init__(self):
        if self.op == LEAF:
            if self.vertex is None or self.children:
                raise ArgumentError("a leaf carries exactly one vertex")
        elif self.op in (UNION, JOIN):
            if len(self.children) < 2:
                raise ArgumentError(f"a {self.op} node needs at least two children")
        else:
            raise ArgumentError(f"unknown cotree op {self.op!r}")

    def leaves(self) -> list[int]:
        if self.op == LEAF:
            return [self.vertex]
        out = []
        for child in self.children:
            out.extend(child.leaves())
        return out

    def to_json(self):
        if self.op == LEAF:
            return {"op": LEAF, "v": self.vertex}
        return {"op": self.op, "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, payload) -> "Cotree":
        if payload["op"] == LEAF:
            return leaf(payload["v"])
        kids = tuple(cls.from_json(c) for c in payload["children"])
        return cls(payload["op"], children=kids)

    def to_dot(self) -> str:
        lines = ["digraph T {"]
        counter = [0]

        def walk(t: "Cotree") -> int:
            my_id = counter[0]
            counter[0] += 1
            label = f"v{t.vertex}" if t.op == LEAF else t.op
            lines.append(f'  n{my_id} [label="{label}"];')
            for child in t.children:
                child_id = walk(child)
                lines.append(f"  n{my_id} -> n{child_id};")
            return my_id

        walk(self)
        lines.append("}")
        return "\n".join(lines) + "\n"

    def normalized(self) -> "Cotree":
        """Flatten nested same-op children so union/join levels alternate."""
        if self.op == LEAF:
            return self
        kids = []
        for child in self.children:
            child = child.normalized()
            if child.op == self.op:
                kids.extend(child.children)
            else:
                kids.append(child)
        return Cotree(self.op, children=tuple(kids))


def leaf(vertex: int) -> Cotree:
    return Cotree(LEAF, vertex=vertex)


def union(*children: Cotree) -> Cotree:
    return Cotree(UNION, children=tuple(children))


def join(*children: Cotree) -> Cotree:
    return Cotree(JOIN, children=tuple(children))


def combine(op: str, g0: Graph, g1: Graph) -> Graph:
    """Disjoint union or join; the second graph's vertices shift by g0.n."""
    if op not in (UNION, JOIN):
        raise ArgumentError(f"unknown combine op {op!r}")
    n = g0.n + g1.n
    edges = list(g0.edges)
    edges.extend((u + g0.n, v + g0.n) for u, v in g1.edges)
    if op == JOIN:
        edges.extend((u, v + g0.n) for u in range(g0.n) for v in range(g1.n))
    return Graph(n, edges)


def eval_cotree(tree: Cotree) -> Graph:
    """The graph a cotree denotes: leaves are the vertices, and two leaves are
    adjacent exactly when their lowest common ancestor is a join.

    Leaf labels must be distinct and form 0..n-1 so the result is exact.
    """
    labels = tree.leaves()
    if len(set(labels)) != len(labels):
        dup = next(v for v in labels if labels.count(v) > 1)
        raise ArgumentError(f"duplicate leaf vertex {dup}")
    n = len(labels)
    if set(labels) != set(range(n)):
        raise ArgumentError(f"leaf vertices must be 0..{n - 1}, got {sorted(labels)}")
    edges = []

    def walk(t: Cotree) -> list[int]:
        if t.op == LEAF:
            return [t.vertex]
        groups = [walk(child) for child in t.children]
        if t.op == JOIN:
            for i, left in enumerate(groups):
                for right in groups[i + 1:]:
                    edges.extend((u, v) for u in left for v in right)
        merged = []
        for group in groups:
            merged.extend(group)
        return merged

    walk(tree)
    return Graph(n, edges)


def find_p4(graph: Graph) -> Optional[P4Certificate]:
    """Lexicographically first induced four-path (a, b, c, d), or None.

    For ascending a, b in N(a), c in N(b) avoiding a, the least d in
    N(c) \\ (N(a) | N(b)) completes an induced path; the first hit is the
    least tuple because both orientations of every path are scanned.
    """
    masks = graph._masks
    for a in range(graph.n):
        ma = masks[a]
        bb = ma
        while bb:
            b_bit = bb & -bb
            bb ^= b_bit
            b = b_bit.bit_length() - 1
            mb = masks[b]
            cc = mb & ~ma & ~(1 << a)
            while cc:
                c_bit = cc & -cc
                cc ^= c_bit
                c = c_bit.bit_length() - 1
                dd = masks[c] & ~mb & ~ma
                if dd:
                    d = (dd & -dd).bit_length() - 1
                    return P4Certificate(a, b, c, d)
    return None


def _components(vertices: int, masks) -> list[int]:
    """Connected components of the induced subgraph on a vertex mask."""
    out = []
    remaining = vertices
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            f = frontier
            while f:
                v_bit = f & -f
                f ^= v_bit
                grow |= masks[v_bit.bit_length() - 1]
            grow &= vertices & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def _co_components(vertices: int, masks) -> list[int]:
    """Components of the complement of the induced subgraph on a vertex mask."""
    out = []
    remaining = vertices
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            f = frontier
            while f:
                v_bit = f & -f
                f ^= v_bit
                grow |= vertices & ~masks[v_bit.bit_length() - 1] & ~v_bit
            grow &= ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def cotree_of(graph: Graph) -> Union[Cotree, P4Certificate]:
    """Recognize a cograph, returning its cotree, or certify failure with an
    induced four-path.

    A multi-vertex cograph is disconnected or co-disconnected; recurse into
    whichever decomposition applies.  When neither does the graph has an
    induced four-path, which is returned instead.
    """
    n = graph.n
    if n == 0:
        raise ArgumentError("cotree_of requires a nonempty graph")
    masks = graph._masks
    full = (1 << n) - 1

    def build(vertices: int) -> Optional[Cotree]:
        if vertices & (vertices - 1) == 0:
            return leaf(vertices.bit_length() - 1)
        comps = _components(vertices, masks)
        if len(comps) == 1:
            comps = _co_components(vertices, masks)
            if len(comps) == 1:
                return None
            op = JOIN
        else:
            op = UNION
        kids = []
        for comp in comps:
            kid = build(comp)
            if kid is None:
                return None
            kids.append(kid)
        return Cotree(op, children=tuple(kids))

    tree = build(full)
    if tree is not None:
        return tree
    cert = find_p4(graph)
    if cert is None:
        raise ArgumentError("recognition failed but no induced four-path exists")
    return cert


def comb_graph(d: int) -> tuple[Graph, Cotree]:
    """Graph on level d whose edges are the UpOne pairs, with its cotree.

    Vertices follow the level enumeration; the tree branches on the first
    letter, joining over the second coordinate inside each half and uniting
    the two halves.
    """
    if d > COMB_GRAPH_DEPTH_BOUND:
        raise ResourceError(
            f"comb graph depth limited to {COMB_GRAPH_DEPTH_BOUND}, got {d}")
    level = enumerate_level(d)
    n = len(level)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if combs_mod.classify_pair(level[i], level[j]) == UP_ONE:
                edges.append((i, j))
    graph = Graph(n, edges)

    def build(prefix: str) -> Cotree:
        if len(prefix) == d:
            return leaf(int(prefix, 4) if prefix else 0)
        return union(
            join(build(prefix + "0"), build(prefix + "1")),
            join(build(prefix + "2"), build(prefix + "3")),
        )

    return graph, build("")


def embed_cograph(tree: Cotree) -> tuple[int, dict]:
    """Injective map of the cotree's vertices into a level such that edges are
    exactly the UpOne pairs.

    Children are embedded recursively, right-padded with the letter (0,0) to a
    common depth (padding never moves a pair's meet), and a discriminator
    letter is prepended: (0,0)/(1,0) for a union, (0,0)/(0,1) for a join.
    Multi-child vertices fold left.
    """
    pad = Letter(0, 0)

    def embed(t: Cotree) -> tuple[int, dict]:
        if t.op == LEAF:
            return 0, {t.vertex: EMPTY}
        first = Letter(0, 0)
        second = Letter(1, 0) if t.op == UNION else Letter(0, 1)
        depth, mapping = embed(t.children[0])
        for child in t.children[1:]:
            child_depth, child_map = embed(child)
            depth, mapping = _merge(mapping, depth, child_map, child_depth,
                                    first, second)
        return depth, mapping

    def _merge(map0, d0, map1, d1, first, second):
        d = max(d0, d1)
        out = {}
        for v, node in map0.items():
            padded = node.digits + pad.digit * (d - d0)
            out[v] = Node(first.digit + padded)
        for v, node in map1.items():
            padded = node.digits + pad.digit * (d - d1)
            out[v] = Node(second.digit + padded)
        return d + 1, out

    return embed(tree)


def graph_to_weave_oracle(pattern_ci, d: int):
    """Reindex a comb-graph pattern by the vertex-to-node correspondence.

    The input must pass the graph pattern check against the comb graph; the
    output then satisfies the strong weave conditions with k=2 and unbounded
    comb parameters, since up-combs are cliques and wide-right combs are
    independent sets of the comb graph.
    """
    graph, _ = comb_graph(d)
    report = patterns_mod.check_graph_pattern(pattern_ci, graph)
    if not report.ok:
        first = report.violations[0].to_json() if report.violations else None
        raise ArgumentError(f"input is not a comb-graph pattern: {first}")
    level = enumerate_level(d)
    mapping = {node: v for v, node in enumerate(level)}
    return _reindex(pattern_ci, mapping)


def weave_to_graph_oracle(ci, tree: Cotree, check: bool = True):
    """Pull a level-indexed family back onto a cotree's vertices.

    Each vertex v maps to its embedding node right-padded to the family's
    depth; edges become up-pairs (inconsistent) and non-edges wide pairs
    (consistent), so the result is a pattern for the cotree's graph.
    """
    depths = {node.depth for node in ci.indices if isinstance(node, Node)}
    if len(depths) != 1:
        raise ArgumentError("expected a family indexed by a single level")
    (d,) = depths
    embed_depth, vmap = embed_cograph(tree)
    if embed_depth > d:
        raise ArgumentError(
            f"cotree needs depth {embed_depth}, family only has depth {d}")
    if check:
        report = patterns_mod.check_weave(ci, d, 2, 1, combs_mod.OMEGA, strong=True)
        if not report.ok:
            first = report.violations[0].to_json() if report.violations else None
            raise ArgumentError(f"input fails the strong weave conditions: {first}")
    pad = Letter(0, 0).digit
    mapping = {v: Node(node.digits + pad * (d - embed_depth))
               for v, node in vmap.items()}
    return _reindex(ci, mapping)


def random_cotree(n_leaves: int, seed: int) -> Cotree:
    """Seeded random cotree with alternating labels on leaves 0..n_leaves-1."""
    if n_leaves < 1:
        raise ArgumentError(f"need at least one leaf, got {n_leaves}")
    rng = random.Random(seed)
    labels = list(range(n_leaves))
    rng.shuffle(labels)

    def build(items: list[int], op: str) -> Cotree:
        if len(items) == 1:
            return leaf(items[0])
        parts = min(len(items), rng.randint(2, 3))
        cuts = sorted(rng.sample(range(1, len(items)), parts - 1))
        groups = []
        prev = 0
        for cut in cuts + [len(items)]:
            groups.append(items[prev:cut])
            prev = cut
        other = UNION if op == JOIN else JOIN
        return Cotree(op, children=tuple(build(g, other) for g in groups))

    top = rng.choice((UNION, JOIN))
    if n_leaves == 1:
        return leaf(labels[0])
    return build(labels, top)
