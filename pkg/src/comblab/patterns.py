"""Set-system consistency semantics, configuration checkers, and witnesses.

A family of parameter sets is modeled as subsets of a finite universe;
"consistent" means the family has a common atom (the empty family is
consistent by convention).  Any finite set system arises this way from unary
predicates, so this is the exact finite fragment of the solution-set notion
the checkers are about.

Checkers quantify over combs/chains up to an explicit size cap, which is
reported; the inconsistency clauses need no cap because a failure is always
witnessed at size k (subsets of combs, chains, and antichains stay in class).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import combs as combs_mod
from .combs import (CombClass, RECURSIVE, comb_entries, is_comb,
                    wide_right)
from .errors import ArgumentError, ResourceError
from .index_core import Node, encode, enumerate_level

DEFAULT_SEED = 0xC0FFEE
DEFAULT_MAX_VIOLATIONS = 10
SUBSET_ENUM_LIMIT = 2_000_000

CONSISTENCY = "Consistency"
INCONSISTENCY = "Inconsistency"


class ConstructionError(ArgumentError):
    """A supposedly valid construction failed its own re-check."""


class SetSystem:
    """A family of subsets of a finite universe, keyed by arbitrary indices.

    Atoms are stored as ids into `universe` so that family intersections stay
    cheap; the JSON form uses the atom names.
    """

    def __init__(self, universe: Iterable[str], family: dict):
        self.universe = tuple(universe)
        if len(set(self.universe)) != len(self.universe):
            raise ArgumentError("universe atoms must be distinct")
        self._atom_id = {name: i for i, name in enumerate(self.universe)}
        packed = {}
        for index, atoms in family.items():
            ids = frozenset(self._pack(atom) for atom in atoms)
            packed[index] = ids
        self.family = packed
        self.indices = frozenset(packed)

    def _pack(self, atom) -> int:
        if isinstance(atom, int):
            if not 0 <= atom < len(self.universe):
                raise ArgumentError(f"atom id {atom} out of range")
            return atom
        try:
            return self._atom_id[atom]
        except KeyError:
            raise ArgumentError(f"atom {atom!r} is not in the universe")

    def atom_sets(self) -> dict:
        return dict(self.family)

    def set_of(self, index) -> frozenset:
        try:
            return self.family[index]
        except KeyError:
            raise ArgumentError(f"unknown index {index!r}")

    def intersection(self, indices: Iterable) -> frozenset:
        sets = sorted((self.set_of(i) for i in indices), key=len)
        if not sets:
            return frozenset(range(len(self.universe)))
        out = sets[0]
        for s in sets[1:]:
            out = out & s
            if not out:
                break
        return out

    def consistent(self, indices: Iterable) -> bool:
        indices = list(indices)
        if not indices:
            return True
        return bool(self.intersection(indices))

    def atom_names(self, ids: Iterable[int]) -> list[str]:
        return sorted(self.universe[i] for i in ids)

    def reindexed(self, mapping: dict) -> "SetSystem":
        """New system with family b'_new = b_old over the same universe."""
        fam = {}
        for new_index, old_index in mapping.items():
            fam[new_index] = self.set_of(old_index)
        out = SetSystem.__new__(SetSystem)
        out.universe = self.universe
        out._atom_id = self._atom_id
        out.family = fam
        out.indices = frozenset(fam)
        return out

    def mutated_without(self, index, atom_name: str) -> "SetSystem":
        """Copy with one atom removed from one set (for perturbation tests)."""
        atom = self._pack(atom_name)
        fam = dict(self.family)
        fam[index] = fam[index] - {atom}
        out = SetSystem.__new__(SetSystem)
        out.universe = self.universe
        out._atom_id = self._atom_id
        out.family = fam
        out.indices = frozenset(fam)
        return out

    def to_json(self, index_encoder: Callable = None) -> dict:
        enc = index_encoder or encode_index
        entries = []
        for index in sorted(self.family, key=lambda i: enc(i)):
            entries.append({"index": enc(index),
                            "set": self.atom_names(self.family[index])})
        return {"universe": sorted(self.universe), "family": entries}

    @classmethod
    def from_json(cls, payload: dict, index_decoder: Callable) -> "SetSystem":
        family = {}
        for entry in payload["family"]:
            family[index_decoder(entry["index"])] = entry["set"]
        return cls(payload["universe"], family)


class PredicateOracle:
    """Consistency given by a deterministic predicate instead of sets."""

    def __init__(self, indices: Iterable, predicate: Callable[[frozenset], bool]):
        self.indices = frozenset(indices)
        self._predicate = predicate

    def consistent(self, indices: Iterable) -> bool:
        family = frozenset(indices)
        if not family:
            return True
        unknown = family - self.indices
        if unknown:
            raise ArgumentError(f"unknown index {sorted(unknown, key=repr)[0]!r}")
        return bool(self._predicate(family))


def encode_index(index) -> str:
    """Canonical string form of an index: node, grid point, or vertex."""
    if isinstance(index, Node):
        return encode(index)
    if isinstance(index, tuple) and len(index) == 2 and all(isinstance(c, int) for c in index):
        return f"{index[0]},{index[1]}"
    return str(index)


def consistent(ci, indices: Iterable) -> bool:
    """Whether the subfamily has a common solution; empty families are consistent."""
    indices = list(indices)
    unknown = [i for i in indices if i not in ci.indices]
    if unknown:
        raise ArgumentError(f"unknown index {unknown[0]!r}")
    return ci.consistent(indices)


def k_inconsistent(ci, indices: Iterable, k: int) -> bool:
    """Every k-element subfamily is inconsistent; vacuous below size k."""
    if not isinstance(k, int) or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    from itertools import combinations

    items = sorted(set(indices), key=encode_index)
    if len(items) < k:
        return True
    for sub in combinations(items, k):
        if ci.consistent(sub):
            return False
    return True


@dataclass(frozen=True)
class Violation:
    kind: str  # Consistency | Inconsistency
    indices: tuple
    certificate: object = None
    atom: Optional[str] = None

    def to_json(self) -> dict:
        cert = self.certificate
        if hasattr(cert, "to_json"):
            cert = cert.to_json()
        out = {"kind": self.kind,
               "indices": [encode_index(i) for i in self.indices],
               "certificate": cert}
        if self.atom is not None:
            out["atom"] = self.atom
        return out


@dataclass
class Report:
    ok: bool
    cap: int
    truncated: bool = False
    violations: list = field(default_factory=list)
    violations_truncated: bool = False

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "cap": self.cap,
            "truncated": self.truncated,
            "violations": [v.to_json() for v in self.violations],
            "violations_truncated": self.violations_truncated,
        }


class _ViolationSink:
    def __init__(self, cap: int):
        self.cap = cap
        self.items: list[Violation] = []
        self.total = 0

    def add(self, violation: Violation) -> None:
        self.total += 1
        if len(self.items) < self.cap:
            self.items.append(violation)

    def report(self, cap: int, truncated: bool) -> Report:
        return Report(
            ok=self.total == 0,
            cap=cap,
            truncated=truncated,
            violations=self.items,
            violations_truncated=self.total > len(self.items),
        )


def default_cap(k: int, scale: int) -> int:
    return max(k, 2 * scale, 8)


def _require_indices(ci, expected: Iterable, what: str) -> None:
    expected = set(expected)
    have = set(ci.indices)
    missing = expected - have
    if missing:
        sample = sorted(missing, key=encode_index)[0]
        raise ArgumentError(f"{what} is missing index {encode_index(sample)}")
    extra = have - expected
    if extra:
        sample = sorted(extra, key=encode_index)[0]
        raise ArgumentError(f"{what} has unexpected index {encode_index(sample)}")


def _needed_mask(entries, wanted) -> list[bool]:
    """Entries whose intersections feed a wanted verdict: the wanted entries
    plus their part ancestry (entries are topologically ordered)."""
    needed = [False] * len(entries)
    for pos in range(len(entries) - 1, -1, -1):
        if wanted(entries[pos]) or needed[pos]:
            needed[pos] = True
            entry = entries[pos]
            if entry.a_index is not None:
                needed[entry.a_index] = True
                needed[entry.b_index] = True
    return needed


def _family_consistency(ci, entries, level, wanted=None):
    """Bottom-up consistency evaluation over structured comb entries.

    For a set system, the intersection of a compound comb is the intersection
    of its two parts, so one set-and per entry suffices.  When `wanted` is
    given, only those entries (and the parts they are built from) are folded.
    Returns a list of verdicts aligned with `entries` (None where skipped).
    """
    if isinstance(ci, SetSystem):
        sets = [ci.set_of(node) for node in level]
        needed = _needed_mask(entries, wanted) if wanted else None
        inters: list[frozenset] = [None] * len(entries)
        verdicts = [None] * len(entries)
        for pos, entry in enumerate(entries):
            if needed is not None and not needed[pos]:
                continue
            if entry.a_index is None:
                inter = sets[entry.mask.bit_length() - 1]
            else:
                inter = inters[entry.a_index] & inters[entry.b_index]
            inters[pos] = inter
            verdicts[pos] = bool(inter)
        return verdicts
    return [ci.consistent(frozenset(combs_mod.mask_nodes(entry.mask, level)))
            if wanted is None or wanted(entry) else None
            for entry in entries]


def check_weave(ci, d: int, k: int, m, n, *, strong: bool = False,
                reading: str = RECURSIVE, cap: Optional[int] = None,
                max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """Verify the weave conditions on a fully indexed depth-d family.

    ok iff every up-m-comb family is k-inconsistent and every right-n-comb
    family (wide right-n-comb family when strong) is consistent.  The
    inconsistency clause is checked on combs of size exactly k, which is
    complete because subsets of combs are combs; the consistency clause is
    capped at `cap` (default max(k, 2d, 8)) and the cap is reported.
    """
    if not isinstance(k, int) or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    level = enumerate_level(d)
    _require_indices(ci, level, "weave family")
    if cap is None:
        cap = default_cap(k, d)
    sink = _ViolationSink(max_violations)

    up_cls = CombClass("up", m)
    up_entries = comb_entries(d, up_cls, max(k, 1))
    up_verdicts = _family_consistency(ci, up_entries, level,
                                      wanted=lambda e: e.size == k)
    for pos in _entry_report_order(up_entries):
        entry = up_entries[pos]
        if entry.size == k and up_verdicts[pos]:
            nodes = frozenset(combs_mod.mask_nodes(entry.mask, level))
            atom = None
            if isinstance(ci, SetSystem):
                inter = ci.intersection(nodes)
                atom = ci.atom_names(inter)[0] if inter else None
            sink.add(Violation(INCONSISTENCY, tuple(sorted(nodes)),
                               is_comb(nodes, up_cls), atom))

    if strong:
        cons_cls = CombClass("wide-right", n, reading)
    else:
        cons_cls = CombClass("right", n)
    cons_entries = comb_entries(d, cons_cls, cap)
    # With an unbounded part size, every up-, right-, or recursive-wide comb
    # below min(cap, 2^d) extends inside its class, so the size-min(cap, 2^d)
    # combs cover everything and intersection monotonicity settles the rest.
    # The literal wide class has non-extendable small combs (a deep wide pair
    # admits no third element), bounded classes cap their lower parts, and
    # predicate oracles promise no monotonicity: all three are checked in
    # full.
    wanted = None
    if n is combs_mod.OMEGA and isinstance(ci, SetSystem) and \
            cons_cls.reading == RECURSIVE:
        target = min(cap, 2 ** d)
        wanted = lambda e: e.size == target  # noqa: E731
    cons_verdicts = _family_consistency(ci, cons_entries, level, wanted=wanted)
    for pos in _entry_report_order(cons_entries):
        if cons_verdicts[pos] is False:
            nodes = frozenset(combs_mod.mask_nodes(cons_entries[pos].mask, level))
            sink.add(Violation(CONSISTENCY, tuple(sorted(nodes)),
                               is_comb(nodes, cons_cls)))
    return sink.report(cap, truncated=cap < 2 ** d)


def _entry_report_order(entries) -> list[int]:
    return sorted(range(len(entries)),
                  key=lambda i: (entries[i].size, combs_mod.mask_indices(entries[i].mask)))


# --- grids ----------------------------------------------------------------


def product_leq(p: tuple, q: tuple) -> bool:
    return p[0] <= q[0] and p[1] <= q[1]


def strictly_below(p: tuple, q: tuple) -> bool:
    return p[0] < q[0] and p[1] < q[1]


def comparable(p: tuple, q: tuple) -> bool:
    return product_leq(p, q) or product_leq(q, p)


def is_antichain(points: Iterable[tuple]) -> bool:
    pts = sorted(set(points))
    return all(not comparable(pts[i], pts[j])
               for i in range(len(pts)) for j in range(i + 1, len(pts)))


def is_chain(points: Iterable[tuple]) -> bool:
    pts = sorted(set(points))
    return all(product_leq(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def is_strict_chain(points: Iterable[tuple]) -> bool:
    pts = sorted(set(points))
    return all(strictly_below(pts[i], pts[i + 1]) for i in range(len(pts) - 1))


def grid_points(s: int) -> list[tuple]:
    return [(i, j) for i in range(s) for j in range(s)]


def _grow_chains(points: list[tuple], step_ok, max_size: int):
    """All nonempty chains under the given pairwise step relation.

    Points are consumed in lexicographic order; a sorted chain is generated
    exactly once by extending from its largest element.
    """
    chains: list[tuple] = []
    stack = [((pt,), idx) for idx, pt in enumerate(points)]
    while stack:
        chain, last_idx = stack.pop()
        chains.append(chain)
        if len(chain) == max_size:
            continue
        for idx in range(last_idx + 1, len(points)):
            if step_ok(chain[-1], points[idx]):
                stack.append((chain + (points[idx],), idx))
    chains.sort(key=lambda c: (len(c), c))
    return chains


def strict_chains(s: int, max_size: int) -> list[tuple]:
    return _grow_chains(grid_points(s), strictly_below, max_size)


def chains(s: int, max_size: int) -> list[tuple]:
    def step(p, q):
        return product_leq(p, q) and p != q
    return _grow_chains(grid_points(s), step, max_size)


def antichains_of_size(s: int, size: int) -> list[tuple]:
    from itertools import combinations

    out = []
    for combo in combinations(grid_points(s), size):
        if is_antichain(combo):
            out.append(combo)
    return out


def check_grid(ci, s: int, k: int, *, strong: bool = False,
               cap: Optional[int] = None,
               max_violations: int = DEFAULT_MAX_VIOLATIONS) -> Report:
    """Verify the grid conditions on a fully indexed s x s family.

    ok iff every antichain family is k-inconsistent and every strict chain
    family (every chain family when strong) is consistent.  Strict chains are
    pairwise strictly increasing in both coordinates; chains are pairwise
    comparable in the product order.  The default cap max(k, 2s, 8) covers
    every chain of the square, so grid checks are exact by default.
    """
    if not isinstance(k, int) or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    if s < 1:
        raise ArgumentError(f"grid side must be positive, got {s}")
    _require_indices(ci, grid_points(s), "grid family")
    if cap is None:
        cap = default_cap(k, s)
    sink = _ViolationSink(max_violations)

    for combo in antichains_of_size(s, k):
        if ci.consistent(combo):
            atom = None
            if isinstance(ci, SetSystem):
                inter = ci.intersection(combo)
                atom = ci.atom_names(inter)[0] if inter else None
            sink.add(Violation(INCONSISTENCY, combo, {"structure": "antichain"}, atom))

    families = chains(s, cap) if strong else strict_chains(s, cap)
    structure = "chain" if strong else "strict-chain"
    for fam in families:
        if not ci.consistent(fam):
            sink.add(Violation(CONSISTENCY, fam, {"structure": structure}))
    return sink.report(cap, truncated=cap < 2 * s - 1)


# --- graph patterns -------------------------------------------------------


def check_graph_pattern(ci, graph, *, cap: Optional[int] = None,
                        max_violations: int = DEFAULT_MAX_VIOLATIONS,
                        limit: int = SUBSET_ENUM_LIMIT) -> Report:
    """Verify that a vertex-indexed family is consistent exactly on the
    independent sets of the graph, over all vertex subsets up to `cap`."""
    from itertools import combinations
    from math import comb as binom

    vertices = list(range(graph.n))
    _require_indices(ci, vertices, "graph pattern family")
    if cap is None:
        cap = graph.n
    cap = min(cap, graph.n)
    total = sum(binom(graph.n, size) for size in range(1, cap + 1))
    if total > limit:
        raise ResourceError(
            f"graph pattern check would scan {total} subsets, over the limit {limit}")
    masks = graph.adjacency_masks()
    sink = _ViolationSink(max_violations)
    for size in range(1, cap + 1):
        for combo in combinations(vertices, size):
            seen = 0
            edge = None
            for v in combo:
                if masks[v] & seen:
                    u = (masks[v] & seen).bit_length() - 1
                    edge = (u, v)
                    break
                seen |= 1 << v
            independent = edge is None
            is_consistent = ci.consistent(combo)
            if independent and not is_consistent:
                sink.add(Violation(CONSISTENCY, combo, {"structure": "independent"}))
            elif not independent and is_consistent:
                atom = None
                if isinstance(ci, SetSystem):
                    inter = ci.intersection(combo)
                    atom = ci.atom_names(inter)[0] if inter else None
                sink.add(Violation(INCONSISTENCY, combo,
                                   {"structure": "edge", "edge": list(edge)}, atom))
    return sink.report(cap, truncated=cap < graph.n)


# --- templates ------------------------------------------------------------


@dataclass(frozen=True)
class Template:
    """Abstract requirements: some families must be consistent, others must be
    k-inconsistent."""

    indices: frozenset
    must_consist: tuple
    must_k_inconsist: tuple
    k: int

    @classmethod
    def make(cls, indices, must_consist, must_k_inconsist, k) -> "Template":
        indices = frozenset(indices)
        mc = tuple(frozenset(s) for s in must_consist)
        mi = tuple(frozenset(s) for s in must_k_inconsist)
        if not isinstance(k, int) or k < 2:
            raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
        for group in mc + mi:
            if not group <= indices:
                raise ArgumentError("constraint sets must be subsets of the indices")
        return cls(indices, mc, mi, k)


def realizable(template: Template) -> Optional[SetSystem]:
    """Decide template realizability and return a canonical witness.

    A template is realizable iff no k-subset of a must-be-inconsistent family
    lies inside a must-be-consistent one: such a k-subset would be forced
    consistent by monotonicity.  When realizable, one atom per must-consist
    set suffices: give index i every atom of the consistent sets containing
    it.  The construction is re-validated before returning, so an unfulfilled
    constraint fails loudly instead of leaking a bad witness.
    """
    from itertools import combinations

    for group in template.must_k_inconsist:
        if len(group) < template.k:
            continue
        for sub in combinations(sorted(group, key=repr), template.k):
            subset = frozenset(sub)
            if any(subset <= cset for cset in template.must_consist):
                return None
    names = [f"c{i}" for i in range(len(template.must_consist))]
    family = {
        index: {names[i] for i, cset in enumerate(template.must_consist) if index in cset}
        for index in template.indices
    }
    system = SetSystem(names, family)
    for cset in template.must_consist:
        if not system.consistent(cset):
            raise ConstructionError(f"witness fails consistency of {sorted(cset, key=repr)}")
    for group in template.must_k_inconsist:
        if not k_inconsistent(system, group, template.k):
            raise ConstructionError(
                f"witness fails {template.k}-inconsistency of {sorted(group, key=repr)}")
    return system


# --- canonical witnesses --------------------------------------------------


def weave_witness(d: int, k: int, m, n, genuine_k: bool = False,
                  limit: int = combs_mod.DEFAULT_ENUM_LIMIT) -> SetSystem:
    """A depth-d family passing the strong weave check.

    Universe: all wide right-n-combs, each an atom named by its node set;
    b_sigma collects the combs through sigma.  Wide combs never contain an
    up-pair, so up-comb families are 2-inconsistent, and every wide comb
    family contains itself, so the consistency clause holds.  With genuine_k,
    every node subset of size < k joins the universe as well, which keeps
    k-inconsistency but defeats (k-1)-inconsistency on up-combs.
    """
    if not isinstance(k, int) or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    level = enumerate_level(d)
    entries = comb_entries(d, wide_right(n), max_size=len(level), limit=limit)
    atom_sets = [tuple(node.digits for node in combs_mod.mask_nodes(entry.mask, level))
                 for entry in entries]
    if genuine_k:
        from itertools import combinations
        from math import comb as binom

        extra_total = sum(binom(len(level), size) for size in range(1, k))
        if len(atom_sets) + extra_total > limit:
            raise ResourceError(
                f"witness universe would have {len(atom_sets) + extra_total} atoms, "
                f"over the limit {limit}")
        digit_level = sorted(node.digits for node in level)
        for size in range(1, k):
            for combo in combinations(digit_level, size):
                atom_sets.append(combo)
    atom_sets = sorted(set(atom_sets))
    names = ["{" + ",".join(s or "-" for s in group) + "}" for group in atom_sets]
    member = {node.digits: set() for node in level}
    for name, group in zip(names, atom_sets):
        for digit in group:
            member[digit].add(name)
    family = {node: member[node.digits] for node in level}
    return SetSystem(names, family)


def _maximal(families: list[tuple], points: list[tuple], fits) -> list[tuple]:
    out = []
    for fam in families:
        fam_set = set(fam)
        if any(pt not in fam_set and fits(fam, pt) for pt in points):
            continue
        out.append(fam)
    return out


def grid_witness(s: int, k: int, strong: bool = False) -> SetSystem:
    """An s x s family passing the grid check with k = 2 (hence any k).

    Universe: the maximal strict chains of the square (maximal chains when
    strong); b_(i,j) collects the chains through (i,j).  Incomparable points
    never share a chain, and every (strict) chain extends to a maximal one.
    """
    if not isinstance(k, int) or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    points = grid_points(s)
    if strong:
        base = chains(s, 2 * s - 1)

        def fits(fam, pt):
            return all(comparable(pt, q) for q in fam)
    else:
        base = strict_chains(s, s)

        def fits(fam, pt):
            return all(strictly_below(pt, q) or strictly_below(q, pt) for q in fam)

    maximal = _maximal(base, points, fits)
    names = ["{" + ";".join(f"{i},{j}" for i, j in fam) + "}" for fam in maximal]
    family = {pt: {name for name, fam in zip(names, maximal) if pt in fam}
              for pt in points}
    return SetSystem(sorted(names), family)


def graph_witness(graph, materialize: bool = False):
    """A vertex-indexed family that is consistent exactly on independent sets.

    By default a predicate oracle; with materialize=True, a set system whose
    atoms are the maximal independent sets.
    """
    masks = graph.adjacency_masks()

    if not materialize:
        def predicate(family):
            seen = 0
            for v in sorted(family):
                if masks[v] & seen:
                    return False
                seen |= 1 << v
            return True

        return PredicateOracle(range(graph.n), predicate)

    mis = _maximal_independent_sets(graph.n, masks)
    names = ["{" + ",".join(map(str, sorted(group))) + "}" for group in mis]
    family = {v: {name for name, group in zip(names, mis) if v in group}
              for v in range(graph.n)}
    return SetSystem(sorted(names), family)


def _maximal_independent_sets(n: int, masks) -> list[tuple]:
    if n > 20:
        raise ResourceError(f"maximal independent set scan limited to 20 vertices, got {n}")
    out = []
    for subset in range(1, 1 << n):
        members = [v for v in range(n) if (subset >> v) & 1]
        if any(masks[v] & subset for v in members):
            continue
        if any(not (subset >> v) & 1 and not (masks[v] & subset) for v in range(n)):
            continue
        out.append(tuple(members))
    return sorted(out)


def triangle_free_demo(length: int):
    """Finite pair-indexed demo separating two consistency behaviors.

    Index t stands for the endpoint pair (u_t, v_t) in a graph whose only
    edges run from v_i to u_j for i < j.  A family of pairs counts as
    consistent when its endpoints form an independent set (a fresh common
    neighbor could then be attached without creating a triangle).  On the
    p side every 2-subfamily hits an edge; the q side has no edges at all.
    """
    if length < 2:
        raise ArgumentError(f"length must be at least 2, got {length}")
    indices = range(length)
    edges = demo_edges(length)

    def p_predicate(family):
        endpoints = {(side, t) for t in family for side in ("u", "v")}
        return not any(a in endpoints and b in endpoints for a, b in edges)

    def q_predicate(family):
        return True

    return (PredicateOracle(indices, p_predicate),
            PredicateOracle(indices, q_predicate))


def demo_edges(length: int) -> list[tuple]:
    """Edge list of the demo graph: endpoints named ("u", t) and ("v", t)."""
    return [(("v", i), ("u", j)) for i in range(length) for j in range(i + 1, length)]
