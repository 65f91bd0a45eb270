"""Shared test oracles: slow, definition-direct computations that the fast
paths are checked against."""

from itertools import combinations

from comblab.combs import CombClass, RECURSIVE, is_comb
from comblab.index_core import enumerate_level
from comblab.patterns import SetSystem, k_inconsistent

SEED = 0xC0FFEE


def subset_filter_combs(d, cls, max_size):
    """Comb enumeration the slow way: all subsets of the level, filtered by
    the recognizer."""
    level = enumerate_level(d)
    out = []
    for size in range(1, max_size + 1):
        for combo in combinations(level, size):
            if is_comb(combo, cls) is not None:
                out.append(frozenset(combo))
    return out


def direct_weave_ok(ci, d, k, m, n, strong=False, reading=RECURSIVE):
    """Uncapped weave verdict: every subset of the level is classified by the
    recognizer and the definition is applied directly."""
    level = enumerate_level(d)
    up_cls = CombClass("up", m)
    cons_cls = CombClass("wide-right", n, reading) if strong else CombClass("right", n)
    for size in range(1, len(level) + 1):
        for combo in combinations(level, size):
            if is_comb(combo, up_cls) is not None and not k_inconsistent(ci, combo, k):
                return False
            if is_comb(combo, cons_cls) is not None and not ci.consistent(combo):
                return False
    return True


def direct_grid_ok(ci, s, k, strong=False):
    """Uncapped grid verdict: every subset of the square classified by the
    pairwise order predicates, definition applied directly."""
    from comblab.patterns import grid_points, is_antichain, is_chain, is_strict_chain

    points = grid_points(s)
    for size in range(1, len(points) + 1):
        for combo in combinations(points, size):
            if is_antichain(combo) and not k_inconsistent(ci, combo, k):
                return False
            in_class = is_chain(combo) if strong else is_strict_chain(combo)
            if in_class and not ci.consistent(combo):
                return False
    return True


def random_set_system(indices, rng, atoms=4):
    """Seeded arbitrary small set system over the given index list."""
    universe = [f"a{i}" for i in range(atoms)]
    family = {index: {u for u in universe if rng.random() < 0.55}
              for index in indices}
    return SetSystem(universe, family)


def induced_p4_oracle(graph):
    """Definition-direct induced-path search: try every ordered 4-tuple."""
    n = graph.n
    for quad in combinations(range(n), 4):
        for order in _orderings(quad):
            a, b, c, d = order
            wanted = {(min(a, b), max(a, b)), (min(b, c), max(b, c)),
                      (min(c, d), max(c, d))}
            actual = {(min(u, v), max(u, v))
                      for u, v in combinations(quad, 2) if graph.has_edge(u, v)}
            if actual == wanted:
                return order
    return None


def _orderings(quad):
    from itertools import permutations

    seen = set()
    for perm in permutations(quad):
        if perm[0] > perm[3]:
            perm = tuple(reversed(perm))
        if perm not in seen:
            seen.add(perm)
            yield perm


def random_graph(n, p, rng):
    from comblab.cographs import Graph

    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_subsystem_mutations(system, rng, count):
    """Deterministic stream of (index, atom) single-deletion mutations."""
    picks = []
    indices = sorted(system.family, key=repr)
    for _ in range(count):
        index = rng.choice(indices)
        atoms = system.atom_names(system.set_of(index))
        if not atoms:
            continue
        picks.append((index, rng.choice(atoms)))
    return picks


def with_shared_atom(system, indices):
    """Copy of a set system with one fresh atom added to the given indices."""
    fam = {index: set(system.atom_names(system.set_of(index)))
           for index in system.family}
    for index in indices:
        fam[index].add("shared-extra")
    return SetSystem(sorted(system.universe) + ["shared-extra"], fam)


def all_small_cotrees(max_leaves):
    """Every alternating cotree on leaf sets 0..k-1 for k <= max_leaves."""
    from comblab.cographs import Cotree, leaf

    def trees(labels, op):
        if len(labels) == 1:
            yield leaf(labels[0])
            return
        other = "union" if op == "join" else "join"
        for partition in ordered_partitions(labels):
            if len(partition) == 1:
                continue
            for kids in child_products(partition, other):
                yield Cotree(op, children=tuple(kids))

    def ordered_partitions(labels):
        if not labels:
            yield []
            return
        first = labels[0]
        rest = labels[1:]
        for size in range(len(rest) + 1):
            for extra in combinations(rest, size):
                block = [first] + list(extra)
                remaining = [x for x in rest if x not in extra]
                for tail in ordered_partitions(remaining):
                    yield [block] + tail

    def child_products(partition, op):
        if not partition:
            yield []
            return
        for head in trees(partition[0], op):
            for tail in child_products(partition[1:], op):
                yield [head] + tail

    for k in range(1, max_leaves + 1):
        labels = list(range(k))
        if k == 1:
            yield leaf(0)
            continue
        for top in ("union", "join"):
            yield from trees(labels, top)
