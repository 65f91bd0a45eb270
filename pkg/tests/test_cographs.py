import random
from itertools import combinations

import pytest

from comblab.combs import OMEGA, UP_ONE, classify_pair
from comblab.cographs import (Cotree, Graph, P4Certificate, comb_graph,
                              combine, cotree_of, embed_cograph, eval_cotree,
                              find_p4, graph_to_weave_oracle, join, leaf,
                              random_cotree, union, weave_to_graph_oracle)
from comblab.errors import ArgumentError
from comblab.index_core import decode, enumerate_level
from comblab.patterns import (check_graph_pattern, check_weave, graph_witness,
                              weave_witness)

from helpers import SEED, all_small_cotrees, induced_p4_oracle, random_graph


def all_graphs(n):
    pair_list = list(combinations(range(n), 2))
    for bits in range(1 << len(pair_list)):
        yield Graph(n, [e for i, e in enumerate(pair_list) if (bits >> i) & 1])


# --- algebra ----------------------------------------------------------------


def test_combine_examples():
    k1 = Graph(1)
    k2 = combine("join", k1, k1)
    assert k2.edges == frozenset({(0, 1)})
    two_k2 = combine("union", k2, k2)
    assert two_k2.n == 4
    assert two_k2.edges == frozenset({(0, 1), (2, 3)})


def test_combine_edge_count_oracle():
    rng = random.Random(SEED)
    for _ in range(100):
        g0 = random_graph(rng.randint(1, 6), 0.5, rng)
        g1 = random_graph(rng.randint(1, 6), 0.5, rng)
        joined = combine("join", g0, g1)
        assert len(joined.edges) == len(g0.edges) + len(g1.edges) + g0.n * g1.n
        united = combine("union", g0, g1)
        assert len(united.edges) == len(g0.edges) + len(g1.edges)


def test_eval_cotree_examples():
    assert eval_cotree(leaf(0)) == Graph(1)
    k3 = eval_cotree(join(leaf(0), leaf(1), leaf(2)))
    assert len(k3.edges) == 3
    with pytest.raises(ArgumentError):
        eval_cotree(union(leaf(0), leaf(0)))
    with pytest.raises(ArgumentError):
        eval_cotree(union(leaf(0), leaf(5)))


def test_eval_cotree_roundtrip_random():
    rng = random.Random(SEED)
    for _ in range(200):
        tree = random_cotree(rng.randint(1, 24), rng.randrange(1 << 30))
        graph = eval_cotree(tree)
        back = cotree_of(graph)
        assert isinstance(back, Cotree)
        assert eval_cotree(back) == graph


def test_cotree_validation():
    with pytest.raises(ArgumentError):
        Cotree("union", children=(leaf(0),))
    with pytest.raises(ArgumentError):
        Cotree("leaf")


def test_normalized_flattens():
    tree = union(union(leaf(0), leaf(1)), leaf(2)).normalized()
    assert tree.op == "union"
    assert len(tree.children) == 3


# --- p4 search --------------------------------------------------------------


def test_find_p4_examples():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert find_p4(p4) == P4Certificate(0, 1, 2, 3)
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert find_p4(c4) is None
    assert induced_p4_oracle(c4) is None


def test_find_p4_matches_definition_oracle():
    for n in range(1, 6):
        for graph in all_graphs(n):
            assert (find_p4(graph) is None) == (induced_p4_oracle(graph) is None)


def test_find_p4_certificate_is_induced_path():
    rng = random.Random(SEED)
    for _ in range(200):
        graph = random_graph(8, rng.random(), rng)
        cert = find_p4(graph)
        if cert is None:
            continue
        a, b, c, d = cert
        assert graph.has_edge(a, b) and graph.has_edge(b, c) and graph.has_edge(c, d)
        assert not graph.has_edge(a, c) and not graph.has_edge(a, d)
        assert not graph.has_edge(b, d)


def test_cotree_outputs_are_p4_free():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        tree = random_cotree(rng.randint(1, 16), rng.randrange(1 << 30))
        assert find_p4(eval_cotree(tree)) is None


# --- recognition ------------------------------------------------------------


def test_cotree_of_examples():
    k2 = Graph(2, [(0, 1)])
    tree = cotree_of(k2)
    assert tree.to_json() == {"op": "join", "children": [
        {"op": "leaf", "v": 0}, {"op": "leaf", "v": 1}]}
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cotree_of(p4) == P4Certificate(0, 1, 2, 3)


def test_cotree_of_comb_graph_depth1():
    graph, tree = comb_graph(1)
    assert tree.op == "union"
    assert all(child.op == "join" for child in tree.children)
    assert len(tree.children) == 2
    # recognition recovers the same shape from the bare graph
    recognized = cotree_of(graph)
    assert recognized.op == "union"
    assert sorted(child.op for child in recognized.children) == ["join", "join"]
    assert all(len(child.children) == 2 for child in recognized.children)


def test_cotree_of_matches_find_p4_exhaustive_small():
    for n in range(1, 6):
        for graph in all_graphs(n):
            result = cotree_of(graph)
            if isinstance(result, Cotree):
                assert find_p4(graph) is None
                assert eval_cotree(result) == graph
            else:
                assert find_p4(graph) is not None


def test_cotree_of_random16():
    rng = random.Random(SEED + 2)
    for _ in range(100):
        graph = random_graph(16, rng.random(), rng)
        result = cotree_of(graph)
        assert isinstance(result, Cotree) == (find_p4(graph) is None)


# --- comb graph -------------------------------------------------------------


def test_comb_graph_examples():
    graph, _ = comb_graph(0)
    assert graph.n == 1 and not graph.edges
    graph, _ = comb_graph(1)
    assert graph.edges == frozenset({(0, 1), (2, 3)})
    graph, _ = comb_graph(2)
    assert len(graph.edges) == 40


def test_comb_graph_recursion_counts():
    expected = 0
    for d in range(4):
        graph, tree = comb_graph(d)
        assert len(graph.edges) == expected
        assert eval_cotree(tree) == graph
        expected = 4 * expected + 2 * 16 ** d


def test_comb_graph_edges_are_up_pairs():
    level = enumerate_level(2)
    graph, _ = comb_graph(2)
    for i, j in combinations(range(len(level)), 2):
        expected = classify_pair(level[i], level[j]) == UP_ONE
        assert graph.has_edge(i, j) == expected


# --- embedding --------------------------------------------------------------


def test_embed_cograph_examples():
    depth, mapping = embed_cograph(leaf(7))
    assert depth == 0 and mapping == {7: decode("-")}
    depth, mapping = embed_cograph(join(leaf(0), leaf(1)))
    assert depth == 1
    assert mapping == {0: decode("0"), 1: decode("1")}
    depth, mapping = embed_cograph(union(leaf(0), leaf(1)))
    assert mapping == {0: decode("0"), 1: decode("2")}


def test_embed_cograph_exactness_random():
    rng = random.Random(SEED + 3)
    for _ in range(40):
        tree = random_cotree(rng.randint(1, 20), rng.randrange(1 << 30))
        graph = eval_cotree(tree)
        _, mapping = embed_cograph(tree)
        assert len(set(mapping.values())) == len(mapping)
        for u, v in combinations(sorted(mapping), 2):
            assert (classify_pair(mapping[u], mapping[v]) == UP_ONE) == \
                graph.has_edge(u, v)


# --- bridges ----------------------------------------------------------------


def test_graph_to_weave_bridge():
    for d in (1, 2):
        graph, _ = comb_graph(d)
        pattern = graph_witness(graph)
        ci = graph_to_weave_oracle(pattern, d)
        assert check_weave(ci, d, 2, OMEGA, OMEGA, strong=True).ok


def test_graph_to_weave_rejects_non_pattern():
    from comblab.patterns import SetSystem

    graph, _ = comb_graph(1)
    bad = SetSystem(["a"], {v: {"a"} for v in range(graph.n)})
    with pytest.raises(ArgumentError):
        graph_to_weave_oracle(bad, 1)


def test_weave_to_graph_bridge_small_cotrees():
    ci_by_depth = {d: weave_witness(d, 2, 1, OMEGA) for d in (1, 2)}
    seen = set()
    for tree in all_small_cotrees(4):
        depth, _ = embed_cograph(tree)
        if depth > 2 or depth == 0:
            continue
        key = tree.to_dot()
        if key in seen:
            continue
        seen.add(key)
        pattern = weave_to_graph_oracle(ci_by_depth[depth], tree)
        assert check_graph_pattern(pattern, eval_cotree(tree)).ok


def test_weave_to_graph_rejects_depth_overflow():
    ci = weave_witness(1, 2, 1, OMEGA)
    deep = join(union(join(leaf(0), leaf(1)), leaf(2)), leaf(3))
    with pytest.raises(ArgumentError):
        weave_to_graph_oracle(ci, deep)


def test_weave_to_graph_join_edge_inconsistent():
    ci = weave_witness(1, 2, 1, OMEGA)
    pattern = weave_to_graph_oracle(ci, join(leaf(0), leaf(1)))
    assert not pattern.consistent([0, 1])
    assert pattern.consistent([0])


def test_bridge_roundtrip():
    for d in (1, 2):
        graph, tree = comb_graph(d)
        pattern = graph_witness(graph)
        weave_ci = graph_to_weave_oracle(pattern, d)
        for sub in (join(leaf(0), leaf(1)), union(leaf(0), leaf(1))):
            back = weave_to_graph_oracle(weave_ci, sub)
            assert check_graph_pattern(back, eval_cotree(sub)).ok


# --- generators and serialization -------------------------------------------


def test_random_cotree_deterministic():
    assert random_cotree(9, 5).to_json() == random_cotree(9, 5).to_json()
    assert random_cotree(1, 0) == leaf(0)


def test_graph_json_roundtrip():
    graph = Graph(4, [(0, 1), (2, 3)])
    assert Graph.from_json(graph.to_json()) == graph


def test_cotree_json_roundtrip():
    tree = union(join(leaf(0), leaf(1)), leaf(2))
    assert Cotree.from_json(tree.to_json()) == tree


def test_dot_exports():
    graph = Graph(2, [(0, 1)])
    dot = graph.to_dot()
    assert "0 -- 1;" in dot
    tree_dot = cotree_of(graph).to_dot()
    assert "join" in tree_dot


def test_graph_validation():
    with pytest.raises(ArgumentError):
        Graph(2, [(0, 0)])
    with pytest.raises(ArgumentError):
        Graph(2, [(0, 5)])
