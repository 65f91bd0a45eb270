import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from comblab.combs import (CombClass, LITERAL, NARROW_BELOW, NARROW_LEFT,
                           OMEGA, UP_ONE, WIDE_LEFT, WIDE_RIGHT_ONE,
                           classify_pair, enumerate_combs, has_up_pair,
                           is_binary_right_comb, is_comb, split_relation)
from comblab.errors import ArgumentError, ResourceError
from comblab.index_core import decode, encode, enumerate_level
from comblab.oracle import binary_right_comb_oracle, build_tree_comb_oracle

from helpers import SEED, subset_filter_combs


def nodes(*texts):
    return frozenset(decode(t) for t in texts)


# --- split relations -------------------------------------------------------


def kinds_of(a, b):
    return {w.kind.kind for w in split_relation(a, b)}


def test_split_relation_examples():
    assert kinds_of(nodes("0"), nodes("1")) == {NARROW_BELOW}
    (witness,) = split_relation(nodes("0"), nodes("1"))
    assert witness.tau == decode("-") and witness.kind.bit == 0

    assert kinds_of(nodes("0"), nodes("2")) == {NARROW_LEFT, WIDE_LEFT}
    assert kinds_of(nodes("0"), nodes("3")) == {WIDE_LEFT}


def test_split_relation_orientation():
    # the relation is directional: B is not narrowly below A
    assert kinds_of(nodes("1"), nodes("0")) == set()
    assert kinds_of(nodes("2"), nodes("0")) == set()


def test_split_relation_never_below_and_wide():
    for a in enumerate_level(2):
        for b in enumerate_level(2):
            if a == b:
                continue
            ks = kinds_of(frozenset([a]), frozenset([b]))
            assert not (NARROW_BELOW in ks and WIDE_LEFT in ks)
            if NARROW_LEFT in ks:
                assert WIDE_LEFT in ks


def test_split_relation_errors():
    with pytest.raises(ArgumentError):
        split_relation(set(), nodes("0"))
    with pytest.raises(ArgumentError):
        split_relation(nodes("0"), nodes("0"))


# --- pair classification ---------------------------------------------------


def test_classify_pair_examples():
    assert classify_pair(decode("0"), decode("1")) == UP_ONE
    assert classify_pair(decode("00"), decode("01")) == UP_ONE
    assert classify_pair(decode("03"), decode("20")) == WIDE_RIGHT_ONE


def test_classify_pair_cross_checked_by_build_oracle():
    # frozen from the exhaustive inductive-build oracle at depth 2
    pair = nodes("03", "20")
    memo = {}
    assert not build_tree_comb_oracle(pair, CombClass("up", 1), memo)
    assert build_tree_comb_oracle(pair, CombClass("wide-right", 1), memo)


def test_classify_pair_errors():
    with pytest.raises(ArgumentError):
        classify_pair(decode("0"), decode("00"))
    with pytest.raises(ArgumentError):
        classify_pair(decode("0"), decode("0"))


def test_dichotomy_small_depths():
    memo = {}
    for d in range(3):
        for a, b in combinations(enumerate_level(d), 2):
            verdict = classify_pair(a, b)
            up1 = is_comb({a, b}, CombClass("up", 1)) is not None
            wr1 = is_comb({a, b}, CombClass("wide-right", 1)) is not None
            assert up1 != wr1
            assert verdict == (UP_ONE if up1 else WIDE_RIGHT_ONE)
            assert up1 == build_tree_comb_oracle(frozenset((a, b)), CombClass("up", 1), memo)


# --- recognition -----------------------------------------------------------


def test_is_comb_examples():
    s = nodes("00", "01", "10")
    cert = is_comb(s, CombClass("up", 2))
    assert cert is not None
    assert cert.a_size == 2
    assert cert.a.nodes == nodes("00", "01")
    assert is_comb(s, CombClass("up", 1)) is None
    assert is_comb(nodes("00", "13", "20"), CombClass("wide-right", OMEGA)) is None
    assert has_up_pair(nodes("00", "13", "20"))


def test_is_comb_errors():
    with pytest.raises(ArgumentError):
        is_comb([], CombClass("up", 1))
    with pytest.raises(ArgumentError):
        is_comb(nodes("0", "00"), CombClass("up", 1))


def test_is_comb_matches_build_oracle():
    classes = [CombClass(kind, n) for kind in ("up", "right", "wide-right")
               for n in (1, 2, OMEGA)]
    classes += [CombClass("wide-right", n, LITERAL) for n in (1, 2, OMEGA)]
    memo = {}
    for d in (1, 2):
        level = enumerate_level(d)
        for size in range(1, 5):
            for combo in combinations(level, size):
                combo = frozenset(combo)
                for cls in classes:
                    fast = is_comb(combo, cls) is not None
                    slow = build_tree_comb_oracle(combo, cls, memo)
                    assert fast == slow, (sorted(map(encode, combo)), cls)


def test_literal_and_recursive_readings_differ():
    # A wide part that is not a narrow right-comb separates the two readings;
    # expected values frozen from the build oracle.
    s = nodes("00", "03", "20")
    memo = {}
    assert build_tree_comb_oracle(s, CombClass("wide-right", OMEGA), memo)
    assert not build_tree_comb_oracle(s, CombClass("wide-right", OMEGA, LITERAL), memo)
    assert is_comb(s, CombClass("wide-right", OMEGA)) is not None
    assert is_comb(s, CombClass("wide-right", OMEGA, LITERAL)) is None


def test_wide_characterization_depth2():
    level = enumerate_level(2)
    cls = CombClass("wide-right", OMEGA)
    for size in range(1, len(level) + 1):
        for combo in combinations(level, size):
            assert (is_comb(combo, cls) is not None) == (not has_up_pair(combo))


def test_wide_characterization_depth3_sampled():
    rng = random.Random(SEED)
    level = enumerate_level(3)
    cls = CombClass("wide-right", OMEGA)
    for _ in range(2000):
        combo = rng.sample(level, rng.randint(1, 8))
        assert (is_comb(combo, cls) is not None) == (not has_up_pair(combo))


def test_subset_closure():
    level = enumerate_level(2)
    classes = [CombClass(kind, n) for kind in ("up", "right", "wide-right")
               for n in (1, 2, OMEGA)]
    for cls in classes:
        for comb in subset_filter_combs(2, cls, 4):
            for size in range(1, len(comb)):
                for sub in combinations(sorted(comb), size):
                    assert is_comb(sub, cls) is not None, (cls, sub)


def test_pair_classification_inside_combs():
    for cls, expected in ((CombClass("up", OMEGA), UP_ONE),
                          (CombClass("right", OMEGA), WIDE_RIGHT_ONE),
                          (CombClass("wide-right", OMEGA), WIDE_RIGHT_ONE)):
        for comb in subset_filter_combs(2, cls, 4):
            for a, b in combinations(sorted(comb), 2):
                assert classify_pair(a, b) == expected


# --- binary right combs ----------------------------------------------------


def test_binary_right_comb_examples():
    # expected values fixed by the build oracle, not intuition
    assert is_binary_right_comb({"0", "1"}, 1)
    assert is_binary_right_comb({"00", "01"}, 1)
    assert is_binary_right_comb({"0", "10", "11"}, 1)
    assert binary_right_comb_oracle(frozenset({"00", "01"}), 1)
    assert binary_right_comb_oracle(frozenset({"0", "10", "11"}), 1)


def test_binary_right_comb_matches_oracle():
    universe = [""]
    for _ in range(3):
        universe = universe + [s + b for s in universe for b in "01" if len(s) < 3]
    universe = sorted(set(s for s in universe if s))
    memo = {}
    for size in range(1, 4):
        for combo in combinations(universe, size):
            s = frozenset(combo)
            for n in (1, 2, OMEGA):
                assert is_binary_right_comb(s, n) == binary_right_comb_oracle(s, n, memo)


def test_binary_right_comb_errors():
    with pytest.raises(ArgumentError):
        is_binary_right_comb(set(), 1)
    with pytest.raises(ArgumentError):
        is_binary_right_comb({"012"}, 1)


# --- enumeration -----------------------------------------------------------


def test_enumerate_combs_depth1_up():
    got = [frozenset(map(encode, c))
           for c in enumerate_combs(1, CombClass("up", 1), 2)]
    assert got == [{"0"}, {"1"}, {"2"}, {"3"}, {"0", "1"}, {"2", "3"}]


def test_enumerate_combs_depth1_wide():
    got = {frozenset(map(encode, c))
           for c in enumerate_combs(1, CombClass("wide-right", OMEGA), 4)}
    # exactly the up-pair-free subsets: at most one node per half
    level = enumerate_level(1)
    expected = set()
    for size in range(1, 5):
        for combo in combinations(level, size):
            if not has_up_pair(combo):
                expected.add(frozenset(map(encode, combo)))
    assert got == expected


def test_enumerate_combs_depth0():
    for kind in ("up", "right", "wide-right"):
        combs = list(enumerate_combs(0, CombClass(kind, OMEGA), 3))
        assert combs == [frozenset([decode("-")])]


def test_enumerate_combs_matches_subset_filter():
    for cls in (CombClass("up", 1), CombClass("up", OMEGA),
                CombClass("right", 2), CombClass("wide-right", OMEGA),
                CombClass("wide-right", 1, LITERAL)):
        fast = list(enumerate_combs(2, cls, 4))
        assert len(fast) == len(set(fast))
        assert set(fast) == set(subset_filter_combs(2, cls, 4))


def test_enumerate_combs_matches_recognizer_at_larger_sizes():
    # the structural generator and the meet-splitting recognizer are
    # independent implementations; compare them beyond oracle reach
    level = enumerate_level(2)
    for cls in (CombClass("up", 2), CombClass("right", 1),
                CombClass("wide-right", OMEGA)):
        generated = set(enumerate_combs(2, cls, 8))
        filtered = set()
        for size in range(1, 9):
            for combo in combinations(level, size):
                if is_comb(combo, cls) is not None:
                    filtered.add(frozenset(combo))
        assert generated == filtered


def test_enumerate_combs_deterministic_order():
    runs = [list(enumerate_combs(2, CombClass("up", 2), 3)) for _ in range(2)]
    assert runs[0] == runs[1]
    sizes = [len(c) for c in runs[0]]
    assert sizes == sorted(sizes)


def test_enumerate_combs_resource_limit():
    with pytest.raises(ResourceError):
        list(enumerate_combs(3, CombClass("wide-right", OMEGA), 8, limit=1000))


def test_omega_repr_and_identity():
    from comblab.combs import _Omega

    assert _Omega() is OMEGA
    assert repr(OMEGA) == "omega"


# --- property tests ----------------------------------------------------------

node_sets_d2 = st.sets(
    st.sampled_from(enumerate_level(2)), min_size=1, max_size=8)


@given(node_sets_d2)
@settings(max_examples=300)
def test_property_wide_combs_are_up_pair_free(nodes_set):
    wide = is_comb(nodes_set, CombClass("wide-right", OMEGA)) is not None
    assert wide == (not has_up_pair(nodes_set))


@given(node_sets_d2, st.sampled_from([1, 2, OMEGA]),
       st.sampled_from(["up", "right", "wide-right"]))
@settings(max_examples=300)
def test_property_subset_closure(nodes_set, bound, kind):
    cls = CombClass(kind, bound)
    if is_comb(nodes_set, cls) is None:
        return
    ordered = sorted(nodes_set)
    for size in range(1, len(ordered)):
        for sub in combinations(ordered, size):
            assert is_comb(sub, cls) is not None


@given(st.sets(st.sampled_from(enumerate_level(2)), min_size=2, max_size=2))
@settings(max_examples=200)
def test_property_pair_dichotomy(pair_set):
    a, b = sorted(pair_set)
    verdict = classify_pair(a, b)
    up = is_comb(pair_set, CombClass("up", 1)) is not None
    wide = is_comb(pair_set, CombClass("wide-right", 1)) is not None
    assert up != wide
    assert verdict == (UP_ONE if up else WIDE_RIGHT_ONE)
