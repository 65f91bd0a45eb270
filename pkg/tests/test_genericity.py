import pytest

from comblab.errors import ArgumentError
from comblab.genericity import (ChainStep, DensePredicate, DensityError,
                                RequirementPoset, binary_string_poset,
                                generic_chain, length_requirements)


def test_length_demo_meets_all_requirements():
    poset = binary_string_poset()
    chain = generic_chain(poset, length_requirements(5), "", steps=5)
    satisfied = {i for step in chain for i in step.satisfied}
    assert satisfied == set(range(5))
    lengths = [len(step.element) for step in chain]
    assert lengths == sorted(lengths)
    assert len(lengths) == len(set(lengths))  # strictly increasing
    assert len(chain) <= 6  # start plus at most five moves


def test_contains_one_requirement():
    poset = binary_string_poset()
    wants_one = DensePredicate("contains-1", lambda s: "1" in s)
    chain = generic_chain(poset, [wants_one], "000", steps=1)
    assert "1" in chain[-1].element
    assert chain[-1].satisfied == (0,)


def test_requirement_satisfied_at_start_is_credited_in_place():
    poset = binary_string_poset()
    trivial = DensePredicate("nonempty-or-empty", lambda s: True)
    chain = generic_chain(poset, [trivial], "0", steps=1)
    assert len(chain) == 1
    assert chain[0] == ChainStep("0", (0,))


def test_non_dense_requirement_fails_with_name():
    poset = binary_string_poset()
    shrink = DensePredicate("length<2", lambda s: len(s) < 2)
    with pytest.raises(DensityError) as err:
        generic_chain(poset, [shrink], "000", steps=1, horizon=128)
    assert err.value.requirement == "length<2"
    assert err.value.stuck_at == "000"


def test_chain_is_increasing_in_the_order():
    poset = binary_string_poset()
    chain = generic_chain(poset, length_requirements(4), "", steps=4)
    for prev, cur in zip(chain, chain[1:]):
        assert poset.leq(prev.element, cur.element)


def test_deterministic():
    poset = binary_string_poset()
    runs = [generic_chain(poset, length_requirements(3), "", steps=3)
            for _ in range(2)]
    assert runs[0] == runs[1]


def test_steps_must_cover_requirements():
    poset = binary_string_poset()
    with pytest.raises(ArgumentError):
        generic_chain(poset, length_requirements(3), "", steps=2)


def test_finite_table_poset():
    poset = RequirementPoset.from_table(
        ["a", "b", "c", "d"],
        [("a", "b"), ("b", "c"), ("a", "d")])
    assert poset.leq("a", "c")  # transitive closure
    assert not poset.leq("c", "a")
    assert set(poset.extensions("a")) == {"b", "c", "d"}
    chain = generic_chain(
        poset,
        [DensePredicate("reach-c", lambda e: e == "c")],
        "a", steps=1)
    assert chain[-1].element == "c"


def test_finite_table_rejects_cycles():
    with pytest.raises(ArgumentError):
        RequirementPoset.from_table(["a", "b"], [("a", "b"), ("b", "a")])


def test_finite_table_unknown_element():
    with pytest.raises(ArgumentError):
        RequirementPoset.from_table(["a"], [("a", "z")])


def test_density_error_when_stuck_in_finite_poset():
    poset = RequirementPoset.from_table(["a", "b"], [("a", "b")])
    with pytest.raises(DensityError) as err:
        generic_chain(poset, [DensePredicate("reach-z", lambda e: e == "z")],
                      "a", steps=1)
    assert err.value.requirement == "reach-z"


def test_inconsistent_enumerator_is_reported():
    # extensions claim b follows a, but the order test denies it
    poset = RequirementPoset(extensions=lambda e: ["b"] if e == "a" else [],
                             leq=lambda x, y: x == y)
    with pytest.raises(ArgumentError) as err:
        generic_chain(poset, [DensePredicate("reach-b", lambda e: e == "b")],
                      "a", steps=1)
    assert "does not extend" in str(err.value)
