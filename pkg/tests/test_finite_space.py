"""Finite spaces: construction, duality, hulls, components, file format."""

import json

import numpy as np
import pytest

from lionman import build_space, dual, open_hull, path_components
from lionman.finite import (
    FiniteSpace,
    TopologyError,
    enumerate_preorders,
    is_path_connected,
    space_from_json,
    space_to_json,
)
from conftest import brute_opens


def test_chain_minimal_open_matches_enumeration(chain3):
    # oracle: intersect every open set containing b
    opens_with_b = [U for U in brute_opens(chain3) if "b" in U]
    expected = frozenset.intersection(*opens_with_b)
    assert chain3.minimal_open("b") == expected == {"a", "b"}


def test_sierpinski_from_opens(sierpinski):
    assert sierpinski.leq("0", "1")
    assert not sierpinski.leq("1", "0")
    assert sierpinski.minimal_open("1") == {"0", "1"}
    assert sierpinski.minimal_open("0") == {"0"}


def test_discrete_space(discrete2):
    assert discrete2.leq("a", "a") and not discrete2.leq("a", "b")
    assert discrete2.minimal_open("a") == {"a"}
    assert discrete2.minimal_open("b") == {"b"}


def test_opens_must_form_topology():
    with pytest.raises(TopologyError):
        build_space(["a", "b"], opens=[[], ["a"]])  # missing whole space
    with pytest.raises(TopologyError):
        build_space(["a", "b", "c"], opens=[[], ["a"], ["b"], ["a", "b", "c"]])  # no union
    with pytest.raises(TopologyError):
        build_space(["a"], opens=[[], ["a", "zzz"]])


def test_relation_closure_and_unknown_points():
    s = build_space(["x", "y", "z"], leq_pairs=[("x", "y"), ("y", "z")])
    assert s.leq("x", "z")  # transitive closure taken
    with pytest.raises(TopologyError):
        build_space(["x"], leq_pairs=[("x", "w")])


def test_non_preorder_matrix_rejected():
    mat = np.array([[True, True], [False, False]])  # not reflexive
    with pytest.raises(TopologyError):
        FiniteSpace(["a", "b"], mat)
    mat2 = np.array(
        [[True, True, False], [False, True, True], [False, False, True]]
    )  # not transitive
    with pytest.raises(TopologyError):
        FiniteSpace(["a", "b", "c"], mat2)


def test_dual_reverses_chain(chain3):
    d = dual(chain3)
    assert d.leq("c", "b") and d.leq("b", "a")
    assert not d.leq("a", "b")


def test_dual_is_involution(chain3, sierpinski, fence_space):
    for s in (chain3, sierpinski, fence_space):
        dd = dual(dual(s))
        assert dd.points == s.points
        assert (dd.mat == s.mat).all()


def test_dual_of_discrete_is_itself(discrete2):
    assert (dual(discrete2).mat == discrete2.mat).all()


def test_dual_opens_are_closed_sets():
    for mat in enumerate_preorders(3):
        pts = ["a", "b", "c"]
        s = FiniteSpace(pts, mat)
        d = dual(s)
        opens_d = set(d.all_opens())
        complements = {frozenset(set(pts) - U) for U in s.all_opens()}
        assert opens_d == complements


def test_open_hull_examples(chain3):
    assert open_hull(chain3, {"c"}) == {"a", "b", "c"}
    assert open_hull(chain3, set()) == frozenset()
    assert open_hull(chain3, {"a", "b", "c"}) == {"a", "b", "c"}


def test_open_hull_is_smallest_open_superset(fence_space):
    for sub in ({"a"}, {"b"}, {"a", "c"}, {"b", "c"}):
        hull = open_hull(fence_space, sub)
        supersets = [U for U in brute_opens(fence_space) if sub <= U]
        assert hull == frozenset.intersection(*supersets)
        assert fence_space.is_open(hull)


def test_t0_predicate(chain3, indiscrete2, discrete2):
    assert chain3.is_t0()
    assert discrete2.is_t0()
    assert not indiscrete2.is_t0()


def test_minimum(chain3, sierpinski, discrete2, fence_space):
    assert chain3.minimum() == "a"
    assert sierpinski.minimum() == "0"
    assert discrete2.minimum() is None
    assert fence_space.minimum() is None


def test_path_components(chain3, fence_space):
    assert path_components(chain3) == [frozenset({"a", "b", "c"})]
    assert is_path_connected(fence_space)
    two = build_space(
        ["a", "b", "c", "d"], leq_pairs=[("a", "b"), ("c", "d")]
    )
    comps = path_components(two)
    assert len(comps) == 2
    assert frozenset({"a", "b"}) in comps and frozenset({"c", "d"}) in comps


def test_json_roundtrip(chain3, tmp_path):
    obj = space_to_json(chain3)
    again = space_from_json(obj)
    assert again.points == chain3.points
    assert (again.mat == chain3.mat).all()
    f = tmp_path / "chain.json"
    f.write_text(json.dumps(obj))
    from lionman.finite import load_space

    assert (load_space(f).mat == chain3.mat).all()


def test_json_malformed():
    with pytest.raises(TopologyError):
        space_from_json({"points": "abc"})
    with pytest.raises(TopologyError):
        space_from_json({"points": ["a"], "leq": [["a"]]})
    with pytest.raises(TopologyError):
        space_from_json({"nope": 1})


def test_enumerate_preorders_counts():
    # known counts of preorders on n labeled points
    assert len(enumerate_preorders(1)) == 1
    assert len(enumerate_preorders(2)) == 4
    assert len(enumerate_preorders(3)) == 29
    assert len(enumerate_preorders(4)) == 355
