from __future__ import annotations

import random

import pytest

import oracles
from laxcat import limits
from laxcat.errors import (BadIdentity, MissingComposite, NonAssociative, NotAFunctor, NotNatural,
                           ShapeMismatch, SizeCapExceeded, ValidationError)
from laxcat.fincat import (compose_functors, enumerate_functors, enumerate_nat_trans, identity_functor,
                           inserter, is_equivalence, is_isomorphism, make_category, opposite,
                           validate_category, validate_functor, validate_nat_trans, vcompose)
from laxcat.generators import random_category, random_functor_case


def arrow():
    return make_category(["x", "y"], [("f", "x", "y")], name="2")


def idempotent():
    return make_category(["b"], [("e", "b", "b")], [("e", "e", "e")], name="E")


def test_identity_composites_are_filled_in():
    C = arrow()
    assert C.compose("1_x", "f") == "f"
    assert C.compose("f", "1_y") == "f"
    assert C.hom("y", "x") == ()


def test_missing_composite_names_the_pair():
    with pytest.raises(MissingComposite) as exc:
        make_category(["b"], [("e", "b", "b")])
    assert "'e'" in str(exc.value)


def test_non_associative_table_rejected():
    # (t;t);t = t but t;(t;t) = s
    raw = {
        "objects": ["b"],
        "morphisms": [("1", "b", "b"), ("s", "b", "b"), ("t", "b", "b")],
        "identities": {"b": "1"},
        "compose": [["s", "s", "s"], ["s", "t", "t"], ["t", "s", "s"], ["t", "t", "s"]],
    }
    with pytest.raises(NonAssociative):
        validate_category(raw)


def test_bad_identity_rejected():
    raw = {"objects": ["x", "y"], "morphisms": [("i", "x", "y")], "identities": {"x": "i"}, "compose": []}
    with pytest.raises(BadIdentity):
        validate_category(raw)


def test_composite_in_wrong_hom_set():
    raw = {"objects": ["x", "y"], "morphisms": [("1x", "x", "x"), ("1y", "y", "y"), ("f", "x", "y")],
           "identities": {"x": "1x", "y": "1y"}, "compose": [["1x", "f", "1x"]]}
    with pytest.raises(ValidationError):
        validate_category(raw)


def test_functor_must_preserve_composites():
    E = idempotent()
    two = make_category(["b"], [("s", "b", "b")], [("s", "s", "1_b")], name="Z2")
    with pytest.raises(NotAFunctor):
        validate_functor({"object_map": {"b": "b"}, "morphism_map": {"e": "s"}}, E, two)
    F = validate_functor({"object_map": {"b": "b"}, "morphism_map": {"e": "1_b"}}, E, two)
    assert F.morphism_map["1_b"] == "1_b"


@pytest.mark.parametrize("seed", range(25))
def test_enumeration_matches_naive_search(seed):
    rng = random.Random(seed)
    A = random_category(rng, 3, 6, prefix="a")
    B = random_category(rng, 3, 6, prefix="b")
    ours = {(tuple(F.object_map.items()), tuple(sorted(F.morphism_map.items()))) for F in enumerate_functors(A, B)}
    naive = {(tuple(om.items()), tuple(sorted(mm.items()))) for om, mm in oracles.functors_naive(A, B)}
    assert ours == naive


def test_naturality_checked():
    C = arrow()
    F = identity_functor(C)
    const = validate_functor({"object_map": {"x": "y", "y": "y"}, "morphism_map": {"f": "1_y"}}, C, C)
    alpha = validate_nat_trans({"x": "f", "y": "1_y"}, F, const)
    assert alpha.components["x"] == "f"
    # g∘f = g on non-identities, so the component s does not commute with t
    M = make_category(["b"], [("s", "b", "b"), ("t", "b", "b")],
                      [("s", "s", "s"), ("s", "t", "t"), ("t", "s", "s"), ("t", "t", "t")])
    with pytest.raises(NotNatural):
        validate_nat_trans({"b": "s"}, identity_functor(M), identity_functor(M))


def test_nat_trans_enumeration_and_vertical_composition():
    C = arrow()
    F = identity_functor(C)
    ts = enumerate_nat_trans(F, F)
    assert len(ts) == 1
    assert vcompose(ts[0], ts[0]) == ts[0]


def test_opposite_is_involutive():
    C = idempotent()
    assert opposite(opposite(C)).table == C.table


def test_isomorphism_and_equivalence():
    iso = make_category(["a", "b"], [("f", "a", "b"), ("g", "b", "a")],
                        [("f", "g", "1_a"), ("g", "f", "1_b")], name="I")
    point = make_category(["p"], [], name="1")
    inc = validate_functor({"object_map": {"p": "a"}, "morphism_map": {}}, point, iso)
    assert is_equivalence(inc)
    assert not is_isomorphism(inc)
    assert is_isomorphism(identity_functor(iso))


def test_inserter_objects_and_shape():
    C = arrow()
    F = identity_functor(C)
    const = validate_functor({"object_map": {"x": "y", "y": "y"}, "morphism_map": {"f": "1_y"}}, C, C)
    ins, proj, iota = inserter(F, const)
    # φ_x ∈ {f}, φ_y ∈ {1_y}
    assert sorted(ins.objects) == ["(x,f)", "(y,1_y)"]
    assert set(proj.object_map.values()) == {"x", "y"}
    with pytest.raises(ShapeMismatch):
        inserter(F, identity_functor(idempotent()))


def test_identity_functors_are_units():
    rng = random.Random(3)
    for _ in range(20):
        F = random_functor_case(rng, 3, 6)
        G = identity_functor(F.target)
        assert compose_functors(F, G) == F
        assert compose_functors(identity_functor(F.source), F) == F


def test_caps_enforced():
    C = random_category(random.Random(0), 5, 12)
    with limits.using(max_objects=0):
        with pytest.raises(SizeCapExceeded):
            inserter(identity_functor(C), identity_functor(C))
