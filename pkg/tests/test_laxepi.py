from __future__ import annotations

import random

import pytest

import oracles
from laxcat.corpus import corpus
from laxcat.errors import ShapeMismatch
from laxcat.fincat import identity_functor, is_equivalence, make_category, validate_functor
from laxcat.generators import random_functor_case
from laxcat.laxepi import (comma_over_morphism, component_of, component_postcompose, component_precompose,
                           is_lax_epi, replay_zigzag, zigzag_witness)


@pytest.fixture(scope="module")
def P():
    return corpus()["coinserter_counterexample"]["P"].value


def test_counterexample_is_not_lax_epi(P):
    v = is_lax_epi(P)
    assert not v
    assert v.g == "alpha_A"
    assert v.reason == "disconnected"
    assert v.recheck(P)


def test_counterexample_comma_has_two_components(P):
    comma = comma_over_morphism(P, "alpha_A")
    assert len(comma.components) == 2
    assert zigzag_witness(comma, *(c.rep for c in comma.components)) is None


def test_identity_and_equivalence_are_lax_epi():
    E = corpus()["remark37"]["E"].value
    assert is_equivalence(E)
    assert is_lax_epi(E)
    assert is_lax_epi(identity_functor(E.target))


def test_missing_object_gives_empty_comma():
    two = make_category(["x", "y"], [("f", "x", "y")])
    point = make_category(["p"], [])
    inc = validate_functor({"object_map": {"p": "x"}, "morphism_map": {}}, point, two)
    v = is_lax_epi(inc)
    assert not v and v.reason == "empty" and v.g == "1_y"
    assert v.recheck(inc)


@pytest.mark.parametrize("seed", range(40))
def test_components_match_flood_fill(seed):
    F = random_functor_case(random.Random(seed))
    for g in F.target.ids:
        ours = {frozenset(m) for m in comma_over_morphism(F, g).members.values()}
        ref = {frozenset(b) for b in oracles.comma_blocks(F, g)}
        assert ours == ref


@pytest.mark.parametrize("seed", range(20))
def test_zigzags_replay(seed):
    F = random_functor_case(random.Random(100 + seed))
    for g in F.target.ids:
        comma = comma_over_morphism(F, g)
        for C, members in comma.members.items():
            for t in members:
                path = zigzag_witness(comma, C.rep, t)
                assert path is not None
                assert replay_zigzag(F, g, C.rep, path, t)


@pytest.mark.parametrize("seed", range(20))
def test_component_action_laws(seed):
    F = random_functor_case(random.Random(200 + seed))
    B = F.target
    for g in B.ids:
        for C in comma_over_morphism(F, g).components:
            b, c = B.src[g], B.dst[g]
            assert component_precompose(F, C, B.identity[b]) == C
            assert component_postcompose(F, B.identity[c], C) == C
            for t in B.ids:
                if B.dst[t] != b:
                    continue
                for t2 in B.ids:
                    if B.dst[t2] == B.src[t]:
                        # (C·t)·t2 = C·(t∘t2)
                        lhs = component_precompose(F, component_precompose(F, C, t), t2)
                        assert lhs == component_precompose(F, C, B.compose(t2, t))
                for u in B.ids:
                    if B.src[u] == c:
                        left = component_postcompose(F, u, component_precompose(F, C, t))
                        right = component_precompose(F, component_postcompose(F, u, C), t)
                        assert left == right


def test_component_action_shape_checked(P):
    C = component_of(P, "alpha_A", comma_over_morphism(P, "alpha_A").components[0].rep)
    with pytest.raises(ShapeMismatch):
        component_precompose(P, C, "alpha_A")


@pytest.mark.parametrize("seed", range(60))
def test_verdict_matches_oracle(seed):
    F = random_functor_case(random.Random(300 + seed))
    v = is_lax_epi(F)
    assert bool(v) == oracles.lax_epi(F)
    if not v:
        assert v.recheck(F)

