from __future__ import annotations

import random
from itertools import product

import pytest

from laxcat import orders, vquant
from laxcat.corpus import corpus
from laxcat.errors import NotALattice, NotAVCategory, NotAVFunctor, NotDistributive, SizeCapExceeded
from laxcat import limits

FRAMES = vquant.small_frames()


def _vfunctors_naive(Y):
    V = Y.frame
    n = len(Y.objects)
    out = []
    for f in product(range(V.size), repeat=n):
        if all(V.leq[V.meet[Y.hom[a, b], f[a]], f[b]] for a in range(n) for b in range(n)):
            out.append(f)
    return out


def _meet_oracle(j):
    V = j.target.frame
    fs = _vfunctors_naive(j.target)
    for f, g in product(fs, repeat=2):
        whole = V.meet_all(int(V.arrow[f[y], g[y]]) for y in range(len(f)))
        part = V.meet_all(int(V.arrow[f[y], g[y]]) for y in j.map)
        if whole != part:
            return False
    return True


@pytest.mark.parametrize("V", FRAMES, ids=lambda V: V.name)
def test_frame_laws(V):
    n = V.size
    for a, b, c in product(range(n), repeat=3):
        # Heyting adjunction: a ∧ b <= c iff a <= b → c
        assert V.leq[V.meet[a, b], c] == V.leq[a, V.arrow[b, c]]
        assert V.meet[a, V.join[b, c]] == V.join[V.meet[a, b], V.meet[a, c]]


def test_m3_rejected():
    els, pairs = vquant.m3_pairs()
    with pytest.raises(NotDistributive):
        vquant.validate_frame(els, pairs)


def test_non_lattice_rejected():
    with pytest.raises(NotALattice):
        vquant.validate_frame(["a", "b"], [])


def test_vcat_and_vfunctor_validation():
    V = vquant.chain_frame(3)
    with pytest.raises(NotAVCategory):
        vquant.validate_vcat(V, ["x"], [[V.elements[0]]])
    X = vquant.validate_vcat(V, ["x", "y"], [[V.elements[-1], V.elements[1]], [V.elements[0], V.elements[-1]]])
    Y = vquant.validate_vcat(V, ["u", "v"], [[V.elements[-1], V.elements[0]], [V.elements[0], V.elements[-1]]])
    with pytest.raises(NotAVFunctor):
        vquant.validate_vfunctor({"x": "u", "y": "v"}, X, Y)


@pytest.mark.parametrize("seed", range(60))
def test_enumeration_and_meet_match_oracle(seed):
    rng = random.Random(seed)
    j = vquant.random_vfunctor(rng, rng.choice(FRAMES), 3, 3)
    assert sorted(map(tuple, vquant.enumerate_vfunctors_to_V(j.target).tolist())) == _vfunctors_naive(j.target)
    assert vquant.is_vlax_epi_meet(j) == _meet_oracle(j)


@pytest.mark.parametrize("seed", range(60))
def test_density_agrees_and_is_self_dual(seed):
    rng = random.Random(1000 + seed)
    j = vquant.random_vfunctor(rng, rng.choice(FRAMES))
    d = vquant.is_vlax_epi_density(j)
    assert d == vquant.is_vlax_epi_meet(j)
    assert d == vquant.is_vlax_epi_density(vquant.opposite_vfunctor(j))
    if d:
        assert vquant.reflects_order(j)


def test_corpus_fixtures():
    vc = corpus()["vcats"]
    j = vc["not_dense"].value
    assert not vquant.is_vlax_epi_density(j)
    assert not vquant.is_vlax_epi_meet(j)
    iso = vc["iso_inclusion"].value
    assert vquant.is_vlax_epi_meet(iso) and vquant.is_vlax_epi_density(iso)
    assert vquant.is_vlax_epi_meet(vquant.identity_vfunctor(j.target))


def test_boolean_frame_matches_preorders():
    rng = random.Random(2)
    for _ in range(60):
        A, B = orders.random_preord(rng, 3), orders.random_preord(rng, 3)
        f = orders.random_monotone(rng, A, B)
        j = vquant.vfunctor_of_monotone(f)
        assert vquant.is_vlax_epi_meet(j) == orders.is_lax_epi_preord(f)
        assert vquant.preord_of_vcat(j.target) == B


def test_opposite_twice():
    X = vquant.random_vcat(random.Random(0), FRAMES[-1], 3)
    assert vquant.opposite_vcat(vquant.opposite_vcat(X)) == X


def test_candidate_cap():
    Y = vquant.random_vcat(random.Random(0), FRAMES[-1], 4)
    with limits.using(max_vfunctor_candidates=10):
        with pytest.raises(SizeCapExceeded):
            vquant.enumerate_vfunctors_to_V(Y)
