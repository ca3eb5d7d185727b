"""Quick invariant suites, run by ``laxcat selftest``."""

from __future__ import annotations

import random
from typing import Callable, NamedTuple

from . import corpus as corpus_mod
from . import grp2, orders, vquant
from .documents import from_json, parse, serialize
from .errors import LaxcatError
from .factorize import build_splitting_category, verify_orthogonal
from .fincat import compose_functors, is_isomorphism
from .generators import random_functor_case
from .laxepi import is_lax_epi
from .splitfib import derived_properties, is_dsb


class Outcome(NamedTuple):
    name: str
    passed: bool
    detail: str


def _corpus_roundtrip(rng) -> tuple[bool, str]:
    bad = [n for n, d in corpus_mod.corpus().items() if serialize(parse(serialize(d))) != serialize(d)]
    accepted = []
    for name, raw in corpus_mod.REJECTIONS.items():
        try:
            from_json(raw())
            accepted.append(name)
        except LaxcatError:
            pass
    return not bad and not accepted, f"round-trip failures {bad}, rejections accepted {accepted}"


def _named_fixtures(rng) -> tuple[bool, str]:
    c = corpus_mod.corpus()
    P = c["coinserter_counterexample"]["P"].value
    E = c["remark37"]["E"].value
    v = is_lax_epi(P)
    got = (v.flag, v.g, bool(is_lax_epi(E)), bool(is_dsb(E)), verify_orthogonal(E, E))
    return got == (False, "alpha_A", True, False, False), f"got {got}"


def _factorization(rng, n: int = 60) -> tuple[bool, str]:
    cases = list(corpus_mod.functors().items()) + [(f"random{i}", random_functor_case(rng)) for i in range(n)]
    failed = []
    for name, F in cases:
        fac = build_splitting_category(F, check=False)
        ok = (compose_functors(fac.left, fac.right) == F and is_lax_epi(fac.left) and is_dsb(fac.right))
        consistent = bool(is_lax_epi(F)) == is_isomorphism(fac.right)
        if not (ok and consistent):
            failed.append(name)
    return not failed, f"{len(cases)} functors, failing: {failed}"


def _prop45(rng, n: int = 60) -> tuple[bool, str]:
    bad = 0
    for _ in range(n):
        P = build_splitting_category(random_functor_case(rng), check=False).right
        if is_dsb(P) and not all(derived_properties(P)):
            bad += 1
    return bad == 0, f"{bad} DSBs without all three derived properties"


def _orders(rng, n: int = 40) -> tuple[bool, str]:
    bad = 0
    for _ in range(n):
        A = orders.random_preord(rng, 3)
        B = orders.random_preord(rng, 3)
        f, g = orders.random_monotone(rng, A, B), orders.random_monotone(rng, A, B)
        _, q = orders.coinserter_preord(f, g, verify_universal=True)
        if not (orders.is_monotone_bijection(q) and orders.is_lax_epi_preord(q)):
            bad += 1
    return bad == 0, f"{bad} coinserters failed"


def _vquant(rng, n: int = 100) -> tuple[bool, str]:
    bad = 0
    for _ in range(n):
        j = vquant.random_vfunctor(rng, rng.choice(vquant.small_frames()))
        if vquant.is_vlax_epi_meet(j) != vquant.is_vlax_epi_density(j):
            bad += 1
    return bad == 0, f"{bad} disagreements between the meet and density tests"


def _groups(rng) -> tuple[bool, str]:
    gs = grp2.groups_up_to_order_8()
    fam = grp2.probe_family(8)
    bad = 0
    for A in gs[:8]:
        for B in gs[:8]:
            for f in grp2.enumerate_homs(A, B):
                if grp2.is_lax_epi_grp(f) and not grp2.probe_search(f, fam).holds:
                    bad += 1
    return bad == 0, f"{bad} surjections failed a probe"


SUITES: dict[str, Callable] = {
    "corpus round-trip and rejections": _corpus_roundtrip,
    "named fixtures": _named_fixtures,
    "factorization soundness and consistency": _factorization,
    "DSBs are faithful, conservative, reflect identities": _prop45,
    "preorder coinserters": _orders,
    "meet and density tests agree": _vquant,
    "surjections pass the group probes": _groups,
}


def run(seed: int = 0) -> list[Outcome]:
    out = []
    for name, suite in SUITES.items():
        ok, detail = suite(random.Random(seed))
        out.append(Outcome(name, bool(ok), detail))
    return out
