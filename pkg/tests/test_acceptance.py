"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; ``conftest.py`` prints them at the end of
the run.  ``python3 tests/test_acceptance.py`` runs them standalone.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import islice, product

import oracles
from laxcat import grp2, orders, vquant
from laxcat.corpus import corpus, functors
from laxcat.factorize import (build_splitting_category, commutative_squares, diagonal_fill_in, diagonals,
                              fill_in_2cell, verify_orthogonal)
from laxcat.fincat import (compose_functors, enumerate_nat_trans, inserter, is_equivalence, is_isomorphism,
                           iter_functors, whisker_left, whisker_right)
from laxcat.generators import full_subcategory, random_category, random_functor_between, random_functor_case
from laxcat.laxepi import is_lax_epi
from laxcat.splitfib import derived_properties, inserter_hunt, is_dsb

RESULTS: dict[int, str] = {}
SEED = 20240601
N_RANDOM = 200


def record(n: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'}  criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)


@lru_cache(maxsize=None)
def random_suite() -> tuple:
    """Random functors within the default caps (at most 5 objects, 12 morphisms per category)."""
    rng = random.Random(SEED)
    return tuple(random_functor_case(rng, 5, 12) for _ in range(N_RANDOM))


@lru_cache(maxsize=None)
def factorization(F):
    return build_splitting_category(F, check=False)


def test_criterion_1_counterexample_fixtures():
    c = corpus()
    P = c["coinserter_counterexample"]["P"].value
    E = c["remark37"]["E"].value
    v = is_lax_epi(P)
    got = {
        "P lax epi": v.flag,
        "witness": v.g,
        "E lax epi": is_lax_epi(E).flag,
        "E dsb": is_dsb(E).flag,
        "E orthogonal to E": verify_orthogonal(E, E),
    }
    want = {"P lax epi": False, "witness": "alpha_A", "E lax epi": True, "E dsb": False, "E orthogonal to E": False}
    record(1, got == want, ", ".join(f"{k}={v}" for k, v in got.items()))
    assert got == want


def test_criterion_2_factorization_soundness():
    cases = list(functors().items()) + [(f"random#{i}", F) for i, F in enumerate(random_suite())]
    failures = []
    for name, F in cases:
        fac = factorization(F)
        problems = []
        if compose_functors(fac.left, fac.right) != F:
            problems.append("P∘E≠F")
        if not is_lax_epi(fac.left):
            problems.append("E not lax epi")
        if not is_dsb(fac.right):
            problems.append("P not DSB")
        if problems:
            failures.append(f"{name} ({', '.join(problems)})")
    ok = not failures
    record(2, ok, f"{len(cases) - len(failures)}/{len(cases)} functors factor soundly"
           + (f"; failing: {'; '.join(failures)}" if failures else ""))
    assert ok, failures


def _square_pairs():
    """(e, m) pairs: left and right factors of corpus and random functors."""
    Fs = list(functors().values()) + list(random_suite()[:60])
    for F in Fs:
        fac = factorization(F)
        if is_lax_epi(fac.left) and is_dsb(fac.right):
            yield fac.left, fac.right
    # mixed pairs: the left factor of F against the right factor of a functor into F's middle category
    rng = random.Random(SEED + 3)
    for F in Fs[:40]:
        fac = factorization(F)
        C = random_category(rng, 3, 6, prefix="r")
        m = factorization(random_functor_between(rng, C, fac.mid)).right
        if is_lax_epi(fac.left) and is_dsb(m):
            yield fac.left, m


def test_criterion_3_orthogonality():
    squares = cells = 0
    bad = []
    for e, m in _square_pairs():
        for sq in islice(commutative_squares(e, m), 3):
            squares += 1
            T = diagonal_fill_in(sq)
            found = diagonals(sq)
            if found != [T]:
                bad.append(f"square {squares}: {len(found)} diagonals by enumeration")
                continue
            # every compatible pair (α, β) with t = t' = T has exactly one θ
            TQ, MT = compose_functors(sq.Q, T), compose_functors(T, sq.M)
            for alpha, beta in islice(product(enumerate_nat_trans(TQ, TQ), enumerate_nat_trans(MT, MT)), 16):
                if whisker_left(sq.M, alpha) != whisker_right(beta, sq.Q):
                    continue
                theta = fill_in_2cell(sq, T, T, alpha, beta)
                cells += 1
                if theta.from_functor != T or theta.to_functor != T:
                    bad.append(f"square {squares}: 2-cell has wrong endpoints")
        if squares >= 120:
            break
    ok = squares >= 50 and not bad
    record(3, ok, f"{squares} squares, unique diagonal confirmed by enumeration; {cells} unique 2-cell fill-ins"
           + (f"; problems: {bad[:5]}" if bad else ""))
    assert ok, bad


def _composable_pairs():
    """(F, G) with F: A -> B and G: B -> C, drawn from the random suite's factors."""
    rng = random.Random(SEED + 4)
    for F in random_suite():
        fac = factorization(F)
        C = random_category(rng, 3, 6, prefix="z")
        G = random_functor_between(rng, fac.mid, C)
        yield fac.left, factorization(G).left  # two lax epis
        R = random_category(rng, 3, 6, prefix="r")
        H = random_functor_between(rng, R, fac.mid)
        yield factorization(H).right, fac.right  # two DSBs
        yield fac.left, G
        yield F, random_functor_between(rng, F.target, C)
    # the iterated pair: factor the left factor again
    for F in random_suite():
        fac = factorization(F)
        yield factorization(fac.left).right, fac.right


def test_criterion_4_closure_laws():
    stats = dict.fromkeys(["lax epi composites", "lax epi cancellations", "equivalences", "DSB composites",
                           "DSB cancellations", "DSB and lax epi", "DSBs with derived properties"], 0)
    bad: list[str] = []
    for F, G in _composable_pairs():
        GF = compose_functors(F, G)
        lf, lg, lgf = bool(is_lax_epi(F)), bool(is_lax_epi(G)), bool(is_lax_epi(GF))
        if lf and lg:
            stats["lax epi composites"] += 1
            if not lgf:
                bad.append("lax epis not closed under composition")
        if lf and lgf:
            stats["lax epi cancellations"] += 1
            if not lg:
                bad.append("lax epis not right-cancellable")
        df, dg, dgf = bool(is_dsb(F)), bool(is_dsb(G)), bool(is_dsb(GF))
        if df and dg:
            stats["DSB composites"] += 1
            if not dgf:
                bad.append("DSBs not closed under composition")
        if dg and dgf:
            stats["DSB cancellations"] += 1
            if not df:
                bad.append("DSBs not left-cancellable")
    rng = random.Random(SEED + 5)
    for F in random_suite():
        # equivalences: skeleton inclusions and any random equivalence
        C = F.target
        reps = []
        for x in C.objects:
            if not any(C.isomorphic(x, y) for y in reps):
                reps.append(x)
        keep = [x for x in C.objects if x not in reps and rng.random() < 0.5] + reps
        _, inc = full_subcategory(C, keep)
        for E in (inc, F):
            if is_equivalence(E):
                stats["equivalences"] += 1
                if not is_lax_epi(E):
                    bad.append("equivalence that is not lax epi")
        for P in (F, factorization(F).right):
            if is_dsb(P):
                stats["DSBs with derived properties"] += 1
                if tuple(derived_properties(P)) != (True, True, True):
                    bad.append("DSB without faithful/conservative/identity-reflecting")
                if is_lax_epi(P):
                    stats["DSB and lax epi"] += 1
                    if not is_isomorphism(P):
                        bad.append("DSB and lax epi but not iso")
    counts = {k: bad.count(k) for k in dict.fromkeys(bad)}
    ok = not bad
    record(4, ok, ", ".join(f"{k}: {v}" for k, v in stats.items())
           + (f"; violations: {counts}" if bad else ""))
    assert ok, counts


def test_criterion_5_consistency():
    bad = []
    for i, F in enumerate(random_suite()):
        lhs = bool(is_lax_epi(F))
        rhs = is_isomorphism(factorization(F).right)
        if lhs != rhs or lhs != oracles.lax_epi(F):
            bad.append(i)
    ok = not bad
    record(5, ok, f"lax epi ⟺ right factor iso on {N_RANDOM - len(bad)}/{N_RANDOM} random functors")
    assert ok, bad


def test_criterion_6_orders():
    rng = random.Random(SEED + 6)
    bad = []
    n_coins = 0
    for _ in range(150):
        A, B = orders.random_preord(rng, 4), orders.random_preord(rng, 4)
        f, g = orders.random_monotone(rng, A, B), orders.random_monotone(rng, A, B)
        _, q = orders.coinserter_preord(f, g, verify_universal=True)
        n_coins += 1
        if not (orders.is_monotone_bijection(q) and orders.is_lax_epi_preord(q)):
            bad.append("coinserter map not a bijective lax epi")
    pre = corpus()["preorders"].value
    bijections = [d.value for d in pre.values() if d.kind == "monotone" and orders.is_monotone_bijection(d.value)]
    for _ in range(100):
        X = orders.random_preord(rng, 4)
        Y = orders.random_preord(rng, 4)
        for h in orders.enumerate_monotone(X, Y):
            if orders.is_monotone_bijection(h):
                bijections.append(h)
                break
    for h in bijections:
        P, p1, p2 = orders.comma_preord(h)
        Xbar, q = orders.coinserter_preord(p1, p2)
        X, Y = h.source, h.target
        # h induces Xbar -> Y; it is an isomorphism iff it reflects and preserves the order
        forward = all(Y.leq(h(x), h(y)) for x, y in Xbar.pairs())
        backward = all(Xbar.leq(x, y) for x, y in product(X.elements, repeat=2) if Y.leq(h(x), h(y)))
        if not (forward and backward):
            bad.append(f"bijection {h.name or h.map} is not the coinserter of its comma projections")
    f = pre["P_preord"].value
    preord, cat = orders.is_lax_epi_preord(f), bool(is_lax_epi(orders.functor_of_monotone(f)))
    if not (preord and not cat):
        bad.append("counterexample map verdicts")
    ok = not bad
    record(6, ok, f"{n_coins} coinserters bijective lax epis; {len(bijections)} bijections recovered from "
           f"their comma projections; counterexample lax epi in Preord={preord}, in Cat={cat}")
    assert ok, bad


def test_criterion_7_inserters():
    rng = random.Random(SEED + 7)
    pairs = bad = 0
    projections = []
    while pairs < 80:
        C = random_category(rng, 3, 6, prefix="c")
        D = random_category(rng, 3, 6, prefix="d")
        fs = list(islice(iter_functors(C, D), 8))
        F, G = rng.choice(fs), rng.choice(fs)
        _, proj, _ = inserter(F, G)
        pairs += 1
        projections.append(proj)
        if not is_dsb(proj) or not oracles.dsb(proj):
            bad += 1
    ex = corpus()["coinserter_counterexample"]
    corpus_proj = inserter(ex["F"].value, ex["G"].value)[1]
    if not is_dsb(corpus_proj):
        bad += 1
    hunt_pool = [factorization(F).right for F in random_suite()[:40]]
    targets = [random_category(random.Random(SEED + 70 + i), 2, 4, prefix="t") for i in range(3)]
    report = inserter_hunt(hunt_pool, targets)
    ok = bad == 0
    record(7, ok, f"{pairs - bad}/{pairs} random inserter projections (plus the corpus pair) are DSBs; "
           f"hunt: {report.dsbs} DSBs, {report.represented} represented as inserters into the test targets, "
           f"{len(report.unrepresented)} not")
    assert ok


def _all_vcats(V, n):
    for values in product(range(V.size), repeat=n * n - n):
        it = iter(values)
        hom = [[V.top if i == j else next(it) for j in range(n)] for i in range(n)]
        try:
            yield vquant.validate_vcat(V, [f"o{i}" for i in range(n)], hom)
        except vquant.NotAVCategory:
            continue


def test_criterion_8_quantale():
    frames = vquant.small_frames()
    exhaustive = randomized = 0
    bad: list[str] = []

    def check(j):
        meet, dens = vquant.is_vlax_epi_meet(j), vquant.is_vlax_epi_density(j)
        jop = vquant.opposite_vfunctor(j)
        if meet != dens:
            bad.append(f"meet/density disagree over {j.target.frame.name}")
        if meet != vquant.is_vlax_epi_meet(jop) or dens != vquant.is_vlax_epi_density(jop):
            bad.append("verdict changes under op")

    for V in frames:
        small = [X for n in (1, 2) for X in _all_vcats(V, n)]
        for X, Y in product(small, repeat=2):
            for mp in product(range(len(Y.objects)), repeat=len(X.objects)):
                try:
                    j = vquant.validate_vfunctor(mp, X, Y)
                except vquant.NotAVFunctor:
                    continue
                check(j)
                exhaustive += 1
    rng = random.Random(SEED + 8)
    while randomized < 600:
        check(vquant.random_vfunctor(rng, rng.choice(frames), 4, 4))
        randomized += 1
    two = 0
    for _ in range(200):
        A, B = orders.random_preord(rng, 4), orders.random_preord(rng, 4)
        f = orders.random_monotone(rng, A, B)
        j = vquant.vfunctor_of_monotone(f)
        two += 1
        if vquant.is_vlax_epi_meet(j) != orders.is_lax_epi_preord(f):
            bad.append("V = 2 verdict differs from the preorder engine")
    ok = not bad
    record(8, ok, f"meet = density and op-invariant on {exhaustive} exhaustive and {randomized} random instances "
           f"over frames {[V.name for V in frames]}; V = 2 matches Preord on {two} maps"
           + (f"; problems: {sorted(set(bad))}" if bad else ""))
    assert ok


def test_criterion_9_groups():
    gs = grp2.groups_up_to_order_8()
    family = grp2.probe_family(12)
    total = surjective = sound = refuted = 0
    bad = []
    for A, B in product(gs, repeat=2):
        for f in grp2.enumerate_homs(A, B):
            total += 1
            onto = len(set(f.map)) == B.order
            if grp2.is_lax_epi_grp(f) != onto:
                bad.append(f"{A.name}->{B.name}: verdict differs from surjectivity")
            probe = grp2.probe_search(f, family)
            if onto:
                surjective += 1
                sound += probe.holds
                if not probe.holds:
                    bad.append(f"{A.name}->{B.name}: surjection fails probe {probe.witness}")
            else:
                refuted += not probe.holds
    ok = not bad
    record(9, ok, f"{total} homomorphisms; lax epi = surjective on all; {sound}/{surjective} surjections pass "
           f"the probes; {refuted}/{total - surjective} non-surjections refuted by a probe group")
    assert ok, bad[:5]


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
