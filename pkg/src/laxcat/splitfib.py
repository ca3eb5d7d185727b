"""Splits, split diagrams and discrete splitting bifibrations.

A ``P``-split of ``1_b`` through a source object ``e`` is a pair
``h: b -> Pe``, ``k: Pe -> b`` with ``k∘h = 1_b`` such that the factorizations
``(1_Pe, e, h∘k)`` and ``(h∘k, e, 1_Pe)`` lie in one component of ``(h∘k)⇓P``.
A split diagram over ``g: b -> c`` pairs a split of ``1_b`` with one of ``1_c``
such that ``(h, e, g∘k)`` and ``(h'∘g, e', k')`` are connected in ``g⇓P``.
``P`` is a discrete splitting bifibration (DSB) when each split diagram has
exactly one lift: a rectangle in the source with the given middle objects,
mapped letter for letter onto the diagram, whose outer square commutes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .fincat import (
    FinFunctor,
    compose_functors,
    enumerate_functors,
    inserter,
    is_faithful,
    is_isomorphism,
    iter_functors,
)
from .laxepi import Step, comma_over_morphism, zigzag_witness


@dataclass(frozen=True)
class PSplit:
    b: str
    e: str
    h: str
    k: str


@dataclass(frozen=True)
class PSplitDiagram:
    g: str
    top: PSplit
    bottom: PSplit
    zigzag: tuple[Step, ...] | None = field(default=None, compare=False)

    def as_dict(self) -> dict:
        return {
            "g": self.g,
            "top": {"b": self.top.b, "e": self.top.e, "h": self.top.h, "k": self.top.k},
            "bottom": {"b": self.bottom.b, "e": self.bottom.e, "h": self.bottom.h, "k": self.bottom.k},
        }


class Lift(NamedTuple):
    b0: str
    c0: str
    g0: str
    h0: str
    k0: str
    h0_bottom: str
    k0_bottom: str


@dataclass(frozen=True)
class DsbVerdict:
    flag: bool
    diagram: PSplitDiagram | None = None
    lifts: tuple[Lift, ...] = ()

    def __bool__(self) -> bool:
        return self.flag

    def as_dict(self) -> dict:
        out: dict = {"dsb": self.flag}
        if not self.flag:
            out["witness"] = {"diagram": self.diagram.as_dict(),
                              "lifts": [lift._asdict() for lift in self.lifts]}
        return out


def is_p_split(P: FinFunctor, b: str, e: str, h: str, k: str) -> bool:
    B = P.target
    Pe = P.object_map[e]
    if B.src[h] != b or B.dst[h] != Pe or B.src[k] != Pe or B.dst[k] != b:
        return False
    if B.compose(h, k) != B.identity[b]:
        return False
    hk = B.compose(k, h)  # h∘k : Pe -> Pe
    comma = comma_over_morphism(P, hk)
    one = B.identity[Pe]
    return comma.component_of((one, e, hk)) == comma.component_of((hk, e, one))


def enumerate_splits(P: FinFunctor, b: str) -> list[PSplit]:
    """All splits of ``1_b``, ordered by (middle object, h, k) in stored order."""
    cache = P._cache.setdefault("splits", {})
    if b in cache:
        return cache[b]
    B = P.target
    out = []
    for e in P.source.objects:
        Pe = P.object_map[e]
        for h in B.hom(b, Pe):
            for k in B.hom(Pe, b):
                if is_p_split(P, b, e, h, k):
                    out.append(PSplit(b, e, h, k))
    cache[b] = out
    return out


def split_diagram(P: FinFunctor, g: str, top: PSplit, bottom: PSplit) -> PSplitDiagram | None:
    """Return the diagram with its zig-zag certificate, or ``None`` when the data is not a split diagram."""
    B = P.target
    if top.b != B.src[g] or bottom.b != B.dst[g]:
        return None
    if not (is_p_split(P, top.b, top.e, top.h, top.k)
            and is_p_split(P, bottom.b, bottom.e, bottom.h, bottom.k)):
        return None
    comma = comma_over_morphism(P, g)
    x = (top.h, top.e, B.compose(top.k, g))
    y = (B.compose(g, bottom.h), bottom.e, bottom.k)
    if comma.component_of(x) != comma.component_of(y):
        return None
    path = zigzag_witness(comma, x, y)
    return PSplitDiagram(g, top, bottom, tuple(path))


def is_split_diagram(P: FinFunctor, candidate: PSplitDiagram) -> bool:
    return split_diagram(P, candidate.g, candidate.top, candidate.bottom) is not None


def lift_split_diagram(P: FinFunctor, diagram: PSplitDiagram) -> list[Lift]:
    """All rectangles in the source over ``diagram`` with middles ``top.e`` and ``bottom.e``."""
    E = P.source
    top, bottom = diagram.top, diagram.bottom
    lifts = []
    for h0 in P.fiber(top.h):
        if E.dst[h0] != top.e:
            continue
        b0 = E.src[h0]
        for k0 in P.fiber(top.k):
            if E.src[k0] != top.e or E.dst[k0] != b0:
                continue
            for h0b in P.fiber(bottom.h):
                if E.dst[h0b] != bottom.e:
                    continue
                c0 = E.src[h0b]
                for k0b in P.fiber(bottom.k):
                    if E.src[k0b] != bottom.e or E.dst[k0b] != c0:
                        continue
                    for g0 in P.fiber(diagram.g):
                        if E.src[g0] != b0 or E.dst[g0] != c0:
                            continue
                        if E.compose(h0, k0, g0) == E.compose(g0, h0b, k0b):
                            lifts.append(Lift(b0, c0, g0, h0, k0, h0b, k0b))
    return lifts


def iter_split_diagrams(P: FinFunctor):
    B = P.target
    for g in B.ids:
        for top in enumerate_splits(P, B.src[g]):
            for bottom in enumerate_splits(P, B.dst[g]):
                d = split_diagram(P, g, top, bottom)
                if d is not None:
                    yield d


def is_dsb(P: FinFunctor) -> DsbVerdict:
    cached = P._cache.get("dsb")
    if cached is not None:
        return cached
    verdict = DsbVerdict(True)
    for d in iter_split_diagrams(P):
        lifts = lift_split_diagram(P, d)
        if len(lifts) != 1:
            verdict = DsbVerdict(False, d, tuple(lifts))
            break
    P._cache["dsb"] = verdict
    return verdict


class DerivedProperties(NamedTuple):
    faithful: bool
    conservative: bool
    reflects_identities: bool


def derived_properties(P: FinFunctor) -> DerivedProperties:
    E, B = P.source, P.target
    conservative = all(E.is_iso(f) for f in E.ids if B.is_iso(P.morphism_map[f]))
    reflects = all(E.is_identity(f) for f in E.ids if B.is_identity(P.morphism_map[f]))
    return DerivedProperties(is_faithful(P), conservative, reflects)


# -- is every DSB an inserter? ---------------------------------------------------------


def _same_fibers(P: FinFunctor, Q: FinFunctor) -> bool:
    B = P.target
    return (all(len(P.object_fiber(x)) == len(Q.object_fiber(x)) for x in B.objects)
            and all(len(P.fiber(m)) == len(Q.fiber(m)) for m in B.ids))


def isomorphic_over(P: FinFunctor, Q: FinFunctor) -> bool:
    """Is there an isomorphism ``T`` between the sources with ``Q∘T = P``?"""
    if P.target != Q.target or not _same_fibers(P, Q):
        return False
    return any(is_isomorphism(T) and compose_functors(T, Q) == P
               for T in iter_functors(P.source, Q.source))


def inserter_representation(P: FinFunctor, targets, max_pairs: int = 20_000):
    """A pair ``(F, G)`` into one of ``targets`` whose inserter projection is ``P`` up to isomorphism."""
    for D in targets:
        homs = enumerate_functors(P.target, D)
        if len(homs) ** 2 > max_pairs:
            continue
        for F in homs:
            for G in homs:
                _, proj, _ = inserter(F, G)
                if isomorphic_over(P, proj):
                    return F, G
    return None


class HuntReport(NamedTuple):
    dsbs: int
    represented: int
    unrepresented: list


def inserter_hunt(functors, targets) -> HuntReport:
    """Among ``functors``, count DSBs with and without an inserter representation into ``targets``."""
    dsbs = represented = 0
    missing = []
    for P in functors:
        if not is_dsb(P):
            continue
        dsbs += 1
        if inserter_representation(P, targets) is not None:
            represented += 1
        else:
            missing.append(P)
    return HuntReport(dsbs, represented, missing)
