"""Finite preorders and posets as locally thin 2-categories.

Relations are square boolean matrices; ``rel[i, j]`` means ``elements[i] <= elements[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from . import limits
from .errors import NotAntisymmetric, NotAPreorder, NotMonotone, NotThin, ShapeMismatch
from .fincat import FinCat, FinFunctor, Morphism, validate_category, validate_functor


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure by repeated squaring."""
    n = rel.shape[0]
    r = rel.astype(bool) | np.eye(n, dtype=bool)
    while True:
        nxt = (r.astype(np.int64) @ r.astype(np.int64)) > 0
        if np.array_equal(nxt, r):
            return r
        r = nxt


@dataclass(frozen=True, eq=False)
class FinPreord:
    elements: tuple[str, ...]
    rel: np.ndarray
    name: str = ""
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.elements)})
        self.rel.setflags(write=False)

    def leq(self, x: str, y: str) -> bool:
        return bool(self.rel[self.index[x], self.index[y]])

    def iso(self, x: str, y: str) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    def is_antisymmetric(self) -> bool:
        both = self.rel & self.rel.T
        return bool(np.array_equal(both, np.eye(len(self.elements), dtype=bool)))

    def pairs(self) -> list[tuple[str, str]]:
        return [(self.elements[i], self.elements[j]) for i, j in zip(*np.nonzero(self.rel))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinPreord):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.rel, other.rel)

    def __hash__(self) -> int:
        return hash((self.elements, self.rel.tobytes()))

    def __repr__(self) -> str:
        return f"<FinPreord {self.name or ''} {len(self.elements)} elements>"


def validate_preord(elements: Iterable[str], rel, name: str = "") -> FinPreord:
    elements = tuple(str(x) for x in elements)
    if len(set(elements)) != len(elements):
        raise NotAPreorder("duplicate elements")
    m = np.array(rel, dtype=bool).reshape(len(elements), len(elements))
    n = len(elements)
    for i in range(n):
        if not m[i, i]:
            raise NotAPreorder(f"not reflexive at {elements[i]!r}")
    bad = ((m.astype(np.int64) @ m.astype(np.int64)) > 0) & ~m
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotAPreorder(f"not transitive: {elements[i]!r} <= {elements[j]!r} is implied but missing")
    return FinPreord(elements, m.copy(), name)


def preord_from_pairs(elements: Iterable[str], pairs: Iterable[tuple[str, str]], name: str = "") -> FinPreord:
    """Least preorder containing ``pairs``."""
    elements = tuple(str(x) for x in elements)
    idx = {x: i for i, x in enumerate(elements)}
    m = np.zeros((len(elements), len(elements)), dtype=bool)
    for x, y in pairs:
        m[idx[x], idx[y]] = True
    return FinPreord(elements, transitive_closure(m), name)


def validate_poset(elements: Iterable[str], rel, name: str = "") -> FinPreord:
    P = validate_preord(elements, rel, name)
    if not P.is_antisymmetric():
        raise NotAntisymmetric(f"{P.name or 'preorder'} has distinct isomorphic elements")
    return P


def chain(n: int, prefix: str = "c") -> FinPreord:
    els = [f"{prefix}{i}" for i in range(n)]
    return preord_from_pairs(els, zip(els, els[1:]), name=f"{n}-chain")


def discrete_preord(elements: Iterable[str], name: str = "") -> FinPreord:
    return preord_from_pairs(elements, [], name)


@dataclass(frozen=True, eq=False)
class MonotoneMap:
    source: FinPreord
    target: FinPreord
    map: Mapping[str, str]
    name: str = ""

    def __call__(self, x: str) -> str:
        return self.map[x]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and dict(self.map) == dict(other.map)

    def __hash__(self) -> int:
        return hash(tuple(self.map[x] for x in self.source.elements))


def validate_monotone(mapping: Mapping[str, str], source: FinPreord, target: FinPreord, name: str = "") -> MonotoneMap:
    mp = {str(k): str(v) for k, v in mapping.items()}
    for x in source.elements:
        if x not in mp or mp[x] not in target.index:
            raise NotMonotone(f"{x!r} has no image in the target")
    for x, y in source.pairs():
        if not target.leq(mp[x], mp[y]):
            raise NotMonotone(f"{x!r} <= {y!r} but {mp[x]!r} is not <= {mp[y]!r}")
    return MonotoneMap(source, target, {x: mp[x] for x in source.elements}, name)


def identity_map(P: FinPreord) -> MonotoneMap:
    return MonotoneMap(P, P, {x: x for x in P.elements}, "id")


def compose_maps(first: MonotoneMap, second: MonotoneMap) -> MonotoneMap:
    if first.target != second.source:
        raise ShapeMismatch("maps are not composable")
    return MonotoneMap(first.source, second.target, {x: second(first(x)) for x in first.source.elements})


def pointwise_leq(f: MonotoneMap, g: MonotoneMap) -> bool:
    return all(f.target.leq(f(x), g(x)) for x in f.source.elements)


# -- thin categories -----------------------------------------------------------


def _arrow(x: str, y: str) -> str:
    return f"1_{x}" if x == y else f"{x}<={y}"


def as_category(P: FinPreord) -> FinCat:
    pairs = P.pairs()
    by_src: dict[str, list[str]] = {}
    for x, y in pairs:
        by_src.setdefault(x, []).append(y)
    compose = [[_arrow(x, y), _arrow(y, z), _arrow(x, z)] for x, y in pairs for z in by_src[y]]
    return validate_category(
        {"objects": list(P.elements),
         "morphisms": [Morphism(_arrow(x, y), x, y) for x, y in pairs],
         "identities": {x: _arrow(x, x) for x in P.elements},
         "compose": compose},
        name=P.name,
    )


def as_preord(C: FinCat) -> FinPreord:
    if not C.is_thin():
        raise NotThin(f"{C.name or 'category'} has parallel distinct morphisms")
    idx = {x: i for i, x in enumerate(C.objects)}
    m = np.zeros((len(C.objects), len(C.objects)), dtype=bool)
    for mor in C.morphisms:
        m[idx[mor.src], idx[mor.dst]] = True
    return FinPreord(tuple(C.objects), m, C.name)


def functor_of_monotone(f: MonotoneMap) -> FinFunctor:
    A, B = as_category(f.source), as_category(f.target)
    return validate_functor(
        {"object_map": dict(f.map),
         "morphism_map": {_arrow(x, y): _arrow(f(x), f(y)) for x, y in f.source.pairs()}},
        A, B, name=f.name,
    )


def monotone_of_functor(F: FinFunctor) -> MonotoneMap:
    return validate_monotone(F.object_map, as_preord(F.source), as_preord(F.target), F.name)


# -- lax epimorphisms and strong monomorphisms ---------------------------------


def is_lax_epi_preord(f: MonotoneMap) -> bool:
    """Every target element is isomorphic to some image element."""
    images = set(f.map.values())
    return all(any(f.target.iso(b, y) for y in images) for b in f.target.elements)


def is_lax_epi_pos(f: MonotoneMap) -> bool:
    for P in (f.source, f.target):
        if not P.is_antisymmetric():
            raise NotAntisymmetric(f"{P.name or 'preorder'} is not a poset")
    return set(f.map.values()) == set(f.target.elements)


def is_order_embedding(m: MonotoneMap) -> bool:
    X = m.source
    if len(set(m.map.values())) != len(X.elements):
        return False
    return all(X.leq(x, y) == m.target.leq(m(x), m(y)) for x, y in product(X.elements, repeat=2))


def is_lax_strong_mono_preord(m: MonotoneMap) -> bool:
    if not is_order_embedding(m):
        return False
    image = set(m.map.values())
    return all(y in image for y in m.target.elements if any(m.target.iso(y, z) for z in image))


def is_monotone_bijection(h: MonotoneMap) -> bool:
    return sorted(h.map.values()) == sorted(h.target.elements)


# -- constructions -------------------------------------------------------------


def _upsets(P: FinPreord) -> Iterable[frozenset[str]]:
    n = len(P.elements)
    limits.check_count(2**n, "upset enumeration")
    for bits in range(2**n):
        U = {P.elements[i] for i in range(n) if bits >> i & 1}
        if all(y in U for x, y in P.pairs() if x in U):
            yield frozenset(U)


def coinserter_preord(
    f: MonotoneMap, g: MonotoneMap, verify_universal: bool = False
) -> tuple[FinPreord, MonotoneMap]:
    """Coinserter of ``f, g: A -> B``: ``B`` reordered by ``y <= f(x)``, ``g(x) <= z``."""
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("coinserter needs a parallel pair")
    B = f.target
    extra = [(y, z) for x in f.source.elements for y in B.elements for z in B.elements
             if B.leq(y, f(x)) and B.leq(g(x), z)]
    Bbar = preord_from_pairs(B.elements, B.pairs() + extra, name=f"{B.name}~" if B.name else "")
    q = MonotoneMap(B, Bbar, {y: y for y in B.elements}, "q")
    if verify_universal and not verify_coinserter(f, g, q):
        raise AssertionError("coinserter failed its universal property")
    return Bbar, q


def verify_coinserter(f: MonotoneMap, g: MonotoneMap, q: MonotoneMap) -> bool:
    """Check ``q∘f <= q∘g`` and that every ``h: B -> 2`` with ``h∘f <= h∘g`` factors through ``q``.

    Maps into the 2-chain detect a preorder completely (they are the upsets), so
    this is enough for the one-dimensional universal property; the two-dimensional
    part is automatic in a locally thin setting.
    """
    if not pointwise_leq(compose_maps(f, q), compose_maps(g, q)):
        return False
    Bbar = q.target
    for U in _upsets(f.target):
        if all(g(x) in U for x in f.source.elements if f(x) in U):
            # q is the identity on elements, so h factors iff U is an upset of the new order
            if not all(z in U for y, z in Bbar.pairs() if y in U):
                return False
    return True


def comma_preord(h: MonotoneMap) -> tuple[FinPreord, MonotoneMap, MonotoneMap]:
    """Comma object of ``h`` along itself, with its two projections."""
    X = h.source
    carrier = [(x, y) for x in X.elements for y in X.elements if h.target.leq(h(x), h(y))]
    names = [f"({x},{y})" for x, y in carrier]
    pairs = [(names[i], names[j]) for i, (x, y) in enumerate(carrier) for j, (x2, y2) in enumerate(carrier)
             if X.leq(x, x2) and X.leq(y, y2)]
    P = preord_from_pairs(names, pairs, name=f"{h.name}/{h.name}" if h.name else "comma")
    p1 = MonotoneMap(P, X, {n: c[0] for n, c in zip(names, carrier)}, "π1")
    p2 = MonotoneMap(P, X, {n: c[1] for n, c in zip(names, carrier)}, "π2")
    return P, p1, p2


def inserter_preord(f1: MonotoneMap, f2: MonotoneMap) -> tuple[FinPreord, MonotoneMap]:
    """``{y : f1(y) <= f2(y)}`` with the induced order, and its inclusion."""
    if f1.source != f2.source or f1.target != f2.target:
        raise ShapeMismatch("inserter needs a parallel pair")
    Y = f1.source
    keep = [i for i, y in enumerate(Y.elements) if f1.target.leq(f1(y), f2(y))]
    sub = FinPreord(tuple(Y.elements[i] for i in keep), Y.rel[np.ix_(keep, keep)].copy(), "Ins")
    return sub, MonotoneMap(sub, Y, {y: y for y in sub.elements}, "m")


def doubling_pair(m: MonotoneMap) -> tuple[MonotoneMap, MonotoneMap]:
    """The pair ``f1, f2: Y -> Z`` that duplicates every element outside the image of ``m``."""
    Y = m.target
    image = set(m.map.values())
    outside = [y for y in Y.elements if y not in image]
    z_elements = [y for y in Y.elements if y in image] + [f"({y},{i})" for y in outside for i in (1, 2)]

    def f(i: int) -> dict[str, str]:
        return {y: (y if y in image else f"({y},{i})") for y in Y.elements}

    maps = (f(1), f(2))
    pairs = [(mp[x], mp[y]) for mp in maps for x, y in Y.pairs()]
    Z = preord_from_pairs(z_elements, pairs, name="Z")
    return MonotoneMap(Y, Z, maps[0], "f1"), MonotoneMap(Y, Z, maps[1], "f2")


def pushout_preord(f: MonotoneMap, g: MonotoneMap) -> tuple[FinPreord, MonotoneMap, MonotoneMap]:
    """Pushout of the span ``B <-f- A -g-> C``: quotient set with the least compatible preorder."""
    if f.source != g.source:
        raise ShapeMismatch("span legs must share a source")
    B, C = f.target, g.target
    tagged = [("B", b) for b in B.elements] + [("C", c) for c in C.elements]
    parent = {t: t for t in tagged}

    def find(t):
        while parent[t] != t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    for a in f.source.elements:
        ra, rb = find(("B", f(a))), find(("C", g(a)))
        if ra != rb:
            parent[max(ra, rb, key=tagged.index)] = min(ra, rb, key=tagged.index)
    classes: dict[tuple[str, str], list[tuple[str, str]]] = {}
    for t in tagged:
        classes.setdefault(find(t), []).append(t)
    name = {r: "|".join(f"{s}.{x}" for s, x in members) for r, members in classes.items()}
    cls = {t: name[find(t)] for t in tagged}
    elements = [name[r] for r in sorted(classes, key=tagged.index)]
    pairs = [(cls["B", x], cls["B", y]) for x, y in B.pairs()] + [(cls["C", x], cls["C", y]) for x, y in C.pairs()]
    D = preord_from_pairs(elements, pairs, name="pushout")
    iB = MonotoneMap(B, D, {b: cls["B", b] for b in B.elements}, "iB")
    iC = MonotoneMap(C, D, {c: cls["C", c] for c in C.elements}, "iC")
    return D, iB, iC


# -- enumeration and random data -----------------------------------------------


def enumerate_monotone(A: FinPreord, B: FinPreord) -> list[MonotoneMap]:
    limits.check_count(len(B.elements) ** len(A.elements), "monotone map enumeration")
    out = []
    for images in product(B.elements, repeat=len(A.elements)):
        mp = dict(zip(A.elements, images))
        if all(B.leq(mp[x], mp[y]) for x, y in A.pairs()):
            out.append(MonotoneMap(A, B, mp))
    return out


def random_preord(rng, max_elements: int = 4, density: float = 0.3, prefix: str = "p",
                  poset: bool = False) -> FinPreord:
    n = rng.randint(1, max_elements)
    els = [f"{prefix}{i}" for i in range(n)]
    if poset:
        pairs = [(els[i], els[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
        perm = els[:]
        rng.shuffle(perm)
        ren = dict(zip(els, perm))
        pairs = [(ren[x], ren[y]) for x, y in pairs]
    else:
        pairs = [(x, y) for x in els for y in els if x != y and rng.random() < density]
    return preord_from_pairs(els, pairs)


def random_monotone(rng, A: FinPreord, B: FinPreord) -> MonotoneMap:
    maps = enumerate_monotone(A, B)
    return rng.choice(maps)
