"""Finite categories, functors and natural transformations.

Composition convention, fixed everywhere in the package: a composition entry
``(f, g) -> h`` means ``h = g after f``.  :meth:`FinCat.compose` takes its
arguments in that diagrammatic order, so ``C.compose(f, g, h)`` is ``h∘g∘f``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, NamedTuple, Sequence

from . import limits
from .errors import (
    BadIdentity,
    MissingComposite,
    NonAssociative,
    NotAFunctor,
    NotNatural,
    ShapeMismatch,
    ValidationError,
)


class Morphism(NamedTuple):
    id: str
    src: str
    dst: str


class FinCat:
    """A validated finite category.  Build instances with :func:`validate_category`."""

    __slots__ = (
        "name", "objects", "morphisms", "identity", "table",
        "src", "dst", "_homs", "_mindex", "_oindex", "_identities", "__weakref__",
    )

    def __init__(
        self,
        objects: Sequence[str],
        morphisms: Sequence[Morphism],
        identity: Mapping[str, str],
        table: Mapping[tuple[str, str], str],
        name: str = "",
    ):
        self.name = name
        self.objects = tuple(objects)
        self.morphisms = tuple(Morphism(*m) for m in morphisms)
        self.identity = dict(identity)
        self.table = dict(table)
        self.src = {m.id: m.src for m in self.morphisms}
        self.dst = {m.id: m.dst for m in self.morphisms}
        self._oindex = {x: i for i, x in enumerate(self.objects)}
        self._mindex = {m.id: i for i, m in enumerate(self.morphisms)}
        self._identities = frozenset(self.identity.values())
        homs: dict[tuple[str, str], list[str]] = {}
        for m in self.morphisms:
            homs.setdefault((m.src, m.dst), []).append(m.id)
        self._homs = {k: tuple(v) for k, v in homs.items()}

    # -- structure -------------------------------------------------------

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.morphisms)

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self._homs.get((x, y), ())

    def is_identity(self, m: str) -> bool:
        return m in self._identities

    def compose(self, *ms: str) -> str:
        """Diagrammatic composite: ``compose(f, g)`` is ``g∘f``."""
        result = ms[0]
        for m in ms[1:]:
            result = self.table[result, m]
        return result

    def composable(self, f: str, g: str) -> bool:
        return self.dst[f] == self.src[g]

    def position(self, m: str) -> int:
        return self._mindex[m]

    def object_position(self, x: str) -> int:
        return self._oindex[x]

    def inverse(self, f: str) -> str | None:
        for g in self.hom(self.dst[f], self.src[f]):
            if self.table[f, g] == self.identity[self.src[f]] and self.table[g, f] == self.identity[self.dst[f]]:
                return g
        return None

    def is_iso(self, f: str) -> bool:
        return self.inverse(f) is not None

    def isomorphic(self, x: str, y: str) -> bool:
        return any(self.is_iso(f) for f in self.hom(x, y))

    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._homs.values())

    def non_identities(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.morphisms if m.id not in self._identities)

    def describe(self) -> dict[str, Any]:
        """Raw description accepted by :func:`validate_category` (identity composites omitted)."""
        return {
            "objects": list(self.objects),
            "morphisms": [{"id": m.id, "src": m.src, "dst": m.dst} for m in self.morphisms],
            "identities": dict(self.identity),
            "compose": [
                [f, g, h]
                for (f, g), h in self.table.items()
                if not (self.is_identity(f) or self.is_identity(g))
            ],
        }

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects and self.morphisms == other.morphisms
                and self.identity == other.identity and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.objects, self.morphisms))

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<FinCat {label}{len(self.objects)} objects, {len(self.morphisms)} morphisms>"


def _as_morphism(m: Any) -> Morphism:
    if isinstance(m, Mapping):
        return Morphism(str(m["id"]), str(m["src"]), str(m["dst"]))
    mid, src, dst = m
    return Morphism(str(mid), str(src), str(dst))


def validate_category(raw: Mapping[str, Any], name: str = "") -> FinCat:
    """Check a raw description and return a :class:`FinCat`.

    ``raw`` carries ``objects``, ``morphisms`` (dicts with id/src/dst or
    triples), ``identities`` (object -> morphism id) and ``compose`` (list of
    ``[f, g, h]`` with ``h = g∘f``).  Composites with an identity factor may be
    omitted; they are filled in by the unit law.  Every other composable pair
    must be listed.
    """
    objects = [str(x) for x in raw["objects"]]
    if len(set(objects)) != len(objects):
        raise ValidationError("duplicate object identifiers")
    obj_set = set(objects)
    morphisms = [_as_morphism(m) for m in raw["morphisms"]]
    src = {}
    dst = {}
    for m in morphisms:
        if m.id in src:
            raise ValidationError(f"duplicate morphism identifier {m.id!r}")
        if m.src not in obj_set or m.dst not in obj_set:
            raise ValidationError(f"morphism {m.id!r} has an unknown endpoint")
        src[m.id] = m.src
        dst[m.id] = m.dst

    identity = {str(k): str(v) for k, v in raw.get("identities", {}).items()}
    for x in objects:
        if x not in identity:
            raise BadIdentity(f"object {x!r} has no identity")
        i = identity[x]
        if i not in src or src[i] != x or dst[i] != x:
            raise BadIdentity(f"identity {i!r} of {x!r} is not an endomorphism of {x!r}")
    if set(identity) - obj_set:
        raise BadIdentity(f"identities listed for unknown objects {sorted(set(identity) - obj_set)}")
    if len(set(identity.values())) != len(identity):
        raise BadIdentity("two objects share an identity morphism")

    table: dict[tuple[str, str], str] = {}
    for entry in raw.get("compose", []):
        f, g, h = (str(e) for e in entry)
        for m in (f, g, h):
            if m not in src:
                raise ValidationError(f"composition entry {[f, g, h]} names unknown morphism {m!r}")
        if dst[f] != src[g]:
            raise ValidationError(f"composition entry {[f, g, h]}: {f!r} and {g!r} are not composable")
        if src[h] != src[f] or dst[h] != dst[g]:
            raise ValidationError(f"composition entry {[f, g, h]}: {h!r} lies in the wrong hom-set")
        if (f, g) in table and table[f, g] != h:
            raise ValidationError(f"conflicting composites listed for ({f!r}, {g!r})")
        table[f, g] = h

    for m in morphisms:
        left = (identity[m.src], m.id)
        right = (m.id, identity[m.dst])
        for key in (left, right):
            if key in table and table[key] != m.id:
                raise BadIdentity(f"identity is not a unit: {key[0]!r} then {key[1]!r} gives {table[key]!r}, not {m.id!r}")
            table[key] = m.id

    by_src: dict[str, list[str]] = {}
    for m in morphisms:
        by_src.setdefault(m.src, []).append(m.id)
    for f in src:
        for g in by_src.get(dst[f], ()):
            if (f, g) not in table:
                raise MissingComposite(f, g)
    for f in src:
        for g in by_src.get(dst[f], ()):
            fg = table[f, g]
            for h in by_src.get(dst[g], ()):
                if table[fg, h] != table[f, table[g, h]]:
                    raise NonAssociative(f, g, h)
    return FinCat(objects, morphisms, identity, table, name=name or str(raw.get("name", "")))


def make_category(
    objects: Iterable[str],
    arrows: Iterable[tuple[str, str, str]],
    composites: Iterable[tuple[str, str, str]] = (),
    name: str = "",
    identity_prefix: str = "1_",
) -> FinCat:
    """Convenience builder: identities named ``1_x`` are added automatically."""
    objects = list(objects)
    identity = {x: f"{identity_prefix}{x}" for x in objects}
    morphisms = [(identity[x], x, x) for x in objects] + list(arrows)
    return validate_category(
        {"objects": objects, "morphisms": morphisms, "identities": identity,
         "compose": [list(c) for c in composites]},
        name=name,
    )


def terminal_category(obj: str = "*") -> FinCat:
    return make_category([obj], [], name="1")


def discrete_category(objects: Iterable[str], name: str = "") -> FinCat:
    return make_category(objects, [], name=name)


# -- functors ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FinFunctor:
    source: FinCat
    target: FinCat
    object_map: Mapping[str, str]
    morphism_map: Mapping[str, str]
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def fobj(self, x: str) -> str:
        return self.object_map[x]

    def fmap(self, m: str) -> str:
        return self.morphism_map[m]

    def key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        return (tuple(self.object_map[x] for x in self.source.objects),
                tuple(self.morphism_map[m] for m in self.source.ids))

    def then(self, other: FinFunctor) -> FinFunctor:
        """``other ∘ self``."""
        return compose_functors(self, other)

    def describe(self) -> dict[str, Any]:
        return {"object_map": dict(self.object_map), "morphism_map": dict(self.morphism_map)}

    def fiber(self, m: str) -> tuple[str, ...]:
        """Source morphisms sent to ``m``, in source order."""
        index = self._cache.get("fibers")
        if index is None:
            index = {}
            for a in self.source.ids:
                index.setdefault(self.morphism_map[a], []).append(a)
            index = {k: tuple(v) for k, v in index.items()}
            self._cache["fibers"] = index
        return index.get(m, ())

    def object_fiber(self, x: str) -> tuple[str, ...]:
        return tuple(a for a in self.source.objects if self.object_map[a] == x)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and dict(self.object_map) == dict(other.object_map)
                and dict(self.morphism_map) == dict(other.morphism_map))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = self.name or "F"
        return f"<FinFunctor {label}: {self.source.name or '?'} -> {self.target.name or '?'}>"


def validate_functor(
    raw: Mapping[str, Any], source: FinCat, target: FinCat, name: str = ""
) -> FinFunctor:
    """Law-check object/morphism maps.  Identity entries may be omitted from the morphism map."""
    omap = {str(k): str(v) for k, v in raw["object_map"].items()}
    mmap = {str(k): str(v) for k, v in raw.get("morphism_map", {}).items()}
    for x in source.objects:
        if x not in omap:
            raise NotAFunctor(f"object {x!r} is not mapped")
        if omap[x] not in target._oindex:
            raise NotAFunctor(f"object {x!r} is sent to unknown object {omap[x]!r}")
    if set(omap) - set(source.objects) or set(mmap) - set(source.ids):
        raise NotAFunctor("map mentions elements outside the source")
    for x in source.objects:
        i = source.identity[x]
        want = target.identity[omap[x]]
        if i in mmap and mmap[i] != want:
            raise NotAFunctor(f"identity {i!r} is sent to {mmap[i]!r}, not the identity {want!r}")
        mmap[i] = want
    for m in source.morphisms:
        if m.id not in mmap:
            raise NotAFunctor(f"morphism {m.id!r} is not mapped")
        fm = mmap[m.id]
        if fm not in target.src:
            raise NotAFunctor(f"morphism {m.id!r} is sent to unknown morphism {fm!r}")
        if target.src[fm] != omap[m.src] or target.dst[fm] != omap[m.dst]:
            raise NotAFunctor(f"morphism {m.id!r} is sent to {fm!r} with the wrong endpoints")
    for (f, g), h in source.table.items():
        if target.table[mmap[f], mmap[g]] != mmap[h]:
            raise NotAFunctor(
                f"composite ({f!r}, {g!r}) -> {h!r} is not preserved: "
                f"images compose to {target.table[mmap[f], mmap[g]]!r}, not {mmap[h]!r}"
            )
    omap = {x: omap[x] for x in source.objects}
    mmap = {m: mmap[m] for m in source.ids}
    return FinFunctor(source, target, omap, mmap, name=name or str(raw.get("name", "")))


def identity_functor(cat: FinCat) -> FinFunctor:
    return FinFunctor(cat, cat, {x: x for x in cat.objects}, {m: m for m in cat.ids},
                      name=f"Id_{cat.name}" if cat.name else "Id")


def compose_functors(first: FinFunctor, second: FinFunctor) -> FinFunctor:
    """``second ∘ first`` (apply ``first``, then ``second``)."""
    if first.target != second.source:
        raise ShapeMismatch("functors are not composable")
    raw = {
        "object_map": {x: second.object_map[y] for x, y in first.object_map.items()},
        "morphism_map": {m: second.morphism_map[n] for m, n in first.morphism_map.items()},
    }
    name = f"{second.name}{first.name}" if first.name and second.name else ""
    return validate_functor(raw, first.source, second.target, name=name)


def is_fully_faithful(F: FinFunctor) -> bool:
    A, B = F.source, F.target
    for a in A.objects:
        for a2 in A.objects:
            images = [F.morphism_map[m] for m in A.hom(a, a2)]
            if len(set(images)) != len(images):
                return False
            if len(images) != len(B.hom(F.object_map[a], F.object_map[a2])):
                return False
    return True


def is_faithful(F: FinFunctor) -> bool:
    A = F.source
    for a in A.objects:
        for a2 in A.objects:
            images = [F.morphism_map[m] for m in A.hom(a, a2)]
            if len(set(images)) != len(images):
                return False
    return True


def is_essentially_surjective(F: FinFunctor) -> bool:
    B = F.target
    image = set(F.object_map.values())
    return all(any(B.isomorphic(y, b) for y in image) for b in B.objects)


def is_equivalence(F: FinFunctor) -> bool:
    return is_fully_faithful(F) and is_essentially_surjective(F)


def is_isomorphism(F: FinFunctor) -> bool:
    return (len(set(F.object_map.values())) == len(F.target.objects) == len(F.source.objects)
            and len(set(F.morphism_map.values())) == len(F.target.morphisms) == len(F.source.morphisms))


def inverse_functor(F: FinFunctor) -> FinFunctor:
    if not is_isomorphism(F):
        raise ShapeMismatch("functor is not an isomorphism")
    raw = {"object_map": {y: x for x, y in F.object_map.items()},
           "morphism_map": {n: m for m, n in F.morphism_map.items()}}
    return validate_functor(raw, F.target, F.source)


# -- natural transformations ------------------------------------------------


@dataclass(frozen=True, eq=False)
class NatTrans:
    from_functor: FinFunctor
    to_functor: FinFunctor
    components: Mapping[str, str]
    name: str = ""

    def __getitem__(self, x: str) -> str:
        return self.components[x]

    def key(self) -> tuple[str, ...]:
        return tuple(self.components[x] for x in self.from_functor.source.objects)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.from_functor == other.from_functor and self.to_functor == other.to_functor
                and dict(self.components) == dict(other.components))

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"<NatTrans {self.name or ''} {dict(self.components)}>"


def _parallel(F: FinFunctor, G: FinFunctor) -> bool:
    return F.source == G.source and F.target == G.target


def validate_nat_trans(
    components: Mapping[str, str], F: FinFunctor, G: FinFunctor, name: str = ""
) -> NatTrans:
    if not _parallel(F, G):
        raise ShapeMismatch("functors are not parallel")
    A, B = F.source, F.target
    comps = {str(k): str(v) for k, v in components.items()}
    for x in A.objects:
        if x not in comps:
            raise NotNatural(A.identity[x], f"no component at {x!r}")
        c = comps[x]
        if c not in B.src or B.src[c] != F.object_map[x] or B.dst[c] != G.object_map[x]:
            raise NotNatural(A.identity[x], f"component {c!r} at {x!r} has the wrong endpoints")
    for m in A.morphisms:
        lhs = B.compose(F.morphism_map[m.id], comps[m.dst])
        rhs = B.compose(comps[m.src], G.morphism_map[m.id])
        if lhs != rhs:
            raise NotNatural(m.id, f"{lhs!r} != {rhs!r}")
    return NatTrans(F, G, {x: comps[x] for x in A.objects}, name=name)


def identity_nat_trans(F: FinFunctor) -> NatTrans:
    return NatTrans(F, F, {x: F.target.identity[F.object_map[x]] for x in F.source.objects})


def whisker_left(H: FinFunctor, alpha: NatTrans) -> NatTrans:
    """``H ∗ α``: post-whiskering, components ``H(α_x)``."""
    if alpha.from_functor.target != H.source:
        raise ShapeMismatch("functor does not start at the codomain of the transformation")
    F = compose_functors(alpha.from_functor, H)
    G = compose_functors(alpha.to_functor, H)
    return validate_nat_trans({x: H.morphism_map[c] for x, c in alpha.components.items()}, F, G)


def whisker_right(alpha: NatTrans, K: FinFunctor) -> NatTrans:
    """``α ∗ K``: pre-whiskering, components ``α_{Kx}``."""
    if K.target != alpha.from_functor.source:
        raise ShapeMismatch("functor does not land in the domain of the transformation")
    F = compose_functors(K, alpha.from_functor)
    G = compose_functors(K, alpha.to_functor)
    return validate_nat_trans({x: alpha.components[K.object_map[x]] for x in K.source.objects}, F, G)


def vcompose(alpha: NatTrans, beta: NatTrans) -> NatTrans:
    """Vertical composite ``β·α`` of ``α: F⇒G`` and ``β: G⇒H``."""
    if alpha.to_functor != beta.from_functor:
        raise ShapeMismatch("transformations are not vertically composable")
    B = alpha.from_functor.target
    comps = {x: B.compose(alpha.components[x], beta.components[x]) for x in alpha.components}
    return validate_nat_trans(comps, alpha.from_functor, beta.to_functor)


# -- constructions ------------------------------------------------------------


def opposite(C: FinCat) -> FinCat:
    name = C.name[:-3] if C.name.endswith("^op") else (f"{C.name}^op" if C.name else "")
    return FinCat(
        C.objects,
        [Morphism(m.id, m.dst, m.src) for m in C.morphisms],
        C.identity,
        {(g, f): h for (f, g), h in C.table.items()},
        name=name,
    )


def opposite_functor(F: FinFunctor) -> FinFunctor:
    return FinFunctor(opposite(F.source), opposite(F.target), F.object_map, F.morphism_map,
                      name=f"{F.name}^op" if F.name else "")


def inserter(F: FinFunctor, G: FinFunctor) -> tuple[FinCat, FinFunctor, NatTrans]:
    """Inserter of a parallel pair ``F, G: C -> D``.

    Objects are pairs ``(x, φ)`` with ``φ: Fx -> Gx``; a morphism ``(x, φ) -> (x', φ')``
    is an ``f: x -> x'`` with ``Gf∘φ = φ'∘Ff``.
    """
    if not _parallel(F, G):
        raise ShapeMismatch("inserter needs a parallel pair")
    C, D = F.source, F.target
    limits.check_category(C)
    objs: list[tuple[str, str]] = []
    for x in C.objects:
        for phi in D.hom(F.object_map[x], G.object_map[x]):
            objs.append((x, phi))
    oid = {o: f"({o[0]},{o[1]})" for o in objs}
    morphisms = []
    proj_m = {}
    mid = {}
    for o1 in objs:
        for o2 in objs:
            for f in C.hom(o1[0], o2[0]):
                if D.compose(o1[1], G.morphism_map[f]) == D.compose(F.morphism_map[f], o2[1]):
                    if C.is_identity(f) and o1 == o2:
                        name = f"1_{oid[o1]}"
                    else:
                        name = f"{f}:{oid[o1]}->{oid[o2]}"
                    mid[f, o1, o2] = name
                    morphisms.append(Morphism(name, oid[o1], oid[o2]))
                    proj_m[name] = f
    identity = {oid[o]: mid[C.identity[o[0]], o, o] for o in objs}
    table = {}
    for (f, o1, o2), n1 in mid.items():
        for (g, p1, p2), n2 in mid.items():
            if p1 == o2:
                table[n1, n2] = mid[C.compose(f, g), o1, p2]
    ins = FinCat([oid[o] for o in objs], morphisms, identity, table,
                 name=f"Ins({F.name},{G.name})" if F.name and G.name else "Ins")
    proj = FinFunctor(ins, C, {oid[o]: o[0] for o in objs}, proj_m, name="π")
    FP = compose_functors(proj, F)
    GP = compose_functors(proj, G)
    cell = validate_nat_trans({oid[o]: o[1] for o in objs}, FP, GP, name="ι")
    return ins, proj, cell


# -- enumeration --------------------------------------------------------------


def _functor_search(A: FinCat, B: FinCat, rng: random.Random | None = None) -> Iterator[FinFunctor]:
    limits.check_category(A)
    limits.check_category(B)
    order: list[tuple[str, str]] = []  # ("o", obj) or ("m", morphism)
    placed_objects: set[str] = set()
    pending = [m for m in A.morphisms if not A.is_identity(m.id)]
    for x in A.objects:
        order.append(("o", x))
        placed_objects.add(x)
        rest = []
        for m in pending:
            if m.src in placed_objects and m.dst in placed_objects:
                order.append(("m", m.id))
            else:
                rest.append(m)
        pending = rest
    step_of: dict[str, int] = {}
    for i, (kind, v) in enumerate(order):
        if kind == "o":
            step_of[A.identity[v]] = i
        else:
            step_of[v] = i
    checks: list[list[tuple[str, str, str]]] = [[] for _ in order]
    for (f, g), h in A.table.items():
        if A.is_identity(f) or A.is_identity(g):
            continue
        checks[max(step_of[f], step_of[g], step_of[h])].append((f, g, h))

    omap: dict[str, str] = {}
    mmap: dict[str, str] = {}
    visited = 0

    def candidates(kind: str, v: str) -> list[str]:
        if kind == "o":
            vals = list(B.objects)
        else:
            vals = list(B.hom(omap[A.src[v]], omap[A.dst[v]]))
        if rng is not None:
            rng.shuffle(vals)
        return vals

    def rec(i: int) -> Iterator[FinFunctor]:
        nonlocal visited
        if i == len(order):
            yield FinFunctor(A, B, dict(omap), {m: mmap[m] for m in A.ids})
            return
        kind, v = order[i]
        for val in candidates(kind, v):
            visited += 1
            if visited > limits.current().max_enumeration:
                limits.check_count(visited, f"functors {A.name or 'A'} -> {B.name or 'B'}")
            if kind == "o":
                omap[v] = val
                mmap[A.identity[v]] = B.identity[val]
            else:
                mmap[v] = val
            if all(B.table[mmap[f], mmap[g]] == mmap[h] for f, g, h in checks[i]):
                yield from rec(i + 1)
        if kind == "o":
            omap.pop(v, None)

    yield from rec(0)


def iter_functors(A: FinCat, B: FinCat) -> Iterator[FinFunctor]:
    """Functors ``A -> B`` in search order (see :func:`enumerate_functors` for sorted output)."""
    return _functor_search(A, B)


def enumerate_functors(A: FinCat, B: FinCat) -> list[FinFunctor]:
    """All functors ``A -> B``, lexicographic in (object images, morphism images)."""
    found = list(_functor_search(A, B))
    found.sort(key=lambda F: (tuple(B.object_position(y) for y in F.key()[0]),
                              tuple(B.position(n) for n in F.key()[1])))
    return found


def random_functor(A: FinCat, B: FinCat, rng: random.Random) -> FinFunctor | None:
    return next(_functor_search(A, B, rng=rng), None)


def enumerate_nat_trans(F: FinFunctor, G: FinFunctor) -> list[NatTrans]:
    """All natural transformations ``F ⇒ G``, lexicographic in the components."""
    if not _parallel(F, G):
        raise ShapeMismatch("functors are not parallel")
    A, B = F.source, F.target
    choices = [B.hom(F.object_map[x], G.object_map[x]) for x in A.objects]
    total = 1
    for c in choices:
        total *= len(c)
    limits.check_count(total, "natural transformation candidates")
    pos = {x: i for i, x in enumerate(A.objects)}
    checks: list[list[Morphism]] = [[] for _ in A.objects]
    for m in A.morphisms:
        checks[max(pos[m.src], pos[m.dst])].append(m)
    out: list[NatTrans] = []
    comps: dict[str, str] = {}

    def rec(i: int) -> None:
        if i == len(A.objects):
            out.append(NatTrans(F, G, dict(comps)))
            return
        x = A.objects[i]
        for c in choices[i]:
            comps[x] = c
            if all(B.compose(F.morphism_map[m.id], comps[m.dst]) == B.compose(comps[m.src], G.morphism_map[m.id])
                   for m in checks[i]):
                rec(i + 1)
        comps.pop(x, None)

    rec(0)
    return out

