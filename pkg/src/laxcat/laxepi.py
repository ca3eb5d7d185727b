"""Factorization categories ``g⇓F`` and the connectedness test for lax epimorphy.

For ``F: A -> B`` and ``g: b -> c`` in ``B``, an object of ``g⇓F`` is a triple
``(h, a, k)`` with ``h: b -> Fa``, ``k: Fa -> c`` and ``k∘h = g``.  A morphism
``(h, a, k) -> (h', a', k')`` is an ``f: a -> a'`` with ``Ff∘h = h'`` and
``k'∘Ff = k``.  ``F`` is a lax epimorphism in Cat exactly when every ``g⇓F``
(identities included) is nonempty and connected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from . import limits
from .errors import InternalCheckFailed, ShapeMismatch
from .fincat import FinFunctor

Triple = tuple[str, str, str]


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


@dataclass(frozen=True)
class ComponentId:
    """A connected component of ``g⇓F``, named by its least triple."""

    g: str
    rep: Triple

    def __str__(self) -> str:
        h, a, k = self.rep
        return f"[({h},{a},{k})]"


class Step(NamedTuple):
    """One edge of a zig-zag; ``forward`` means ``f`` points from the current triple to ``to``."""

    f: str
    forward: bool
    to: Triple


class CommaOverMorphism:
    """Materialized ``g⇓F`` with its component partition."""

    def __init__(self, F: FinFunctor, g: str):
        A, B = F.source, F.target
        if g not in B.src:
            raise ShapeMismatch(f"{g!r} is not a morphism of the codomain")
        limits.check_category(A)
        limits.check_category(B)
        self.functor = F
        self.g = g
        self.b = B.src[g]
        self.c = B.dst[g]
        triples: list[Triple] = []
        for a in A.objects:
            Fa = F.object_map[a]
            for h in B.hom(self.b, Fa):
                for k in B.hom(Fa, self.c):
                    if B.compose(h, k) == g:
                        triples.append((h, a, k))
        triples.sort(key=self._order_key)
        self.objects: tuple[Triple, ...] = tuple(triples)
        self.index = {t: i for i, t in enumerate(self.objects)}

        by_a_h: dict[tuple[str, str], list[Triple]] = {}
        for t in self.objects:
            by_a_h.setdefault((t[1], t[0]), []).append(t)
        edges: list[tuple[str, Triple, Triple]] = []
        for m in A.morphisms:
            Ff = F.morphism_map[m.id]
            for x in self.objects:
                if x[1] != m.src:
                    continue
                h2 = B.compose(x[0], Ff)
                for y in by_a_h.get((m.dst, h2), ()):
                    if B.compose(Ff, y[2]) == x[2]:
                        edges.append((m.id, x, y))
        self.edges: tuple[tuple[str, Triple, Triple], ...] = tuple(edges)

        uf = UnionFind(len(self.objects))
        adjacency: dict[Triple, list[Step]] = {t: [] for t in self.objects}
        for f, x, y in self.edges:
            uf.union(self.index[x], self.index[y])
            adjacency[x].append(Step(f, True, y))
            adjacency[y].append(Step(f, False, x))
        self._adjacency = adjacency
        members: dict[int, list[Triple]] = {}
        for t in self.objects:
            members.setdefault(uf.find(self.index[t]), []).append(t)
        self.component: dict[Triple, ComponentId] = {}
        self.members: dict[ComponentId, tuple[Triple, ...]] = {}
        for group in members.values():
            cid = ComponentId(g, group[0])  # objects are sorted, so group[0] is least
            self.members[cid] = tuple(group)
            for t in group:
                self.component[t] = cid

    def _order_key(self, t: Triple) -> tuple[int, int, int]:
        F = self.functor
        return (F.target.position(t[0]), F.source.object_position(t[1]), F.target.position(t[2]))

    @property
    def components(self) -> list[ComponentId]:
        return sorted(self.members, key=lambda c: self.index[c.rep])

    def is_connected(self) -> bool:
        return len(self.members) == 1

    def component_of(self, t: Triple) -> ComponentId:
        return self.component[t]

    def neighbours(self, t: Triple) -> list[Step]:
        return self._adjacency[t]

    def __contains__(self, t: object) -> bool:
        return t in self.index

    def __repr__(self) -> str:
        return f"<{self.g}⇓{self.functor.name or 'F'}: {len(self.objects)} objects, {len(self.members)} components>"


def comma_over_morphism(F: FinFunctor, g: str) -> CommaOverMorphism:
    cache = F._cache.setdefault("comma", {})
    comma = cache.get(g)
    if comma is None:
        comma = cache[g] = CommaOverMorphism(F, g)
    return comma


def _direct_neighbours(F: FinFunctor, x: Triple) -> Iterator[tuple[str, bool, Triple]]:
    """Neighbours of ``x`` computed straight from the definition (no materialized comma)."""
    A, B = F.source, F.target
    h, a, k = x
    for m in A.morphisms:
        Ff = F.morphism_map[m.id]
        if m.src == a:
            h2 = B.compose(h, Ff)
            for k2 in B.hom(B.dst[Ff], B.dst[k]):
                if B.compose(Ff, k2) == k:
                    yield m.id, True, (h2, m.dst, k2)
        if m.dst == a:
            for h0 in B.hom(B.src[h], B.src[Ff]):
                if B.compose(h0, Ff) == h:
                    yield m.id, False, (h0, m.src, B.compose(Ff, k))


def zigzag_witness(comma: CommaOverMorphism, x: Triple, y: Triple) -> list[Step] | None:
    """Shortest zig-zag from ``x`` to ``y`` (breadth first), or ``None`` when disconnected."""
    if x == y:
        return []
    parent: dict[Triple, tuple[Triple, Step]] = {}
    seen = {x}
    queue = deque([x])
    while queue:
        cur = queue.popleft()
        for step in comma.neighbours(cur):
            if step.to in seen:
                continue
            seen.add(step.to)
            parent[step.to] = (cur, step)
            if step.to == y:
                path = []
                node = y
                while node != x:
                    prev, st = parent[node]
                    path.append(st)
                    node = prev
                return path[::-1]
            queue.append(step.to)
    return None


def replay_zigzag(F: FinFunctor, g: str, x: Triple, path: list[Step], y: Triple) -> bool:
    """Check a zig-zag against the definition of ``g⇓F``, edge by edge."""
    A, B = F.source, F.target

    def is_object(t: Triple) -> bool:
        h, a, k = t
        Fa = F.object_map[a]
        return (B.src[h] == B.src[g] and B.dst[h] == Fa and B.src[k] == Fa
                and B.dst[k] == B.dst[g] and B.compose(h, k) == g)

    def is_edge(f: str, s: Triple, t: Triple) -> bool:
        if A.src[f] != s[1] or A.dst[f] != t[1]:
            return False
        Ff = F.morphism_map[f]
        return B.compose(s[0], Ff) == t[0] and B.compose(Ff, t[2]) == s[2]

    cur = x
    if not is_object(cur):
        return False
    for step in path:
        if not is_object(step.to):
            return False
        ok = is_edge(step.f, cur, step.to) if step.forward else is_edge(step.f, step.to, cur)
        if not ok:
            return False
        cur = step.to
    return cur == y


@dataclass(frozen=True)
class LaxEpiVerdict:
    flag: bool
    g: str | None = None
    reason: str | None = None  # "empty" or "disconnected"
    pair: tuple[Triple, Triple] | None = None

    def __bool__(self) -> bool:
        return self.flag

    def recheck(self, F: FinFunctor) -> bool:
        """Re-derive a negative verdict without the union-find partition."""
        if self.flag:
            return True
        B = F.target
        g = self.g
        if self.reason == "empty":
            b, c = B.src[g], B.dst[g]
            return not any(
                B.compose(h, k) == g
                for a in F.source.objects
                for h in B.hom(b, F.object_map[a])
                for k in B.hom(F.object_map[a], c)
            )
        x, y = self.pair
        seen = {x}
        queue = deque([x])
        while queue:
            cur = queue.popleft()
            for _, _, nxt in _direct_neighbours(F, cur):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return y not in seen

    def as_dict(self) -> dict:
        out: dict = {"lax_epi": self.flag}
        if not self.flag:
            out["witness"] = {"g": self.g, "reason": self.reason}
            if self.pair:
                out["witness"]["triples"] = [list(t) for t in self.pair]
        return out


def is_lax_epi(F: FinFunctor) -> LaxEpiVerdict:
    verdict = F._cache.get("lax_epi")
    if verdict is not None:
        return verdict
    verdict = LaxEpiVerdict(True)
    for g in F.target.ids:
        comma = comma_over_morphism(F, g)
        if not comma.objects:
            verdict = LaxEpiVerdict(False, g, "empty")
            break
        if not comma.is_connected():
            first, second = comma.components[:2]
            verdict = LaxEpiVerdict(False, g, "disconnected", (first.rep, second.rep))
            break
    F._cache["lax_epi"] = verdict
    return verdict


def component_of(F: FinFunctor, g: str, t: Triple) -> ComponentId:
    return comma_over_morphism(F, g).component_of(t)


def component_precompose(F: FinFunctor, C: ComponentId, t: str) -> ComponentId:
    """``C·t``: for ``t: d -> b`` send ``[(r, a, s)]`` in ``g⇓F`` to ``[(r∘t, a, s)]`` in ``(g∘t)⇓F``."""
    B = F.target
    if B.dst[t] != B.src[C.g]:
        raise ShapeMismatch(f"{t!r} does not end at the source of {C.g!r}")
    target = comma_over_morphism(F, B.compose(t, C.g))
    r, a, s = C.rep
    result = target.component_of((B.compose(t, r), a, s))
    if __debug__:
        for r2, a2, s2 in comma_over_morphism(F, C.g).members[C]:
            if target.component_of((B.compose(t, r2), a2, s2)) != result:
                raise InternalCheckFailed(f"precomposition by {t!r} depends on the representative of {C}")
    return result


def component_postcompose(F: FinFunctor, u: str, C: ComponentId) -> ComponentId:
    """``u·C``: for ``u: c -> d`` send ``[(r, a, s)]`` in ``g⇓F`` to ``[(r, a, u∘s)]`` in ``(u∘g)⇓F``."""
    B = F.target
    if B.src[u] != B.dst[C.g]:
        raise ShapeMismatch(f"{u!r} does not start at the target of {C.g!r}")
    target = comma_over_morphism(F, B.compose(C.g, u))
    r, a, s = C.rep
    result = target.component_of((r, a, B.compose(s, u)))
    if __debug__:
        for r2, a2, s2 in comma_over_morphism(F, C.g).members[C]:
            if target.component_of((r2, a2, B.compose(s2, u))) != result:
                raise InternalCheckFailed(f"postcomposition by {u!r} depends on the representative of {C}")
    return result
