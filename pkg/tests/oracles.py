"""Brute-force reference checks, written against the raw tables only.

Nothing here imports the comma, splitfib or factorize modules.  Composition
follows the library convention: ``C.compose(f, g)`` is ``g`` after ``f``.
"""

from __future__ import annotations

from itertools import product


def _triples(F, g):
    B = F.target
    b, c = B.src[g], B.dst[g]
    out = []
    for a in F.source.objects:
        Fa = F.object_map[a]
        for h in B.hom(b, Fa):
            for k in B.hom(Fa, c):
                if B.compose(h, k) == g:
                    out.append((h, a, k))
    return out


def comma_blocks(F, g) -> list[set]:
    """Connected components of g⇓F by flood fill over source morphisms."""
    A, B = F.source, F.target
    objs = _triples(F, g)
    adj = {t: set() for t in objs}
    for x, y in product(objs, repeat=2):
        h, a, k = x
        h2, a2, k2 = y
        for f in A.hom(a, a2):
            Ff = F.morphism_map[f]
            if B.compose(h, Ff) == h2 and B.compose(Ff, k2) == k:
                adj[x].add(y)
                adj[y].add(x)
    blocks, seen = [], set()
    for t in objs:
        if t in seen:
            continue
        stack, block = [t], set()
        while stack:
            u = stack.pop()
            if u in block:
                continue
            block.add(u)
            stack.extend(adj[u] - block)
        seen |= block
        blocks.append(block)
    return blocks


def lax_epi(F) -> bool:
    return all(len(comma_blocks(F, g)) == 1 for g in F.target.ids)


def _same_block(F, g, x, y) -> bool:
    return any(x in blk and y in blk for blk in comma_blocks(F, g))


def splits(P, b):
    B = P.target
    out = []
    for e in P.source.objects:
        Pe = P.object_map[e]
        for h in B.hom(b, Pe):
            for k in B.hom(Pe, b):
                if B.compose(h, k) != B.identity[b]:
                    continue
                hk = B.compose(k, h)
                if _same_block(P, hk, (B.identity[Pe], e, hk), (hk, e, B.identity[Pe])):
                    out.append((e, h, k))
    return out


def dsb_lift_counts(P) -> list[int]:
    """Number of lifts of every split diagram of ``P``."""
    A, B = P.source, P.target
    counts = []
    sp = {b: splits(P, b) for b in B.objects}
    for g in B.ids:
        b, c = B.src[g], B.dst[g]
        for (e, h, k), (e2, h2, k2) in product(sp[b], sp[c]):
            if not _same_block(P, g, (h, e, B.compose(k, g)), (B.compose(g, h2), e2, k2)):
                continue
            n = 0
            for g0 in A.ids:
                if P.morphism_map[g0] != g:
                    continue
                b0, c0 = A.src[g0], A.dst[g0]
                for h0, k0, h02, k02 in product(A.hom(b0, e), A.hom(e, b0), A.hom(c0, e2), A.hom(e2, c0)):
                    images = tuple(P.morphism_map[m] for m in (h0, k0, h02, k02))
                    if images != (h, k, h2, k2):
                        continue
                    if A.compose(A.compose(h0, k0), g0) == A.compose(g0, A.compose(h02, k02)):
                        n += 1
            counts.append(n)
    return counts


def dsb(P) -> bool:
    return all(n == 1 for n in dsb_lift_counts(P))


def functors_naive(A, B) -> list[tuple]:
    """All functors as (object map, morphism map) pairs, by plain product search."""
    out = []
    for objs in product(B.objects, repeat=len(A.objects)):
        om = dict(zip(A.objects, objs))
        choices = [B.hom(om[A.src[m]], om[A.dst[m]]) for m in A.ids]
        for ms in product(*choices):
            mm = dict(zip(A.ids, ms))
            if any(mm[A.identity[x]] != B.identity[om[x]] for x in A.objects):
                continue
            if all(mm[h] == B.compose(mm[f], mm[g]) for (f, g), h in A.table.items()):
                out.append((om, mm))
    return out


def is_iso_naive(F) -> bool:
    return (sorted(F.object_map.values()) == sorted(F.target.objects)
            and sorted(F.morphism_map.values()) == sorted(F.target.ids))


def preord_leq_closure(n: int, pairs) -> set:
    """Reflexive-transitive closure by Warshall."""
    r = {(i, i) for i in range(n)} | set(pairs)
    for k in range(n):
        r |= {(i, j) for i in range(n) for j in range(n) if (i, k) in r and (k, j) in r}
    return r
