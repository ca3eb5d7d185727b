"""Random finite structures for property suites.

Random categories are concrete: objects are small finite sets, morphisms a
random family of functions closed under composition.  That gives idempotents,
isomorphisms and non-thin hom-sets without having to search for lawful tables.
"""

from __future__ import annotations

import random
from itertools import product

from .fincat import FinCat, FinFunctor, Morphism, random_functor, validate_category, validate_functor


def random_category(
    rng: random.Random,
    max_objects: int = 5,
    max_morphisms: int = 12,
    max_set: int = 3,
    prefix: str = "x",
    name: str = "",
) -> FinCat:
    while True:
        n = rng.randint(1, max_objects)
        sizes = [rng.randint(1, max_set) for _ in range(n)]
        objs = [f"{prefix}{i}" for i in range(n)]
        funcs: dict[tuple[int, int, tuple[int, ...]], None] = {}
        for i in range(n):
            funcs[(i, i, tuple(range(sizes[i])))] = None
        for _ in range(rng.randint(0, 2 * n)):
            i, j = rng.randrange(n), rng.randrange(n)
            funcs[(i, j, tuple(rng.randrange(sizes[j]) for _ in range(sizes[i])))] = None
        # close under composition
        arrows = list(funcs)
        grown = True
        while grown and len(arrows) <= max_morphisms:
            grown = False
            for f, g in product(list(arrows), repeat=2):
                if f[1] != g[0]:
                    continue
                h = (f[0], g[1], tuple(g[2][v] for v in f[2]))
                if h not in funcs:
                    funcs[h] = None
                    arrows.append(h)
                    grown = True
        if len(arrows) > max_morphisms:
            continue
        return concrete_category(objs, arrows, prefix=prefix, name=name)


def concrete_category(objs, arrows, prefix: str = "x", name: str = "") -> FinCat:
    """Category from ``(i, j, function-tuple)`` arrows closed under composition."""
    n = len(objs)
    ident = {i: (i, i, tuple(range(len(next(a[2] for a in arrows if a[0] == i and a[1] == i)))))
             for i in range(n)}
    mid = {}
    counter = 0
    for a in arrows:
        if a == ident[a[0]]:
            mid[a] = f"1_{objs[a[0]]}"
        else:
            mid[a] = f"{prefix}m{counter}"
            counter += 1
    compose = []
    for f in arrows:
        for g in arrows:
            if f[1] == g[0]:
                compose.append([mid[f], mid[g], mid[(f[0], g[1], tuple(g[2][v] for v in f[2]))]])
    return validate_category(
        {"objects": objs,
         "morphisms": [Morphism(mid[a], objs[a[0]], objs[a[1]]) for a in arrows],
         "identities": {objs[i]: mid[ident[i]] for i in range(n)},
         "compose": compose},
        name=name,
    )


def random_preorder_category(rng: random.Random, max_objects: int = 5, prefix: str = "p") -> FinCat:
    n = rng.randint(1, max_objects)
    rel = [[i == j or rng.random() < 0.3 for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                rel[i][j] = rel[i][j] or (rel[i][k] and rel[k][j])
    objs = [f"{prefix}{i}" for i in range(n)]
    arrows = [(i, j) for i in range(n) for j in range(n) if rel[i][j]]
    mid = {(i, j): (f"1_{objs[i]}" if i == j else f"{objs[i]}<{objs[j]}") for i, j in arrows}
    return validate_category(
        {"objects": objs,
         "morphisms": [(mid[a], objs[a[0]], objs[a[1]]) for a in arrows],
         "identities": {objs[i]: mid[i, i] for i in range(n)},
         "compose": [[mid[i, j], mid[j, k], mid[i, k]] for i, j in arrows for j2, k in arrows if j == j2]},
    )


def full_subcategory(C: FinCat, keep: list[str], name: str = "") -> tuple[FinCat, FinFunctor]:
    keep_set = set(keep)
    morphisms = [m for m in C.morphisms if m.src in keep_set and m.dst in keep_set]
    ids = {m.id for m in morphisms}
    sub = validate_category(
        {"objects": [x for x in C.objects if x in keep_set],
         "morphisms": morphisms,
         "identities": {x: C.identity[x] for x in C.objects if x in keep_set},
         "compose": [[f, g, h] for (f, g), h in C.table.items() if f in ids and g in ids]},
        name=name,
    )
    inc = validate_functor({"object_map": {x: x for x in sub.objects},
                            "morphism_map": {m: m for m in sub.ids}}, sub, C, name="ι")
    return sub, inc


def random_functor_between(rng: random.Random, A: FinCat, B: FinCat) -> FinFunctor:
    F = random_functor(A, B, rng)
    assert F is not None  # a constant functor always exists
    return F


def random_functor_case(rng: random.Random, max_objects: int = 5, max_morphisms: int = 12) -> FinFunctor:
    """A random functor drawn from a mix of shapes (arbitrary, inclusions, preorders)."""
    kind = rng.random()
    if kind < 0.45:
        A = random_category(rng, max_objects, max_morphisms, prefix="a", name="A")
        B = random_category(rng, max_objects, max_morphisms, prefix="b", name="B")
        return random_functor_between(rng, A, B)
    if kind < 0.75:
        B = random_category(rng, max_objects, max_morphisms, prefix="b", name="B")
        keep = [x for x in B.objects if rng.random() < 0.6] or [B.objects[0]]
        _, inc = full_subcategory(B, keep, name="A")
        return inc
    if kind < 0.85:
        A = random_preorder_category(rng, max_objects, prefix="a")
        B = random_preorder_category(rng, max_objects, prefix="b")
        return random_functor_between(rng, A, B)
    # a functor into a small category from a random one, often collapsing
    A = random_category(rng, max_objects, max_morphisms, prefix="a", name="A")
    B = random_category(rng, 2, 6, prefix="b", name="B")
    return random_functor_between(rng, A, B)
