"""Finite groups as one-object groupoids, with the 2-cells of the 2-category Grp.

A 2-cell ``f => g`` between homomorphisms ``A -> B`` is an element ``α`` of ``B``
with ``f(x)·α = α·g(x)`` for all ``x``; products are written left to right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import limits
from .errors import NotAGroup, NotAHomomorphism, NotIntertwining, ShapeMismatch


@dataclass(frozen=True, eq=False)
class FinGroup:
    elements: tuple[str, ...]
    table: np.ndarray  # table[i, j] = index of elements[i]·elements[j]
    unit: int
    inverse: tuple[int, ...]
    name: str = ""
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.elements)})
        self.table.setflags(write=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinGroup):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.elements, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"<FinGroup {self.name} order {self.order}>"


def validate_group(elements: Sequence[str], table, name: str = "") -> FinGroup:
    """Check the group axioms exhaustively; ``table`` holds element names or indices."""
    elements = tuple(str(x) for x in elements)
    n = len(elements)
    if n == 0 or len(set(elements)) != n:
        raise NotAGroup("elements must be nonempty and distinct")
    idx = {x: i for i, x in enumerate(elements)}
    raw = [[idx[str(v)] if not isinstance(v, (int, np.integer)) else int(v) for v in row] for row in table]
    t = np.array(raw, dtype=np.int64)
    if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
        raise NotAGroup("multiplication table has the wrong shape or entries")
    units = [e for e in range(n) if all(t[e, x] == x and t[x, e] == x for x in range(n))]
    if not units:
        raise NotAGroup("no two-sided unit")
    e = units[0]
    # associativity: (xy)z = x(yz) for all triples
    left = t[t, :]  # left[x, y, z] = (xy)z
    right = t[:, t]  # right[x, y, z] = x(yz)
    if not np.array_equal(left, right):
        x, y, z = map(int, np.argwhere(left != right)[0])
        raise NotAGroup(f"not associative on ({elements[x]}, {elements[y]}, {elements[z]})")
    inverse = []
    for x in range(n):
        inv = [y for y in range(n) if t[x, y] == e]
        if not inv or t[inv[0], x] != e:
            raise NotAGroup(f"{elements[x]!r} has no inverse")
        inverse.append(inv[0])
    return FinGroup(elements, t, e, tuple(inverse), name)


def group_from_permutations(gens: Sequence[Sequence[int]], name: str = "", letters: str = "abcd") -> FinGroup:
    """The permutation group generated by ``gens``; elements are named by shortest words."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    gens = [tuple(g) for g in gens]

    def mul(p, q):  # apply p, then q
        return tuple(q[p[i]] for i in range(degree))

    words = {ident: "e"}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for letter, g in zip(letters, gens):
            r = mul(p, g)
            if r not in words:
                words[r] = letter if words[p] == "e" else words[p] + letter
                queue.append(r)
    perms = list(words)
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[mul(p, q)] for q in perms] for p in perms]
    return validate_group([words[p] for p in perms], table, name)


def cyclic(n: int) -> FinGroup:
    els = [str(i) for i in range(n)]
    return validate_group(els, [[(i + j) % n for j in range(n)] for i in range(n)], name=f"C{n}")


def dihedral(n: int) -> FinGroup:
    """Symmetries of the ``n``-gon, order ``2n``."""
    if n == 1:
        return validate_group(["e", "b"], [[0, 1], [1, 0]], name="D1")
    if n == 2:
        return product_group(cyclic(2), cyclic(2), name="D2")
    r = [(i + 1) % n for i in range(n)]
    s = [(-i) % n for i in range(n)]
    return group_from_permutations([r, s], name=f"D{n}")


def symmetric(n: int) -> FinGroup:
    if n == 1:
        return validate_group(["e"], [[0]], name="S1")
    gens = [[1, 0] + list(range(2, n)), list(range(1, n)) + [0]]
    return group_from_permutations(gens, name=f"S{n}")


def alternating4() -> FinGroup:
    return group_from_permutations([[1, 2, 0, 3], [1, 0, 3, 2]], name="A4")


def quaternion() -> FinGroup:
    # regular representation of Q8 on {±1, ±i, ±j, ±k}, indexed 0..7
    basis = ["1", "i", "j", "k"]
    mult = {("1", x): (1, x) for x in basis}
    mult.update({(x, "1"): (1, x) for x in basis})
    for x in "ijk":
        mult[x, x] = (-1, "1")
    mult.update({("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    els = [(s, b) for s in (1, -1) for b in basis]
    names = [("" if s == 1 else "-") + b for s, b in els]
    pos = {e: i for i, e in enumerate(els)}
    table = [[pos[(s1 * s2 * mult[b1, b2][0], mult[b1, b2][1])] for (s2, b2) in els] for (s1, b1) in els]
    return validate_group(names, table, name="Q8")


def dicyclic3() -> FinGroup:
    """The dicyclic group of order 12."""
    # semidirect product C3 ⋊ C4 with the generator of C4 acting by inversion
    els = [(i, j) for j in range(4) for i in range(3)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        sign = -1 if j1 % 2 else 1
        return ((i1 + sign * i2) % 3, (j1 + j2) % 4)

    pos = {e: k for k, e in enumerate(els)}
    names = [f"a{i}b{j}" if (i or j) else "e" for i, j in els]
    return validate_group(names, [[pos[mul(x, y)] for y in els] for x in els], name="Dic3")


def product_group(G: FinGroup, H: FinGroup, name: str = "") -> FinGroup:
    els = [(g, h) for g in range(G.order) for h in range(H.order)]
    pos = {e: i for i, e in enumerate(els)}
    table = [[pos[(G.mul(g1, g2), H.mul(h1, h2))] for (g2, h2) in els] for (g1, h1) in els]
    names = [f"({G.elements[g]},{H.elements[h]})" for g, h in els]
    return validate_group(names, table, name=name or f"{G.name}x{H.name}")


def trivial_group() -> FinGroup:
    return validate_group(["e"], [[0]], name="C1")


def groups_up_to_order_8() -> list[FinGroup]:
    """One representative of each isomorphism class of groups of order at most 8."""
    c2 = cyclic(2)
    return [
        trivial_group(), cyclic(2), cyclic(3), cyclic(4), product_group(c2, c2, "C2xC2"),
        cyclic(5), cyclic(6), symmetric(3), cyclic(7), cyclic(8),
        product_group(cyclic(4), c2, "C4xC2"), product_group(product_group(c2, c2), c2, "C2^3"),
        dihedral(4), quaternion(),
    ]


def probe_family(max_order: int = 12) -> list[FinGroup]:
    """Cyclic, dihedral and symmetric groups of order at most ``max_order``."""
    fam = [cyclic(n) for n in range(1, max_order + 1)]
    fam += [dihedral(n) for n in range(4, max_order // 2 + 1)]
    # S1, S2 are cyclic; S3 is listed separately although it equals D3
    fam += [symmetric(n) for n in (3, 4) if _factorial(n) <= max_order]
    return fam


def _factorial(n: int) -> int:
    return 1 if n <= 1 else n * _factorial(n - 1)


# -- homomorphisms ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FinGroup
    target: FinGroup
    map: tuple[int, ...]
    name: str = ""

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"<GroupHom {self.source.name}->{self.target.name} {self.map}>"


def validate_hom(mapping, source: FinGroup, target: FinGroup, name: str = "") -> GroupHom:
    """``mapping`` is a sequence of target indices or a dict of element names."""
    if isinstance(mapping, dict):
        try:
            mp = tuple(target.index[str(mapping[x])] for x in source.elements)
        except KeyError as exc:
            raise NotAHomomorphism(f"map is not total or names an unknown element: {exc}") from None
    else:
        mp = tuple(int(v) for v in mapping)
    if len(mp) != source.order:
        raise NotAHomomorphism("map is not total")
    images = np.array(mp)
    lhs = images[source.table]
    rhs = target.table[images[:, None], images[None, :]]
    if not np.array_equal(lhs, rhs):
        x, y = map(int, np.argwhere(lhs != rhs)[0])
        raise NotAHomomorphism(f"f({source.elements[x]}·{source.elements[y]}) != f({source.elements[x]})·f({source.elements[y]})")
    return GroupHom(source, target, mp, name)


def identity_hom(G: FinGroup) -> GroupHom:
    return GroupHom(G, G, tuple(range(G.order)), "id")


def compose_homs(first: GroupHom, second: GroupHom) -> GroupHom:
    if first.target != second.source:
        raise ShapeMismatch("homomorphisms are not composable")
    return GroupHom(first.source, second.target, tuple(second.map[y] for y in first.map))


def generators(G: FinGroup) -> list[int]:
    """A small generating set, chosen greedily in element order."""
    gens: list[int] = []
    span = {G.unit}
    while len(span) < G.order:
        best = max((x for x in range(G.order) if x not in span), key=lambda x: len(_closure(G, gens + [x])))
        gens.append(best)
        span = _closure(G, gens)
    return gens


def _closure(G: FinGroup, gens: Iterable[int]) -> set[int]:
    gens = list(gens)
    seen = {G.unit}
    queue = deque([G.unit])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = G.mul(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def iter_homs(A: FinGroup, B: FinGroup) -> Iterator[GroupHom]:
    gens = generators(A)
    limits.check_count(B.order ** len(gens), "homomorphism enumeration")
    # express every element as a word in the generators (breadth first)
    word: dict[int, tuple[int, int]] = {}  # element -> (prefix element, generator)
    order = [A.unit]
    seen = {A.unit}
    for x in order:
        for g in gens:
            y = A.mul(x, g)
            if y not in seen:
                seen.add(y)
                word[y] = (x, g)
                order.append(y)
    for images in product(range(B.order), repeat=len(gens)):
        img = dict(zip(gens, images))
        mp = [0] * A.order
        mp[A.unit] = B.unit
        for y in order[1:]:
            x, g = word[y]
            mp[y] = B.mul(mp[x], img[g])
        try:
            yield validate_hom(mp, A, B)
        except NotAHomomorphism:
            continue


def enumerate_homs(A: FinGroup, B: FinGroup) -> list[GroupHom]:
    return sorted(set(iter_homs(A, B)), key=lambda h: h.map)


# -- 2-cells ------------------------------------------------------------------------


@dataclass(frozen=True)
class GrpTwoCell:
    from_hom: GroupHom
    to_hom: GroupHom
    element: int


def validate_2cell(f: GroupHom, g: GroupHom, alpha: int) -> GrpTwoCell:
    if f.source != g.source or f.target != g.target:
        raise ShapeMismatch("homomorphisms are not parallel")
    B = f.target
    for x in range(f.source.order):
        if B.mul(f(x), alpha) != B.mul(alpha, g(x)):
            raise NotIntertwining(f.source.elements[x])
    return GrpTwoCell(f, g, alpha)


def vcompose_2cells(a: GrpTwoCell, b: GrpTwoCell) -> GrpTwoCell:
    if a.to_hom != b.from_hom:
        raise ShapeMismatch("2-cells are not vertically composable")
    return validate_2cell(a.from_hom, b.to_hom, a.from_hom.target.mul(a.element, b.element))


def hcompose_2cells(beta: GrpTwoCell, alpha: GrpTwoCell) -> GrpTwoCell:
    """``β∗α = h(α)·β`` for ``α: f => g`` over ``A -> B`` and ``β: h => k`` over ``B -> C``."""
    h, k = beta.from_hom, beta.to_hom
    if h.source != alpha.from_hom.target:
        raise ShapeMismatch("2-cells are not horizontally composable")
    C = h.target
    left = C.mul(h(alpha.element), beta.element)
    right = C.mul(beta.element, k(alpha.element))
    assert left == right, "h(α)·β differs from β·k(α)"
    return validate_2cell(compose_homs(alpha.from_hom, h), compose_homs(alpha.to_hom, k), left)


def unit_2cell(f: GroupHom) -> GrpTwoCell:
    return GrpTwoCell(f, f, f.target.unit)


# -- factorization and lax epimorphisms ------------------------------------------------


def subgroup(G: FinGroup, members: Iterable[int], name: str = "") -> tuple[FinGroup, GroupHom]:
    keep = sorted(set(members))
    pos = {x: i for i, x in enumerate(keep)}
    table = [[pos[G.mul(x, y)] for y in keep] for x in keep]
    H = validate_group([G.elements[x] for x in keep], table, name)
    return H, GroupHom(H, G, tuple(keep), "m")


def image_factorization(f: GroupHom) -> tuple[GroupHom, GroupHom]:
    """``f = m∘q`` with ``q`` onto the image and ``m`` its inclusion."""
    M, m = subgroup(f.target, f.image(), name=f"im({f.name})" if f.name else "im")
    pos = {x: i for i, x in enumerate(m.map)}
    q = GroupHom(f.source, M, tuple(pos[y] for y in f.map), "q")
    return q, m


def is_lax_epi_grp(f: GroupHom) -> bool:
    return len(f.image()) == f.target.order


def laxepi_condition_probe(f: GroupHom, g: GroupHom, h: GroupHom, gamma: int) -> bool:
    """Does ``g(f(x))·γ = γ·h(f(x))`` for all ``x`` force ``g(y)·γ = γ·h(y)`` for all ``y``?"""
    if g.source != f.target or h.source != f.target or g.target != h.target:
        raise ShapeMismatch("probe data does not fit")
    C = g.target

    def holds(y: int) -> bool:
        return C.mul(g(y), gamma) == C.mul(gamma, h(y))

    if not all(holds(f(x)) for x in range(f.source.order)):
        return True
    return all(holds(y) for y in range(f.target.order))


@lru_cache(maxsize=1024)
def intertwining_sets(B: FinGroup, C: FinGroup) -> frozenset[frozenset[int]]:
    """Every set ``{y : g(y)·γ = γ·h(y)}`` over homomorphisms ``g, h: B -> C`` and ``γ`` in ``C``."""
    homs = enumerate_homs(B, C)
    limits.check_count(len(homs) ** 2 * C.order, "probe enumeration")
    maps = np.array([hm.map for hm in homs]).reshape(len(homs), B.order)
    out = set()
    for gamma in range(C.order):
        left = C.table[maps, gamma]  # g(y)·γ
        right = C.table[gamma, maps]  # γ·h(y)
        for i in range(len(homs)):
            eq = left[i][None, :] == right
            for row in eq:
                out.add(frozenset(np.nonzero(row)[0].tolist()))
    return frozenset(out)


@dataclass
class ProbeReport:
    holds: bool
    witness: tuple[str, str] | None = None  # (probe group, description)
    checked: int = 0


def probe_search(f: GroupHom, family: Sequence[FinGroup]) -> ProbeReport:
    """Search the family for ``(g, h, γ)`` violating the lax-epi condition for ``f``."""
    image = f.image()
    checked = 0
    for C in family:
        for S in intertwining_sets(f.target, C):
            checked += 1
            if image <= S and len(S) < f.target.order:
                missing = f.target.elements[min(set(range(f.target.order)) - S)]
                return ProbeReport(False, (C.name, f"fails at {missing}"), checked)
    return ProbeReport(True, None, checked)


def find_probe_witness(f: GroupHom, C: FinGroup) -> tuple[GroupHom, GroupHom, int] | None:
    """An explicit violating triple into ``C``, by direct search."""
    homs = enumerate_homs(f.target, C)
    for g, h in product(homs, repeat=2):
        for gamma in range(C.order):
            if not laxepi_condition_probe(f, g, h, gamma):
                return g, h, gamma
    return None


def random_permutation_group(rng, degree: int = 4) -> FinGroup:
    gens = [list(p) for p in rng.sample(list(permutations(range(degree))), 2)]
    return group_from_permutations(gens)
