"""The (lax epi, DSB) factorization of a functor and orthogonal fill-ins.

Given ``F: A -> B`` the middle category has objects ``(b, β)`` where ``β`` is a
component of ``1_b⇓F`` containing an ``F``-split, and morphisms
``g: (b, β) -> (c, γ)`` those ``g: b -> c`` with ``g·β = γ·g`` in ``g⇓F``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import InternalCheckFailed, MultipleSolutions, NoSolution, NotOrthogonalInput, ShapeMismatch
from .fincat import (
    FinCat,
    FinFunctor,
    Morphism,
    NatTrans,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    iter_functors,
    validate_category,
    validate_functor,
    whisker_left,
    whisker_right,
)
from .laxepi import ComponentId, comma_over_morphism, component_postcompose, component_precompose, is_lax_epi
from .splitfib import PSplit, is_dsb, is_p_split, lift_split_diagram, split_diagram


@dataclass(frozen=True)
class Factorization:
    input: FinFunctor
    mid: FinCat
    left: FinFunctor
    right: FinFunctor
    # middle object id -> (b, component of 1_b⇓F)
    components: dict = field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class OrthSquare:
    """``M∘G = H∘Q`` with ``Q: A -> B`` a lax epi and ``M: C -> D`` a DSB."""

    Q: FinFunctor
    M: FinFunctor
    G: FinFunctor
    H: FinFunctor

    def commutes(self) -> bool:
        return compose_functors(self.G, self.M) == compose_functors(self.Q, self.H)


def build_splitting_category(F: FinFunctor, check: bool = True) -> Factorization:
    B = F.target
    objects: list[tuple[str, ComponentId]] = []
    for b in B.objects:
        comma = comma_over_morphism(F, B.identity[b])
        for comp in comma.components:
            if any(is_p_split(F, b, a, h, k) for h, a, k in comma.members[comp]):
                objects.append((b, comp))
    oid = {}
    for b, comp in objects:
        oid[b, comp] = f"{b}.{sum(1 for o in oid if o[0] == b)}"

    morphisms: list[Morphism] = []
    over: dict[str, str] = {}
    lookup: dict[tuple[str, str, str], str] = {}
    for o1 in objects:
        for o2 in objects:
            for g in B.hom(o1[0], o2[0]):
                if component_postcompose(F, g, o1[1]) == component_precompose(F, o2[1], g):
                    mid = f"{g}:{oid[o1]}>{oid[o2]}"
                    morphisms.append(Morphism(mid, oid[o1], oid[o2]))
                    over[mid] = g
                    lookup[g, oid[o1], oid[o2]] = mid
    identity = {}
    for o in objects:
        key = (B.identity[o[0]], oid[o], oid[o])
        if key not in lookup:
            raise InternalCheckFailed(f"identity of {oid[o]} is not a morphism of the splitting category")
        identity[oid[o]] = lookup[key]
    compose = []
    for m1 in morphisms:
        for m2 in morphisms:
            if m1.dst != m2.src:
                continue
            key = (B.compose(over[m1.id], over[m2.id]), m1.src, m2.dst)
            if key not in lookup:
                raise InternalCheckFailed(f"composite of {m1.id} and {m2.id} is missing from the splitting category")
            compose.append([m1.id, m2.id, lookup[key]])
    mid_name = f"E({F.name})" if F.name else "E"
    E = validate_category(
        {"objects": [oid[o] for o in objects], "morphisms": morphisms,
         "identities": identity, "compose": compose},
        name=mid_name,
    )

    A = F.source
    e_obj = {}
    for a in A.objects:
        Fa = F.object_map[a]
        one = B.identity[Fa]
        e_obj[a] = oid[Fa, comma_over_morphism(F, one).component_of((one, a, one))]
    e_mor = {}
    for m in A.morphisms:
        key = (F.morphism_map[m.id], e_obj[m.src], e_obj[m.dst])
        if key not in lookup:
            raise InternalCheckFailed(f"image of {m.id} is not a morphism of the splitting category")
        e_mor[m.id] = lookup[key]
    left = validate_functor({"object_map": e_obj, "morphism_map": e_mor}, A, E, name="E")
    right = validate_functor(
        {"object_map": {oid[o]: o[0] for o in objects}, "morphism_map": over}, E, B, name="P"
    )
    result = Factorization(F, E, left, right, {v: k for k, v in oid.items()})
    if check:
        if compose_functors(left, right) != F:
            raise InternalCheckFailed("P∘E differs from the input functor")
        verdict = is_lax_epi(left)
        if not verdict:
            raise InternalCheckFailed(f"left factor is not a lax epimorphism: {verdict}")
        dsb = is_dsb(right)
        if not dsb:
            raise InternalCheckFailed(f"right factor is not a DSB: {dsb}")
    return result


# -- diagonal fill-ins -------------------------------------------------------


def _check_square(square: OrthSquare) -> None:
    Q, M, G, H = square.Q, square.M, square.G, square.H
    if not (G.source == Q.source and H.source == Q.target and M.source == G.target
            and M.target == H.target):
        raise ShapeMismatch("square legs do not fit together")
    if not square.commutes():
        raise NotOrthogonalInput("square does not commute")
    if not is_lax_epi(Q):
        raise NotOrthogonalInput("left leg is not a lax epimorphism")
    if not is_dsb(M):
        raise NotOrthogonalInput("right leg is not a discrete splitting bifibration")


def _pushed_split(square: OrthSquare, b: str, triple: tuple[str, str, str]) -> PSplit:
    h, a, k = triple
    H, G = square.H, square.G
    return PSplit(H.object_map[b], G.object_map[a], H.morphism_map[h], H.morphism_map[k])


def _unique_lift(M: FinFunctor, g: str, top: PSplit, bottom: PSplit):
    diagram = split_diagram(M, g, top, bottom)
    if diagram is None:
        raise InternalCheckFailed(f"pushed data over {g!r} is not an M-split diagram")
    lifts = lift_split_diagram(M, diagram)
    if len(lifts) != 1:
        raise InternalCheckFailed(f"M-split diagram over {g!r} has {len(lifts)} lifts")
    return lifts[0]


def diagonal_fill_in(square: OrthSquare) -> FinFunctor:
    """The unique ``T`` with ``T∘Q = G`` and ``M∘T = H``."""
    _check_square(square)
    Q, M, H = square.Q, square.M, square.H
    B = Q.target
    reps: dict[str, tuple[str, str, str]] = {}
    splits: dict[str, PSplit] = {}
    obj: dict[str, str] = {}
    for b in B.objects:
        comma = comma_over_morphism(Q, B.identity[b])
        reps[b] = comma.objects[0]
        splits[b] = _pushed_split(square, b, reps[b])
        Hb1 = M.target.identity[H.object_map[b]]
        lift = _unique_lift(M, Hb1, splits[b], splits[b])
        if lift.b0 != lift.c0:
            raise InternalCheckFailed(f"identity diagram at {b!r} lifts to distinct objects")
        obj[b] = lift.b0
        if __debug__ and len(comma.objects) > 1:
            other = _pushed_split(square, b, comma.objects[-1])
            again = _unique_lift(M, Hb1, splits[b], other)
            if again.b0 != obj[b] or again.c0 != obj[b]:
                raise InternalCheckFailed(f"object {b!r} depends on the chosen representative")
    mor: dict[str, str] = {}
    for g in B.ids:
        b, c = B.src[g], B.dst[g]
        lift = _unique_lift(M, H.morphism_map[g], splits[b], splits[c])
        if lift.b0 != obj[b] or lift.c0 != obj[c]:
            raise InternalCheckFailed(f"lift of {g!r} has the wrong endpoints")
        mor[g] = lift.g0
    T = validate_functor({"object_map": obj, "morphism_map": mor}, B, M.source, name="T")
    if compose_functors(Q, T) != square.G or compose_functors(T, M) != H:
        raise InternalCheckFailed("diagonal does not make both triangles commute")
    return T


def diagonals(square: OrthSquare) -> list[FinFunctor]:
    """Every functor ``T`` with ``T∘Q = G`` and ``M∘T = H``, by exhaustive enumeration."""
    return [T for T in enumerate_functors(square.Q.target, square.M.source)
            if compose_functors(square.Q, T) == square.G and compose_functors(T, square.M) == square.H]


def _fits(theta: NatTrans, Q: FinFunctor, M: FinFunctor, alpha: NatTrans, beta: NatTrans) -> bool:
    return (all(theta.components[Q.object_map[a]] == alpha.components[a] for a in Q.source.objects)
            and all(M.morphism_map[theta.components[b]] == beta.components[b] for b in Q.target.objects))


def fill_in_2cell(
    square: OrthSquare, t: FinFunctor, t2: FinFunctor, alpha: NatTrans, beta: NatTrans
) -> NatTrans:
    """The unique ``θ: t ⇒ t2`` with ``θ∗Q = α`` and ``M∗θ = β``."""
    Q, M = square.Q, square.M
    if compose_functors(Q, t) != alpha.from_functor or compose_functors(Q, t2) != alpha.to_functor:
        raise ShapeMismatch("α does not run between t∘Q and t2∘Q")
    if compose_functors(t, M) != beta.from_functor or compose_functors(t2, M) != beta.to_functor:
        raise ShapeMismatch("β does not run between M∘t and M∘t2")
    if whisker_left(M, alpha) != whisker_right(beta, Q):
        raise NoSolution("whiskers M∗α and β∗Q differ")
    found = [theta for theta in enumerate_nat_trans(t, t2) if _fits(theta, Q, M, alpha, beta)]
    if not found:
        raise NoSolution("no 2-cell between the diagonals restricts to (α, β)")
    if len(found) > 1:
        raise MultipleSolutions(f"{len(found)} 2-cells restrict to (α, β)")
    return found[0]


def commutative_squares(e: FinFunctor, m: FinFunctor) -> Iterator[OrthSquare]:
    """All squares ``m∘G = H∘e`` over the pair, by enumeration of both legs."""
    by_key: dict = {}
    for G in iter_functors(e.source, m.source):
        by_key.setdefault(compose_functors(G, m).key(), []).append(G)
    for H in iter_functors(e.target, m.target):
        for G in by_key.get(compose_functors(e, H).key(), ()):
            yield OrthSquare(e, m, G, H)


def verify_orthogonal(e: FinFunctor, m: FinFunctor) -> bool:
    """True iff every commutative square over ``(e, m)`` has exactly one diagonal."""
    counts: dict = {}
    for T in iter_functors(e.target, m.source):
        key = (compose_functors(e, T).key(), compose_functors(T, m).key())
        counts[key] = counts.get(key, 0) + 1
    for sq in commutative_squares(e, m):
        if counts.get((sq.G.key(), sq.H.key()), 0) != 1:
            return False
    return True
