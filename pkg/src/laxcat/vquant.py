"""Categories enriched in a finite frame ``V`` (tensor = meet, unit = top).

Elements of ``V`` are handled as indices into the frame's tables.  A V-functor
``f: Y -> V`` into ``V`` itself (with ``V(a, b) = a → b``) is a map on objects with
``Y(y, y') ∧ f(y) <= f(y')``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .errors import (
    InternalCheckFailed,
    NotALattice,
    NotAVCategory,
    NotAVFunctor,
    NotDistributive,
    ShapeMismatch,
    SizeCapExceeded,
)
from .orders import FinPreord, MonotoneMap, preord_from_pairs


@dataclass(frozen=True, eq=False)
class FrameV:
    elements: tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    arrow: np.ndarray
    top: int
    bottom: int
    name: str = ""
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {x: i for i, x in enumerate(self.elements)})
        for t in (self.leq, self.meet, self.join, self.arrow):
            t.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def meet_all(self, xs: Iterable[int]) -> int:
        return reduce(lambda a, b: int(self.meet[a, b]), xs, self.top)

    def join_all(self, xs: Iterable[int]) -> int:
        return reduce(lambda a, b: int(self.join[a, b]), xs, self.bottom)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrameV):
            return NotImplemented
        return self.elements == other.elements and np.array_equal(self.leq, other.leq)

    def __hash__(self) -> int:
        return hash((self.elements, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"<FrameV {self.name} {self.elements}>"


def validate_frame(elements: Sequence[str], pairs: Iterable[tuple[str, str]], name: str = "") -> FrameV:
    """Build a frame from its elements and generating order pairs ``x <= y``."""
    P = preord_from_pairs(elements, pairs, name)
    if not P.is_antisymmetric():
        raise NotALattice("order is not antisymmetric")
    leq = P.rel
    n = len(P.elements)
    names = P.elements

    def bound(i: int, j: int, lower: bool) -> int:
        cands = [k for k in range(n) if (leq[k, i] and leq[k, j] if lower else leq[i, k] and leq[j, k])]
        best = [k for k in cands if all((leq[c, k] if lower else leq[k, c]) for c in cands)]
        if not best:
            raise NotALattice(f"{names[i]!r} and {names[j]!r} have no {'meet' if lower else 'join'}")
        return best[0]

    meet = np.array([[bound(i, j, True) for j in range(n)] for i in range(n)], dtype=np.int64)
    join = np.array([[bound(i, j, False) for j in range(n)] for i in range(n)], dtype=np.int64)
    tops = [k for k in range(n) if leq[:, k].all()]
    bottoms = [k for k in range(n) if leq[k, :].all()]
    if not tops or not bottoms:
        raise NotALattice("missing top or bottom")
    top, bottom = tops[0], bottoms[0]

    def join_all(xs):
        return reduce(lambda a, b: int(join[a, b]), xs, bottom)

    # a ∧ ⋁S = ⋁{a ∧ s} over every subset S, the empty one included
    limits.check_count(n * 2**n, "distributivity check")
    for a in range(n):
        for r in range(n + 1):
            for S in combinations(range(n), r):
                if meet[a, join_all(S)] != join_all(int(meet[a, s]) for s in S):
                    raise NotDistributive(names[a], tuple(names[s] for s in S))
    arrow = np.array([[join_all(c for c in range(n) if leq[meet[c, a], b]) for b in range(n)]
                      for a in range(n)], dtype=np.int64)
    for a, b, c in product(range(n), repeat=3):
        if bool(leq[c, arrow[a, b]]) != bool(leq[meet[c, a], b]):
            raise InternalCheckFailed(f"arrow table is not right adjoint to meet at {names[a]!r}")
    return FrameV(tuple(names), leq, meet, join, arrow, top, bottom, name)


def chain_frame(n: int) -> FrameV:
    els = ["0", "1"] if n == 2 else (["0"] + [f"m{i}" for i in range(1, n - 1)] + ["1"] if n > 2 else ["1"])
    return validate_frame(els, zip(els, els[1:]), name=f"{n}-chain")


def boolean_frame() -> FrameV:
    return chain_frame(2)


def powerset_frame() -> FrameV:
    """Subsets of a 2-element set, i.e. the distributive 4-element diamond."""
    els = ["{}", "{a}", "{b}", "{a,b}"]
    return validate_frame(els, [("{}", "{a}"), ("{}", "{b}"), ("{a}", "{a,b}"), ("{b}", "{a,b}")], name="P(2)")


def m3_pairs() -> tuple[list[str], list[tuple[str, str]]]:
    """The non-distributive diamond M3."""
    els = ["0", "x", "y", "z", "1"]
    return els, [("0", m) for m in "xyz"] + [(m, "1") for m in "xyz"]


def small_frames() -> list[FrameV]:
    """Every frame with at most four elements, up to isomorphism."""
    return [chain_frame(1), chain_frame(2), chain_frame(3), chain_frame(4), powerset_frame()]


# -- V-categories ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class VCat:
    frame: FrameV
    objects: tuple[str, ...]
    hom: np.ndarray  # hom[x, y] = X(x, y) as a frame index
    name: str = ""

    def __post_init__(self):
        self.hom.setflags(write=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VCat):
            return NotImplemented
        return (self.frame == other.frame and self.objects == other.objects
                and np.array_equal(self.hom, other.hom))

    def __hash__(self) -> int:
        return hash((self.objects, self.hom.tobytes()))


def validate_vcat(frame: FrameV, objects: Sequence[str], hom, name: str = "") -> VCat:
    objects = tuple(str(x) for x in objects)
    n = len(objects)
    h = np.array([[frame.index[v] if isinstance(v, str) else int(v) for v in row] for row in hom],
                 dtype=np.int64).reshape(n, n)
    for i in range(n):
        if h[i, i] != frame.top:
            raise NotAVCategory(f"X({objects[i]},{objects[i]}) is not top")
    for x, y, z in product(range(n), repeat=3):
        if not frame.leq[frame.meet[h[y, z], h[x, y]], h[x, z]]:
            raise NotAVCategory(f"composition fails on ({objects[x]}, {objects[y]}, {objects[z]})")
    return VCat(frame, objects, h, name)


def opposite_vcat(X: VCat) -> VCat:
    return VCat(X.frame, X.objects, X.hom.T.copy(), f"{X.name}^op" if X.name else "")


@dataclass(frozen=True, eq=False)
class VFunctor:
    source: VCat
    target: VCat
    map: tuple[int, ...]  # object index -> object index
    name: str = ""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VFunctor):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)


def validate_vfunctor(mapping, source: VCat, target: VCat, name: str = "") -> VFunctor:
    if source.frame != target.frame:
        raise ShapeMismatch("V-categories over different frames")
    if isinstance(mapping, dict):
        tidx = {y: i for i, y in enumerate(target.objects)}
        mp = tuple(tidx[str(mapping[x])] for x in source.objects)
    else:
        mp = tuple(int(v) for v in mapping)
    V = source.frame
    for a, b in product(range(len(source.objects)), repeat=2):
        if not V.leq[source.hom[a, b], target.hom[mp[a], mp[b]]]:
            raise NotAVFunctor(f"X({source.objects[a]},{source.objects[b]}) exceeds its image hom")
    return VFunctor(source, target, mp, name)


def opposite_vfunctor(j: VFunctor) -> VFunctor:
    return VFunctor(opposite_vcat(j.source), opposite_vcat(j.target), j.map,
                    f"{j.name}^op" if j.name else "")


def identity_vfunctor(X: VCat) -> VFunctor:
    return VFunctor(X, X, tuple(range(len(X.objects))), "id")


def enumerate_vfunctors_to_V(Y: VCat) -> np.ndarray:
    """All V-functors ``Y -> V`` as rows of frame indices, in lexicographic order."""
    V = Y.frame
    n = len(Y.objects)
    count = V.size ** n
    if count > limits.current().max_vfunctor_candidates:
        raise SizeCapExceeded(f"{count} candidate V-functors exceed the cap")
    cand = np.array(list(product(range(V.size), repeat=n)), dtype=np.int64).reshape(count, n)
    ok = np.ones(count, dtype=bool)
    for a, b in product(range(n), repeat=2):
        ok &= V.leq[V.meet[Y.hom[a, b], cand[:, a]], cand[:, b]]
    return cand[ok]


def _meet_reduce(V: FrameV, arr: np.ndarray, axis: int) -> np.ndarray:
    arr = np.moveaxis(arr, axis, -1)
    out = np.full(arr.shape[:-1], V.top, dtype=np.int64)
    for i in range(arr.shape[-1]):
        out = V.meet[out, arr[..., i]]
    return out


def is_vlax_epi_meet(j: VFunctor) -> bool:
    """``⋀_y (f y → g y) = ⋀_x (f j x → g j x)`` for every pair of V-functors ``f, g: Y -> V``."""
    V = j.target.frame
    F = enumerate_vfunctors_to_V(j.target)
    limits.check_count(len(F) ** 2, "V-functor pairs")
    arrows = V.arrow[F[:, None, :], F[None, :, :]]  # (f, g, y)
    whole = _meet_reduce(V, arrows, 2)
    restricted = _meet_reduce(V, arrows[:, :, list(j.map)], 2)
    return bool(np.array_equal(whole, restricted))


def is_vlax_epi_density(j: VFunctor) -> bool:
    """``⋁_a Y(B, ja) ∧ Y(ja, b) = Y(B, b)`` for all objects ``B, b`` of the target."""
    Y = j.target
    V = Y.frame
    n = len(Y.objects)
    for B, b in product(range(n), repeat=2):
        through = V.join_all(int(V.meet[Y.hom[B, ja], Y.hom[ja, b]]) for ja in j.map)
        if through != Y.hom[B, b]:
            return False
    return True


def reflects_order(j: VFunctor) -> bool:
    """``f∘j <= g∘j`` pointwise implies ``f <= g`` for V-functors into ``V``."""
    V = j.target.frame
    F = enumerate_vfunctors_to_V(j.target)
    below = V.leq[F[:, None, :], F[None, :, :]]  # (f, g, y)
    return bool(np.all(below.all(axis=2) | ~below[:, :, list(j.map)].all(axis=2)))


# -- the Boolean frame and preorders ----------------------------------------------


def vcat_of_preord(P: FinPreord, frame: FrameV | None = None) -> VCat:
    V = frame or boolean_frame()
    if V.size != 2:
        raise ShapeMismatch("preorders correspond to V-categories over the 2-element frame")
    hom = np.where(P.rel, V.top, V.bottom).astype(np.int64)
    return VCat(V, P.elements, hom, P.name)


def preord_of_vcat(X: VCat) -> FinPreord:
    if X.frame.size != 2:
        raise ShapeMismatch("only V-categories over the 2-element frame are preorders")
    return FinPreord(X.objects, X.hom == X.frame.top, X.name)


def vfunctor_of_monotone(f: MonotoneMap, frame: FrameV | None = None) -> VFunctor:
    X, Y = vcat_of_preord(f.source, frame), vcat_of_preord(f.target, frame)
    return validate_vfunctor({x: f(x) for x in f.source.elements}, X, Y, f.name)


# -- random instances ------------------------------------------------------------------


def _close(V: FrameV, h: np.ndarray) -> np.ndarray:
    n = h.shape[0]
    np.fill_diagonal(h, V.top)
    changed = True
    while changed:
        changed = False
        for x, y, z in product(range(n), repeat=3):
            v = V.join[h[x, z], V.meet[h[x, y], h[y, z]]]
            if v != h[x, z]:
                h[x, z] = v
                changed = True
    return h


def random_vcat(rng, V: FrameV, n_objects: int, prefix: str = "y") -> VCat:
    n = n_objects
    h = np.array([[rng.randrange(V.size) for _ in range(n)] for _ in range(n)], dtype=np.int64).reshape(n, n)
    return VCat(V, tuple(f"{prefix}{i}" for i in range(n)), _close(V, h))


def random_vfunctor(rng, V: FrameV, max_source: int = 4, max_target: int = 4) -> VFunctor:
    """A V-functor whose source homs are drawn below the target homs, then closed."""
    Y = random_vcat(rng, V, rng.randint(1, max_target))
    m = rng.randint(1, max_source)
    mp = tuple(rng.randrange(len(Y.objects)) for _ in range(m))
    h = np.zeros((m, m), dtype=np.int64)
    for a, b in product(range(m), repeat=2):
        bound = Y.hom[mp[a], mp[b]]
        below = [v for v in range(V.size) if V.leq[v, bound]]
        h[a, b] = rng.choice(below)
    X = VCat(V, tuple(f"x{i}" for i in range(m)), _close(V, h))
    return validate_vfunctor(mp, X, Y)
