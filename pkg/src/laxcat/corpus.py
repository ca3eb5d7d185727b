"""Named fixtures: worked examples, counterexamples and small reference structures.

Every fixture is built in code; the JSON files shipped under ``laxcat/corpus`` are
their serializations and are checked against these builders by the test suite.
Files listed in :data:`REJECTIONS` hold data that must fail validation.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .documents import Document, bundle, document, parse, serialize
from .factorize import OrthSquare, build_splitting_category
from .fincat import (
    FinCat,
    FinFunctor,
    discrete_category,
    identity_functor,
    make_category,
    validate_functor,
    validate_nat_trans,
)
from . import grp2, orders, vquant


def _functor(obj: dict, A: FinCat, B: FinCat, name: str, mor: dict | None = None) -> FinFunctor:
    return validate_functor({"object_map": obj, "morphism_map": mor or {}}, A, B, name=name)


# -- the coinserter that is not a lax epimorphism ----------------------------------


def coinserter_counterexample() -> Document:
    A = discrete_category(["A"], name="A")
    B = discrete_category(["FA", "GA"], name="B")
    C = make_category(["FA", "GA"], [("alpha_A", "FA", "GA")], name="C")
    D = make_category(
        ["JFA", "JGA", "KFA", "KGA"],
        [("J_alpha", "JFA", "JGA"), ("K_alpha", "KFA", "KGA"), ("gamma_FA", "JFA", "KFA"),
         ("gamma_GA", "JGA", "KGA"), ("r", "JFA", "KGA"), ("s", "JFA", "KGA")],
        [("gamma_FA", "K_alpha", "r"), ("J_alpha", "gamma_GA", "s")],
        name="D",
    )
    F = _functor({"A": "FA"}, A, B, "F")
    G = _functor({"A": "GA"}, A, B, "G")
    P = _functor({"FA": "FA", "GA": "GA"}, B, C, "P")
    J = _functor({"FA": "JFA", "GA": "JGA"}, C, D, "J", {"alpha_A": "J_alpha"})
    K = _functor({"FA": "KFA", "GA": "KGA"}, C, D, "K", {"alpha_A": "K_alpha"})
    JP = _functor({"FA": "JFA", "GA": "JGA"}, B, D, "JP")
    KP = _functor({"FA": "KFA", "GA": "KGA"}, B, D, "KP")
    gamma = validate_nat_trans(GAMMA_COMPONENTS, JP, KP, name="gamma")
    return bundle({"A": A, "B": B, "C": C, "D": D, "F": F, "G": G, "P": P, "J": J, "K": K, "gamma": gamma},
                  name="coinserter_counterexample", main="P")


GAMMA_COMPONENTS = {"FA": "gamma_FA", "GA": "gamma_GA"}


# -- an equivalence that is an equalizer and an equifier, but not a strong mono -----


def _iso_pair() -> FinCat:
    return make_category(["a", "b"], [("f", "a", "b"), ("f_inv", "b", "a")],
                         [("f", "f_inv", "1_a"), ("f_inv", "f", "1_b")], name="B")


def equifier_category() -> FinCat:
    """``C`` with ``R``- and ``S``-copies of the isomorphism and two parallel families ``p, q``."""
    arrows = [("Rf", "Ra", "Rb"), ("Rf_inv", "Rb", "Ra"), ("Sf", "Sa", "Sb"), ("Sf_inv", "Sb", "Sa")]
    comps = [("Rf", "Rf_inv", "1_Ra"), ("Rf_inv", "Rf", "1_Rb"), ("Sf", "Sf_inv", "1_Sa"), ("Sf_inv", "Sf", "1_Sb")]
    other = {"a": "b", "b": "a"}
    for fam in "pq":
        for x in "ab":
            for y in "ab":
                arrows.append((f"{fam}_{x}{y}", f"R{x}", f"S{y}"))
        for x in "ab":
            for y in "ab":
                # R-side iso then the family member, and the member then the S-side iso
                pre = "Rf" if x == "a" else "Rf_inv"
                comps.append((pre, f"{fam}_{other[x]}{y}", f"{fam}_{x}{y}"))
                post = "Sf" if y == "a" else "Sf_inv"
                comps.append((f"{fam}_{x}{y}", post, f"{fam}_{x}{other[y]}"))
    return make_category(["Ra", "Rb", "Sa", "Sb"], arrows, comps, name="C")


def remark37() -> Document:
    A = discrete_category(["a"], name="A")
    B = _iso_pair()
    C = equifier_category()
    E = _functor({"a": "a"}, A, B, "E")
    Fconst = _functor({"a": "a", "b": "a"}, B, B, "F", {"f": "1_a", "f_inv": "1_a"})
    IdB = identity_functor(B)
    R = _functor({"a": "Ra", "b": "Rb"}, B, C, "R", {"f": "Rf", "f_inv": "Rf_inv"})
    S = _functor({"a": "Sa", "b": "Sb"}, B, C, "S", {"f": "Sf", "f_inv": "Sf_inv"})
    alpha = validate_nat_trans({"a": "p_aa", "b": "p_bb"}, R, S, name="alpha")
    return bundle({"A": A, "B": B, "C": C, "E": E, "F": Fconst, "Id_B": IdB, "R": R, "S": S, "alpha": alpha},
                  name="remark37", main="E")


BETA_COMPONENTS = {"a": "p_aa", "b": "q_bb"}


def remark37_beta_raw() -> dict:
    """``β`` agreeing with ``α`` at ``a`` and differing at ``b``: not natural."""
    from .documents import functor_json

    doc = remark37()
    return {"kind": "nat_trans", "name": "beta", "from": functor_json(doc["R"].value),
            "to": functor_json(doc["S"].value), "components": dict(BETA_COMPONENTS)}


# -- a functor whose prescribed left factor is not a lax epimorphism -----------------


def factorization_gap() -> Document:
    """Found by random search and shrunk; see the README section on known deviations."""
    B = make_category(["b0"], [("e", "b0", "b0")], [("e", "e", "e")], name="B")
    A = make_category(
        ["a0", "a1", "a3"],
        [("i", "a0", "a0"), ("u", "a3", "a0"), ("v", "a1", "a3"), ("w", "a1", "a0")],
        [("i", "i", "i"), ("u", "i", "u"), ("v", "u", "w"), ("w", "i", "w")],
        name="A",
    )
    F = _functor({"a0": "b0", "a1": "b0", "a3": "b0"}, A, B, "F",
                 {"i": "e", "u": "e", "v": "e", "w": "e"})
    return document(F, "factorization_gap")


# -- preorders -------------------------------------------------------------------------


def preorders() -> Document:
    chain2 = orders.chain(2)
    chain3 = orders.chain(3)
    iso2 = orders.preord_from_pairs(["x", "y"], [("x", "y"), ("y", "x")], name="x~y")
    point = orders.discrete_preord(["x"], name="pt")
    disc2 = orders.discrete_preord(["c0", "c1"], name="2-discrete")
    vee = orders.preord_from_pairs(["l", "r", "t"], [("l", "t"), ("r", "t")], name="V")
    items = {
        "chain2": chain2, "chain3": chain3, "iso2": iso2, "point": point, "disc2": disc2, "vee": vee,
        "point_into_iso2": orders.validate_monotone({"x": "x"}, point, iso2, "point_into_iso2"),
        "bijection": orders.validate_monotone({"c0": "c0", "c1": "c1"}, disc2, chain2, "bijection"),
        "chain2_into_chain3": orders.validate_monotone({"c0": "c0", "c1": "c2"}, chain2, chain3,
                                                       "chain2_into_chain3"),
        "vee_collapse": orders.validate_monotone({"l": "c0", "r": "c0", "t": "c1"}, vee, chain2, "vee_collapse"),
        "chain3_onto_chain2": orders.validate_monotone({"c0": "c0", "c1": "c1", "c2": "c1"}, chain3, chain2,
                                                       "chain3_onto_chain2"),
    }
    ex = coinserter_counterexample()
    P = orders.monotone_of_functor(ex["P"].value)
    items["P_preord"] = orders.MonotoneMap(P.source, P.target, P.map, "P_preord")
    items["bottom"] = orders.validate_monotone({"c0": "c0", "c1": "c0"}, disc2, chain2, "bottom")
    return bundle(items, name="preorders", main="P_preord")


# -- groups ------------------------------------------------------------------------------


def groups() -> Document:
    c = grp2.cyclic
    gs = grp2.groups_up_to_order_8() + [
        c(9), grp2.product_group(c(3), c(3), "C3xC3"), c(10), grp2.dihedral(5), c(11), c(12),
        grp2.product_group(c(6), c(2), "C6xC2"), grp2.dicyclic3(), grp2.alternating4(), grp2.dihedral(6),
    ]
    return bundle({G.name: G for G in gs}, name="groups")


def group_homs() -> Document:
    c2, s3 = grp2.cyclic(2), grp2.symmetric(3)
    inc = next(f for f in grp2.enumerate_homs(c2, s3) if len(f.image()) == 2)
    sign = next(f for f in grp2.enumerate_homs(s3, c2) if grp2.is_lax_epi_grp(f))
    return bundle({
        "Z2_into_S3": grp2.GroupHom(c2, s3, inc.map, "Z2_into_S3"),
        "S3_sign": grp2.GroupHom(s3, c2, sign.map, "S3_sign"),
        "S3_identity": grp2.GroupHom(s3, s3, tuple(range(6)), "S3_identity"),
    }, name="group_homs", main="Z2_into_S3")


# -- frames and V-categories ------------------------------------------------------------------


def frames() -> Document:
    return bundle({
        "two": vquant.boolean_frame(),
        "three_chain": vquant.chain_frame(3),
        "four_chain": vquant.chain_frame(4),
        "powerset_of_2": vquant.powerset_frame(),
    }, name="frames")


def m3_raw() -> dict:
    els, pairs = vquant.m3_pairs()
    return {"kind": "frame", "name": "M3", "elements": els, "leq": [list(p) for p in pairs]}


def vcats() -> Document:
    V = vquant.chain_frame(3)
    Y = vquant.validate_vcat(V, ["u", "v", "w"],
                             [["1", "m1", "m1"], ["0", "1", "m1"], ["0", "0", "1"]], name="Y")
    X = vquant.validate_vcat(V, ["x0", "x1"], [["1", "m1"], ["0", "1"]], name="X")
    not_dense = vquant.validate_vfunctor({"x0": "u", "x1": "w"}, X, Y, "not_dense")
    W = vquant.validate_vcat(V, ["y0", "y1"], [["1", "1"], ["1", "1"]], name="W")
    pt = vquant.validate_vcat(V, ["x"], [["1"]], name="pt")
    iso_incl = vquant.validate_vfunctor({"x": "y0"}, pt, W, "iso_inclusion")
    return bundle({"not_dense": not_dense, "iso_inclusion": iso_incl}, name="vcats", main="not_dense")


# -- squares for the fill-in command ---------------------------------------------------------


def identity_square() -> Document:
    """The square (E, E) of the equivalence, whose fill-in fails because E is not a DSB."""
    doc = remark37()
    E = doc["E"].value
    return document(OrthSquare(E, E, identity_functor(E.source), identity_functor(E.target)),
                    "remark37_identity_square")


def factorization_square() -> Document:
    """Left and right factors of the coinserter's ``P`` against themselves."""
    fac = build_splitting_category(coinserter_counterexample()["P"].value)
    return document(OrthSquare(fac.left, fac.right, fac.left, fac.right), "factorization_square")


BUILDERS = {
    "coinserter_counterexample": coinserter_counterexample,
    "remark37": remark37,
    "factorization_gap": factorization_gap,
    "preorders": preorders,
    "groups": groups,
    "group_homs": group_homs,
    "frames": frames,
    "vcats": vcats,
    "remark37_identity_square": identity_square,
    "factorization_square": factorization_square,
}

REJECTIONS = {
    "remark37_beta_rejected": remark37_beta_raw,
    "m3_rejected": m3_raw,
}


@lru_cache(maxsize=None)
def corpus() -> dict[str, Document]:
    return {name: build() for name, build in BUILDERS.items()}


def corpus_dir() -> Path:
    return Path(str(resources.files("laxcat") / "corpus"))


def load_shipped(name: str) -> Document:
    return parse((corpus_dir() / f"{name}.json").read_text(encoding="utf-8"))


def write_corpus(directory: Path | None = None) -> list[Path]:
    directory = Path(directory or corpus_dir())
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in corpus().items():
        path = directory / f"{name}.json"
        path.write_text(serialize(doc), encoding="utf-8")
        written.append(path)
    for name, raw in REJECTIONS.items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(raw(), indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
        written.append(path)
    return written


def functors() -> dict[str, FinFunctor]:
    """Every functor in the corpus, keyed by ``file:item``."""
    out: dict[str, FinFunctor] = {}
    for name, doc in corpus().items():
        if doc.kind == "functor":
            out[name] = doc.value
        elif doc.kind == "bundle":
            for k, item in doc.value.items():
                if item.kind == "functor":
                    out[f"{name}:{k}"] = item.value
    return out
