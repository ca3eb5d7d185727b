"""JSON documents for every structure the library handles.

Each document is an object with a ``kind`` tag and a ``name``.  Nested structures
(the source of a functor, the frame of a V-category, ...) are embedded inline so
a file is self-contained.  Composition entries ``[f, g, h]`` mean ``h = g∘f``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

import jsonschema

from .errors import ParseError, SchemaError
from .fincat import FinCat, FinFunctor, NatTrans, validate_category, validate_functor, validate_nat_trans
from .factorize import OrthSquare
from .grp2 import FinGroup, GroupHom, validate_group, validate_hom
from .orders import FinPreord, MonotoneMap, validate_monotone, validate_preord
from .vquant import FrameV, VCat, VFunctor, validate_frame, validate_vcat, validate_vfunctor

KINDS = ("category", "functor", "nat_trans", "preord", "monotone", "group", "hom",
         "frame", "vcat", "vfunctor", "square", "bundle")

_ids = {"type": "array", "items": {"type": "string"}}
_str_map = {"type": "object", "additionalProperties": {"type": "string"}}
_table = {"type": "array", "items": _ids}
_pairs = {"type": "array", "items": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2}}


def _doc(kind: str, props: dict, required: list[str]) -> dict:
    return {
        "type": "object",
        "properties": {"kind": {"const": kind}, "name": {"type": "string"}, **props},
        "required": ["kind", *required],
        "additionalProperties": False,
    }


SCHEMAS: dict[str, dict] = {
    "category": _doc("category", {
        "objects": _ids,
        "morphisms": {"type": "array", "items": {
            "type": "object",
            "properties": {"id": {"type": "string"}, "src": {"type": "string"}, "dst": {"type": "string"}},
            "required": ["id", "src", "dst"], "additionalProperties": False}},
        "identities": _str_map,
        "compose": {"type": "array", "items": {"type": "array", "items": {"type": "string"},
                                               "minItems": 3, "maxItems": 3}},
    }, ["objects", "morphisms", "identities", "compose"]),
    "functor": _doc("functor", {"source": {"type": "object"}, "target": {"type": "object"},
                                "object_map": _str_map, "morphism_map": _str_map},
                    ["source", "target", "object_map", "morphism_map"]),
    "nat_trans": _doc("nat_trans", {"from": {"type": "object"}, "to": {"type": "object"},
                                    "components": _str_map}, ["from", "to", "components"]),
    "preord": _doc("preord", {"elements": _ids, "leq": _pairs}, ["elements", "leq"]),
    "monotone": _doc("monotone", {"source": {"type": "object"}, "target": {"type": "object"},
                                  "map": _str_map}, ["source", "target", "map"]),
    "group": _doc("group", {"elements": _ids, "table": _table}, ["elements", "table"]),
    "hom": _doc("hom", {"source": {"type": "object"}, "target": {"type": "object"}, "map": _str_map},
                ["source", "target", "map"]),
    "frame": _doc("frame", {"elements": _ids, "leq": _pairs}, ["elements", "leq"]),
    "vcat": _doc("vcat", {"frame": {"type": "object"}, "objects": _ids, "hom": _table},
                 ["frame", "objects", "hom"]),
    "vfunctor": _doc("vfunctor", {"source": {"type": "object"}, "target": {"type": "object"},
                                  "map": _str_map}, ["source", "target", "map"]),
    "square": _doc("square", {leg: {"type": "object"} for leg in "QMGH"}, list("QMGH")),
    "bundle": _doc("bundle", {"main": {"type": "string"}, "items": {"type": "object"}}, ["items"]),
}


@dataclass(frozen=True, eq=False)
class Document:
    kind: str
    name: str
    value: Any  # the validated object; for a bundle, a dict name -> Document
    main: str | None = None

    def __getitem__(self, key: str) -> "Document":
        if self.kind != "bundle":
            raise KeyError(key)
        return self.value[key]

    def primary(self) -> "Document":
        """The document a command acts on: the bundle's ``main`` item, or itself."""
        return self.value[self.main] if self.kind == "bundle" and self.main else self


def _check(obj: Any, where: str) -> str:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError(f"{where}: expected an object with a 'kind' field")
    kind = obj["kind"]
    if kind not in SCHEMAS:
        raise SchemaError(f"{where}.kind: unknown kind {kind!r}")
    try:
        jsonschema.validate(obj, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        path = "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in exc.absolute_path)
        raise SchemaError(f"{where}{path}: {exc.message}") from None
    return kind


def from_json(obj: Any, where: str = "$") -> Document:
    kind = _check(obj, where)
    name = obj.get("name", "")
    if kind == "category":
        value = validate_category(obj, name=name)
    elif kind == "functor":
        A = _sub(obj, "source", where, "category")
        B = _sub(obj, "target", where, "category")
        value = validate_functor(obj, A, B, name=name)
    elif kind == "nat_trans":
        F = _sub(obj, "from", where, "functor")
        G = _sub(obj, "to", where, "functor")
        value = validate_nat_trans(obj["components"], F, G, name=name)
    elif kind == "preord":
        value = _preord(obj, name)
    elif kind == "monotone":
        value = validate_monotone(obj["map"], _sub(obj, "source", where, "preord"),
                                  _sub(obj, "target", where, "preord"), name)
    elif kind == "group":
        value = validate_group(obj["elements"], obj["table"], name)
    elif kind == "hom":
        value = validate_hom(obj["map"], _sub(obj, "source", where, "group"),
                             _sub(obj, "target", where, "group"), name)
    elif kind == "frame":
        value = validate_frame(obj["elements"], [tuple(p) for p in obj["leq"]], name)
    elif kind == "vcat":
        frame = _sub(obj, "frame", where, "frame")
        value = validate_vcat(frame, obj["objects"], obj["hom"], name)
    elif kind == "vfunctor":
        value = validate_vfunctor(obj["map"], _sub(obj, "source", where, "vcat"),
                                  _sub(obj, "target", where, "vcat"), name)
    elif kind == "square":
        legs = {leg: _sub(obj, leg, where, "functor") for leg in "QMGH"}
        value = OrthSquare(**legs)
    else:
        items = {k: from_json(v, f"{where}.items.{k}") for k, v in obj["items"].items()}
        main = obj.get("main")
        if main is not None and main not in items:
            raise SchemaError(f"{where}.main: {main!r} is not an item")
        return Document(kind, name, items, main)
    return Document(kind, name, value)


def _sub(obj: dict, key: str, where: str, kind: str) -> Any:
    doc = from_json(obj[key], f"{where}.{key}")
    if doc.kind != kind:
        raise SchemaError(f"{where}.{key}: expected a {kind}, found a {doc.kind}")
    return doc.value


def _preord(obj: dict, name: str) -> FinPreord:
    els = obj["elements"]
    idx = {x: i for i, x in enumerate(els)}
    rel = [[False] * len(els) for _ in els]
    for x, y in obj["leq"]:
        if x not in idx or y not in idx:
            raise SchemaError(f"leq pair {[x, y]} names an unknown element")
        rel[idx[x]][idx[y]] = True
    return validate_preord(els, rel, name)


def parse(text: str) -> Document:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_json(obj)


def load(path) -> Document:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# -- serialization ------------------------------------------------------------------


def _named(kind: str, name: str, body: dict) -> dict:
    return {"kind": kind, "name": name, **body}


def category_json(C: FinCat) -> dict:
    return _named("category", C.name, {
        "objects": list(C.objects),
        "morphisms": [{"id": m.id, "src": m.src, "dst": m.dst} for m in C.morphisms],
        "identities": dict(C.identity),
        "compose": [[f, g, h] for (f, g), h in sorted(C.table.items(), key=lambda kv: (C.position(kv[0][0]), C.position(kv[0][1])))],
    })


def functor_json(F: FinFunctor) -> dict:
    return _named("functor", F.name, {
        "source": category_json(F.source), "target": category_json(F.target),
        "object_map": dict(F.object_map), "morphism_map": dict(F.morphism_map),
    })


def nat_trans_json(a: NatTrans) -> dict:
    return _named("nat_trans", a.name, {"from": functor_json(a.from_functor), "to": functor_json(a.to_functor),
                                        "components": dict(a.components)})


def preord_json(P: FinPreord) -> dict:
    return _named("preord", P.name, {"elements": list(P.elements), "leq": [list(p) for p in P.pairs()]})


def monotone_json(f: MonotoneMap) -> dict:
    return _named("monotone", f.name, {"source": preord_json(f.source), "target": preord_json(f.target),
                                       "map": dict(f.map)})


def group_json(G: FinGroup) -> dict:
    els = G.elements
    return _named("group", G.name, {"elements": list(els),
                                    "table": [[els[int(v)] for v in row] for row in G.table]})


def hom_json(f: GroupHom) -> dict:
    return _named("hom", f.name, {"source": group_json(f.source), "target": group_json(f.target),
                                  "map": {f.source.elements[i]: f.target.elements[v] for i, v in enumerate(f.map)}})


def frame_json(V: FrameV) -> dict:
    n = V.size
    pairs = [[V.elements[i], V.elements[j]] for i in range(n) for j in range(n) if V.leq[i, j]]
    return _named("frame", V.name, {"elements": list(V.elements), "leq": pairs})


def vcat_json(X: VCat) -> dict:
    els = X.frame.elements
    return _named("vcat", X.name, {"frame": frame_json(X.frame), "objects": list(X.objects),
                                   "hom": [[els[int(v)] for v in row] for row in X.hom]})


def vfunctor_json(j: VFunctor) -> dict:
    return _named("vfunctor", j.name, {
        "source": vcat_json(j.source), "target": vcat_json(j.target),
        "map": {x: j.target.objects[j.map[i]] for i, x in enumerate(j.source.objects)},
    })


def square_json(sq: OrthSquare) -> dict:
    return _named("square", "", {leg: functor_json(getattr(sq, leg)) for leg in "QMGH"})


_WRITERS = {
    "category": category_json, "functor": functor_json, "nat_trans": nat_trans_json,
    "preord": preord_json, "monotone": monotone_json, "group": group_json, "hom": hom_json,
    "frame": frame_json, "vcat": vcat_json, "vfunctor": vfunctor_json, "square": square_json,
}


def to_json(doc: Document) -> dict:
    if doc.kind == "bundle":
        out = {"kind": "bundle", "name": doc.name}
        if doc.main:
            out["main"] = doc.main
        out["items"] = {k: to_json(v) for k, v in doc.value.items()}
        return out
    out = _WRITERS[doc.kind](doc.value)
    out["name"] = doc.name
    return out


def serialize(doc: Document) -> str:
    return json.dumps(to_json(doc), indent=1, ensure_ascii=False) + "\n"


def document(value: Any, name: str = "") -> Document:
    """Wrap a library value in a :class:`Document` of the matching kind."""
    for kind, cls in (("category", FinCat), ("functor", FinFunctor), ("nat_trans", NatTrans),
                      ("preord", FinPreord), ("monotone", MonotoneMap), ("group", FinGroup),
                      ("hom", GroupHom), ("frame", FrameV), ("vcat", VCat), ("vfunctor", VFunctor),
                      ("square", OrthSquare)):
        if isinstance(value, cls):
            return Document(kind, name or getattr(value, "name", ""), value)
    raise TypeError(f"no document kind for {type(value).__name__}")


def bundle(items: dict[str, Any], name: str = "", main: str | None = None) -> Document:
    docs = {k: v if isinstance(v, Document) else document(v, k) for k, v in items.items()}
    return Document("bundle", name, docs, main)
