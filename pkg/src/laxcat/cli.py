"""Command line interface.

Exit status: 0 when the verdict is true (or the command succeeded), 1 when it is
false and a witness is reported, 2 on any input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from . import grp2, limits, orders, vquant
from .corpus import corpus_dir
from .documents import Document, document, load, serialize
from .dot import category_dot, comma_dot
from .errors import LaxcatError
from .factorize import OrthSquare, build_splitting_category, diagonal_fill_in, diagonals
from .fincat import FinFunctor, compose_functors, inserter, is_isomorphism
from .laxepi import comma_over_morphism, is_lax_epi
from .splitfib import derived_properties, is_dsb


class InputError(Exception):
    pass


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    for cand in (corpus_dir() / path, corpus_dir() / f"{path}.json"):
        if cand.exists():
            return cand
    raise InputError(f"no such file: {path}")


def _load(args) -> Document:
    doc = load(_resolve(args.file))
    item = getattr(args, "item", None)
    if item:
        if doc.kind != "bundle" or item not in doc.value:
            raise InputError(f"{args.file} has no item {item!r}")
        return doc.value[item]
    return doc.primary()


def _expect(doc: Document, *kinds: str) -> None:
    if doc.kind not in kinds:
        raise InputError(f"expected a {' or '.join(kinds)} document, got {doc.kind}")


def _pair(args, kinds: tuple[str, ...]) -> tuple[Any, Any]:
    doc = load(_resolve(args.file))
    if doc.kind != "bundle":
        raise InputError("expected a bundle holding two parallel maps")
    if args.items:
        names = args.items
    else:
        maps = [k for k, v in doc.value.items() if v.kind in kinds]
        names = next(([a, b] for i, a in enumerate(maps) for b in maps[i + 1:]
                      if _parallel(doc.value[a].value, doc.value[b].value)), [])
    if len(names) != 2 or any(n not in doc.value for n in names):
        raise InputError(f"could not find two parallel items of kind {'/'.join(kinds)}")
    first, second = (doc.value[n] for n in names)
    if first.kind != second.kind or first.kind not in kinds:
        raise InputError("the two items must be maps of the same kind")
    return first.value, second.value


def _parallel(f, g) -> bool:
    return type(f) is type(g) and f.source == g.source and f.target == g.target


# -- commands ---------------------------------------------------------------------------


def cmd_validate(args) -> tuple[bool, dict, str]:
    doc = load(_resolve(args.file))
    summary = {"kind": doc.kind, "name": doc.name}
    if doc.kind == "bundle":
        summary["items"] = {k: v.kind for k, v in doc.value.items()}
    return True, summary, f"valid {doc.kind} {doc.name!r}"


def _functor_laxepi(F: FinFunctor) -> tuple[bool, dict, str]:
    v = is_lax_epi(F)
    report = v.as_dict()
    if v.flag:
        return True, report, "lax epimorphism: true"
    report["witness"]["rechecked"] = v.recheck(F)
    text = f"lax epimorphism: false (g = {v.g}, {v.reason}"
    if v.pair:
        text += f": {v.pair[0]} and {v.pair[1]} lie in different components"
    return False, report, text + ")"


def cmd_laxepi(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    _expect(doc, "functor", "monotone", "hom", "vfunctor")
    if doc.kind == "functor":
        return _functor_laxepi(doc.value)
    if doc.kind == "monotone":
        f = doc.value
        flag = orders.is_lax_epi_preord(f)
        cat = bool(is_lax_epi(orders.functor_of_monotone(f)))
        report = {"lax_epi_preord": flag, "lax_epi_cat": cat}
        if f.source.is_antisymmetric() and f.target.is_antisymmetric():
            report["lax_epi_pos"] = orders.is_lax_epi_pos(f)
        return flag, report, f"lax epimorphism in Preord: {str(flag).lower()} (in Cat: {str(cat).lower()})"
    if doc.kind == "hom":
        f = doc.value
        flag = grp2.is_lax_epi_grp(f)
        report = {"lax_epi_grp": flag, "image_order": len(f.image())}
        text = f"lax epimorphism in Grp: {str(flag).lower()}"
        if args.probe_order:
            probe = grp2.probe_search(f, grp2.probe_family(args.probe_order))
            report["probe"] = {"holds": probe.holds, "witness": probe.witness, "checked": probe.checked}
            text += f"; probes up to order {args.probe_order}: {'no violation' if probe.holds else probe.witness}"
        return flag, report, text
    return _vlaxepi(doc.value)


def _vlaxepi(j) -> tuple[bool, dict, str]:
    meet = vquant.is_vlax_epi_meet(j)
    dens = vquant.is_vlax_epi_density(j)
    report = {"meet": meet, "density": dens}
    if meet != dens:
        report["disagreement"] = True
    return meet and dens, report, f"meet test: {str(meet).lower()}, density test: {str(dens).lower()}"


def cmd_vlaxepi(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    _expect(doc, "vfunctor")
    return _vlaxepi(doc.value)


def cmd_dsb(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    _expect(doc, "functor")
    P = doc.value
    v = is_dsb(P)
    report = v.as_dict()
    report["derived"] = derived_properties(P)._asdict()
    if v.flag:
        return True, report, "discrete splitting bifibration: true"
    return False, report, (f"discrete splitting bifibration: false (split diagram over {v.diagram.g} "
                           f"has {len(v.lifts)} lifts)")


def cmd_factorize(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    _expect(doc, "functor")
    F = doc.value
    fac = build_splitting_category(F, check=False)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for fname, value, name in (("left.json", fac.left, "E"), ("mid.json", fac.mid, "mid"),
                               ("right.json", fac.right, "P")):
        (out / fname).write_text(serialize(document(value, name)), encoding="utf-8")
    left = is_lax_epi(fac.left)
    right = is_dsb(fac.right)
    checks = {
        "composite_equals_input": compose_functors(fac.left, fac.right) == F,
        "left_lax_epi": left.flag,
        "right_dsb": right.flag,
        "right_is_iso": is_isomorphism(fac.right),
    }
    report = {"mid_objects": len(fac.mid.objects), "mid_morphisms": len(fac.mid.morphisms),
              "checks": checks, "out_dir": str(out)}
    if not left.flag:
        report["left_witness"] = left.as_dict()["witness"]
    if not right.flag:
        report["right_witness"] = right.as_dict()["witness"]
    ok = checks["composite_equals_input"] and left.flag and right.flag
    text = (f"middle category: {len(fac.mid.objects)} objects, {len(fac.mid.morphisms)} morphisms; "
            + ", ".join(f"{k}={str(v).lower()}" for k, v in checks.items()))
    return ok, report, text


def cmd_fillin(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    _expect(doc, "square")
    sq: OrthSquare = doc.value
    T = diagonal_fill_in(sq)
    count = len(diagonals(sq)) if args.audit else None
    report = {"object_map": dict(T.object_map), "morphism_map": dict(T.morphism_map)}
    if count is not None:
        report["diagonals_found_by_enumeration"] = count
    if args.out:
        Path(args.out).write_text(serialize(document(T, "T")), encoding="utf-8")
    return True, report, f"diagonal: {dict(T.object_map)}" + (f" ({count} by enumeration)" if count is not None else "")


def cmd_inserter(args) -> tuple[bool, dict, str]:
    F, G = _pair(args, ("functor", "monotone"))
    if isinstance(F, orders.MonotoneMap):
        sub, m = orders.inserter_preord(F, G)
        flag = orders.is_lax_strong_mono_preord(m)
        report = {"elements": list(sub.elements), "lax_strong_mono": flag}
        if args.out:
            Path(args.out).write_text(serialize(document(m, "m")), encoding="utf-8")
        return flag, report, f"inserter on {list(sub.elements)}; lax strong mono: {str(flag).lower()}"
    ins, proj, _ = inserter(F, G)
    v = is_dsb(proj)
    report = {"objects": list(ins.objects), "morphisms": len(ins.morphisms), "projection_dsb": v.flag}
    if args.out:
        Path(args.out).write_text(serialize(document(proj, "π")), encoding="utf-8")
    return v.flag, report, (f"inserter with {len(ins.objects)} objects and {len(ins.morphisms)} morphisms; "
                            f"projection is a DSB: {str(v.flag).lower()}")


def cmd_coinserter(args) -> tuple[bool, dict, str]:
    f, g = _pair(args, ("monotone", "functor"))
    if isinstance(f, FinFunctor):
        f, g = orders.monotone_of_functor(f), orders.monotone_of_functor(g)
    Bbar, q = orders.coinserter_preord(f, g, verify_universal=args.verify_universal)
    report = {"elements": list(Bbar.elements), "leq": [list(p) for p in Bbar.pairs()],
              "lax_epi_preord": orders.is_lax_epi_preord(q), "bijection": orders.is_monotone_bijection(q),
              "universal_property_checked": bool(args.verify_universal)}
    if args.out:
        Path(args.out).write_text(serialize(document(q, "q")), encoding="utf-8")
    return True, report, f"coinserter order: {Bbar.pairs()}"


def cmd_dot(args) -> tuple[bool, dict, str]:
    doc = _load(args)
    if args.comma:
        _expect(doc, "functor")
        text = comma_dot(comma_over_morphism(doc.value, args.comma))
    else:
        _expect(doc, "category", "functor")
        text = category_dot(doc.value if doc.kind == "category" else doc.value.target)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        return True, {"output": args.output}, f"wrote {args.output}"
    return True, {"dot": text}, text.rstrip("\n")


def cmd_selftest(args) -> tuple[bool, dict, str]:
    from .selftest import run

    results = run(seed=args.seed)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    report = {"suites": [r._asdict() for r in results]}
    return all(r.passed for r in results), report, "\n".join(lines)


COMMANDS = {
    "validate": (cmd_validate, "parse and law-check a document"),
    "laxepi": (cmd_laxepi, "decide lax epimorphy of a functor, monotone map, homomorphism or V-functor"),
    "dsb": (cmd_dsb, "decide whether a functor is a discrete splitting bifibration"),
    "factorize": (cmd_factorize, "factor a functor as lax epi followed by DSB"),
    "fillin": (cmd_fillin, "diagonal of an orthogonality square"),
    "inserter": (cmd_inserter, "inserter of a parallel pair"),
    "coinserter": (cmd_coinserter, "coinserter of a pair of monotone maps"),
    "vlaxepi": (cmd_vlaxepi, "lax epimorphy of a V-functor by the meet and density tests"),
    "dot": (cmd_dot, "Graphviz text for a category or a comma category"),
    "selftest": (cmd_selftest, "run the quick invariant suites"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--max-objects", type=int, help="cap on objects per category")
    common.add_argument("--max-morphisms", type=int, help="cap on morphisms per category")

    parser = argparse.ArgumentParser(prog="laxcat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name != "selftest":
            p.add_argument("file", help="JSON document, or the name of a corpus file")
        if name in ("laxepi", "dsb", "factorize", "fillin", "vlaxepi", "dot"):
            p.add_argument("--item", help="bundle item to use instead of the bundle's main item")
        if name in ("inserter", "coinserter"):
            p.add_argument("--items", nargs=2, metavar=("F", "G"), help="bundle items forming the pair")
        if name in ("inserter", "coinserter", "fillin"):
            p.add_argument("--out", help="write the resulting map to this file")
        if name == "laxepi":
            p.add_argument("--probe-order", type=int, help="search probe groups up to this order (homomorphisms)")
        if name == "coinserter":
            p.add_argument("--verify-universal", action="store_true", help="check the universal property")
        if name == "factorize":
            p.add_argument("--out-dir", default=".", help="directory for left.json, mid.json, right.json")
        if name == "fillin":
            p.add_argument("--audit", action="store_true", help="count diagonals by exhaustive enumeration")
        if name == "dot":
            p.add_argument("--comma", metavar="G", help="draw g⇓F for this morphism of the target")
            p.add_argument("-o", "--output", help="write the DOT text here")
        if name == "selftest":
            p.add_argument("--seed", type=int, default=0)
    return parser


def _report(args, ok: bool, payload: dict) -> str:
    body = {
        "command": args.command,
        "input": getattr(args, "file", None),
        "verdict": ok,
        "result": payload,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False, default=str)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {k: v for k, v in (("max_objects", args.max_objects), ("max_morphisms", args.max_morphisms))
                 if v is not None}
    handler = COMMANDS[args.command][0]
    try:
        with limits.using(**overrides):
            ok, payload, text = handler(args)
    except (LaxcatError, InputError, OSError) as exc:
        if args.json:
            print(json.dumps({"command": args.command, "error": type(exc).__name__, "message": str(exc),
                              "timestamp": datetime.now(timezone.utc).isoformat()}, indent=2, sort_keys=True))
        else:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(_report(args, ok, payload) if args.json else text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
