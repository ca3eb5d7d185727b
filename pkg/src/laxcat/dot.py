"""Graphviz DOT text for categories and comma categories (identities omitted)."""

from __future__ import annotations

from .fincat import FinCat
from .laxepi import CommaOverMorphism

PALETTE = ("lightblue", "lightsalmon", "palegreen", "khaki", "plum", "lightpink", "lightcyan", "wheat")


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def category_dot(C: FinCat, name: str | None = None) -> str:
    lines = [f"digraph {_q(name or C.name or 'C')} {{", "  rankdir=LR;"]
    for x in C.objects:
        lines.append(f"  {_q(x)};")
    for m in C.morphisms:
        if not C.is_identity(m.id):
            lines.append(f"  {_q(m.src)} -> {_q(m.dst)} [label={_q(m.id)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def comma_dot(comma: CommaOverMorphism) -> str:
    """Nodes are triples ``(h, a, k)``, filled by component."""
    color = {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(comma.components)}
    lines = [f"digraph {_q(comma.g + '⇓F')} {{", "  rankdir=LR;", "  node [style=filled];"]
    label = {t: f"({t[0]}, {t[1]}, {t[2]})" for t in comma.objects}
    for t in comma.objects:
        lines.append(f"  {_q(label[t])} [fillcolor={color[comma.component_of(t)]}];")
    A = comma.functor.source
    for f, x, y in comma.edges:
        if not A.is_identity(f):
            lines.append(f"  {_q(label[x])} -> {_q(label[y])} [label={_q(f)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
