"""Graphviz DOT export.

Edges are labeled ``name: action`` with the polarity suffix used in the
diagrams ('?' input, '!' output, ';' internal).  Output ordering is fully
sorted, so the same model always renders to the same bytes.
"""

from __future__ import annotations

from .automata import InterfaceAutomaton, format_name
from .control import MetaComposition

__all__ = ["to_dot", "edge_label"]


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def edge_label(a: InterfaceAutomaton, t) -> str:
    return f"{format_name(t.name)}: {t.action}{a.polarity_of(t.action).suffix}"


def to_dot(model) -> str:
    """Render an automaton (or anything wrapping one) as DOT text."""
    if isinstance(model, MetaComposition):
        a = model.automaton
    elif isinstance(model, InterfaceAutomaton):
        a = model
    else:
        a = model.automaton

    lines = [f"digraph {_quote(a.name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    starts = sorted(a.start & a.states, key=lambda q: a.sorted_states().index(q))
    for i, _ in enumerate(starts):
        lines.append(f"  __start{i} [shape=point, label=\"\"];")
    for q in a.sorted_states():
        lines.append(f"  {_quote(q)};")
    for i, q in enumerate(starts):
        lines.append(f"  __start{i} -> {_quote(q)};")
    for t in a.sorted_transitions():
        lines.append(
            f"  {_quote(t.source)} -> {_quote(t.target)} [label={_quote(edge_label(a, t))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
