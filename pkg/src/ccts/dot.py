"""Graphviz export for instances.

Vertices are labeled "v/color" with the color taken from the initial
configuration. When a gadget layout is supplied (the sidecar produced by
the constraint-graph reduction) each gadget becomes a cluster subgraph so
the drawing groups the pieces the way the construction does.
"""
from __future__ import annotations


def _quote(text):
    return '"' + str(text).replace('"', '\\"') + '"'


def export_dot(inst, layout=None, gadget_layout=None):
    lines = [f"graph {_quote(inst.name or 'ccts')} {{", "  node [shape=circle];"]

    def vertex_line(v, indent="  "):
        attrs = [f"label={_quote(f'{v}/{inst.initial[v]}')}"]
        if layout is not None:
            x, y = layout[v]
            attrs.append(f"pos={_quote(f'{x},{y}!')}")
        return f"{indent}{v} [{', '.join(attrs)}];"

    clustered = set()
    if gadget_layout is not None:
        for g in gadget_layout.gadgets:
            lines.append(f"  subgraph cluster_{g.kind}_{g.ncl_ref} {{")
            lines.append(f"    label={_quote(f'{g.kind} {g.ncl_ref}')};")
            for v in g.vertices:
                lines.append(vertex_line(v, indent="    "))
            lines.append("  }")
            clustered.update(g.vertices)

    for v in range(inst.base.n):
        if v not in clustered:
            lines.append(vertex_line(v))
    for u, v in inst.base.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
