"""Deterministic SVG and DOT output for graphs and chord diagrams."""

from __future__ import annotations

import math

import numpy as np

from .chords import ChordDiagram
from .graph import Graph
from .recognition import boundary_cycle, is_two_connected, require_squaregraph
from .errors import NotTwoConnectedError

SIZE = 400
RADIUS = 180


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(p) -> tuple[str, str]:
    return _fmt(SIZE / 2 + RADIUS * p[0]), _fmt(SIZE / 2 - RADIUS * p[1])


def barycentric_layout(g: Graph) -> dict:
    """Boundary on a regular polygon; inner vertices at the average of their neighbours."""
    if not is_two_connected(g):
        raise NotTwoConnectedError("graph layout needs a 2-connected squaregraph")
    report = require_squaregraph(g)
    cyc = report.boundary or boundary_cycle(g)
    k = len(cyc)
    pos = {}
    for i, v in enumerate(cyc):
        angle = math.pi / 2 - 2 * math.pi * i / k
        pos[v] = (math.cos(angle), math.sin(angle))
    inner = [v for v in g.vertices if v not in pos]
    if inner:
        at = {v: i for i, v in enumerate(inner)}
        a = np.zeros((len(inner), len(inner)))
        b = np.zeros((len(inner), 2))
        for v in inner:
            i = at[v]
            a[i, i] = g.degree(v)
            for w in g.neighbors(v):
                if w in at:
                    a[i, at[w]] -= 1
                else:
                    b[i] += pos[w]
        sol = np.linalg.solve(a, b)
        for v in inner:
            pos[v] = (float(sol[at[v], 0]), float(sol[at[v], 1]))
    return pos


def graph_svg(g: Graph) -> str:
    pos = barycentric_layout(g)
    cyc = boundary_cycle(g)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        '<g class="boundary">',
        '<polygon fill="#f4f4f4" stroke="none" points="'
        + " ".join(",".join(_xy(pos[v])) for v in cyc)
        + '"/>',
        "</g>",
        '<g class="edges" stroke="#333" stroke-width="1.5">',
    ]
    for u, v in g.edges:
        (x1, y1), (x2, y2) = _xy(pos[u]), _xy(pos[v])
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g class="vertices" fill="#1f77b4">')
    for v in g.vertices:
        x, y = _xy(pos[v])
        out.append(f'<circle cx="{x}" cy="{y}" r="4"><title>{_esc(v)}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def diagram_svg(d: ChordDiagram) -> str:
    n = len(d.seq)
    c = _fmt(SIZE / 2)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="#333" stroke-width="1.5"/>',
        '<g class="chords" stroke="#d62728" stroke-width="1.5">',
    ]

    def point(i):
        angle = math.pi / 2 - 2 * math.pi * i / n
        return _xy((math.cos(angle), math.sin(angle)))

    for label, (i, j) in d.positions().items():
        (x1, y1), (x2, y2) = point(i), point(j)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"><title>{_esc(label)}</title></line>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s) -> str:
    return str(s).replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(subject) -> str:
    if isinstance(subject, ChordDiagram):
        return diagram_svg(subject)
    return graph_svg(subject)


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in g.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
