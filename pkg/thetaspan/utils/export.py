# thetaspan/utils/export.py
import re
from typing import Sequence

from thetaspan import config
from thetaspan.errors import PointParseError, UnknownFormatError
from thetaspan.models.geometry import Point
from thetaspan.models.graph import ThetaGraph

FORMATS = ("edge-list", "dot", "svg")


def export_graph(graph: ThetaGraph, fmt: str, highlight: Sequence[int] | None = None) -> bytes:
    """Render the graph in one of FORMATS; `highlight` is a vertex path (svg only)"""
    if fmt == "edge-list":
        text = edge_list(graph)
    elif fmt == "dot":
        text = dot(graph)
    elif fmt == "svg":
        text = svg(graph, highlight)
    else:
        raise UnknownFormatError(f"unknown export format {fmt!r}", supported=list(FORMATS))
    return text.encode("utf-8")


def edge_list(graph: ThetaGraph) -> str:
    digits = config.EXPORT_DIGITS
    return "".join(f"{u} {v} {graph.length(u, v):.{digits}f}\n" for u, v in graph.sorted_edges())


def dot(graph: ThetaGraph) -> str:
    digits = config.EXPORT_DIGITS
    lines = [f"graph theta{graph.k} {{", "  node [shape=point];"]
    for i, p in enumerate(graph.vertices):
        lines.append(f'  {i} [pos="{p.x!r},{p.y!r}!"];')
    for u, v in graph.sorted_edges():
        lines.append(f'  {u} -- {v} [len="{graph.length(u, v):.{digits}f}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ==================== SVG ====================

def _svg_transform(graph: ThetaGraph):
    """Map plane coordinates into the square canvas, y pointing up"""
    size, margin = config.SVG_SIZE, config.SVG_MARGIN
    xs = [p.x for p in graph.vertices] or [0.0]
    ys = [p.y for p in graph.vertices] or [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span
    x0, y0 = min(xs), min(ys)

    def to_svg(x: float, y: float) -> tuple[float, float]:
        return margin + (x - x0) * scale, size - margin - (y - y0) * scale

    return to_svg


def svg(graph: ThetaGraph, highlight: Sequence[int] | None = None) -> str:
    size = config.SVG_SIZE
    to_svg = _svg_transform(graph)
    pts = [to_svg(p.x, p.y) for p in graph.vertices]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]

    lines.append('<g class="edges" stroke="#888888" stroke-width="1">')
    for u, v in graph.sorted_edges():
        (x1, y1), (x2, y2) = pts[u], pts[v]
        lines.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    lines.append("</g>")

    if highlight:
        lines.append('<g class="highlight" stroke="#d62728" stroke-width="3" stroke-linecap="round">')
        for u, v in zip(highlight, highlight[1:]):
            (x1, y1), (x2, y2) = pts[u], pts[v]
            lines.append(f'<line class="hop" x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
        lines.append("</g>")

    lines.append('<g class="vertices" fill="#1f77b4" font-family="sans-serif" font-size="10">')
    for i, (x, y) in enumerate(pts):
        lines.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>')
        lines.append(f'<text x="{x + 4:.3f}" y="{y - 4:.3f}">{i}</text>')
    lines.append("</g>")

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


_DOT_HEADER = re.compile(r"graph theta(\d+)\s*\{")
_DOT_NODE = re.compile(r'^\s*(\d+)\s*\[pos="([^,"]+),([^"!]+)!?"\]')
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)")


def parse_dot(text: str) -> tuple[int, list[Point], set[tuple[int, int]]]:
    """Read back what `dot` writes: cone count, positions and edges"""
    header = _DOT_HEADER.search(text)
    if header is None:
        raise UnknownFormatError("not a θ-graph dot file (missing 'graph thetaK {' header)")
    nodes: dict[int, Point] = {}
    edges: set[tuple[int, int]] = set()
    for number, line in enumerate(text.splitlines(), start=1):
        if m := _DOT_NODE.match(line):
            try:
                nodes[int(m.group(1))] = Point.of(float(m.group(2)), float(m.group(3)))
            except ValueError as e:
                raise PointParseError(str(e), line=number) from e
        elif m := _DOT_EDGE.match(line):
            u, v = int(m.group(1)), int(m.group(2))
            edges.add((min(u, v), max(u, v)))
    if sorted(nodes) != list(range(len(nodes))):
        raise PointParseError("vertex ids must be 0..n-1 without gaps", line=1)
    return int(header.group(1)), [nodes[i] for i in range(len(nodes))], edges
