"""Minimal SVG drawing of an embedding: shaded faces, edges, labels, optional route."""

from __future__ import annotations

from xml.sax.saxutils import escape

from ..tutte import Embedding

SIZE = 480
MARGIN = 30


def render_svg(e: Embedding, route: list[str] | None = None, title: str | None = None) -> str:
    xs, ys = e.coords[:, 0], e.coords[:, 1]
    span = max(float(xs.max() - xs.min()), float(ys.max() - ys.min()), 1e-12)
    k = (SIZE - 2 * MARGIN) / span
    x0, y1 = float(xs.min()), float(ys.max())

    def px(v):
        x, y = e[v]
        return MARGIN + (x - x0) * k, MARGIN + (y1 - y) * k

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append('<rect width="100%" height="100%" fill="white"/>')
    if e.faces is not None:
        outer = e.faces.outer_face_index
        for i, face in enumerate(e.faces.faces):
            if i == outer:
                continue
            pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(px, face))
            shade = "#dbe8f5" if i % 2 else "#eef3f9"
            out.append(f'<polygon points="{pts}" fill="{shade}" stroke="none"/>')
    for u, v in e.graph.edges:
        (ax, ay), (bx, by) = px(u), px(v)
        out.append(f'<line x1="{ax:.3f}" y1="{ay:.3f}" x2="{bx:.3f}" y2="{by:.3f}" '
                   'stroke="#333" stroke-width="1.5"/>')
    if route and len(route) > 1:
        pts = " ".join(f"{x:.3f},{y:.3f}" for x, y in map(px, route))
        out.append(f'<polyline points="{pts}" fill="none" stroke="#d62728" stroke-width="4" '
                   'stroke-opacity="0.8"/>')
    for v in e.graph.vertex_ids:
        x, y = px(v)
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="5" fill="#1f77b4"/>')
        out.append(f'<text x="{x + 7:.3f}" y="{y - 7:.3f}" font-family="sans-serif" '
                   f'font-size="13">{escape(v)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
