"""SVG rendering of a triangulation: points, edges, and optionally each
triangle's circumhomothet outline (dashed)."""

from __future__ import annotations

from .delaunay import Triangulation


def render_svg(T: Triangulation, show_homothets: bool = True, size: int = 800) -> str:
    pts = [(float(p.x), float(p.y)) for p in T.point_set]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    boxes = []
    if show_homothets:
        for hom in T.circumhomothets.values():
            boxes.append((float(hom.x_min), float(hom.y_min),
                          float(hom.width), float(hom.height)))
            xs.extend([float(hom.x_min), float(hom.x_max)])
            ys.extend([float(hom.y_min), float(hom.y_max)])
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    margin = 0.1 * span
    vb = (x0 - margin, y0 - margin, (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin)
    # flip y so larger y is drawn upward
    flip = vb[1] + vb[3]

    def fy(y: float) -> float:
        return flip - (y - vb[1]) + vb[1]

    stroke = span / 200.0
    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{vb[0]:.9g} {vb[1]:.9g} {vb[2]:.9g} {vb[3]:.9g}">')
    if show_homothets:
        for bx, by, bw, bh in sorted(boxes):
            out.append(
                f'<rect x="{bx:.9g}" y="{fy(by + bh):.9g}" width="{bw:.9g}" height="{bh:.9g}" '
                f'fill="none" stroke="#999999" stroke-width="{stroke / 2:.9g}" '
                f'stroke-dasharray="{stroke * 2:.9g} {stroke * 2:.9g}"/>')
    for i, j in T.edges:
        (x1e, y1e), (x2e, y2e) = pts[i], pts[j]
        out.append(
            f'<line x1="{x1e:.9g}" y1="{fy(y1e):.9g}" x2="{x2e:.9g}" y2="{fy(y2e):.9g}" '
            f'stroke="#1f4e8c" stroke-width="{stroke:.9g}"/>')
    for idx, (px, py) in enumerate(pts):
        out.append(f'<circle cx="{px:.9g}" cy="{fy(py):.9g}" r="{stroke * 2:.9g}" fill="#c0392b"/>')
        out.append(
            f'<text x="{px + stroke * 3:.9g}" y="{fy(py):.9g}" '
            f'font-size="{stroke * 6:.9g}" fill="#333333">{idx}</text>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
