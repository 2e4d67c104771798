"""
Static pictures of affine diagrams: the cylinder cut open along l into a rectangle whose dashed left and right
edges are glued. Arcs are drawn in the universal cover and clipped to one period.

>>> print(to_text(dg.twist(3)))
D(3,3) rank 1
  top    1 2 3
  bottom 1 2 3
  B3 -> T1  winding +1
  B1 -> T2
  B2 -> T3
"""
from __future__ import annotations

from xml.sax.saxutils import escape

from . import diagrams as dg
from .diagrams import AffineDiagram

WIDTH = 60  # horizontal spacing per marked point
HEIGHT = 160
MARGIN = 24


def to_text(d: AffineDiagram) -> str:
    lines = [f"D({d.bottom},{d.top}) rank {dg.rank(d)}"]
    lines.append("  top    " + " ".join(str(i) for i in range(1, d.top + 1)))
    lines.append("  bottom " + " ".join(str(j) for j in range(1, d.bottom + 1)))
    for arc in d.arcs():
        if arc.is_through:
            tag = f"  winding {arc.w:+d}" if arc.w else ""
            lines.append(f"  {arc.b[0]}{arc.b[1]} -> {arc.a[0]}{arc.a[1]}{tag}")
        else:
            tag = "  through the cut" if arc.w else ""
            lines.append(f"  {arc.a[0]}{arc.a[1]} -- {arc.b[0]}{arc.b[1]}{tag}")
    if d.circles:
        lines.append(f"  {d.circles} non-contractible circle(s)")
    return "\n".join(lines)


def _xpos(i: int, count: int, width: float) -> float:
    return width * (2 * i + 1) / (2 * count)


def to_svg(d: AffineDiagram, title: str | None = None) -> str:
    """Deterministic SVG; same input, byte-identical output."""
    n = max(d.top, d.bottom, 1)
    w = WIDTH * n
    h = HEIGHT
    y_top, y_bot = MARGIN, MARGIN + h
    paths = []
    reps = range(d.top + d.bottom)
    for p in reps:
        r = d.partner[p]
        if p > r and (p < d.top) == (r < d.top):
            continue
        if p < d.top and r >= d.top:
            continue
        # p is the bottom endpoint of a through arc, or the lower index of a same-side arc
        off = d.offset[p]
        if p >= d.top and r < d.top:
            x0 = _xpos(p - d.top, d.bottom, w)
            x1 = _xpos(r, d.top, w) + off * w
            for s in range(-abs(off) - 1, abs(off) + 2):
                paths.append(f'M {x0 + s * w:.2f} {y_bot} C {x0 + s * w:.2f} {(y_top + y_bot) / 2:.2f} '
                             f'{x1 + s * w:.2f} {(y_top + y_bot) / 2:.2f} {x1 + s * w:.2f} {y_top}')
        else:
            top = p < d.top
            count = d.top if top else d.bottom
            base = y_top if top else y_bot
            i = p if top else p - d.top
            j = r if top else r - d.top
            xa, xb = _xpos(i, count, w), _xpos(j, count, w)
            if d.offset[r] == 1:  # wraps through the cut: run from the higher point to the lower one, one period on
                xa, xb = xb, xa + w
            depth = min(h / 2 - 8, 18 + 0.35 * abs(xb - xa))
            ctrl = base + depth if top else base - depth
            for s in (-1, 0, 1):
                paths.append(f'M {xa + s * w:.2f} {base} C {xa + s * w:.2f} {ctrl:.2f} {xb + s * w:.2f} {ctrl:.2f} '
                             f'{xb + s * w:.2f} {base}')
    for c in range(d.circles):
        y = y_top + h * (c + 1) / (d.circles + 1)
        paths.append(f"M 0 {y:.2f} L {w} {y:.2f}")
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2 * MARGIN}" height="{h + 2 * MARGIN + 16}" '
           f'viewBox="{-MARGIN} 0 {w + 2 * MARGIN} {h + 2 * MARGIN + 16}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<defs><clipPath id="cyl"><rect x="0" y="{y_top - 2}" width="{w}" height="{h + 4}"/></clipPath></defs>')
    out.append(f'<line x1="0" y1="{y_top}" x2="{w}" y2="{y_top}" stroke="black" stroke-dasharray="1 3"/>')
    out.append(f'<line x1="0" y1="{y_bot}" x2="{w}" y2="{y_bot}" stroke="black" stroke-dasharray="1 3"/>')
    out.append(f'<line x1="0" y1="{y_top}" x2="0" y2="{y_bot}" stroke="black" stroke-dasharray="6 4"/>')
    out.append(f'<line x1="{w}" y1="{y_top}" x2="{w}" y2="{y_bot}" stroke="black" stroke-dasharray="6 4"/>')
    out.append('<g clip-path="url(#cyl)" fill="none" stroke="black" stroke-width="2">')
    out.extend(f'<path d="{p}"/>' for p in paths)
    out.append("</g>")
    for i in range(d.top):
        x = _xpos(i, d.top, w)
        out.append(f'<circle cx="{x:.2f}" cy="{y_top}" r="3.5"/>')
        out.append(f'<text x="{x:.2f}" y="{y_top - 8}" font-size="11" text-anchor="middle">{i + 1}</text>')
    for j in range(d.bottom):
        x = _xpos(j, d.bottom, w)
        out.append(f'<circle cx="{x:.2f}" cy="{y_bot}" r="3.5"/>')
        out.append(f'<text x="{x:.2f}" y="{y_bot + 18}" font-size="11" text-anchor="middle">{j + 1}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
