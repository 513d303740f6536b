"""Figure-style rendering of plane Apery levels.

The SVG output is fully deterministic: a fixed integer grid, one glyph
per level (digits then lowercase letters), filled dots for the ideal
elements, and axis ticks at the coordinates of the projection elements.
"""

from __future__ import annotations

from .lattice import iter_box
from .levels import LevelPartition

_CELL = 22
_MARGIN = 34

LEVEL_GLYPHS = "123456789abcdefghijklmnopqrstuvwxyz"


def level_glyph(i: int) -> str:
    if 1 <= i <= len(LEVEL_GLYPHS):
        return LEVEL_GLYPHS[i - 1]
    return "*"


def _tick_values(S, axis: int, upto: int) -> list[int]:
    from .semigroup import projection

    if S.dim == 2:
        proj = projection(S, [axis])
        return [n for n in range(upto + 1) if proj.contains((n,))]
    return list(range(upto + 1))


def render_svg(part: LevelPartition) -> str:
    """Deterministic SVG of a two-dimensional level partition."""
    box = part.box
    if len(box) != 2:
        raise ValueError("plots are only available for d = 2")
    A = part.complement
    S = A.semigroup
    E = A.ideal
    w, h = box
    width = 2 * _MARGIN + w * _CELL
    height = 2 * _MARGIN + h * _CELL

    def px(x: int) -> int:
        return _MARGIN + x * _CELL

    def py(y: int) -> int:
        return height - _MARGIN - y * _CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(w)}" y2="{py(0)}" stroke="black"/>',
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(h)}" stroke="black"/>',
    ]
    for t in _tick_values(S, 0, w):
        out.append(
            f'<text x="{px(t)}" y="{py(0) + 16}" font-size="9" text-anchor="middle" '
            f'font-family="monospace">{t}</text>'
        )
    for t in _tick_values(S, 1, h):
        out.append(
            f'<text x="{px(0) - 12}" y="{py(t) + 3}" font-size="9" text-anchor="middle" '
            f'font-family="monospace">{t}</text>'
        )
    for p in iter_box(box):
        if not S.contains(p):
            continue
        if E is not None and E.contains(p):
            out.append(f'<circle cx="{px(p[0])}" cy="{py(p[1])}" r="3" fill="black"/>')
    for i, level in enumerate(part.levels, start=1):
        g = level_glyph(i)
        for p in sorted(level):
            out.append(
                f'<text x="{px(p[0])}" y="{py(p[1]) + 4}" font-size="11" text-anchor="middle" '
                f'font-family="monospace">{g}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(part: LevelPartition) -> str:
    """Terminal rendering: ideal elements '#', level elements their glyph."""
    box = part.box
    if len(box) != 2:
        raise ValueError("plots are only available for d = 2")
    A = part.complement
    S, E = A.semigroup, A.ideal
    rows = []
    for y in range(box[1], -1, -1):
        row = []
        for x in range(box[0] + 1):
            p = (x, y)
            i = part.level_of(p)
            if i is not None:
                row.append(level_glyph(i))
            elif S.contains(p) and (E is None or E.contains(p)):
                row.append("#")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"
