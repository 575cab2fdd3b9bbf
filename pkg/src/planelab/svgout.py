"""Tiny deterministic SVG writer for rational and bent-line figures.

Coordinates are exact Fractions until the final formatting step, which
prints fixed three-decimal values, so identical scenes serialize to
identical bytes.  The y axis is flipped so figures read the usual way up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


@dataclass
class Scene:
    points: list = field(default_factory=list)    # (x, y, label)
    segments: list = field(default_factory=list)  # (x1, y1, x2, y2, label)

    def add_point(self, x, y, label=""):
        self.points.append((Fraction(x), Fraction(y), label))

    def add_segment(self, x1, y1, x2, y2, label=""):
        self.segments.append((Fraction(x1), Fraction(y1),
                              Fraction(x2), Fraction(y2), label))

    def add_polyline(self, pts, label=""):
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            self.add_segment(x1, y1, x2, y2, label if (x1, y1) == pts[0] else "")

    def bounds(self):
        xs = [p[0] for p in self.points] + [s[0] for s in self.segments] \
            + [s[2] for s in self.segments]
        ys = [p[1] for p in self.points] + [s[1] for s in self.segments] \
            + [s[3] for s in self.segments]
        if not xs:
            xs = ys = [Fraction(0), Fraction(1)]
        lo_x, hi_x = min(xs), max(xs)
        lo_y, hi_y = min(ys), max(ys)
        pad_x = (hi_x - lo_x) / 10 + Fraction(1, 2)
        pad_y = (hi_y - lo_y) / 10 + Fraction(1, 2)
        return lo_x - pad_x, lo_y - pad_y, hi_x + pad_x, hi_y + pad_y

    def to_svg(self, scale: int = 40) -> str:
        lo_x, lo_y, hi_x, hi_y = self.bounds()
        w = float(hi_x - lo_x) * scale
        h = float(hi_y - lo_y) * scale

        def cx(x):
            return float(x - lo_x) * scale

        def cy(y):
            return h - float(y - lo_y) * scale

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" '
            f'height="{_fmt(h)}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">',
            '<style>line{stroke:#333;stroke-width:1.2}circle{fill:#c22}'
            'text{font-family:monospace;font-size:11px;fill:#114}</style>',
        ]
        for x1, y1, x2, y2, label in self.segments:
            out.append(f'<line x1="{_fmt(cx(x1))}" y1="{_fmt(cy(y1))}" '
                       f'x2="{_fmt(cx(x2))}" y2="{_fmt(cy(y2))}"/>')
            if label:
                mx, my = cx((x1 + x2) / 2), cy((y1 + y2) / 2)
                out.append(f'<text x="{_fmt(mx + 3)}" y="{_fmt(my - 3)}">{label}</text>')
        for x, y, label in self.points:
            out.append(f'<circle cx="{_fmt(cx(x))}" cy="{_fmt(cy(y))}" r="2.5"/>')
            if label:
                out.append(f'<text x="{_fmt(cx(x) + 4)}" y="{_fmt(cy(y) - 4)}">{label}</text>')
        out.append("</svg>")
        return "\n".join(out) + "\n"


def draw_line_into(scene: Scene, line, x_lo, x_hi, label=""):
    """Clip an AltLine or MoultonLine to [x_lo, x_hi] and add it."""
    x_lo, x_hi = Fraction(x_lo), Fraction(x_hi)
    kind = getattr(line, "kind", None)
    if kind is not None:                       # bent-line plane
        if kind == "vertical":
            scene.add_segment(line.x0, x_lo, line.x0, x_hi, label)
        elif kind == "straight":
            scene.add_segment(x_lo, line.m * x_lo + line.b,
                              x_hi, line.m * x_hi + line.b, label)
        else:
            pts = [(x_lo, line.height_at(x_lo))]
            if x_lo < line.x0 < x_hi:
                pts.append((line.x0, Fraction(0)))
            pts.append((x_hi, line.height_at(x_hi)))
            scene.add_polyline(pts, label)
        return
    if getattr(line, "vertical", False):       # alt plane vertical
        scene.add_segment(line.b, x_lo, line.b, x_hi, label)
        return
    y_lo = line.b - line.a * x_lo
    y_hi = line.b - line.a * x_hi
    scene.add_segment(x_lo, y_lo, x_hi, y_hi, label)


def segcalc_trace_scene(trace, x_lo=-6, x_hi=6) -> Scene:
    """Render the step trace recorded by the segment constructions."""
    scene = Scene()
    for kind, obj, label in trace:
        if kind == "point":
            scene.add_point(obj.x, obj.y, label)
        else:
            draw_line_into(scene, obj, x_lo, x_hi, label)
    return scene
