"""Coordinate affine planes over the number systems.

Three line representations share one plane API (join, meet,
parallel_through, incidence, order predicates):

* AltPlane     lines are x - b = 0 or y + a*x - b = 0, with every product
               bracketed so the formulas are valid over a merely
               alternative system (this is the plane used for octonions);
* SkewPlane    lines are a*x + b*y + c = 0 with coefficients acting on the
               left, canonicalized by the inverse of the first nonzero
               coefficient; valid over any associative system;
* MoultonPlane rational coordinates where negative-slope lines bend at the
               x axis and continue above it at half slope.

meet returns either a proper Point or an IdealPoint naming the shared
parallel class; ideal points stand in for homogeneous coordinates, which
are never used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .errors import CapabilityError, DegeneracyError, DomainError
from .numbersystems import SystemDescriptor, is_zero, make_system
from .verdicts import Verdict, degenerate, fails, holds


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    __hash__ = None

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"

    def __str__(self):
        return f"({self.x}, {self.y})"


class IdealPoint:
    """A parallel class: the 'point at infinity' shared by parallel lines."""

    __slots__ = ("kind", "data")

    def __init__(self, kind: str, data=None):
        self.kind = kind
        self.data = data

    def __eq__(self, other):
        if not isinstance(other, IdealPoint):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.data is None or other.data is None:
            return self.data is None and other.data is None
        if isinstance(self.data, tuple):
            return (len(self.data) == len(other.data)
                    and all(a == b for a, b in zip(self.data, other.data)))
        return self.data == other.data

    __hash__ = None

    def __repr__(self):
        return f"IdealPoint({self.kind!r}, {self.data!r})"

    def __str__(self):
        return f"ideal[{self.kind}]" if self.data is None else f"ideal[{self.kind}: {self.data}]"


def is_ideal(p) -> bool:
    return isinstance(p, IdealPoint)


# --- line flavors ------------------------------------------------------------

class AltLine:
    """x - b = 0 (vertical) or y + a*x - b = 0 (sloped, a may be zero)."""

    __slots__ = ("a", "b", "vertical")

    def __init__(self, a, b, vertical=False):
        self.a = a
        self.b = b
        self.vertical = vertical

    @classmethod
    def make_vertical(cls, b):
        return cls(None, b, vertical=True)

    @classmethod
    def make_sloped(cls, a, b):
        return cls(a, b, vertical=False)

    def __eq__(self, other):
        if not isinstance(other, AltLine):
            return NotImplemented
        if self.vertical != other.vertical:
            return False
        if self.vertical:
            return self.b == other.b
        return self.a == other.a and self.b == other.b

    __hash__ = None

    def __repr__(self):
        if self.vertical:
            return f"AltLine(x = {self.b})"
        return f"AltLine(y + ({self.a})x = {self.b})"


class SkewLine:
    """a*x + b*y + c = 0, stored in left-normalized canonical form."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        self.a = a
        self.b = b
        self.c = c

    def __eq__(self, other):
        if not isinstance(other, SkewLine):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.c == other.c

    __hash__ = None

    def __repr__(self):
        return f"SkewLine({self.a!r}, {self.b!r}, {self.c!r})"


class MoultonLine:
    """kind 'vertical' (x = c), 'straight' (y = m x + b, m >= 0),
    or 'bent' (m < 0): y = m (x - x0) below the axis, half slope above."""

    __slots__ = ("kind", "m", "b", "x0")

    def __init__(self, kind, m=None, b=None, x0=None):
        self.kind = kind
        self.m = m
        self.b = b
        self.x0 = x0
        if kind == "bent" and not (m < 0):
            raise DomainError("bent line needs negative slope")
        if kind == "straight" and not (m >= 0):
            raise DomainError("straight line needs slope >= 0")

    def __eq__(self, other):
        if not isinstance(other, MoultonLine):
            return NotImplemented
        return (self.kind, self.m, self.b, self.x0) == (other.kind, other.m, other.b, other.x0)

    __hash__ = None

    def height_at(self, x: Fraction) -> Fraction:
        if self.kind == "vertical":
            raise DomainError("vertical line is not a graph")
        if self.kind == "straight":
            return self.m * x + self.b
        if x >= self.x0:
            return self.m * (x - self.x0)
        return self.m / 2 * (x - self.x0)

    def __repr__(self):
        if self.kind == "vertical":
            return f"MoultonLine(x = {self.x0})"
        if self.kind == "straight":
            return f"MoultonLine(y = {self.m} x + {self.b})"
        return f"MoultonLine(bent m={self.m}, crossing x0={self.x0})"


# --- plane API ---------------------------------------------------------------

class BasePlane:
    system: SystemDescriptor

    # subclasses: join, meet, parallel_through, on_line, line_eval,
    # parallel_class

    def point(self, x, y) -> Point:
        return Point(x, y)

    def scalar(self, fr) -> Any:
        return self.system.from_fraction(Fraction(fr))

    def combo(self, p: Point, q: Point, lam: Fraction) -> Point:
        """p + lam (q - p) for rational lam, which is central in every system."""
        lam = self.scalar(lam)
        return Point(p.x + lam * (q.x - p.x), p.y + lam * (q.y - p.y))

    def collinear(self, p1, p2, p3) -> bool:
        if p1 == p2 or p1 == p3 or p2 == p3:
            raise DomainError("collinear needs pairwise distinct points")
        return self.on_line(p3, self.join(p1, p2))

    def concurrent(self, l1, l2, l3) -> bool:
        if l1 == l2 or l1 == l3 or l2 == l3:
            raise DomainError("concurrent needs pairwise distinct lines")
        return self.meet(l1, l2) == self.meet(l1, l3)

    def _require_order(self):
        if not self.system.ordered:
            raise CapabilityError(f"{self.system.name} is not ordered")

    def between(self, p1, p2, p3) -> bool:
        """p2 strictly between p1 and p3 on their common line."""
        self._require_order()
        if p1 == p2 or p1 == p3 or p2 == p3:
            raise DomainError("between needs distinct points")
        if not self.collinear(p1, p2, p3):
            raise DomainError("between needs collinear points")
        sgn = self.system.sign
        if p1.x == p2.x and p2.x == p3.x:
            d1, d2 = sgn(p2.y - p1.y), sgn(p3.y - p2.y)
        else:
            d1, d2 = sgn(p2.x - p1.x), sgn(p3.x - p2.x)
        return d1 == d2 and d1 != 0

    def side_of(self, line, p) -> int:
        self._require_order()
        return self.system.sign(self.line_eval(line, p))

    def segment_meets(self, line, p, q):
        """Interior meeting point of line with segment pq, or None."""
        seg = self.join(p, q)
        if seg == line:
            raise DegeneracyError("segment on line")
        m = self.meet(line, seg)
        if is_ideal(m) or m == p or m == q:
            return None
        return m if self.between(p, m, q) else None

    def pasch_check(self, a, b, c, line) -> Verdict:
        """If the line enters triangle abc through ab, it leaves through
        exactly one of ac, bc."""
        try:
            for v in (a, b, c):
                if self.on_line(v, line):
                    return degenerate("pasch precondition", "line hits a vertex")
            if self.collinear(a, b, c):
                return degenerate("pasch precondition", "triangle is degenerate")
        except DomainError as exc:
            return degenerate("pasch precondition", str(exc))
        try:
            entry = self.segment_meets(line, a, b)
            if entry is None:
                return holds("vacuous: line misses segment ab")
            hits = [s for s, (p, q) in (("ac", (a, c)), ("bc", (b, c)))
                    if self.segment_meets(line, p, q) is not None]
        except DegeneracyError as exc:
            return degenerate("pasch", str(exc))
        if len(hits) == 1:
            return holds(f"enters ab, leaves {hits[0]}")
        return fails({"entry": str(entry), "exits": hits},
                     note="line must cross exactly one of ac, bc")


class AltPlane(BasePlane):
    """Plane whose formulas only use the weak associative laws."""

    def __init__(self, system: SystemDescriptor):
        self.system = system

    def vertical(self, b) -> AltLine:
        return AltLine.make_vertical(b)

    def sloped(self, a, b) -> AltLine:
        return AltLine.make_sloped(a, b)

    def x_axis(self) -> AltLine:
        z = self.system.zero
        return self.sloped(z, z)

    def y_axis(self) -> AltLine:
        return self.vertical(self.system.zero)

    def horizontal(self, h) -> AltLine:
        return self.sloped(self.system.zero, h)

    def join(self, p1: Point, p2: Point) -> AltLine:
        if p1 == p2:
            raise DomainError("join of identical points")
        if p1.x == p2.x:
            return self.vertical(p1.x)
        slope = (p1.y - p2.y) * self.system.inv(p2.x - p1.x)
        return self.sloped(slope, p1.y + slope * p1.x)

    def meet(self, l1: AltLine, l2: AltLine):
        if l1 == l2:
            raise DomainError("meet of identical lines")
        if l1.vertical and l2.vertical:
            return IdealPoint("vertical")
        if l1.vertical or l2.vertical:
            v, s = (l1, l2) if l1.vertical else (l2, l1)
            return Point(v.b, s.b - s.a * v.b)
        if l1.a == l2.a:
            return IdealPoint("slope", l1.a)
        x = self.system.inv(l1.a - l2.a) * (l1.b - l2.b)
        y = l1.b - l1.a * x
        assert is_zero(y + l2.a * x - l2.b), "meet must lie on the second line"
        return Point(x, y)

    def parallel_through(self, line: AltLine, p: Point) -> AltLine:
        if line.vertical:
            return self.vertical(p.x)
        return self.sloped(line.a, p.y + line.a * p.x)

    def on_line(self, p: Point, line: AltLine) -> bool:
        return is_zero(self.line_eval(line, p))

    def line_eval(self, line: AltLine, p: Point):
        if line.vertical:
            return p.x - line.b
        return p.y + line.a * p.x - line.b

    def parallel_class(self, line: AltLine) -> IdealPoint:
        if line.vertical:
            return IdealPoint("vertical")
        return IdealPoint("slope", line.a)

    def collinear(self, p1, p2, p3) -> bool:
        if p1 == p2 or p1 == p3 or p2 == p3:
            raise DomainError("collinear needs pairwise distinct points")
        e12 = p1.x == p2.x
        e13 = p1.x == p3.x
        if e12 or e13:
            return e12 and e13
        inv = self.system.inv
        return (p1.y - p3.y) * inv(p3.x - p1.x) == (p1.y - p2.y) * inv(p2.x - p1.x)

    def concurrent(self, l1, l2, l3) -> bool:
        if l1 == l2 or l1 == l3 or l2 == l3:
            raise DomainError("concurrent needs pairwise distinct lines")
        if not (l1.vertical or l2.vertical or l3.vertical):
            if l1.a == l2.a or l1.a == l3.a:
                return self.meet(l1, l2) == self.meet(l1, l3)
            inv = self.system.inv
            return (inv(l2.a - l1.a) * (l2.b - l1.b)
                    == inv(l3.a - l1.a) * (l3.b - l1.b))
        return self.meet(l1, l2) == self.meet(l1, l3)


class SkewPlane(BasePlane):
    """Plane with lines a*x + b*y + c = 0 over an associative system."""

    def __init__(self, system: SystemDescriptor):
        if not system.associative:
            raise CapabilityError("skew-form lines need an associative system")
        self.system = system

    def line(self, a, b, c) -> SkewLine:
        one = self.system.one
        zero = self.system.zero
        if not is_zero(a):
            ai = self.system.inv(a)
            return SkewLine(one, ai * b, ai * c)
        if not is_zero(b):
            bi = self.system.inv(b)
            return SkewLine(zero, one, bi * c)
        raise DomainError("a line needs a nonzero x or y coefficient")

    def x_axis(self) -> SkewLine:
        return self.line(self.system.zero, self.system.one, self.system.zero)

    def y_axis(self) -> SkewLine:
        return self.line(self.system.one, self.system.zero, self.system.zero)

    def horizontal(self, h) -> SkewLine:
        return self.line(self.system.zero, self.system.one, -h)

    def vertical(self, v) -> SkewLine:
        return self.line(self.system.one, self.system.zero, -v)

    def join(self, p1: Point, p2: Point) -> SkewLine:
        if p1 == p2:
            raise DomainError("join of identical points")
        if p1.x == p2.x:
            return self.line(self.system.one, self.system.zero, -p1.x)
        a = -((p1.y - p2.y) * self.system.inv(p1.x - p2.x))
        c = -(a * p1.x + p1.y)
        return self.line(a, self.system.one, c)

    def meet(self, l1: SkewLine, l2: SkewLine):
        if l1 == l2:
            raise DomainError("meet of identical lines")
        if l1.a == l2.a and l1.b == l2.b:
            return IdealPoint("dir", (l1.a, l1.b))
        inv = self.system.inv
        a1_nz, a2_nz = not is_zero(l1.a), not is_zero(l2.a)
        if a1_nz and a2_nz:
            # canonical form has a = 1, so a^-1 b = b and a^-1 c = c
            d = l1.b - l2.b
            y = inv(d) * (l2.c - l1.c)
            x = -l1.c - l1.b * y
            return Point(x, y)
        if a1_nz or a2_nz:
            lv, lh = (l1, l2) if a1_nz else (l2, l1)
            y = -inv(lh.b) * lh.c
            x = -lv.c - lv.b * y
            return Point(x, y)
        return IdealPoint("dir", (l1.a, l1.b))

    def parallel_through(self, line: SkewLine, p: Point) -> SkewLine:
        c = -(line.a * p.x + line.b * p.y)
        return SkewLine(line.a, line.b, c)

    def on_line(self, p: Point, line: SkewLine) -> bool:
        return is_zero(self.line_eval(line, p))

    def line_eval(self, line: SkewLine, p: Point):
        return line.a * p.x + line.b * p.y + line.c

    def parallel_class(self, line: SkewLine) -> IdealPoint:
        return IdealPoint("dir", (line.a, line.b))


class MoultonPlane(BasePlane):
    """The bent-line plane over exact rational coordinates."""

    def __init__(self):
        self.system = make_system("rational")

    def vertical(self, c) -> MoultonLine:
        return MoultonLine("vertical", x0=Fraction(c))

    def straight(self, m, b) -> MoultonLine:
        return MoultonLine("straight", m=Fraction(m), b=Fraction(b))

    def bent(self, m, x0) -> MoultonLine:
        return MoultonLine("bent", m=Fraction(m), x0=Fraction(x0))

    def x_axis(self) -> MoultonLine:
        return self.straight(0, 0)

    def y_axis(self) -> MoultonLine:
        return self.vertical(0)

    def horizontal(self, h) -> MoultonLine:
        return self.straight(0, h)

    def join(self, p1: Point, p2: Point) -> MoultonLine:
        if p1 == p2:
            raise DomainError("join of identical points")
        if p1.x == p2.x:
            return self.vertical(p1.x)
        ms = (p2.y - p1.y) / (p2.x - p1.x)
        if ms >= 0:
            return self.straight(ms, p1.y - ms * p1.x)
        if p1.y > 0 and p2.y > 0:
            m = 2 * ms
            return self.bent(m, p1.x - 2 * p1.y / m)
        if p1.y <= 0 and p2.y <= 0:
            return self.bent(ms, p1.x - p1.y / ms)
        hi, lo = (p1, p2) if p1.y > 0 else (p2, p1)
        m = (2 * hi.y - lo.y) / (hi.x - lo.x)
        return self.bent(m, lo.x - lo.y / m)

    def _branches(self, line: MoultonLine):
        """(slope, intercept, validity) pieces of a non-vertical line; the
        validity predicate is on x."""
        if line.kind == "straight":
            return [(line.m, line.b, lambda x: True)]
        m, x0 = line.m, line.x0
        return [
            (m, -m * x0, lambda x, x0=x0: x >= x0),
            (m / 2, -m / 2 * x0, lambda x, x0=x0: x <= x0),
        ]

    def meet(self, l1: MoultonLine, l2: MoultonLine):
        if l1 == l2:
            raise DomainError("meet of identical lines")
        if l1.kind == "vertical" and l2.kind == "vertical":
            return IdealPoint("vertical")
        if l1.kind == "vertical" or l2.kind == "vertical":
            v, g = (l1, l2) if l1.kind == "vertical" else (l2, l1)
            return Point(v.x0, g.height_at(v.x0))
        if l1.m == l2.m and l1.kind == l2.kind:
            return IdealPoint("slope", l1.m)
        pts = []
        for m1, b1, ok1 in self._branches(l1):
            for m2, b2, ok2 in self._branches(l2):
                if m1 == m2:
                    continue
                x = (b2 - b1) / (m1 - m2)
                if ok1(x) and ok2(x):
                    p = Point(x, m1 * x + b1)
                    if not any(p == q for q in pts):
                        pts.append(p)
        if len(pts) != 1:
            raise DegeneracyError("moulton meet", f"{len(pts)} candidate points")
        return pts[0]

    def parallel_through(self, line: MoultonLine, p: Point) -> MoultonLine:
        if line.kind == "vertical":
            return self.vertical(p.x)
        if line.kind == "straight":
            return self.straight(line.m, p.y - line.m * p.x)
        m = line.m
        if p.y > 0:
            return self.bent(m, p.x - 2 * p.y / m)
        return self.bent(m, p.x - p.y / m)

    def on_line(self, p: Point, line: MoultonLine) -> bool:
        if line.kind == "vertical":
            return p.x == line.x0
        return p.y == line.height_at(p.x)

    def line_eval(self, line: MoultonLine, p: Point):
        if line.kind == "vertical":
            return p.x - line.x0
        return p.y - line.height_at(p.x)

    def parallel_class(self, line: MoultonLine) -> IdealPoint:
        if line.kind == "vertical":
            return IdealPoint("vertical")
        return IdealPoint("slope", line.m)


def plane_for(system_name: str, flavor: str = "auto",
              t_window=None, s_window=None) -> BasePlane:
    """Build the default plane for a system name ('moulton' is its own)."""
    if system_name == "moulton":
        return MoultonPlane()
    kwargs = {}
    if t_window is not None:
        kwargs["t_window"] = t_window
    if s_window is not None:
        kwargs["s_window"] = s_window
    system = make_system(system_name, **kwargs)
    if flavor == "auto":
        flavor = "alt"
    if flavor == "alt":
        return AltPlane(system)
    if flavor == "skew":
        return SkewPlane(system)
    raise DomainError(f"unknown plane flavor {flavor!r}")
