"""Segment arithmetic performed as ruler constructions inside a plane.

Sum, product, negative and reciprocal of x-axis coordinates are built
literally from joins, meets and parallels, so each operation is a second,
independent route to the algebraic answer; tests compare the two.  The
constructions run in the standard frame (origin at (0,0), unit points
(1,0) and (0,1)); pass ``trace`` to record every constructed point and
line for diagram output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneracyError, DomainError
from .planes import BasePlane, Point, is_ideal


@dataclass
class AxisFrame:
    origin: Point
    x_unit: Point
    y_unit: Point


def default_frame(plane: BasePlane) -> AxisFrame:
    z, o = plane.scalar(0), plane.scalar(1)
    return AxisFrame(Point(z, z), Point(o, z), Point(z, o))


def _check_frame(plane: BasePlane, frame: AxisFrame):
    z, o = plane.scalar(0), plane.scalar(1)
    if not (frame.origin == Point(z, z) and frame.x_unit == Point(o, z)
            and frame.y_unit == Point(z, o)):
        raise DomainError("segment constructions run in the standard frame")
    if frame.origin == frame.x_unit or frame.origin == frame.y_unit:
        raise DomainError("unit points must differ from the origin")


def _rec(trace, kind, obj, label):
    if trace is not None:
        trace.append((kind, obj, label))


def _meet_proper(plane, l1, l2, step, trace=None, label=""):
    if l1 == l2:
        raise DegeneracyError(step, "coincident lines")
    m = plane.meet(l1, l2)
    if is_ideal(m):
        raise DegeneracyError(step, "parallel lines")
    _rec(trace, "point", m, label or step)
    return m


def _as_element(plane, value):
    if isinstance(value, (int, Fraction)):
        return plane.scalar(value)
    return value


def geometric_add(plane: BasePlane, frame: AxisFrame, a, b, aux_height=1,
                  trace=None):
    """a + b on the x axis via an auxiliary parallel g at the given height."""
    _check_frame(plane, frame)
    h = _as_element(plane, aux_height)
    from .numbersystems import is_zero
    if is_zero(h):
        raise DegeneracyError("aux parallel", "height zero puts g on the x axis")
    z = plane.scalar(0)
    x_axis = plane.join(frame.origin, frame.x_unit)
    g = plane.horizontal(h)
    _rec(trace, "line", g, "g")
    p = _meet_proper(plane, g, plane.join(frame.origin, frame.y_unit),
                     "p = g x y-axis", trace, "P")
    a_pt = Point(a, z)
    b_pt = Point(b, z)
    _rec(trace, "point", a_pt, "a")
    _rec(trace, "point", b_pt, "b")
    vert_b = plane.vertical(b)
    _rec(trace, "line", vert_b, "vertical through b")
    q = _meet_proper(plane, vert_b, g, "q = vertical(b) x g", trace, "Q")
    if p == a_pt:
        raise DegeneracyError("transport line", "aux height hits the a point")
    transport = plane.join(p, a_pt)
    _rec(trace, "line", transport, "Pa")
    carried = plane.parallel_through(transport, q)
    _rec(trace, "line", carried, "Q-parallel")
    c = _meet_proper(plane, carried, x_axis, "c = parallel x x-axis", trace, "c")
    return c.x


def geometric_neg(plane: BasePlane, frame: AxisFrame, a, aux_height=1,
                  trace=None):
    """-a: carry the direction of (0,h)->(a,0) back through the origin."""
    _check_frame(plane, frame)
    h = _as_element(plane, aux_height)
    from .numbersystems import is_zero
    if is_zero(h):
        raise DegeneracyError("aux parallel", "height zero puts g on the x axis")
    z = plane.scalar(0)
    x_axis = plane.join(frame.origin, frame.x_unit)
    g = plane.horizontal(h)
    p = Point(z, h)
    a_pt = Point(a, z)
    if p == a_pt:
        raise DegeneracyError("direction line", "degenerate direction")
    direction = plane.join(p, a_pt)
    _rec(trace, "line", direction, "Pa")
    through_o = plane.parallel_through(direction, frame.origin)
    q = _meet_proper(plane, through_o, g, "q = o-parallel x g", trace, "Q")
    drop = plane.vertical(q.x)
    c = _meet_proper(plane, drop, x_axis, "drop to x-axis", trace, "-a")
    return c.x


def _transfer_to_y(plane, frame, value, trace=None):
    """The y-axis copy of an x coordinate: unit joins stay parallel."""
    z = plane.scalar(0)
    unit_line = plane.join(frame.y_unit, frame.x_unit)
    x_pt = Point(value, z)
    if x_pt == frame.origin:
        return frame.origin
    par = plane.parallel_through(unit_line, x_pt)
    y_axis = plane.join(frame.origin, frame.y_unit)
    return _meet_proper(plane, par, y_axis, "axis transfer", trace, "y-copy")


def geometric_mul(plane: BasePlane, frame: AxisFrame, a, b, trace=None):
    """a * b: parallel to (y-unit -> x_a) through y_b cuts the x axis at the
    product; the first argument is the left factor."""
    _check_frame(plane, frame)
    z = plane.scalar(0)
    x_axis = plane.join(frame.origin, frame.x_unit)
    a_pt = Point(a, z)
    y_b = _transfer_to_y(plane, frame, b, trace)
    if a_pt == frame.origin or y_b == frame.origin:
        # a factor is zero: the product construction collapses to the origin
        return z
    mul_line = plane.join(frame.y_unit, a_pt)
    _rec(trace, "line", mul_line, "y_e x_a")
    carried = plane.parallel_through(mul_line, y_b)
    _rec(trace, "line", carried, "through y_b")
    c = _meet_proper(plane, carried, x_axis, "product point", trace, "ab")
    return c.x


def geometric_recip(plane: BasePlane, frame: AxisFrame, a, trace=None):
    """a^-1: parallel to (x_a -> y-unit) through the x unit, then transfer."""
    _check_frame(plane, frame)
    from .numbersystems import is_zero
    if is_zero(a):
        raise DomainError("reciprocal of zero")
    z = plane.scalar(0)
    x_axis = plane.join(frame.origin, frame.x_unit)
    y_axis = plane.join(frame.origin, frame.y_unit)
    a_pt = Point(a, z)
    l1 = plane.join(a_pt, frame.y_unit)
    _rec(trace, "line", l1, "x_a y_e")
    l2 = plane.parallel_through(l1, frame.x_unit)
    y_inv = _meet_proper(plane, l2, y_axis, "y reciprocal", trace, "y_{1/a}")
    unit_line = plane.join(frame.y_unit, frame.x_unit)
    back = plane.parallel_through(unit_line, y_inv)
    c = _meet_proper(plane, back, x_axis, "x reciprocal", trace, "1/a")
    return c.x
