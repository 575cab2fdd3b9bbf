"""Harmonic quadruples: the complete-quadrilateral construction, cross
ratio and fractional-linear maps over commutative systems, and the
iterated scale that plants infinitely many points on a segment.

The fourth-harmonic construction works in any plane of this package; its
independence from the auxiliary elements is the geometric content of the
two-incidence Desargues property and is verified by tests rather than
assumed.  Cross ratio and the map determined by three point pairs need
commutativity and are gated on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import CapabilityError, DegeneracyError, DomainError
from .numbersystems import SystemDescriptor, is_zero
from .planes import BasePlane, Point, is_ideal


class _Infinity:
    """Projective infinity marker for cross-ratio and map coordinates."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"


INF = _Infinity()


def _div(a, b):
    if isinstance(b, Fraction):
        if b == 0:
            raise DomainError("division by zero")
        return a / b
    if is_zero(b):
        raise DomainError("division by zero")
    return a * b.inv()


@dataclass
class HarmonicAux:
    """Auxiliary line s through C and center O used by the quadrilateral."""

    s: object
    o: Point


def _meet_proper(plane, l1, l2, step):
    if l1 == l2:
        raise DegeneracyError(step, "coincident lines")
    m = plane.meet(l1, l2)
    if is_ideal(m):
        raise DegeneracyError(step, "parallel lines")
    return m


def _join(plane, p, q, step):
    if p == q:
        raise DegeneracyError(step, "coincident points")
    return plane.join(p, q)


def fourth_harmonic(plane: BasePlane, a: Point, b: Point, c: Point,
                    aux: HarmonicAux):
    """Fourth harmonic point of (a, b; c) by the complete quadrilateral.

    The two quadrilateral vertices are cut out of aux.s by rays from aux.o,
    the diagonal point is crossed back onto line ab; the result may be an
    ideal point (c the midpoint case).  Degeneracies name their step.
    """
    base = _join(plane, a, b, "base line ab")
    if not plane.on_line(c, base):
        raise DomainError("c must lie on line ab")
    o = aux.o
    if plane.on_line(o, base):
        raise DegeneracyError("aux center", "o lies on ab")
    if plane.on_line(o, aux.s):
        raise DegeneracyError("aux center", "o lies on s")
    if not plane.on_line(c, aux.s):
        raise DomainError("aux line s must pass through c")
    p = _meet_proper(plane, _join(plane, o, a, "ray oa"), aux.s, "p = oa x s")
    q = _meet_proper(plane, _join(plane, o, b, "ray ob"), aux.s, "q = ob x s")
    m = _meet_proper(plane, _join(plane, a, q, "side aq"),
                     _join(plane, b, p, "side bp"), "m = aq x bp")
    ray = _join(plane, o, m, "ray om")
    if ray == base:
        raise DegeneracyError("d = om x ab", "om equals ab")
    d = plane.meet(ray, base)
    for named in (a, b, c):
        if not is_ideal(d) and d == named:
            raise DegeneracyError("d = om x ab", "fourth point collides with input")
    return d


def canonical_aux(plane: BasePlane, a: Point, b: Point, c: Point) -> HarmonicAux:
    """Deterministic generic aux: vertical through c (or horizontal when ab
    is that vertical), center near c, nudged until the construction runs."""
    base = plane.join(a, b)
    s = plane.vertical(c.x)
    if s == base:
        s = plane.horizontal(c.y)
    one = plane.scalar(1)
    o = Point(c.x + one, c.y + one)
    for step in range(25):
        aux = HarmonicAux(s, o)
        try:
            fourth_harmonic(plane, a, b, c, aux)
            return aux
        except DegeneracyError:
            o = Point(o.x + one, o.y)
    raise DegeneracyError("canonical aux", "no generic center found")


def harmonic_check(plane: BasePlane, a: Point, b: Point, c: Point, d) -> bool:
    """Is (a, b; c, d) harmonic?  Cross ratio -1 over commutative systems,
    construction replay with the canonical aux otherwise."""
    pts = [a, b, c] + ([] if is_ideal(d) else [d])
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise DomainError("harmonic_check needs distinct points")
    base = plane.join(a, b)
    if is_ideal(d):
        if d != plane.parallel_class(base):
            raise DomainError("ideal d is not on line ab")
    elif not plane.on_line(d, base):
        raise DomainError("d is not on line ab")
    if not plane.on_line(c, base):
        raise DomainError("c is not on line ab")
    if plane.system.commutative:
        coords = _line_coordinates(plane, base, [a, b, c], d)
        return cross_ratio(*coords) == -plane.scalar(1)
    replay = fourth_harmonic(plane, a, b, c, canonical_aux(plane, a, b, c))
    return replay == d


def _line_coordinates(plane, line, proper_pts, maybe_ideal):
    use_y = getattr(line, "vertical", False) or getattr(line, "kind", "") == "vertical"
    coords = [(p.y if use_y else p.x) for p in proper_pts]
    coords.append(INF if is_ideal(maybe_ideal)
                  else (maybe_ideal.y if use_y else maybe_ideal.x))
    return coords


def cross_ratio(x1, x2, x3, x4):
    """(x3-x1)/(x3-x2) : (x4-x1)/(x4-x2) with the usual infinity rules."""
    vals = [x1, x2, x3, x4]
    for i in range(4):
        for j in range(i + 1, 4):
            if vals[i] is INF and vals[j] is INF:
                raise DomainError("cross ratio needs distinct points")
            if vals[i] is not INF and vals[j] is not INF and vals[i] == vals[j]:
                raise DomainError("cross ratio needs distinct points")
    if x1 is INF:
        return _div(x4 - x2, x3 - x2)
    if x2 is INF:
        return _div(x3 - x1, x4 - x1)
    if x3 is INF:
        return _div(x4 - x2, x4 - x1)
    if x4 is INF:
        return _div(x3 - x1, x3 - x2)
    return _div((x3 - x1) * (x4 - x2), (x3 - x2) * (x4 - x1))


@dataclass
class MobiusMap:
    """x -> (alpha x + beta) / (gamma x + delta), determinant nonzero."""

    alpha: object
    beta: object
    gamma: object
    delta: object

    def __post_init__(self):
        det = self.alpha * self.delta - self.beta * self.gamma
        if is_zero(det):
            raise DomainError("fractional-linear map needs nonzero determinant")

    def apply(self, x):
        if x is INF:
            if is_zero(self.gamma):
                return INF
            return _div(self.alpha, self.gamma)
        den = self.gamma * x + self.delta
        if is_zero(den):
            return INF
        return _div(self.alpha * x + self.beta, den)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other, by multiplying the coefficient matrices."""
        return MobiusMap(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )


def mobius_from_three_pairs(system: SystemDescriptor, pairs) -> MobiusMap:
    """The unique fractional-linear map sending three points to three points.

    Each pair contributes one homogeneous equation
    gamma*x*x' + delta*x' - alpha*x - beta = 0 in (alpha, beta, gamma,
    delta); infinities drop to the dominant terms.  The one-dimensional
    null space is normalized so the last nonzero of (gamma, delta, alpha,
    beta) becomes 1.
    """
    if not system.commutative:
        raise CapabilityError(f"{system.name} is not commutative")
    if len(pairs) != 3:
        raise DomainError("need exactly three pairs")
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    for vals in (xs, ys):
        for i in range(3):
            for j in range(i + 1, 3):
                same = (vals[i] is INF and vals[j] is INF) or (
                    vals[i] is not INF and vals[j] is not INF and vals[i] == vals[j])
                if same:
                    raise DomainError("pair coordinates must be pairwise distinct")
    zero, one = system.zero, system.one
    rows = []
    for x, y in pairs:
        if x is INF and y is INF:
            rows.append([zero, zero, one, zero])            # gamma = 0
        elif x is INF:
            rows.append([-one, zero, y, zero])              # gamma y = alpha
        elif y is INF:
            rows.append([zero, zero, x, one])               # gamma x + delta = 0
        else:
            rows.append([-x, -one, x * y, y])
    null = _null_vector(system, rows)
    if null is None:
        raise DomainError("singular configuration of pairs")
    alpha, beta, gamma, delta = null
    for pivot in (beta, alpha, delta, gamma):   # last nonzero of (g, d, a, b)
        if not is_zero(pivot):
            inv = system.inv(pivot)
            alpha, beta, gamma, delta = (alpha * inv, beta * inv,
                                         gamma * inv, delta * inv)
            break
    return MobiusMap(alpha, beta, gamma, delta)


def _null_vector(system, rows):
    """One null-space vector of a 3x4 system over a commutative system,
    or None when the null space is not one-dimensional."""
    m = [list(r) for r in rows]
    ncols = 4
    piv_cols = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if not is_zero(m[i][col])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = system.inv(m[r][col])
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][col]):
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [system.zero] * ncols
    vec[fc] = system.one
    for row_idx, col in enumerate(piv_cols):
        vec[col] = -m[row_idx][fc]
    return vec


def mobius_apply(mapping: MobiusMap, x):
    return mapping.apply(x)


def harmonic_scale(plane: BasePlane, a: Point, b: Point, c: Point, n: int,
                   e: Optional[Point] = None, f: Optional[Point] = None):
    """Iterate the quadrilateral step to drop n new points onto segment bc.

    Requires b strictly between a and c in an ordered commutative plane.
    Returns [b_1, ..., b_n]; every b_i stays between a and c and the chain
    (b_{i-1} b_i b_{i+1}) is strictly monotone.
    """
    if not plane.system.ordered:
        raise CapabilityError(f"{plane.system.name} is not ordered")
    if not plane.system.commutative:
        raise CapabilityError(f"{plane.system.name} is not commutative")
    if not plane.between(a, b, c):
        raise DomainError("needs b strictly between a and c")
    base = plane.join(a, c)
    if e is None:
        vertical = getattr(base, "vertical", False) or getattr(base, "kind", "") == "vertical"
        off = Point(a.x + plane.scalar(1), a.y) if vertical else Point(a.x, a.y + plane.scalar(1))
        e = off
    if plane.on_line(e, base):
        raise DegeneracyError("aux e", "e lies on line ac")
    if f is None:
        f = plane.combo(a, e, Fraction(1, 2))
    if not plane.between(a, f, e):
        raise DomainError("needs f strictly between a and e")
    g = _meet_proper(plane, _join(plane, f, c, "fc"), _join(plane, e, b, "eb"),
                     "g = fc x eb")
    r = _meet_proper(plane, _join(plane, a, g, "ag"), _join(plane, e, c, "ec"),
                     "r = ag x ec")
    out = []
    prev = b
    fc = plane.join(f, c)
    ac = base
    for i in range(n):
        gi = _meet_proper(plane, _join(plane, prev, r, f"b{i}r"), fc,
                          f"g{i + 1} = b{i}r x fc")
        bi = _meet_proper(plane, _join(plane, gi, e, f"g{i + 1}e"), ac,
                          f"b{i + 1} = g{i + 1}e x ac")
        out.append(bi)
        prev = bi
    return out
