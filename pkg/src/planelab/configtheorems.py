"""Configuration theorems: the hexagon theorem, the perspective-triangles
theorem with its constrained special cases, seeded samplers, suite
aggregation, and the two ways to reach an inaccessible intersection point.

Degeneracy is a verdict, not an exception: sampled configurations in
noncommutative planes routinely produce parallel or coincident derived
elements, and the suites must keep counting.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegeneracyError, DomainError, PrecisionError
from .numbersystems import HilbertElement, Octonion, is_zero
from .planes import BasePlane, Point, is_ideal
from .verdicts import Verdict, degenerate, fails, holds


@dataclass
class DesarguesConfig:
    """Center, two vertex triples; the derived side meets come out of the
    checker.  center may be None for a purely axial configuration."""

    center: Optional[Point]
    t1: tuple
    t2: tuple
    note: str = ""


@dataclass
class PappusConfig:
    """Carrier lines g, h and hexagon vertices 1..6, odd on g, even on h."""

    g: object
    h: object
    vertices: tuple
    note: str = ""


def _distinct(points) -> bool:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if points[i] == points[j]:
                return False
    return True


def collinear_with_ideals(plane: BasePlane, p, q, r) -> bool:
    """Collinearity over the projective closure, case-wise on ideal points."""
    pts = [p, q, r]
    for i in range(3):
        for j in range(i + 1, 3):
            if pts[i] == pts[j]:
                raise DegeneracyError("derived points", "two coincide")
    ideals = [x for x in pts if is_ideal(x)]
    propers = [x for x in pts if not is_ideal(x)]
    if len(ideals) == 3:
        return True          # all on the line at infinity
    if len(ideals) == 2:
        return False         # a proper point is never at infinity
    if len(ideals) == 1:
        line = plane.join(propers[0], propers[1])
        return plane.parallel_class(line) == ideals[0]
    return plane.collinear(p, q, r)


def concurrent_with_ideals(plane: BasePlane, l1, l2, l3) -> bool:
    if l1 == l2 or l1 == l3 or l2 == l3:
        raise DegeneracyError("joins", "two coincide")
    return plane.meet(l1, l2) == plane.meet(l1, l3)


def _join(plane, p, q, step):
    if p == q:
        raise DegeneracyError(step, "coincident points")
    return plane.join(p, q)


# --- checkers -----------------------------------------------------------------

def check_pappus(plane: BasePlane, cfg: PappusConfig) -> Verdict:
    v = cfg.vertices
    try:
        if len(v) != 6 or not _distinct(v):
            return degenerate("pappus config", "vertices not pairwise distinct")
        for idx, p in enumerate(v):
            want, other = (cfg.g, cfg.h) if idx % 2 == 0 else (cfg.h, cfg.g)
            if not plane.on_line(p, want):
                return degenerate("pappus config", f"vertex {idx + 1} off its carrier")
            if plane.on_line(p, other):
                return degenerate("pappus config", f"vertex {idx + 1} on both carriers")
        sides = [_join(plane, v[i], v[(i + 1) % 6], f"side {i + 1}{(i + 1) % 6 + 1}")
                 for i in range(6)]
        opposite = [(0, 3), (1, 4), (2, 5)]
        meets = []
        for i, j in opposite:
            if sides[i] == sides[j]:
                return degenerate("pappus sides", f"opposite sides {i + 1},{j + 1} coincide")
            meets.append(plane.meet(sides[i], sides[j]))
        p_m, q_m, r_m = meets
        ok = collinear_with_ideals(plane, p_m, q_m, r_m)
    except (DegeneracyError, PrecisionError) as exc:
        return degenerate("pappus", str(exc))
    if ok:
        proper = sum(0 if is_ideal(m) else 1 for m in meets)
        kind = "proper axis" if proper == 3 else "axis at infinity"
        return holds(kind)
    return fails({"P": str(p_m), "Q": str(q_m), "R": str(r_m)},
                 note="derived points not collinear")


def _desargues_elements(plane, cfg):
    t1, t2 = cfg.t1, cfg.t2
    if not (_distinct(list(t1) + list(t2))):
        raise DegeneracyError("config", "vertices not pairwise distinct")
    if plane.collinear(*t1) or plane.collinear(*t2):
        raise DegeneracyError("config", "a triangle is degenerate")
    sides1 = [_join(plane, t1[1], t1[2], "side 23"),
              _join(plane, t1[0], t1[2], "side 13"),
              _join(plane, t1[0], t1[1], "side 12")]
    sides2 = [_join(plane, t2[1], t2[2], "side 2'3'"),
              _join(plane, t2[0], t2[2], "side 1'3'"),
              _join(plane, t2[0], t2[1], "side 1'2'")]
    for s1, s2 in zip(sides1, sides2):
        if s1 == s2:
            raise DegeneracyError("config", "corresponding sides coincide")
    derived = [plane.meet(s1, s2) for s1, s2 in zip(sides1, sides2)]
    return sides1, sides2, derived


def _check_perspective(plane, cfg) -> Optional[str]:
    if cfg.center is None:
        return "no center given"
    o = cfg.center
    for p, q in zip(cfg.t1, cfg.t2):
        ray = _join(plane, p, q, "vertex join")
        if is_ideal(o):
            if plane.parallel_class(ray) != o:
                return "vertex join misses the ideal center"
        elif o == p or o == q:
            return "center equals a vertex"
        elif not plane.on_line(o, ray):
            return "center off a vertex join"
    return None


def check_desargues(plane: BasePlane, cfg: DesarguesConfig,
                    direction: str = "perspective_to_axial") -> Verdict:
    try:
        if direction == "perspective_to_axial":
            bad = _check_perspective(plane, cfg)
            if bad:
                return degenerate("perspectivity hypothesis", bad)
            _, _, derived = _desargues_elements(plane, cfg)
            a_m, b_m, c_m = derived
            if collinear_with_ideals(plane, a_m, b_m, c_m):
                return holds()
            return fails({"A": str(a_m), "B": str(b_m), "C": str(c_m)},
                         note="side meets not collinear")
        if direction == "axial_to_perspective":
            _, _, derived = _desargues_elements(plane, cfg)
            if not collinear_with_ideals(plane, *derived):
                return degenerate("axial hypothesis", "side meets not collinear")
            joins = [_join(plane, p, q, "vertex join")
                     for p, q in zip(cfg.t1, cfg.t2)]
            if concurrent_with_ideals(plane, *joins):
                return holds()
            m12 = plane.meet(joins[0], joins[1])
            m13 = plane.meet(joins[0], joins[2])
            return fails({"join_11'_x_22'": str(m12), "join_11'_x_33'": str(m13)},
                         note="vertex joins not concurrent")
        raise DomainError(f"unknown direction {direction!r}")
    except (DegeneracyError, PrecisionError) as exc:
        return degenerate("desargues", str(exc))


def classify_special_case(plane: BasePlane, cfg: DesarguesConfig) -> set:
    """Which incidence constraints the configuration satisfies exactly."""
    tags = set()
    t1, t2 = cfg.t1, cfg.t2
    try:
        sides1, sides2, derived = _desargues_elements(plane, cfg)
    except DegeneracyError:
        return {"degenerate"}
    on_other = lambda pts, sides: sum(
        1 for p in pts for s in sides if plane.on_line(p, s))
    c1 = on_other(t1, sides2)
    c2 = on_other(t2, sides1)
    if c1 + c2 == 1:
        tags.add("d1")
    if c1 >= 1 and c2 >= 1:
        tags.add("d2a")
    if c1 >= 2 or c2 >= 2:
        tags.add("d2c")
    if cfg.center is not None and not is_ideal(cfg.center):
        joins = []
        for p, q in zip(t1, t2):
            joins.append(None if p == q else plane.join(p, q))
        pairs = sum(1 for m, g in zip(derived, joins)
                    if g is not None and not is_ideal(m) and plane.on_line(m, g))
        if pairs >= 2:
            tags.add("d2b")
        propers = [m for m in derived if not is_ideal(m)]
        if len(propers) >= 2 and propers[0] != propers[1]:
            axis = plane.join(propers[0], propers[1])
            if plane.on_line(cfg.center, axis):
                tags.add("little")
    if not tags:
        tags.add("d0-only")
    return tags


# --- coefficient pools and samplers -------------------------------------------

def _pool_value(plane: BasePlane, rng):
    name = plane.system.name
    if name == "octonion":
        units = rng.sample(range(8), rng.randint(1, 2))
        out = Octonion.scalar(0)
        for u in units:
            c = rng.randint(-5, 5) or 1
            out = out + Octonion.unit(u) * Fraction(c)
        return out
    if name == "quaternion":
        from .numbersystems import Quaternion
        units = rng.sample(range(4), rng.randint(1, 2))
        out = Quaternion(0)
        for u in units:
            c = rng.randint(-5, 5) or 1
            out = out + Quaternion.unit(u) * Fraction(c)
        return out
    if name == "hilbert":
        c = rng.randint(-5, 5) or 1
        return HilbertElement.monomial(c, rng.randint(-2, 2), rng.randint(-2, 2))
    if name in ("laurent",):
        from .numbersystems import LaurentSeries
        c = rng.randint(-5, 5) or 1
        return LaurentSeries.term(c, rng.randint(-1, 1))
    if name in ("ratfunc",):
        from .numbersystems import RatFunc
        c = rng.randint(-5, 5) or 1
        f = RatFunc.const(c)
        if rng.random() < 0.4:
            f = f * RatFunc.t()
        return f
    return plane.scalar(rng.randint(-5, 5))


def _pool_point(plane, rng):
    return Point(_pool_value(plane, rng), _pool_value(plane, rng))


_LAMBDAS = [Fraction(n, d) for n in (-3, -2, -1, 1, 2, 3, 4) for d in (1, 2)]


def _lam(rng, exclude=()):
    for _ in range(30):
        lam = rng.choice(_LAMBDAS)
        if lam not in exclude:
            return lam
    raise DegeneracyError("lambda pool", "exhausted")


class _Retry(Exception):
    pass


def sample_config(plane: BasePlane, kind, seed, budget: int = 120):
    """Deterministic rejection sampler; kind is 'pappus' or
    ('desargues', variant) with variant in d0, d1, d2a, d2b, d2c, little."""
    if isinstance(kind, str):
        theorem, variant = kind, None
    else:
        theorem, variant = kind
    for attempt in range(budget):
        rng = random.Random(f"cfg:{theorem}:{variant}:{plane.system.name}:{seed}:{attempt}")
        try:
            if theorem == "pappus":
                return _sample_pappus(plane, rng)
            if theorem == "desargues":
                return _sample_desargues(plane, rng, variant or "d0")
            raise DomainError(f"unknown config kind {kind!r}")
        except (_Retry, DegeneracyError, DomainError, PrecisionError, ZeroDivisionError):
            continue
    raise DegeneracyError("sampler", f"budget exhausted for {kind} seed {seed}")


def _sample_pappus(plane, rng):
    g1, g2 = _pool_point(plane, rng), _pool_point(plane, rng)
    h1, h2 = _pool_point(plane, rng), _pool_point(plane, rng)
    if g1 == g2 or h1 == h2:
        raise _Retry
    g = plane.join(g1, g2)
    h = plane.join(h1, h2)
    if g == h:
        raise _Retry
    lams_g = [_lam(rng) for _ in range(3)]
    lams_h = [_lam(rng) for _ in range(3)]
    if len(set(lams_g)) < 3 or len(set(lams_h)) < 3:
        raise _Retry
    on_g = [plane.combo(g1, g2, l) for l in lams_g]
    on_h = [plane.combo(h1, h2, l) for l in lams_h]
    vertices = (on_g[0], on_h[0], on_g[1], on_h[1], on_g[2], on_h[2])
    if not _distinct(vertices):
        raise _Retry
    for idx, p in enumerate(vertices):
        if plane.on_line(p, h if idx % 2 == 0 else g):
            raise _Retry
    return PappusConfig(g, h, vertices)


def _rays(plane, rng):
    o = _pool_point(plane, rng)
    zs = [_pool_point(plane, rng) for _ in range(3)]
    if any(z == o for z in zs) or not _distinct(zs):
        raise _Retry
    rays = [plane.join(o, z) for z in zs]
    if rays[0] == rays[1] or rays[0] == rays[2] or rays[1] == rays[2]:
        raise _Retry
    return o, zs, rays


def _on_ray(plane, o, z, rng, exclude=(Fraction(0),)):
    return plane.combo(o, z, _lam(rng, exclude=exclude))


def _meet_proper_or_retry(plane, l1, l2):
    if l1 == l2:
        raise _Retry
    m = plane.meet(l1, l2)
    if is_ideal(m):
        raise _Retry
    return m


def _finish_desargues(plane, o, t1, t2, constraint_note=""):
    cfg = DesarguesConfig(o, tuple(t1), tuple(t2), constraint_note)
    pts = [o] + list(t1) + list(t2)
    if not _distinct(pts):
        raise _Retry
    if plane.collinear(*t1) or plane.collinear(*t2):
        raise _Retry
    _desargues_elements(plane, cfg)   # probes the degeneracies checkers reject
    return cfg


def _sample_desargues(plane, rng, variant):
    o, zs, rays = _rays(plane, rng)
    if variant == "d0":
        lams = [(_lam(rng), _lam(rng)) for _ in range(3)]
        if any(a == b for a, b in lams):
            raise _Retry
        t1 = [plane.combo(o, z, a) for z, (a, _) in zip(zs, lams)]
        t2 = [plane.combo(o, z, b) for z, (_, b) in zip(zs, lams)]
        return _finish_desargues(plane, o, t1, t2)
    if variant == "d1":
        v1 = _on_ray(plane, o, zs[0], rng)
        v2 = _on_ray(plane, o, zs[1], rng)
        v1p = _on_ray(plane, o, zs[0], rng)
        v2p = _on_ray(plane, o, zs[1], rng)
        v3p = _on_ray(plane, o, zs[2], rng)
        v3 = _meet_proper_or_retry(plane, rays[2], _join(plane, v1p, v2p, "1'2'"))
        return _finish_desargues(plane, o, [v1, v2, v3], [v1p, v2p, v3p],
                                 "vertex 3 on side 1'2'")
    if variant == "d2a":
        v1 = _on_ray(plane, o, zs[0], rng)
        v2 = _on_ray(plane, o, zs[1], rng)
        v1p = _on_ray(plane, o, zs[0], rng)
        v2p = _on_ray(plane, o, zs[1], rng)
        v3 = _meet_proper_or_retry(plane, rays[2], _join(plane, v1p, v2p, "1'2'"))
        v3p = _meet_proper_or_retry(plane, rays[2], _join(plane, v1, v2, "12"))
        return _finish_desargues(plane, o, [v1, v2, v3], [v1p, v2p, v3p],
                                 "3 on 1'2' and 3' on 12")
    if variant == "d2b":
        v1 = _on_ray(plane, o, zs[0], rng)
        v2 = _on_ray(plane, o, zs[1], rng)
        v2p = _on_ray(plane, o, zs[1], rng)
        v3 = _on_ray(plane, o, zs[2], rng)
        a_pt = _meet_proper_or_retry(plane, _join(plane, v2, v3, "23"), rays[0])
        v3p = _meet_proper_or_retry(plane, _join(plane, v2p, a_pt, "2'A"), rays[2])
        b_pt = _meet_proper_or_retry(plane, _join(plane, v1, v3, "13"), rays[1])
        v1p = _meet_proper_or_retry(plane, _join(plane, v3p, b_pt, "3'B"), rays[0])
        return _finish_desargues(plane, o, [v1, v2, v3], [v1p, v2p, v3p],
                                 "side meets A on 11' and B on 22'")
    if variant == "d2c":
        v1p = _on_ray(plane, o, zs[0], rng)
        v2p = _on_ray(plane, o, zs[1], rng)
        v3p = _on_ray(plane, o, zs[2], rng)
        v2 = _on_ray(plane, o, zs[1], rng)
        v1 = _meet_proper_or_retry(plane, rays[0], _join(plane, v2p, v3p, "2'3'"))
        v3 = _meet_proper_or_retry(plane, rays[2], _join(plane, v1p, v2p, "1'2'"))
        return _finish_desargues(plane, o, [v1, v2, v3], [v1p, v2p, v3p],
                                 "1 on 2'3' and 3 on 1'2'")
    if variant == "little":
        w = _pool_point(plane, rng)
        if w == o:
            raise _Retry
        axis = plane.join(o, w)
        a_pt = plane.combo(o, w, _lam(rng))
        b_pt = plane.combo(o, w, _lam(rng))
        if a_pt == b_pt or a_pt == o or b_pt == o:
            raise _Retry
        z3 = _pool_point(plane, rng)
        if z3 == o or plane.on_line(z3, axis):
            raise _Retry
        r3 = plane.join(o, z3)
        v3 = _on_ray(plane, o, z3, rng)
        v3p = _on_ray(plane, o, z3, rng)
        if v3 == v3p:
            raise _Retry
        v2 = plane.combo(a_pt, v3, _lam(rng, exclude=(Fraction(0), Fraction(1))))
        v1 = plane.combo(b_pt, v3, _lam(rng, exclude=(Fraction(0), Fraction(1))))
        if plane.on_line(v2, axis) or plane.on_line(v1, axis):
            raise _Retry
        v2p = _meet_proper_or_retry(plane, _join(plane, a_pt, v3p, "A3'"),
                                    _join(plane, o, v2, "o2"))
        v1p = _meet_proper_or_retry(plane, _join(plane, b_pt, v3p, "B3'"),
                                    _join(plane, o, v1, "o1"))
        return _finish_desargues(plane, o, [v1, v2, v3], [v1p, v2p, v3p],
                                 "center on the axis")
    raise DomainError(f"unknown desargues variant {variant!r}")


# --- suites --------------------------------------------------------------------

@dataclass
class SuiteResult:
    theorem: str
    variant: Optional[str]
    system: str
    n: int
    seed: int
    holds: int = 0
    fails: int = 0
    degenerate: int = 0
    first_witness: Optional[dict] = None

    def as_dict(self):
        return {
            "theorem": self.theorem,
            "variant": self.variant,
            "system": self.system,
            "n": self.n,
            "seed": self.seed,
            "holds": self.holds,
            "fails": self.fails,
            "degenerate": self.degenerate,
            "first_witness": self.first_witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), ensure_ascii=False)

    def tally(self, verdict: Verdict):
        if verdict.holds:
            self.holds += 1
        elif verdict.fails:
            self.fails += 1
            if self.first_witness is None:
                self.first_witness = {"witness": _plain(verdict.witness),
                                      "note": verdict.note}
        else:
            self.degenerate += 1


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (int, str, type(None))):
        return obj
    return str(obj)


def run_suite(plane: BasePlane, theorem: str, variant: Optional[str],
              n: int, seed: int, retries: int = 8) -> SuiteResult:
    """n independent sampled checks; per-sample seeds split from the suite
    seed so the aggregate is order-independent and reproducible.  A slot
    whose check comes back degenerate is resampled a few times before the
    degeneracy is recorded."""
    if n < 1:
        raise DomainError("n must be at least 1")
    res = SuiteResult(theorem, variant, plane.system.name, n, seed)
    for i in range(n):
        verdict = None
        for attempt in range(retries):
            sample_seed = f"{seed}:{i}:{attempt}"
            try:
                if theorem == "pappus":
                    cfg = sample_config(plane, "pappus", sample_seed)
                    verdict = check_pappus(plane, cfg)
                elif theorem == "desargues":
                    var = variant or "d0"
                    cfg = sample_config(plane, ("desargues", var), sample_seed)
                    direction = ("axial_to_perspective" if var == "converse"
                                 else "perspective_to_axial")
                    verdict = check_desargues(plane, cfg, direction)
                else:
                    raise DomainError(f"unknown suite theorem {theorem!r}")
            except DegeneracyError as exc:
                verdict = degenerate("sampler", str(exc))
            if not verdict.degenerate:
                break
        res.tally(verdict)
    return res


# --- inaccessible-point constructions ------------------------------------------

@dataclass
class InaccessibleAux:
    a: Point
    a2: Point
    b: Point
    b2: Point
    o: Point


def points_on_line(plane, line, params):
    """Concrete points of a line at the given affine parameters."""
    out = []
    for t in params:
        tval = plane.scalar(t)
        if getattr(line, "vertical", False):                 # alt, vertical
            out.append(Point(line.b, tval))
        elif getattr(line, "kind", None) is not None:        # bent-line plane
            if line.kind == "vertical":
                out.append(Point(line.x0, tval))
            else:
                out.append(Point(tval, line.height_at(Fraction(t))))
        elif hasattr(line, "c"):                             # skew form
            if is_zero(line.b):
                out.append(Point(-line.c, tval))
            else:
                y = plane.system.inv(line.b) * (-(line.a * tval) - line.c)
                out.append(Point(tval, y))
        else:                                                # alt, sloped
            out.append(Point(tval, line.b - line.a * tval))
    return out


def connect_inaccessible_d0(plane: BasePlane, g, h, p: Point,
                            aux: InaccessibleAux):
    """Line through p and the (unused) meet of g and h, built from the
    double-triangle construction; only joins and meets of accessible
    elements appear."""
    if g == h:
        raise DomainError("carrier lines coincide")
    if is_ideal(plane.meet(g, h)):
        raise DomainError("carrier lines are parallel")
    if plane.on_line(p, g) or plane.on_line(p, h):
        raise DomainError("p must avoid both carrier lines")
    for q, line, name in ((aux.a, g, "a"), (aux.a2, g, "a2"),
                          (aux.b, h, "b"), (aux.b2, h, "b2")):
        if not plane.on_line(q, line):
            raise DomainError(f"aux point {name} off its carrier")
    if not plane.collinear(aux.a, aux.o, p):
        raise DomainError("aux center o must lie on line a-p")
    r = _meet_strict(plane, _join(plane, aux.a, aux.b, "ab"),
                     _join(plane, aux.a2, aux.b2, "a'b'"), "r = ab x a'b'")
    q = _meet_strict(plane, _join(plane, p, aux.b, "pb"),
                     _join(plane, r, aux.o, "ro"), "q = pb x ro")
    p2 = _meet_strict(plane, _join(plane, aux.b2, q, "b'q"),
                      _join(plane, aux.o, aux.a2, "oa'"), "p' = b'q x oa'")
    if p2 == p:
        raise DegeneracyError("connection", "p' collapsed onto p")
    return _join(plane, p, p2, "connection")


def _meet_strict(plane, l1, l2, step):
    if l1 == l2:
        raise DegeneracyError(step, "coincident lines")
    m = plane.meet(l1, l2)
    if is_ideal(m):
        raise DegeneracyError(step, "parallel lines")
    return m


def sample_inaccessible_aux(plane, g, h, p, rng) -> InaccessibleAux:
    params = rng.sample([Fraction(n, 2) for n in range(-14, 15)], 4)
    a, a2 = points_on_line(plane, g, params[:2])
    b, b2 = points_on_line(plane, h, params[2:])
    lam = _lam(rng, exclude=(Fraction(0), Fraction(1)))
    o = plane.combo(a, p, lam)
    return InaccessibleAux(a, a2, b, b2, o)


def reflect_point(plane: BasePlane, p: Point, line) -> Point:
    """Mirror image across a line of the exact rational plane."""
    if plane.system.name != "rational":
        raise DomainError("reflections live in the rational plane")
    if getattr(line, "vertical", False):
        return Point(2 * line.b - p.x, p.y)
    m = -line.a
    c = line.b
    d = (p.x + (p.y - c) * m) / (1 + m * m)
    return Point(2 * d - p.x, 2 * d * m + 2 * c - p.y)


def connect_inaccessible_hjelmslev(plane: BasePlane, g, h, p: Point):
    """Reflection route to the same connection: reflect p across both lines
    in both orders, join the two images, and reflect p across that join."""
    if g == h:
        raise DomainError("carrier lines coincide")
    if is_ideal(plane.meet(g, h)):
        raise DomainError("carrier lines are parallel")
    if plane.on_line(p, g) or plane.on_line(p, h):
        raise DomainError("p must avoid both carrier lines")
    p_h = reflect_point(plane, p, h)
    q1 = reflect_point(plane, p_h, g)
    p_g = reflect_point(plane, p, g)
    q2 = reflect_point(plane, p_g, h)
    if q1 == q2:
        raise DegeneracyError("mirror pair", "the two mirror images coincide")
    s = plane.join(q1, q2)
    p2 = reflect_point(plane, p, s)
    if p2 == p:
        raise DegeneracyError("connection", "p is fixed by the mirror line")
    return plane.join(p, p2)
