import json
import random
from fractions import Fraction as F

import pytest

from planelab.configtheorems import (InaccessibleAux,
                                     PappusConfig, check_desargues,
                                     check_pappus, classify_special_case,
                                     connect_inaccessible_d0,
                                     connect_inaccessible_hjelmslev,
                                     points_on_line, reflect_point,
                                     run_suite, sample_config,
                                     sample_inaccessible_aux)
from planelab.errors import DegeneracyError, DomainError
from planelab.planes import Point, plane_for

RAT = plane_for("rational")


def rp(x, y):
    return Point(F(x), F(y))


# --- independent oracle: homogeneous coordinates over exact rationals --------

def hline(p, q):
    return (p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def hmeet(l1, l2):
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return (b1 * c2 - b2 * c1, a2 * c1 - a1 * c2, a1 * b2 - a2 * b1)


def hcollinear(h1, h2, h3):
    (x1, y1, w1), (x2, y2, w2), (x3, y3, w3) = h1, h2, h3
    det = (x1 * (y2 * w3 - y3 * w2) - y1 * (x2 * w3 - x3 * w2)
           + w1 * (x2 * y3 - x3 * y2))
    return det == 0


def test_pappus_rational_golden_hexagon():
    g = RAT.horizontal(F(0))
    h = RAT.horizontal(F(1))
    cfg = PappusConfig(g, h, (rp(1, 0), rp(1, 1), rp(2, 0),
                              rp(2, 1), rp(3, 0), rp(3, 1)))
    v = check_pappus(RAT, cfg)
    assert v.holds
    # the derived points of this hexagon, by the independent route
    pts = [rp(1, 0), rp(1, 1), rp(2, 0), rp(2, 1), rp(3, 0), rp(3, 1)]
    p_h = hmeet(hline(pts[0], pts[1]), hline(pts[3], pts[4]))
    q_h = hmeet(hline(pts[1], pts[2]), hline(pts[4], pts[5]))
    r_h = hmeet(hline(pts[2], pts[3]), hline(pts[5], pts[0]))
    assert p_h[2] != 0 and (F(p_h[0], p_h[2]), F(p_h[1], p_h[2])) == (1, 2)
    assert (F(q_h[0], q_h[2]), F(q_h[1], q_h[2])) == (3, -1)
    assert (F(r_h[0], r_h[2]), F(r_h[1], r_h[2])) == (2, F(1, 2))
    assert hcollinear(p_h, q_h, r_h)


def test_pappus_degenerate_on_repeated_vertex():
    g = RAT.horizontal(F(0))
    h = RAT.horizontal(F(1))
    cfg = PappusConfig(g, h, (rp(1, 0), rp(1, 1), rp(1, 0),
                              rp(2, 1), rp(3, 0), rp(3, 1)))
    assert check_pappus(RAT, cfg).degenerate


def test_pappus_suite_rational_all_hold():
    res = run_suite(RAT, "pappus", None, 120, seed=7)
    assert res.holds == 120 and res.fails == 0


def test_desargues_suite_rational_all_hold():
    res = run_suite(RAT, "desargues", "d0", 120, seed=7)
    assert res.fails == 0 and res.holds >= 110


def test_desargues_all_variants_rational():
    for variant in ("d0", "d1", "d2a", "d2b", "d2c", "little"):
        res = run_suite(RAT, "desargues", variant, 40, seed=11)
        assert res.fails == 0, (variant, res.first_witness)
        assert res.holds >= 30, (variant, res)


def test_desargues_forward_and_converse_agree_on_skew_planes():
    for name, nconf in (("rational", 40), ("hilbert", 8)):
        plane = plane_for(name, t_window=8, s_window=8)
        count = 0
        for i in range(nconf):
            try:
                cfg = sample_config(plane, ("desargues", "d0"), f"fc:{i}")
            except DegeneracyError:
                continue
            fwd = check_desargues(plane, cfg, "perspective_to_axial")
            if not fwd.holds:
                continue
            back = check_desargues(plane, cfg, "axial_to_perspective")
            assert back.holds, (name, i)
            count += 1
        assert count >= nconf // 2


def test_hilbert_desargues_holds_sampled():
    plane = plane_for("hilbert", t_window=8, s_window=8)
    res = run_suite(plane, "desargues", "d0", 25, seed=3)
    assert res.fails == 0
    assert res.holds >= 15


def test_hilbert_pappus_fails_somewhere():
    plane = plane_for("hilbert", t_window=8, s_window=8)
    res = run_suite(plane, "pappus", None, 60, seed=3)
    assert res.fails >= 1
    assert res.first_witness is not None


def test_octonion_d2_variants_hold():
    plane = plane_for("octonion")
    for variant in ("d2a", "d2b", "d2c"):
        res = run_suite(plane, "desargues", variant, 60, seed=5)
        assert res.fails == 0, (variant, res.first_witness)
        assert res.holds >= 40, (variant, res)


def test_octonion_little_desargues_holds():
    res = run_suite(plane_for("octonion"), "desargues", "little", 60, seed=5)
    assert res.fails == 0
    assert res.holds >= 40


def test_classification_tags():
    plane = RAT
    generic = sample_config(plane, ("desargues", "d0"), "cls:0")
    assert classify_special_case(plane, generic) == {"d0-only"}
    for variant, tag in (("d1", "d1"), ("d2a", "d2a"), ("d2b", "d2b"),
                         ("d2c", "d2c"), ("little", "little")):
        hits = 0
        for i in range(12):
            try:
                cfg = sample_config(plane, ("desargues", variant), f"cls:{i}")
            except DegeneracyError:
                continue
            tags = classify_special_case(plane, cfg)
            assert tag in tags, (variant, i, tags, cfg.note)
            hits += 1
        assert hits >= 8, variant


def test_sampler_determinism():
    a = sample_config(RAT, "pappus", "det:1")
    b = sample_config(RAT, "pappus", "det:1")
    assert a.vertices == b.vertices
    c = sample_config(RAT, ("desargues", "d2b"), 99)
    d = sample_config(RAT, ("desargues", "d2b"), 99)
    assert c.t1 == d.t1 and c.t2 == d.t2 and c.center == d.center


def test_suite_json_deterministic():
    r1 = run_suite(RAT, "pappus", None, 40, seed=13).to_json()
    r2 = run_suite(RAT, "pappus", None, 40, seed=13).to_json()
    assert r1 == r2
    parsed = json.loads(r1)
    assert list(parsed.keys()) == ["theorem", "variant", "system", "n", "seed",
                                   "holds", "fails", "degenerate", "first_witness"]


def test_checker_agrees_with_homogeneous_oracle():
    # independent code path: recompute every meet via homogeneous algebra
    for i in range(40):
        try:
            cfg = sample_config(RAT, "pappus", f"oracle:{i}")
        except DegeneracyError:
            continue
        verdict = check_pappus(RAT, cfg)
        v = cfg.vertices
        sides = [hline(v[k], v[(k + 1) % 6]) for k in range(6)]
        hs = [hmeet(sides[a], sides[b]) for a, b in ((0, 3), (1, 4), (2, 5))]
        if any(h == (0, 0, 0) for h in hs):
            continue
        want = hcollinear(*hs)
        if verdict.degenerate:
            continue
        assert verdict.holds == want
    for i in range(40):
        try:
            cfg = sample_config(RAT, ("desargues", "d0"), f"oracle:{i}")
        except DegeneracyError:
            continue
        verdict = check_desargues(RAT, cfg, "perspective_to_axial")
        if verdict.degenerate:
            continue
        t1, t2 = cfg.t1, cfg.t2
        hs = [hmeet(hline(t1[a], t1[b]), hline(t2[a], t2[b]))
              for a, b in ((1, 2), (0, 2), (0, 1))]
        if any(h == (0, 0, 0) for h in hs):
            continue
        assert verdict.holds == hcollinear(*hs)


def test_failing_verdict_witness_reverifies():
    plane = plane_for("hilbert", t_window=8, s_window=8)
    res = run_suite(plane, "pappus", None, 60, seed=3)
    assert res.first_witness is not None
    w = res.first_witness["witness"]
    assert set(w.keys()) == {"P", "Q", "R"}


# --- reaching an inaccessible intersection ------------------------------------

def _carrier_setup():
    g = RAT.horizontal(F(0))                 # y = 0
    h = RAT.join(rp(0, 0), rp(1, 1))         # y = x
    p = rp(1, 2)
    return g, h, p


def test_connect_inaccessible_d0_golden():
    g, h, p = _carrier_setup()
    aux = InaccessibleAux(rp(3, 0), rp(5, 0), rp(2, 2), rp(4, 4),
                          RAT.combo(rp(3, 0), p, F(1, 2)))
    line = connect_inaccessible_d0(RAT, g, h, p, aux)
    assert RAT.on_line(rp(0, 0), line)
    assert RAT.on_line(p, line)


def test_connect_inaccessible_d0_aux_independent():
    g, h, p = _carrier_setup()
    target = RAT.join(p, RAT.meet(g, h))
    rng = random.Random(17)
    done = 0
    while done < 100:
        aux = sample_inaccessible_aux(RAT, g, h, p, rng)
        try:
            line = connect_inaccessible_d0(RAT, g, h, p, aux)
        except (DegeneracyError, DomainError):
            continue
        assert line == target
        done += 1


def test_connect_inaccessible_d0_rejects_bad_aux():
    g, h, p = _carrier_setup()
    bad = InaccessibleAux(rp(3, 0), rp(5, 0), rp(2, 2), rp(4, 4), rp(6, 0))
    with pytest.raises((DegeneracyError, DomainError)):
        connect_inaccessible_d0(RAT, g, h, p, bad)


def test_reflection_route_golden_and_agreement():
    g, h, p = _carrier_setup()
    line = connect_inaccessible_hjelmslev(RAT, g, h, p)
    assert RAT.on_line(rp(0, 0), line)
    assert RAT.on_line(p, line)
    aux = InaccessibleAux(rp(3, 0), rp(5, 0), rp(2, 2), rp(4, 4),
                          RAT.combo(rp(3, 0), p, F(1, 2)))
    assert line == connect_inaccessible_d0(RAT, g, h, p, aux)


def test_reflection_route_fixed_point_degenerates():
    g = RAT.horizontal(F(0))     # y = 0
    h = RAT.vertical(F(0))       # x = 0
    p = rp(2, 2)                 # on the bisector of the right angle
    with pytest.raises(DegeneracyError):
        connect_inaccessible_hjelmslev(RAT, g, h, p)


def test_reflect_point_basics():
    l = RAT.join(rp(0, 0), rp(1, 1))
    assert reflect_point(RAT, rp(3, 0), l) == rp(0, 3)
    v = RAT.vertical(F(2))
    assert reflect_point(RAT, rp(5, 1), v) == rp(-1, 1)


def test_points_on_line_helper():
    l = RAT.sloped(F(2), F(3))   # y + 2x - 3 = 0
    pts = points_on_line(RAT, l, [F(0), F(1)])
    for p in pts:
        assert RAT.on_line(p, l)
