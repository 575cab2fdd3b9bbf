"""Command-line front door: run named suites and counterexamples.

Exit codes: 0 when the suite met its expected pattern (counterexample
suites expect a verified failure), 1 when it did not, 2 for usage errors,
3 for capability mismatches such as order predicates over an unordered
system.  Identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import counterexamples as cx
from .configtheorems import run_suite, sample_inaccessible_aux, \
    connect_inaccessible_d0, connect_inaccessible_hjelmslev
from .errors import CapabilityError, DegeneracyError, DomainError
from .harmonic import (INF, HarmonicAux, cross_ratio, fourth_harmonic,
                       harmonic_scale, mobius_apply, mobius_from_three_pairs)
from .identities import (check_alternative_laws, check_alternator_antisymmetry,
                         check_commuting_triple_associates, check_eight_square,
                         check_four_identity, check_inverse_identities,
                         check_monotonicity, check_norm_multiplicative,
                         check_wagner_identity)
from .numbersystems import archimedean_witness, is_zero, make_system
from .planes import Point, plane_for
from .segcalc import (default_frame, geometric_add, geometric_mul,
                      geometric_neg, geometric_recip)
from .svgout import segcalc_trace_scene
from .verdicts import Verdict

ORDERED = ("rational", "quadext", "ratfunc", "laurent", "hilbert")
ALL_SYSTEMS = ("rational", "quadext", "quaternion", "octonion",
               "ratfunc", "laurent", "hilbert")
PLANE_SYSTEMS = ALL_SYSTEMS + ("moulton",)


def _plane(system, t_window, s_window):
    return plane_for(system, t_window=t_window, s_window=s_window)


def _suite_payload(name, system, n, seed, holds, fails, degenerate,
                   first_witness=None, variant=None):
    return {
        "theorem": name,
        "variant": variant,
        "system": system,
        "n": n,
        "seed": seed,
        "holds": holds,
        "fails": fails,
        "degenerate": degenerate,
        "first_witness": first_witness,
    }


def _from_verdict(name, system, n, seed, verdict: Verdict):
    if verdict.holds:
        return _suite_payload(name, system, n, seed, n, 0, 0), True
    if verdict.fails:
        witness = {"witness": verdict.witness, "note": verdict.note}
        return _suite_payload(name, system, n, seed, 0, 1, 0, witness), False
    return _suite_payload(name, system, n, seed, 0, 0, 1,
                          {"note": verdict.note}), False


# --- individual suite runners ---------------------------------------------------

def _run_config_theorem(theorem, variant):
    def run(system, n, seed, tw, sw):
        plane = _plane(system, tw, sw)
        res = run_suite(plane, theorem, variant, n, seed)
        return res.as_dict(), res.fails == 0 and res.holds > 0, None
    return run


def _run_law(name, fn, needs_order=False, fixed=False):
    def run(system, n, seed, tw, sw):
        if fixed:
            verdict = fn(n, seed)
        else:
            sysd = make_system(system, t_window=tw, s_window=sw)
            if needs_order and not sysd.ordered:
                raise CapabilityError(f"{system} is not ordered")
            verdict = fn(sysd, n, seed)
        payload, ok = _from_verdict(name, system if not fixed else "rational",
                                    n, seed, verdict)
        return payload, ok, None
    return run


def _run_between(system, n, seed, tw, sw):
    plane = _plane(system, tw, sw)
    plane._require_order()
    rng = random.Random(f"between:{system}:{seed}")
    holds = degenerate = 0
    first = None
    sysd = plane.system
    for _ in range(n):
        p = Point(sysd.sample(rng), sysd.sample(rng))
        q = Point(sysd.sample(rng), sysd.sample(rng))
        if p == q:
            degenerate += 1
            continue
        join = plane.join(p, q)
        if system == "moulton" and getattr(join, "kind", None) != "vertical":
            from .configtheorems import points_on_line
            mid = points_on_line(plane, join, [(p.x + q.x) / 2])[0]
            if mid == p or mid == q:
                degenerate += 1
                continue
        else:
            mid = plane.combo(p, q, Fraction(1, 2))
        try:
            ok = (plane.between(p, mid, q)
                  and not plane.between(mid, p, q)
                  and not plane.between(p, q, mid))
        except DomainError:
            degenerate += 1
            continue
        if ok:
            holds += 1
        elif first is None:
            first = {"p": str(p), "q": str(q)}
    fails = n - holds - degenerate
    return (_suite_payload("between", system, n, seed, holds, fails,
                           degenerate, first), fails == 0, None)


def _run_pasch(system, n, seed, tw, sw):
    plane = _plane(system, tw, sw)
    plane._require_order()
    rng = random.Random(f"pasch:{system}:{seed}")
    res_h = res_f = res_d = 0
    first = None
    sysd = plane.system
    for _ in range(n):
        pts = [Point(sysd.sample(rng), sysd.sample(rng)) for _ in range(3)]
        cut1 = Point(sysd.sample(rng), sysd.sample(rng))
        cut2 = Point(sysd.sample(rng), sysd.sample(rng))
        try:
            if cut1 == cut2:
                res_d += 1
                continue
            line = plane.join(cut1, cut2)
            verdict = plane.pasch_check(*pts, line)
        except (DomainError, DegeneracyError):
            res_d += 1
            continue
        if verdict.holds:
            res_h += 1
        elif verdict.fails:
            res_f += 1
            if first is None:
                first = {"witness": verdict.witness, "note": verdict.note}
        else:
            res_d += 1
    return (_suite_payload("pasch", system, n, seed, res_h, res_f, res_d,
                           first), res_f == 0, None)


def _run_harmonic_independence(system, n, seed, tw, sw):
    plane = _plane(system, tw, sw)
    sysd = plane.system
    rng = random.Random(f"hind:{system}:{seed}")
    base = None
    holds = fails = degenerate = 0
    first = None
    a = Point(plane.scalar(0), plane.scalar(0))
    b = Point(plane.scalar(2), plane.scalar(0))
    c = Point(plane.scalar(1), plane.scalar(0))
    for _ in range(n):
        w = Point(sysd.sample(rng), sysd.sample(rng))
        o = Point(sysd.sample(rng), sysd.sample(rng))
        if w == c:
            degenerate += 1
            continue
        try:
            d = fourth_harmonic(plane, a, b, c, HarmonicAux(plane.join(c, w), o))
        except (DegeneracyError, DomainError):
            degenerate += 1
            continue
        if base is None:
            base = d
            holds += 1
        elif d == base:
            holds += 1
        else:
            fails += 1
            if first is None:
                first = {"expected": str(base), "got": str(d)}
    return (_suite_payload("harmonic-independence", system, n, seed, holds,
                           fails, degenerate, first), fails == 0, None)


def _run_harmonic_scale(system, n, seed, tw, sw):
    plane = _plane(system, tw, sw)
    a = Point(plane.scalar(0), plane.scalar(0))
    b = Point(plane.scalar(1), plane.scalar(0))
    c = Point(plane.scalar(3), plane.scalar(0))
    pts = harmonic_scale(plane, a, b, c, n)
    chain = [b] + pts
    ok = all(plane.between(chain[i - 1], chain[i], chain[i + 1])
             for i in range(1, len(chain) - 1))
    ok = ok and all(plane.between(a, p, c) for p in pts)
    distinct = len({str((p.x, p.y)) for p in pts}) == len(pts)
    payload = _suite_payload("harmonic-scale", system, n, seed,
                             n if ok and distinct else 0,
                             0 if ok and distinct else 1, 0,
                             None if ok and distinct else
                             {"note": "chain violated"})
    return payload, ok and distinct, None


def _run_mobius(system, n, seed, tw, sw):
    sysd = make_system(system)
    rng = random.Random(f"mobius:{system}:{seed}")
    holds = fails = degenerate = 0
    first = None
    for _ in range(n):
        xs = [Fraction(v) for v in rng.sample(range(-25, 26), 3)]
        ys = [Fraction(v) for v in rng.sample(range(-25, 26), 3)]
        try:
            m = mobius_from_three_pairs(sysd, list(zip(xs, ys)))
        except DomainError:
            degenerate += 1
            continue
        quad = [Fraction(v) for v in rng.sample(range(-30, 31), 4)]
        imgs = [mobius_apply(m, x) for x in quad]
        if any(v is INF for v in imgs):
            degenerate += 1
            continue
        ok = all(mobius_apply(m, x) == y for x, y in zip(xs, ys))
        ok = ok and cross_ratio(*imgs) == cross_ratio(*quad)
        if ok:
            holds += 1
        else:
            fails += 1
            if first is None:
                first = {"pairs": [str(x) for x in xs]}
    return (_suite_payload("mobius-crossratio", system, n, seed, holds, fails,
                           degenerate, first), fails == 0, None)


def _run_segcalc(system, n, seed, tw, sw):
    plane = _plane(system, tw, sw)
    frame = default_frame(plane)
    sysd = plane.system
    rng = random.Random(f"segcalc:{system}:{seed}")
    holds = fails = 0
    first = None
    trace = []
    for k in range(n):
        a, b = sysd.sample(rng), sysd.sample(rng)
        use_trace = trace == [] and system == "rational"
        t = trace if use_trace else None
        ok = geometric_add(plane, frame, a, b, trace=t) == a + b
        ok = ok and geometric_mul(plane, frame, a, b) == a * b
        ok = ok and geometric_neg(plane, frame, a) == -a
        if not is_zero(a):
            ok = ok and geometric_recip(plane, frame, a) == sysd.inv(a)
        if ok:
            holds += 1
        else:
            fails += 1
            if first is None:
                first = {"a": str(a), "b": str(b)}
    svg = (lambda: segcalc_trace_scene(trace).to_svg()) if trace else None
    return (_suite_payload("segcalc", system, n, seed, holds, fails, 0,
                           first), fails == 0, svg)


def _run_archimedean(system, n, seed, tw, sw):
    sysd = make_system(system, t_window=tw, s_window=sw)
    if not sysd.ordered:
        raise CapabilityError(f"{system} is not ordered")
    one = sysd.one
    if system == "laurent":
        from .numbersystems import LaurentSeries
        small = LaurentSeries.term(1, 1)
    elif system == "hilbert":
        from .numbersystems import HilbertElement
        small = HilbertElement.s()
    else:
        small = sysd.from_fraction(Fraction(1, 3))
    witness = archimedean_witness(sysd, small, one, 10 ** 6)
    found = witness is not None
    ok = found == sysd.archimedean
    payload = _suite_payload("archimedean", system, 1, seed,
                             int(ok), int(not ok), 0,
                             {"witness_n": witness,
                              "expected_archimedean": sysd.archimedean})
    return payload, ok, None


def _run_inaccessible(reflective):
    def run(system, n, seed, tw, sw):
        plane = _plane(system, tw, sw)
        rng = random.Random(f"inacc:{seed}")
        g = plane.horizontal(plane.scalar(0))
        h = plane.join(Point(plane.scalar(0), plane.scalar(0)),
                       Point(plane.scalar(1), plane.scalar(1)))
        p = Point(plane.scalar(1), plane.scalar(2))
        target = plane.join(p, plane.meet(g, h))
        holds = degenerate = fails = 0
        first = None
        for _ in range(n):
            try:
                if reflective:
                    line = connect_inaccessible_hjelmslev(plane, g, h, p)
                else:
                    aux = sample_inaccessible_aux(plane, g, h, p, rng)
                    line = connect_inaccessible_d0(plane, g, h, p, aux)
            except (DegeneracyError, DomainError):
                degenerate += 1
                continue
            if line == target:
                holds += 1
            else:
                fails += 1
                if first is None:
                    first = {"got": repr(line)}
        name = "inaccessible-reflection" if reflective else "inaccessible-d0"
        return (_suite_payload(name, system, n, seed, holds, fails,
                               degenerate, first), fails == 0, None)
    return run


def _run_counterexample(name):
    def run(system, n, seed, tw, sw):
        if name == "pappus-hilbert":
            rep = cx.pappus_fails_hilbert(t_window=tw, s_window=sw)
        else:
            rep = cx.ALL_COUNTEREXAMPLES[name]()
        svg = None
        if name == "desargues-moulton":
            svg = lambda: cx.moulton_report_scene(rep).to_svg()
        return rep.as_dict(), rep.verified, svg
    return run


@dataclass
class SuiteSpec:
    name: str
    systems: tuple
    run: Callable
    demonstrates: str
    default_n: int = 200


def _registry():
    suites = [
        SuiteSpec("pappus", PLANE_SYSTEMS, _run_config_theorem("pappus", None),
                  "hexagon with vertices on two lines: opposite-side meets collinear"),
        SuiteSpec("desargues-d0", PLANE_SYSTEMS, _run_config_theorem("desargues", "d0"),
                  "perspective triangles lie axially (general case)"),
        SuiteSpec("desargues-d1", PLANE_SYSTEMS, _run_config_theorem("desargues", "d1"),
                  "one vertex of a triangle on a side of the other"),
        SuiteSpec("desargues-d2a", PLANE_SYSTEMS, _run_config_theorem("desargues", "d2a"),
                  "each triangle has a vertex on a side of the other"),
        SuiteSpec("desargues-d2b", PLANE_SYSTEMS, _run_config_theorem("desargues", "d2b"),
                  "two side meets lie on the matching vertex joins"),
        SuiteSpec("desargues-d2c", PLANE_SYSTEMS, _run_config_theorem("desargues", "d2c"),
                  "one triangle has two vertices on sides of the other"),
        SuiteSpec("desargues-little", PLANE_SYSTEMS, _run_config_theorem("desargues", "little"),
                  "center of perspective lies on the axis"),
        SuiteSpec("between", PLANE_SYSTEMS, _run_between,
                  "midpoints fall strictly between segment endpoints"),
        SuiteSpec("pasch", PLANE_SYSTEMS, _run_pasch,
                  "a line entering a triangle through one side leaves "
                  "through exactly one other"),
        SuiteSpec("alternative-laws", ALL_SYSTEMS,
                  _run_law("alternative-laws", check_alternative_laws),
                  "weak associative laws x(xy)=(xx)y and mirror forms"),
        SuiteSpec("antisymmetry", ALL_SYSTEMS,
                  _run_law("antisymmetry", check_alternator_antisymmetry),
                  "the associator changes sign under argument swaps"),
        SuiteSpec("inverse-identities", ALL_SYSTEMS,
                  _run_law("inverse-identities", check_inverse_identities),
                  "a(a^-1 b) = b, (ba)a^-1 = b, (ab)^-1 = b^-1 a^-1"),
        SuiteSpec("four-identity", ALL_SYSTEMS,
                  _run_law("four-identity", check_four_identity),
                  "the associator cocycle identity of any distributive ring"),
        SuiteSpec("norm-mult", ("quaternion", "octonion"),
                  _run_law("norm-mult", check_norm_multiplicative),
                  "the norm of a product equals the product of the norms"),
        SuiteSpec("eight-square", ("rational",),
                  _run_law("eight-square", check_eight_square, fixed=True),
                  "two sums of eight squares multiply to a sum of eight squares"),
        SuiteSpec("commuting-associator", ("octonion",),
                  _run_law("commuting-associator",
                           check_commuting_triple_associates, fixed=True),
                  "pairwise commuting triples associate"),
        SuiteSpec("monotonicity", ORDERED,
                  _run_law("monotonicity", check_monotonicity, needs_order=True),
                  "order survives addition and positive multiplication"),
        SuiteSpec("wagner", ("rational",),
                  _run_law("wagner", check_wagner_identity, fixed=True),
                  "L(AB-BA)^2 = (AB-BA)^2 L for 2x2 matrices without forcing "
                  "AB = BA"),
        SuiteSpec("harmonic-independence", ("rational", "quadext", "octonion"),
                  _run_harmonic_independence,
                  "the fourth harmonic point ignores the auxiliary choices",
                  default_n=100),
        SuiteSpec("harmonic-scale", ("rational", "quadext"), _run_harmonic_scale,
                  "iterated harmonic steps plant endless distinct points on a "
                  "segment", default_n=50),
        SuiteSpec("mobius-crossratio", ("rational", "quadext"), _run_mobius,
                  "three point pairs determine the fractional-linear map; "
                  "cross ratio is preserved"),
        SuiteSpec("segcalc", ("rational", "quadext", "hilbert", "octonion"),
                  _run_segcalc,
                  "ruler constructions reproduce +, *, negatives, reciprocals"),
        SuiteSpec("archimedean", ORDERED, _run_archimedean,
                  "bounded search for n with n*a > b, certified absent for "
                  "the series systems", default_n=1),
        SuiteSpec("inaccessible-d0", ("rational",), _run_inaccessible(False),
                  "connect a point to an unreachable intersection by triangles",
                  default_n=100),
        SuiteSpec("inaccessible-reflection", ("rational",), _run_inaccessible(True),
                  "the same connection by three line reflections", default_n=1),
        SuiteSpec("counterexample.pappus-hilbert", ("hilbert",),
                  _run_counterexample("pappus-hilbert"),
                  "hexagon theorem breaks over the twisted series skew field"),
        SuiteSpec("counterexample.desargues-octonion", ("octonion",),
                  _run_counterexample("desargues-octonion"),
                  "triangles theorem breaks over the octonions; the "
                  "two-incidence cases survive"),
        SuiteSpec("counterexample.desargues-moulton", ("moulton",),
                  _run_counterexample("desargues-moulton"),
                  "triangles theorem breaks once negative slopes bend"),
        SuiteSpec("counterexample.sas-pseudolength", ("quadext",),
                  _run_counterexample("sas-pseudolength"),
                  "side-angle-side breaks under the sheared length"),
    ]
    return {s.name: s for s in suites}


REGISTRY = _registry()


def list_text() -> str:
    lines = ["available suites:"]
    for name in REGISTRY:
        spec = REGISTRY[name]
        lines.append(f"  {name:36s} systems: {', '.join(spec.systems)}")
        lines.append(f"  {'':36s} {spec.demonstrates}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="planelab",
        description="exact number systems, their planes, and the theorems "
                    "that tell them apart")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="show every registered suite")
    run = sub.add_parser("run", help="run one suite")
    run.add_argument("--suite", required=True)
    run.add_argument("--system", default=None)
    run.add_argument("--n", type=int, default=None)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument("--trunc-t", type=int, default=16, dest="trunc_t")
    run.add_argument("--trunc-s", type=int, default=16, dest="trunc_s")
    run.add_argument("--json", action="store_true")
    run.add_argument("--svg", default=None, metavar="PATH")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    if args.command == "list":
        out.write(list_text())
        return 0
    spec = REGISTRY.get(args.suite)
    if spec is None:
        sys.stderr.write(f"unknown suite {args.suite!r}; try `planelab list`\n")
        return 2
    system = args.system or spec.systems[0]
    if system not in spec.systems:
        if system in PLANE_SYSTEMS:
            sys.stderr.write(
                f"suite {spec.name!r} cannot run over {system!r} "
                f"(needs one of: {', '.join(spec.systems)})\n")
            return 3
        sys.stderr.write(f"unknown system {system!r}\n")
        return 2
    n = args.n if args.n is not None else spec.default_n
    if n < 1:
        sys.stderr.write("--n must be at least 1\n")
        return 2
    try:
        payload, ok, svg_maker = spec.run(system, n, args.seed,
                                          args.trunc_t, args.trunc_s)
    except CapabilityError as exc:
        sys.stderr.write(f"capability error: {exc}\n")
        return 3
    except DomainError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    if args.svg:
        if svg_maker is None:
            sys.stderr.write("note: this suite has no figure output\n")
        else:
            with open(args.svg, "w") as fh:
                fh.write(svg_maker())
    if args.json:
        out.write(json.dumps(payload, ensure_ascii=False) + "\n")
    else:
        out.write(_text_report(spec.name, system, payload, ok))
    return 0 if ok else 1


def _text_report(suite, system, payload, ok) -> str:
    lines = [f"suite {suite} over {system}"]
    for key, val in payload.items():
        if key in ("construction", "witness", "first_witness") and val:
            lines.append(f"  {key}:")
            body = json.dumps(val, ensure_ascii=False, indent=2)
            lines.extend("    " + ln for ln in body.splitlines())
        elif val is not None:
            lines.append(f"  {key}: {val}")
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    sys.exit(main())
