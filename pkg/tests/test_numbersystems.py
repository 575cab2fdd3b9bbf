import random
from fractions import Fraction as F

import pytest

from planelab.errors import CapabilityError, DomainError, PrecisionError
from planelab.numbersystems import (HilbertElement, LaurentSeries, Octonion,
                                    Quaternion, RatFunc, SYSTEM_NAMES,
                                    archimedean_witness, make_system,
                                    rational_between, sys_arith, sys_inv,
                                    sys_sign)
from planelab.scalars import QuadExt

# Reference eight-unit multiplication table (row = left factor, column =
# right factor), transcribed entry by entry from the classical presentation.
# "+3" means +e3, "-0" means -1.
OCT_TABLE = [
    "+0 +1 +2 +3 +4 +5 +6 +7",
    "+1 -0 +3 -2 +5 -4 -7 +6",
    "+2 -3 -0 +1 +6 +7 -4 -5",
    "+3 +2 -1 -0 +7 -6 +5 -4",
    "+4 -5 -6 -7 -0 +1 +2 +3",
    "+5 +4 -7 +6 -1 -0 -3 +2",
    "+6 +7 +4 -5 -2 +3 -0 -1",
    "+7 -6 +5 +4 -3 -2 +1 -0",
]


def table_entry(i, k):
    cell = OCT_TABLE[i].split()[k]
    sign = 1 if cell[0] == "+" else -1
    return sign, int(cell[1:])


def test_quaternion_unit_table():
    e = [Quaternion.unit(i) for i in range(4)]
    assert e[1] * e[2] == e[3]
    assert e[2] * e[3] == e[1]
    assert e[3] * e[1] == e[2]
    assert e[2] * e[1] == -e[3]
    assert e[3] * e[2] == -e[1]
    assert e[1] * e[3] == -e[2]
    for i in (1, 2, 3):
        assert e[i] * e[i] == Quaternion(-1)


def test_octonion_table_reproduced_by_doubling():
    e = [Octonion.unit(i) for i in range(8)]
    for i in range(8):
        for k in range(8):
            sign, idx = table_entry(i, k)
            assert e[i] * e[k] == e[idx] * sign, f"e{i}*e{k}"


def test_octonion_associativity_fails_with_witness():
    e = [Octonion.unit(i) for i in range(8)]
    assert (e[1] * e[2]) * e[4] == e[7]
    assert e[1] * (e[2] * e[4]) == -e[7]


def test_quaternion_norm_and_conjugate():
    rng = random.Random(11)
    sysq = make_system("quaternion")
    for _ in range(200):
        a = sysq.sample(rng)
        b = sysq.sample(rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert a * a.conj() == Quaternion(a.norm())


def test_octonion_norm_and_conjugate():
    rng = random.Random(12)
    syso = make_system("octonion")
    for _ in range(200):
        a = syso.sample(rng)
        b = syso.sample(rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert a * a.conj() == Octonion.scalar(a.norm())


def test_octonion_inverse():
    rng = random.Random(13)
    syso = make_system("octonion")
    for _ in range(50):
        a = syso.sample(rng)
        if a.is_zero():
            continue
        assert a * a.inv() == Octonion.scalar(1)
        assert a.inv() * a == Octonion.scalar(1)


def test_octonion_text_form():
    x = Octonion.from_coeffs([1, 0, F(-1, 2), 0, 0, 0, 0, 3])
    assert str(x) == "1 - 1/2 e2 + 3 e7"
    assert str(Octonion.scalar(0)) == "0"


# --- rational functions -----------------------------------------------------

def test_ratfunc_sign_ultimate_behavior():
    t = RatFunc.t()
    assert (RatFunc.const(5) - t).sign() == -1
    assert (t - RatFunc.const(10 ** 6)).sign() == 1
    assert RatFunc.const(F(-3, 7)).sign() == -1


def test_ratfunc_field_ops():
    t = RatFunc.t()
    f = (t * t - 1) * (t + 1).inv()
    assert f == t - 1
    assert (f * f.inv()) == RatFunc.const(1)
    with pytest.raises(DomainError):
        RatFunc.const(0).inv()


def test_ratfunc_monotonicity_sampled():
    rng = random.Random(5)
    sysr = make_system("ratfunc")
    for _ in range(150):
        a, b, c = (sysr.sample(rng) for _ in range(3))
        if (a - b).sign() > 0:
            assert ((a + c) - (b + c)).sign() > 0
            if c.sign() > 0:
                assert (a * c - b * c).sign() > 0


# --- Laurent series ---------------------------------------------------------

def test_laurent_geometric_series_inverse():
    one_minus_t = LaurentSeries.const(1) - LaurentSeries.term(1, 1)
    inv = one_minus_t.inv(terms=8)
    assert inv.start == 0
    assert inv.coeffs == tuple(F(1) for _ in range(8))
    assert inv.trunc == 8


def test_laurent_sign_examples():
    t = LaurentSeries.term(1, 1)
    assert (LaurentSeries.const(1) - 10 ** 6 * t).sign() == 1
    assert t.sign() == 1
    assert LaurentSeries(0, ()).sign() == 0


def test_laurent_inverse_roundtrip_random():
    rng = random.Random(21)
    sysl = make_system("laurent")
    for _ in range(100):
        x = sysl.sample(rng)
        if x.is_zero():
            continue
        y = x.inv(terms=10)
        assert (x * y - 1).is_zero()
        assert (y * x - 1).is_zero()


def test_laurent_truncation_propagation():
    x = LaurentSeries(0, (1, 1), trunc=4)
    y = LaurentSeries(1, (1,), trunc=3)
    assert (x + y).trunc == 3
    assert (x * y).trunc == 3  # min(4 + val(y), 3 + val(x)) = min(5, 3)


def test_laurent_precision_errors():
    hidden = LaurentSeries(0, (), trunc=3)
    with pytest.raises(PrecisionError):
        hidden.sign()
    with pytest.raises(PrecisionError):
        hidden.inv()
    with pytest.raises(DomainError):
        LaurentSeries(0, ()).inv()


# --- the twisted series skew field ------------------------------------------

def s_el():
    return HilbertElement.s()


def t_el():
    return HilbertElement.t()


def test_hilbert_twist_rule():
    s, t = s_el(), t_el()
    assert t * s == 2 * (s * t)
    assert t * s != s * t
    # t^p s^q = 2^(p q) s^q t^p
    for p in (-2, -1, 1, 2, 3):
        for q in (-2, 1, 2):
            tp = HilbertElement.monomial(1, 0, p)
            sq = HilbertElement.monomial(1, q, 0)
            expected = HilbertElement.monomial(F(2) ** (p * q), q, p)
            assert tp * sq == expected


def test_hilbert_monomial_inverse_exact():
    s, t = s_el(), t_el()
    st = s * t
    inv = st.inv()
    assert inv == 2 * (s.inv() * t.inv())
    assert st * inv == HilbertElement.const(1)
    assert inv.is_exact()


def test_hilbert_inverse_roundtrip_random():
    rng = random.Random(31)
    sysh = make_system("hilbert", t_window=8, s_window=8)
    for _ in range(60):
        x = sysh.sample(rng)
        if x.is_zero():
            continue
        y = sys_inv(sysh, x)
        assert (x * y - 1).is_zero()
        assert (y * x - 1).is_zero()


def test_hilbert_sign_and_witnesses():
    s, t = s_el(), t_el()
    assert (s - 10 ** 6 * t).sign() == 1
    assert (HilbertElement.const(1) - 10 ** 6 * s).sign() == 1
    assert (t - s).sign() == -1
    assert HilbertElement().sign() == 0


def test_hilbert_order_is_total_and_monotone():
    rng = random.Random(41)
    sysh = make_system("hilbert")
    seen_noncommuting = False
    for _ in range(200):
        a, b, c = (sysh.sample(rng) for _ in range(3))
        sab = (a - b).sign()
        assert sab in (-1, 0, 1)
        if sab > 0:
            assert ((a + c) - (b + c)).sign() > 0
            if c.sign() > 0:
                assert (a * c - b * c).sign() > 0
                assert (c * a - c * b).sign() > 0
        if not (a * b - b * a).is_zero():
            seen_noncommuting = True
    assert seen_noncommuting


def test_hilbert_trunc_gates_leading_term():
    hidden = HilbertElement({0: LaurentSeries(0, (), trunc=2, var="s")}, t_trunc=2)
    with pytest.raises(PrecisionError):
        hidden.sign()
    with pytest.raises(DomainError):
        HilbertElement().inv()


def test_hilbert_text_form():
    s, t = s_el(), t_el()
    x = 2 * s - s * t + HilbertElement.monomial(F(1, 2), -1, 2)
    assert str(x) == "2*s^1*t^0 - 1*s^1*t^1 + 1/2*s^-1*t^2"


# --- shared algebraic laws across all systems --------------------------------

def test_law_matrix_across_systems():
    rng = random.Random(99)
    failures_comm = set()
    failures_assoc = set()
    for name in SYSTEM_NAMES:
        sysd = make_system(name, t_window=6, s_window=6)
        for _ in range(60):
            a, b, c = (sysd.sample(rng) for _ in range(3))
            assert _zero((a + b) + c - (a + (b + c)))
            assert _zero(a + b - (b + a))
            assert _zero(a * (b + c) - (a * b + a * c))
            assert _zero((b + c) * a - (b * a + c * a))
            if not _zero(a * b - b * a):
                failures_comm.add(name)
            if not _zero((a * b) * c - a * (b * c)):
                failures_assoc.add(name)
    assert failures_comm == {"quaternion", "octonion", "hilbert"}
    assert failures_assoc == {"octonion"}


def _zero(x):
    if isinstance(x, F):
        return x == 0
    return x.is_zero()


def test_capability_gate_on_sign():
    syso = make_system("octonion")
    with pytest.raises(CapabilityError):
        sys_sign(syso, Octonion.scalar(1))


def test_sys_arith_surface():
    sysr = make_system("rational")
    assert sys_arith(sysr, F(1, 3), F(1, 6), "add") == F(1, 2)
    assert sys_inv(sysr, F(7, 2)) == F(2, 7)


# --- Archimedean witness and the dense rational subfield ---------------------

def test_archimedean_witness_rational():
    sysr = make_system("rational")
    assert archimedean_witness(sysr, F(1, 3), F(10), 100) == 31
    # oracle: direct scan
    assert min(n for n in range(1, 100) if n * F(1, 3) > 10) == 31


def test_archimedean_witness_fails_on_series():
    sysl = make_system("laurent")
    t = LaurentSeries.term(1, 1)
    assert archimedean_witness(sysl, t, LaurentSeries.const(1), 10 ** 6) is None
    sysh = make_system("hilbert")
    assert archimedean_witness(sysh, s_el(), HilbertElement.const(1), 10 ** 6) is None
    assert archimedean_witness(sysh, t_el(), s_el(), 10 ** 6) is None


def test_rational_between_goldens():
    sysr = make_system("rational")
    assert rational_between(sysr, F(1, 3), F(1, 2)) == F(3, 7)
    assert rational_between(sysr, F(1, 2), F(3, 2)) == 1
    assert rational_between(sysr, F(-2), F(-1)) == F(-3, 2)
    assert rational_between(sysr, F(0), F(1)) == F(1, 2)


def test_rational_between_random_and_quadext():
    rng = random.Random(55)
    sysr = make_system("rational")
    for _ in range(100):
        a = F(rng.randint(-40, 40), rng.randint(1, 12))
        b = a + F(rng.randint(1, 30), rng.randint(1, 12))
        rho = rational_between(sysr, a, b)
        assert a < rho < b
    sysq = make_system("quadext")
    a = QuadExt(0, 1)      # sqrt(2)
    b = QuadExt(0, F(3, 2))
    r = rational_between(sysq, a, b)
    assert r.b == 0 and a < r < b
    r2 = rational_between(sysq, QuadExt(-5, -1), QuadExt(-5, F(-1, 2)))
    assert r2.b == 0 and QuadExt(-5, -1) < r2 < QuadExt(-5, F(-1, 2))


def test_rational_between_capability_gate():
    sysl = make_system("laurent")
    with pytest.raises(CapabilityError):
        rational_between(sysl, LaurentSeries.const(0), LaurentSeries.const(1))
