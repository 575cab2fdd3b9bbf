"""Algebraic-law suites: associator calculus, weak associative and inverse
identities, the four identity, norm multiplicativity with the eight-square
identity, monotonicity, and the 2x2-matrix identity that shows a polynomial
identity need not force commutativity when order is absent.

Every check is exact; a Verdict either holds, or fails carrying the first
witness triple.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapabilityError, DomainError
from .numbersystems import Octonion, SystemDescriptor, is_zero
from .verdicts import Verdict, fails, holds


def _rng(seed, tag):
    return random.Random(f"{tag}:{seed}")


def associator(x, y, z):
    """(xy)z - x(yz); zero exactly when the triple associates."""
    return (x * y) * z - x * (y * z)


def commutator(x, y):
    return x * y - y * x


def _nonzero_sample(sys, rng, tries=50):
    for _ in range(tries):
        x = sys.sample(rng)
        if not is_zero(x):
            return x
    raise DomainError("sampler keeps producing zero")


def check_alternative_laws(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    rng = _rng(seed, f"alt:{sys.name}")
    for k in range(n):
        x, y = sys.sample(rng), sys.sample(rng)
        for tag, val in (("[x,x,y]", associator(x, x, y)),
                         ("[y,x,x]", associator(y, x, x)),
                         ("[x,y,x]", associator(x, y, x))):
            if not is_zero(val):
                return fails({"law": tag, "x": str(x), "y": str(y),
                              "value": str(val)}, note=f"sample {k}")
    return holds(f"{n} samples")


def check_alternator_antisymmetry(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    rng = _rng(seed, f"antisym:{sys.name}")
    for k in range(n):
        a, b, c = (sys.sample(rng) for _ in range(3))
        base = associator(a, b, c)
        for tag, val in (("[b,a,c]", associator(b, a, c)),
                         ("[a,c,b]", associator(a, c, b))):
            if not is_zero(val + base):
                return fails({"law": f"{tag} = -[a,b,c]", "a": str(a), "b": str(b),
                              "c": str(c)}, note=f"sample {k}")
    return holds(f"{n} samples")


def check_inverse_identities(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    rng = _rng(seed, f"inv:{sys.name}")
    for k in range(n):
        a = _nonzero_sample(sys, rng)
        b = sys.sample(rng)
        ai = sys.inv(a)
        checks = [
            ("a(a^-1 b) = b", a * (ai * b) - b),
            ("(a a^-1) b = b", (a * ai) * b - b),
            ("(b a) a^-1 = b", (b * a) * ai - b),
            ("b (a a^-1) = b", b * (a * ai) - b),
        ]
        if not is_zero(b):
            bi = sys.inv(b)
            checks.append(("(ab)^-1 = b^-1 a^-1", sys.inv(a * b) - bi * ai))
        for tag, val in checks:
            if not is_zero(val):
                return fails({"law": tag, "a": str(a), "b": str(b)},
                             note=f"sample {k}")
    return holds(f"{n} samples")


def check_four_identity(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    """[ab,c,d] - [a,bc,d] + [a,b,cd] = a[b,c,d] + [a,b,c]d, a distributive-
    ring identity, so it must pass in every system here."""
    rng = _rng(seed, f"four:{sys.name}")
    for k in range(n):
        a, b, c, d = (sys.sample(rng) for _ in range(4))
        lhs = associator(a * b, c, d) - associator(a, b * c, d) + associator(a, b, c * d)
        rhs = a * associator(b, c, d) + associator(a, b, c) * d
        if not is_zero(lhs - rhs):
            return fails({"a": str(a), "b": str(b), "c": str(c), "d": str(d)},
                         note=f"sample {k}")
    return holds(f"{n} samples")


def check_norm_multiplicative(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    if sys.name not in ("quaternion", "octonion"):
        raise CapabilityError("norm form lives on quaternions and octonions")
    rng = _rng(seed, f"norm:{sys.name}")
    for k in range(n):
        a, b = sys.sample(rng), sys.sample(rng)
        if (a * b).norm() != a.norm() * b.norm():
            return fails({"a": str(a), "b": str(b)}, note=f"sample {k}")
        if not is_zero(a * a.conj() - sys.from_fraction(a.norm())):
            return fails({"a": str(a), "law": "a conj(a) = N(a)"}, note=f"sample {k}")
    return holds(f"{n} samples")


# The eight-square identity, sign for sign.  Row r lists the signed terms
# of the r-th square on the right-hand side as (sign, i, j) for alpha_i*beta_j.
EIGHT_SQUARE_TERMS = (
    ((+1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3), (-1, 4, 4), (-1, 5, 5), (-1, 6, 6), (-1, 7, 7)),
    ((+1, 0, 1), (+1, 1, 0), (+1, 2, 3), (-1, 3, 2), (+1, 4, 5), (-1, 5, 4), (-1, 6, 7), (+1, 7, 6)),
    ((+1, 0, 2), (+1, 2, 0), (-1, 1, 3), (+1, 3, 1), (+1, 4, 6), (-1, 6, 4), (+1, 5, 7), (-1, 7, 5)),
    ((+1, 0, 3), (+1, 3, 0), (+1, 1, 2), (-1, 2, 1), (+1, 4, 7), (-1, 7, 4), (-1, 5, 6), (+1, 6, 5)),
    ((+1, 0, 4), (+1, 4, 0), (-1, 1, 5), (+1, 5, 1), (-1, 2, 6), (+1, 6, 2), (-1, 3, 7), (+1, 7, 3)),
    ((+1, 0, 5), (+1, 5, 0), (+1, 1, 4), (-1, 4, 1), (-1, 2, 7), (+1, 7, 2), (+1, 3, 6), (-1, 6, 3)),
    ((+1, 0, 6), (+1, 6, 0), (+1, 1, 7), (-1, 7, 1), (+1, 2, 4), (-1, 4, 2), (-1, 3, 5), (+1, 5, 3)),
    ((+1, 0, 7), (+1, 7, 0), (-1, 1, 6), (+1, 6, 1), (+1, 2, 5), (-1, 5, 2), (+1, 3, 4), (-1, 4, 3)),
)


def eight_square_sides(alpha, beta, terms=EIGHT_SQUARE_TERMS):
    """(lhs, rhs) of the eight-square identity for two rational 8-tuples."""
    alpha = [Fraction(x) for x in alpha]
    beta = [Fraction(x) for x in beta]
    if len(alpha) != 8 or len(beta) != 8:
        raise DomainError("need 8-tuples")
    lhs = sum(x * x for x in alpha) * sum(x * x for x in beta)
    rhs = Fraction(0)
    for row in terms:
        square = sum(s * alpha[i] * beta[j] for s, i, j in row)
        rhs += square * square
    return lhs, rhs


def eight_square_identity(alpha, beta) -> bool:
    lhs, rhs = eight_square_sides(alpha, beta)
    return lhs == rhs


def eight_square_via_norms(alpha, beta) -> bool:
    """Same statement through the octonion norm route, as a cross-check."""
    a = Octonion.from_coeffs(alpha)
    b = Octonion.from_coeffs(beta)
    return (a * b).norm() == a.norm() * b.norm()


def check_eight_square(n: int, seed: int) -> Verdict:
    rng = _rng(seed, "eightsq")
    for k in range(n):
        alpha = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(8)]
        beta = [Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))) for _ in range(8)]
        if not eight_square_identity(alpha, beta):
            return fails({"alpha": [str(x) for x in alpha],
                          "beta": [str(x) for x in beta]}, note=f"sample {k}")
        if not eight_square_via_norms(alpha, beta):
            return fails({"alpha": [str(x) for x in alpha], "route": "norm"},
                         note=f"sample {k}")
    return holds(f"{n} samples, both routes")


def check_commuting_triple_associates(n: int, seed: int) -> Verdict:
    """Octonion triples built inside one complex subalgebra span{1, u}
    commute pairwise, and then their associator vanishes."""
    rng = _rng(seed, "commtriple")
    for k in range(n):
        u = Octonion.from_coeffs([0] + [Fraction(rng.randint(-3, 3)) for _ in range(7)])
        mk = lambda: (Octonion.scalar(Fraction(rng.randint(-4, 4)))
                      + u * Fraction(rng.randint(-4, 4)))
        a, b, c = mk(), mk(), mk()
        for x, y in ((a, b), (a, c), (b, c)):
            if not is_zero(commutator(x, y)):
                return fails({"pair": (str(x), str(y))},
                             note=f"sample {k}: constructed pair fails to commute")
        if not is_zero(associator(a, b, c)):
            return fails({"a": str(a), "b": str(b), "c": str(c)},
                         note=f"sample {k}")
    return holds(f"{n} constructed triples")


def check_monotonicity(sys: SystemDescriptor, n: int, seed: int) -> Verdict:
    if not sys.ordered:
        raise CapabilityError(f"{sys.name} is not ordered")
    rng = _rng(seed, f"mono:{sys.name}")
    for k in range(n):
        a, b, c = (sys.sample(rng) for _ in range(3))
        if sys.sign(a - b) <= 0:
            a, b = b, a
        if is_zero(a - b):
            continue
        if sys.sign((a + c) - (b + c)) <= 0:
            return fails({"law": "a>b -> a+c>b+c", "a": str(a), "b": str(b),
                          "c": str(c)}, note=f"sample {k}")
        if sys.sign(c) > 0:
            if sys.sign(a * c - b * c) <= 0 or sys.sign(c * a - c * b) <= 0:
                return fails({"law": "a>b, c>0 -> ac>bc and ca>cb",
                              "a": str(a), "b": str(b), "c": str(c)},
                             note=f"sample {k}")
    return holds(f"{n} samples")


@dataclass(frozen=True)
class Matrix2:
    """2x2 matrix of exact rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __mul__(self, other):
        return Matrix2(self.a * other.a + self.b * other.c,
                       self.a * other.b + self.b * other.d,
                       self.c * other.a + self.d * other.c,
                       self.c * other.b + self.d * other.d)

    def __sub__(self, other):
        return Matrix2(self.a - other.a, self.b - other.b,
                       self.c - other.c, self.d - other.d)

    def is_zero(self):
        return self.a == self.b == self.c == self.d == 0


def check_wagner_identity(n: int, seed: int) -> Verdict:
    """L (AB - BA)^2 = (AB - BA)^2 L exactly, with at least one sampled
    non-commuting pair on record: the identity does not force AB = BA."""
    rng = _rng(seed, "wagner")
    witness = None
    for k in range(n):
        mats = [Matrix2(*(Fraction(rng.randint(-5, 5)) for _ in range(4)))
                for _ in range(3)]
        l_mat, a_mat, b_mat = mats
        comm = a_mat * b_mat - b_mat * a_mat
        sq = comm * comm
        if not (l_mat * sq - sq * l_mat).is_zero():
            return fails({"L": l_mat, "A": a_mat, "B": b_mat}, note=f"sample {k}")
        if witness is None and not comm.is_zero():
            witness = {"A": a_mat, "B": b_mat}
    if witness is None:
        return fails({"reason": "no non-commuting pair sampled"},
                     note="identity vacuous on this sample")
    return holds(f"{n} samples; non-commuting witness recorded: {witness}")
