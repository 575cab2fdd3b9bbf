"""Exact ground scalars: arbitrary-precision rationals and a + b*sqrt(d).

Rational is the stdlib Fraction: it already stores a normalized numerator
over a positive denominator with gcd 1, which is exactly the canonical form
the rest of the package relies on.  QuadExt adjoins a single square root
(default sqrt(2)); its sign is decided exactly by case analysis, never by
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

Rational = Fraction


def rational(num, den=1) -> Fraction:
    return Fraction(num, den)


def rational_arith(x: Fraction, y: Fraction, op: str) -> Fraction:
    """Dispatch one exact rational operation; op in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise DomainError("rational division by zero")
        return x / y
    raise DomainError(f"unknown op {op!r}")


def sign_of(x) -> int:
    """Sign of a Fraction or of anything exposing .sign()."""
    if isinstance(x, Fraction) or isinstance(x, int):
        return (x > 0) - (x < 0)
    return x.sign()


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    return str(x)


def _is_squarefree(n: int) -> bool:
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadExt:
    """Element a + b*sqrt(d) of a real quadratic extension, d squarefree > 1."""

    a: Fraction
    b: Fraction
    d: int = 2

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.d <= 1 or not _is_squarefree(self.d):
            raise DomainError(f"radicand {self.d} must be squarefree and > 1")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError(f"mixed radicands {self.d} and {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def inv(self) -> "QuadExt":
        # conjugate over norm; a^2 - d b^2 = 0 would force sqrt(d) rational
        n = self.a * self.a - self.d * self.b * self.b
        if self.is_zero():
            raise DomainError("inverse of zero")
        assert n != 0
        return QuadExt(self.a / n, -self.b / n, self.d)

    def sign(self) -> int:
        """Exact sign: compare a^2 with d*b^2 when a and b disagree."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: a + b*sqrt(d) > 0 iff a^2 > d b^2 when a > 0
        cmp = self.a * self.a - self.d * self.b * self.b
        mag = (cmp > 0) - (cmp < 0)
        return sa * mag if mag != 0 else 0

    def __lt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        return (self - o).sign() >= 0

    def __str__(self):
        return f"{self.a}+{self.b}*sqrt({self.d})"

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, d={self.d})"


def quadext_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DomainError("quadext division by zero")
        return x / y
    raise DomainError(f"unknown op {op!r}")


def parse_quadext(text: str, d: int = 2) -> QuadExt:
    """Parse the canonical text form 'a+b*sqrt(d)'."""
    s = text.strip().replace(" ", "")
    marker = "*sqrt("
    i = s.find(marker)
    if i < 0:
        return QuadExt(Fraction(s), Fraction(0), d)
    if not s.endswith(")"):
        raise DomainError(f"cannot parse quadext {text!r}")
    rad = int(s[i + len(marker):-1])
    head = s[:i]
    # split head into 'a' and 'b' at the last +/- that is not a leading sign
    # and not inside the numerator/denominator of b
    j = max(head.rfind("+", 1), head.rfind("-", 1))
    while j > 0 and head[j - 1] in "+-/":
        j = max(head.rfind("+", 1, j), head.rfind("-", 1, j))
    if j <= 0:
        a, b = "0", head
    else:
        a, b = head[:j], head[j:]
    return QuadExt(Fraction(a), Fraction(b.lstrip("+")), rad)


def format_quadext(x: QuadExt) -> str:
    return str(x)
