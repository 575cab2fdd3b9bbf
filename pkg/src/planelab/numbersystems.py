"""The gallery of number systems behind one arithmetic interface.

Seven systems are registered: rational, quadext, quaternion, octonion,
ratfunc (rational functions ordered by ultimate behavior, the indeterminate
non-Archimedeanly large), laurent (formal Laurent series, the indeterminate
non-Archimedeanly small) and hilbert (formal series in s and t over the
rationals twisted by t*s = 2*s*t, an ordered proper skew field).

Every element type is immutable and implements +, -, * exactly.  Inversion
and sign go through the SystemDescriptor so that truncated series can carry
their working windows with them.  Capability flags are data, not types:
callers probe them and report failures as verdicts instead of crashing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .errors import CapabilityError, DomainError, PrecisionError
from .scalars import QuadExt

DEFAULT_T_TERMS = 16
DEFAULT_S_TERMS = 16


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=4096)
def _pow2(k: int) -> Fraction:
    return Fraction(2) ** k


# ---------------------------------------------------------------------------
# quaternions and octonions
# ---------------------------------------------------------------------------

class Quaternion:
    """Quaternion with exact rational coefficients r0 + r1 e1 + r2 e2 + r3 e3.

    Internally the four coefficients share one positive denominator and the
    five integers are kept coprime, which keeps the hot multiplication path
    on machine integers instead of Fraction objects.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, r0, r1=0, r2=0, r3=0):
        fr = [Fraction(x) for x in (r0, r1, r2, r3)]
        d = 1
        for f in fr:
            d = d * f.denominator // math.gcd(d, f.denominator)
        self._n = tuple(f.numerator * (d // f.denominator) for f in fr)
        self._d = d
        self._reduce()

    @classmethod
    def _raw(cls, n, d) -> "Quaternion":
        obj = object.__new__(cls)
        obj._n = n
        obj._d = d
        obj._reduce()
        return obj

    def _reduce(self):
        g = math.gcd(self._d, *self._n)
        if g > 1:
            d = self._d // g
            self._n = tuple(v // g for v in self._n)
            self._d = d

    @property
    def r(self):
        d = self._d
        return tuple(Fraction(v, d) for v in self._n)

    @classmethod
    def unit(cls, i: int) -> "Quaternion":
        c = [0, 0, 0, 0]
        c[i] = 1
        return cls(*c)

    def __add__(self, other):
        other = _as_quat(other)
        da, db = self._d, other._d
        return Quaternion._raw(
            tuple(a * db + b * da for a, b in zip(self._n, other._n)), da * db)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_quat(other)
        da, db = self._d, other._d
        return Quaternion._raw(
            tuple(a * db - b * da for a, b in zip(self._n, other._n)), da * db)

    def __rsub__(self, other):
        return _as_quat(other) - self

    def __neg__(self):
        return Quaternion._raw(tuple(-a for a in self._n), self._d)

    def __mul__(self, other):
        if isinstance(other, int):
            return Quaternion._raw(tuple(a * other for a in self._n), self._d)
        if isinstance(other, Fraction):
            return Quaternion._raw(tuple(a * other.numerator for a in self._n),
                                   self._d * other.denominator)
        a0, a1, a2, a3 = self._n
        b0, b1, b2, b3 = other._n
        return Quaternion._raw((
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ), self._d * other._d)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        try:
            other = _as_quat(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self):
        return hash((self._n, self._d))

    def is_zero(self) -> bool:
        return not any(self._n)

    def conj(self) -> "Quaternion":
        n = self._n
        return Quaternion._raw((n[0], -n[1], -n[2], -n[3]), self._d)

    def norm(self) -> Fraction:
        return Fraction(sum(v * v for v in self._n), self._d * self._d)

    def inv(self) -> "Quaternion":
        if self.is_zero():
            raise DomainError("inverse of zero quaternion")
        n = self._n
        nsq = sum(v * v for v in n)
        return Quaternion._raw(
            (n[0] * self._d, -n[1] * self._d, -n[2] * self._d, -n[3] * self._d),
            nsq)

    def scalar_part(self) -> Fraction:
        return Fraction(self._n[0], self._d)

    def __str__(self):
        return _hypercomplex_str(self.r)

    def __repr__(self):
        return f"Quaternion{self.r}"


def _as_quat(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, Fraction)):
        return Quaternion(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Quaternion")


class Octonion:
    """Octonion stored as a pair of quaternions a = q + Q e.

    The product follows the doubling rule
    (q + Q e)(r + R e) = (q r - conj(R) Q) + (R q + Q conj(r)) e,
    which reproduces the classical eight-unit multiplication table with
    e4 = e, e5 = e1 e, e6 = e2 e, e7 = e3 e.
    """

    __slots__ = ("q", "Q")

    def __init__(self, q: Quaternion, Q: Quaternion):
        self.q = q
        self.Q = Q

    @classmethod
    def from_coeffs(cls, coeffs) -> "Octonion":
        c = [Fraction(x) for x in coeffs]
        if len(c) != 8:
            raise DomainError("octonion needs 8 coefficients")
        return cls(Quaternion(*c[:4]), Quaternion(*c[4:]))

    @classmethod
    def unit(cls, i: int) -> "Octonion":
        c = [0] * 8
        c[i] = 1
        return cls.from_coeffs(c)

    @classmethod
    def scalar(cls, x) -> "Octonion":
        return cls(Quaternion(x), Quaternion(0))

    @property
    def coeffs(self):
        return self.q.r + self.Q.r

    def __add__(self, other):
        other = _as_oct(other)
        return Octonion(self.q + other.q, self.Q + other.Q)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_oct(other)
        return Octonion(self.q - other.q, self.Q - other.Q)

    def __rsub__(self, other):
        return _as_oct(other) - self

    def __neg__(self):
        return Octonion(-self.q, -self.Q)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion(self.q * other, self.Q * other)
        q, Q = self.q, self.Q
        r, R = other.q, other.Q
        return Octonion(q * r - R.conj() * Q, R * q + Q * r.conj())

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Octonion(self.q * other, self.Q * other)
        return NotImplemented

    def __eq__(self, other):
        try:
            other = _as_oct(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.q == other.q and self.Q == other.Q

    def __hash__(self):
        return hash((self.q, self.Q))

    def is_zero(self) -> bool:
        return self.q.is_zero() and self.Q.is_zero()

    def conj(self) -> "Octonion":
        return Octonion(self.q.conj(), -self.Q)

    def norm(self) -> Fraction:
        return self.q.norm() + self.Q.norm()

    def inv(self) -> "Octonion":
        n = self.norm()
        if n == 0:
            raise DomainError("inverse of zero octonion")
        return self.conj() * (Fraction(1) / n)

    def scalar_part(self) -> Fraction:
        return self.q.r[0]

    def __str__(self):
        return _hypercomplex_str(self.coeffs)

    def __repr__(self):
        return f"Octonion{tuple(self.coeffs)}"


def _as_oct(x) -> Octonion:
    if isinstance(x, Octonion):
        return x
    if isinstance(x, (int, Fraction)):
        return Octonion.scalar(x)
    if isinstance(x, Quaternion):
        return Octonion(x, Quaternion(0))
    raise TypeError(f"cannot coerce {type(x).__name__} to Octonion")


def _hypercomplex_str(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        unit = "" if i == 0 else f" e{i}"
        mag = abs(c)
        body = f"{mag}{unit}" if (i == 0 or mag != 1) else f"e{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# polynomials and rational functions
# ---------------------------------------------------------------------------

def _pstrip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    n = max(len(p), len(q))
    return _pstrip([ (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n) ])


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _pstrip(out)


def _pdivmod(p, q):
    if not q:
        raise DomainError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    while len(rem) >= len(q) and _pstrip(rem):
        rem = list(_pstrip(rem))
        if len(rem) < len(q):
            break
        k = len(rem) - len(q)
        c = rem[-1] / q[-1]
        quo[k] = c
        for i, b in enumerate(q):
            rem[k + i] -= c * b
        rem = list(_pstrip(rem))
    return _pstrip(quo), _pstrip(rem)


def _pgcd(p, q):
    a, b = _pstrip(p), _pstrip(q)
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = tuple(c / lead for c in a)
    return a


def _pstr(p, var="t"):
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = f"{mag}"
        elif i == 1:
            body = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{i}" if mag == 1 else f"{mag}*{var}^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class RatFunc:
    """Quotient of polynomials in t, ordered by behavior for large t.

    Canonical form: gcd(num, den) = 1 and den monic, so equality is
    structural and the sign is the sign of the numerator's leading
    coefficient.  Under this order t is larger than every integer.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(Fraction(1),)):
        num = _pstrip(Fraction(c) for c in num)
        den = _pstrip(Fraction(c) for c in den)
        if not den:
            raise DomainError("rational function with zero denominator")
        if num:
            g = _pgcd(num, den)
            if len(g) > 1:
                num, _ = _pdivmod(num, g)
                den, _ = _pdivmod(den, g)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, x) -> "RatFunc":
        return cls((Fraction(x),))

    @classmethod
    def t(cls) -> "RatFunc":
        return cls((Fraction(0), Fraction(1)))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to RatFunc")

    def __add__(self, other):
        o = self._coerce(other)
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                       _pmul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return not self.num

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise DomainError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def sign(self) -> int:
        if not self.num:
            return 0
        return _sgn(self.num[-1])

    def __str__(self):
        if len(self.den) == 1:
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# formal Laurent series
# ---------------------------------------------------------------------------

class LaurentSeries:
    """Formal Laurent series sum of c_i t^i with exact rational coefficients.

    ``trunc`` is the first exponent about which nothing is known; None means
    the stored terms are the whole series.  Binary operations propagate the
    tightest valid truncation; under this order t is positive and smaller
    than every positive rational.
    """

    __slots__ = ("start", "coeffs", "trunc", "var")

    def __init__(self, start=0, coeffs=(), trunc=None, var="t"):
        coeffs = [Fraction(c) for c in coeffs]
        if trunc is not None:
            keep = trunc - start
            coeffs = coeffs[:max(0, keep)]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            start += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            start = 0
        self.start = start
        self.coeffs = tuple(coeffs)
        self.trunc = trunc
        self.var = var

    @classmethod
    def const(cls, x, var="t") -> "LaurentSeries":
        return cls(0, (Fraction(x),), None, var)

    @classmethod
    def term(cls, c, exp, var="t") -> "LaurentSeries":
        return cls(exp, (Fraction(c),), None, var)

    def coeff(self, exp) -> Fraction:
        if self.trunc is not None and exp >= self.trunc:
            raise PrecisionError(f"coefficient of {self.var}^{exp} beyond truncation")
        if self.start <= exp < self.start + len(self.coeffs):
            return self.coeffs[exp - self.start]
        return Fraction(0)

    def _lower(self):
        # least exponent the true series could have
        if self.coeffs:
            return self.start
        return self.trunc if self.trunc is not None else None  # None: exactly 0

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            if other.var != self.var:
                raise DomainError(f"mixed series variables {self.var} and {other.var}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentSeries.const(other, self.var)
        raise TypeError(f"cannot coerce {type(other).__name__} to LaurentSeries")

    def __add__(self, other):
        o = self._coerce(other)
        trunc = _min_trunc(self.trunc, o.trunc)
        if not self.coeffs and self.trunc is None:
            return LaurentSeries(o.start, o.coeffs, trunc, self.var)
        if not o.coeffs and o.trunc is None:
            return LaurentSeries(self.start, self.coeffs, trunc, self.var)
        lo = min(self.start, o.start)
        hi = max(self.start + len(self.coeffs), o.start + len(o.coeffs))
        out = []
        for e in range(lo, hi):
            a = self.coeffs[e - self.start] if self.start <= e < self.start + len(self.coeffs) else 0
            b = o.coeffs[e - o.start] if o.start <= e < o.start + len(o.coeffs) else 0
            out.append(a + b)
        return LaurentSeries(lo, out, trunc, self.var)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return LaurentSeries(self.start, [-c for c in self.coeffs], self.trunc, self.var)

    def __mul__(self, other):
        o = self._coerce(other)
        # exact zero absorbs even truncated factors
        if (not self.coeffs and self.trunc is None) or (not o.coeffs and o.trunc is None):
            return LaurentSeries(0, (), None, self.var)
        trunc = None
        for t, lowsrc in ((self.trunc, o), (o.trunc, self)):
            if t is None:
                continue
            low = lowsrc._lower()
            if low is None:
                continue
            bound = t + low
            trunc = bound if trunc is None else min(trunc, bound)
        if not self.coeffs or not o.coeffs:
            return LaurentSeries(0, (), trunc, self.var)
        lo = self.start + o.start
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        if trunc is not None:
            out = out[:max(0, trunc - lo)]
        bound = len(out)
        for i, a in enumerate(self.coeffs):
            if not a or i >= bound:
                continue
            for j, b in enumerate(o.coeffs):
                if i + j >= bound:
                    break
                if b:
                    out[i + j] += a * b
        return LaurentSeries(lo, out, trunc, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        """True when zero as far as the known window reaches."""
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.trunc is None

    def inv(self, terms=None) -> "LaurentSeries":
        if not self.coeffs:
            if self.trunc is None:
                raise DomainError("inverse of zero series")
            raise PrecisionError("leading term unknown, cannot invert")
        n = self.start
        if self.trunc is None and len(self.coeffs) == 1:
            return LaurentSeries(-n, (Fraction(1) / self.coeffs[0],), None, self.var)
        if self.trunc is not None:
            window = self.trunc - n
            out_trunc = self.trunc - 2 * n
        else:
            window = terms if terms is not None else DEFAULT_T_TERMS
            out_trunc = -n + window
        lead = Fraction(1) / self.coeffs[0]
        beta = [lead]
        for l in range(1, window):
            acc = Fraction(0)
            for j in range(1, l + 1):
                a = self.coeffs[j] if j < len(self.coeffs) else 0
                if a:
                    acc += a * beta[l - j]
            beta.append(-lead * acc)
        return LaurentSeries(-n, beta, out_trunc, self.var)

    def sign(self) -> int:
        if self.coeffs:
            return _sgn(self.coeffs[0])
        if self.trunc is None:
            return 0
        raise PrecisionError("sign of truncated series with no known terms")

    def scale_powers(self, k: int) -> "LaurentSeries":
        """Multiply the coefficient of t^e by 2**(k*e) for every e."""
        if k == 0:
            return self
        out = [c * _pow2(k * (self.start + j)) if c else c
               for j, c in enumerate(self.coeffs)]
        return LaurentSeries(self.start, out, self.trunc, self.var)

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for j, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                e = self.start + j
                if e == 0:
                    body = f"{abs(c)}"
                elif e == 1:
                    body = f"{abs(c)}*{self.var}"
                else:
                    body = f"{abs(c)}*{self.var}^{e}"
                if not parts:
                    parts.append(body if c > 0 else f"-{body}")
                else:
                    parts.append(("+ " if c > 0 else "- ") + body)
            body = " ".join(parts)
        if self.trunc is not None:
            body += f" + O({self.var}^{self.trunc})"
        return body

    def __repr__(self):
        return f"LaurentSeries({self.start}, {self.coeffs!r}, trunc={self.trunc}, var={self.var!r})"


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


# ---------------------------------------------------------------------------
# the twisted two-parameter series skew field (t s = 2 s t)
# ---------------------------------------------------------------------------

class HilbertElement:
    """Formal series sum of P_i(s) t^i where each P_i is a Laurent series in s.

    Multiplication is twisted by the monomial rule
    (s^k t^i)(s^n t^m) = 2^(i*n) s^(k+n) t^(i+m),
    which makes the system a proper ordered skew field.  Each t level
    carries its own s truncation; ``t_trunc`` is the first t exponent about
    which nothing is known (None = exact in t).
    """

    __slots__ = ("levels", "t_trunc")

    def __init__(self, levels=None, t_trunc=None):
        clean = {}
        for i, p in (levels or {}).items():
            if t_trunc is not None and i >= t_trunc:
                continue
            if p.coeffs or p.trunc is not None:
                clean[i] = p
        self.levels = clean
        self.t_trunc = t_trunc

    @classmethod
    def monomial(cls, c, s_exp=0, t_exp=0) -> "HilbertElement":
        c = Fraction(c)
        if c == 0:
            return cls()
        return cls({t_exp: LaurentSeries.term(c, s_exp, var="s")})

    @classmethod
    def const(cls, x) -> "HilbertElement":
        return cls.monomial(x, 0, 0)

    @classmethod
    def s(cls) -> "HilbertElement":
        return cls.monomial(1, 1, 0)

    @classmethod
    def t(cls) -> "HilbertElement":
        return cls.monomial(1, 0, 1)

    @property
    def coeffs(self):
        """Flat map (s_exp, t_exp) -> coefficient over the known window."""
        out = {}
        for i, p in sorted(self.levels.items()):
            for j, c in enumerate(p.coeffs):
                if c != 0:
                    out[(p.start + j, i)] = c
        return out

    @property
    def s_trunc(self):
        bounds = [p.trunc for p in self.levels.values() if p.trunc is not None]
        return min(bounds) if bounds else None

    def _coerce(self, other):
        if isinstance(other, HilbertElement):
            return other
        if isinstance(other, (int, Fraction)):
            return HilbertElement.const(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to HilbertElement")

    def _t_lower(self):
        if self.levels:
            return min(self.levels)
        return self.t_trunc if self.t_trunc is not None else None

    def __add__(self, other):
        o = self._coerce(other)
        trunc = _min_trunc(self.t_trunc, o.t_trunc)
        out = {}
        for i in set(self.levels) | set(o.levels):
            a = self.levels.get(i)
            b = o.levels.get(i)
            out[i] = a + b if (a is not None and b is not None) else (a if a is not None else b)
        return HilbertElement(out, trunc)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return HilbertElement({i: -p for i, p in self.levels.items()}, self.t_trunc)

    def __mul__(self, other):
        o = self._coerce(other)
        if (not self.levels and self.t_trunc is None) or (not o.levels and o.t_trunc is None):
            return HilbertElement()
        trunc = None
        for t, src in ((self.t_trunc, o), (o.t_trunc, self)):
            if t is None:
                continue
            low = src._t_lower()
            if low is None:
                continue
            bound = t + low
            trunc = bound if trunc is None else min(trunc, bound)
        out = {}
        for i, p in self.levels.items():
            for m, q in o.levels.items():
                k = i + m
                if trunc is not None and k >= trunc:
                    continue
                # t^i passes the s powers of q, scaling s^n by 2^(i*n)
                contrib = p * q.scale_powers(i)
                out[k] = out[k] + contrib if k in out else contrib
        return HilbertElement(out, trunc)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def is_zero(self) -> bool:
        """True when zero as far as every known window reaches."""
        return all(p.is_zero() for p in self.levels.values())

    def is_exact(self) -> bool:
        return self.t_trunc is None and all(p.is_exact() for p in self.levels.values())

    def _leading(self):
        """(t_exp, series) of the least t level, demanding it is known."""
        known = sorted(i for i, p in self.levels.items() if p.coeffs)
        unknown = sorted(i for i, p in self.levels.items() if not p.coeffs and p.trunc is not None)
        if not known:
            if unknown or self.t_trunc is not None:
                raise PrecisionError("leading t level unknown")
            raise DomainError("zero element has no leading term")
        n = known[0]
        if unknown and unknown[0] < n:
            raise PrecisionError("a lower t level is truncated away")
        return n, self.levels[n]

    def sign(self) -> int:
        if self.is_zero():
            if self.is_exact():
                return 0
            raise PrecisionError("sign of truncated element with no known terms")
        _, p = self._leading()
        return p.sign()

    def inv(self, t_terms=None, s_terms=None) -> "HilbertElement":
        t_terms = t_terms if t_terms is not None else DEFAULT_T_TERMS
        s_terms = s_terms if s_terms is not None else DEFAULT_S_TERMS
        n, p_n = self._leading()
        # a single t level inverts levelwise and stays exact in t;
        # monomials come out fully exact since the s inverse does too
        if self.t_trunc is None and len(self.levels) == 1:
            return HilbertElement({-n: p_n.inv(terms=s_terms).scale_powers(-n)})
        if self.t_trunc is not None:
            window = self.t_trunc - n
            out_trunc = self.t_trunc - 2 * n
        else:
            window = t_terms
            out_trunc = -n + window
        lead_inv = p_n.inv(terms=s_terms)
        zero_s = LaurentSeries(0, (), None, "s")
        q = {-n: lead_inv.scale_powers(-n)}
        # right inverse: the t^m coefficient of self * result must vanish,
        # so solve P_n * twist(Q_{m-n}, n) = -sum_{i>n} P_i * twist(Q_{m-i}, i)
        for m in range(1, window):
            acc = zero_s
            for i in range(n + 1, n + m + 1):
                p_i = self.levels.get(i)
                if p_i is None:
                    continue
                qk = q.get(m - i)
                if qk is None:
                    continue
                acc = acc + p_i * qk.scale_powers(i)
            q[m - n] = (lead_inv * (-acc)).scale_powers(-n)
        return HilbertElement(q, out_trunc)

    def __str__(self):
        flat = self.coeffs
        if not flat:
            body = "0"
        else:
            parts = []
            for (k, i) in sorted(flat, key=lambda ki: (ki[1], ki[0])):
                c = flat[(k, i)]
                term = f"{abs(c)}*s^{k}*t^{i}"
                if not parts:
                    parts.append(term if c > 0 else f"-{term}")
                else:
                    parts.append(("+ " if c > 0 else "- ") + term)
            body = " ".join(parts)
        marks = []
        if self.t_trunc is not None:
            marks.append(f"O(t^{self.t_trunc})")
        st = self.s_trunc
        if st is not None:
            marks.append(f"O(s^{st})")
        return body + ("" if not marks else " + " + " + ".join(marks))

    def __repr__(self):
        return f"HilbertElement({self.coeffs}, t_trunc={self.t_trunc})"


# ---------------------------------------------------------------------------
# system descriptors and the generic operation surface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SystemDescriptor:
    """Capability flags plus the handful of closures checkers need."""

    name: str
    commutative: bool
    associative: bool
    alternative: bool
    ordered: bool
    archimedean: bool
    zero: object
    one: object
    from_fraction: Callable
    inv: Callable
    sign: Optional[Callable]
    sample: Callable
    t_window: int = DEFAULT_T_TERMS
    s_window: int = DEFAULT_S_TERMS

    def __post_init__(self):
        if self.associative and not self.alternative:
            raise DomainError("associative system must be flagged alternative")

    def __repr__(self):
        return f"<system {self.name}>"


def _sample_fraction(rng, lo=-5, hi=5):
    n = rng.randint(lo, hi)
    d = rng.choice((1, 1, 1, 2, 3))
    return Fraction(n, d)


def _sample_rational(rng):
    return _sample_fraction(rng)


def _sample_quadext(rng):
    return QuadExt(_sample_fraction(rng), _sample_fraction(rng, -3, 3))


def _sample_quaternion(rng):
    return Quaternion(*(_sample_fraction(rng, -3, 3) for _ in range(4)))


def _sample_octonion(rng):
    return Octonion.from_coeffs([_sample_fraction(rng, -3, 3) for _ in range(8)])


def _sample_ratfunc(rng):
    num = [_sample_fraction(rng, -3, 3) for _ in range(rng.randint(1, 3))]
    den = [_sample_fraction(rng, -3, 3) for _ in range(rng.randint(1, 3))]
    if not _pstrip(den):
        den = [Fraction(1)]
    return RatFunc(num, den)


def _sample_laurent(rng):
    start = rng.randint(-2, 2)
    coeffs = [_sample_fraction(rng, -3, 3) for _ in range(rng.randint(1, 3))]
    return LaurentSeries(start, coeffs)


def _sample_hilbert(rng):
    out = HilbertElement()
    for _ in range(rng.randint(1, 2)):
        c = rng.randint(-3, 3)
        if c == 0:
            c = 1
        out = out + HilbertElement.monomial(c, rng.randint(-2, 2), rng.randint(-2, 2))
    return out


def make_system(name: str, t_window: int = DEFAULT_T_TERMS,
                s_window: int = DEFAULT_S_TERMS) -> SystemDescriptor:
    """Build the descriptor for a registered system name."""
    if name == "rational":
        return SystemDescriptor(
            name, True, True, True, True, True,
            Fraction(0), Fraction(1), Fraction,
            lambda x: _frac_inv(x), lambda x: _sgn(x), _sample_rational)
    if name == "quadext":
        return SystemDescriptor(
            name, True, True, True, True, True,
            QuadExt(0, 0), QuadExt(1, 0), lambda f: QuadExt(Fraction(f), 0),
            lambda x: x.inv(), lambda x: x.sign(), _sample_quadext)
    if name == "quaternion":
        return SystemDescriptor(
            name, False, True, True, False, False,
            Quaternion(0), Quaternion(1), lambda f: Quaternion(Fraction(f)),
            lambda x: x.inv(), None, _sample_quaternion)
    if name == "octonion":
        return SystemDescriptor(
            name, False, False, True, False, False,
            Octonion.scalar(0), Octonion.scalar(1),
            lambda f: Octonion.scalar(Fraction(f)),
            lambda x: x.inv(), None, _sample_octonion)
    if name == "ratfunc":
        return SystemDescriptor(
            name, True, True, True, True, False,
            RatFunc((0,)), RatFunc((1,)), lambda f: RatFunc.const(Fraction(f)),
            lambda x: x.inv(), lambda x: x.sign(), _sample_ratfunc)
    if name == "laurent":
        return SystemDescriptor(
            name, True, True, True, True, False,
            LaurentSeries(0, ()), LaurentSeries.const(1),
            lambda f: LaurentSeries.const(Fraction(f)),
            lambda x: x.inv(terms=t_window), lambda x: x.sign(), _sample_laurent,
            t_window, s_window)
    if name == "hilbert":
        return SystemDescriptor(
            name, False, True, True, True, False,
            HilbertElement(), HilbertElement.const(1),
            lambda f: HilbertElement.const(Fraction(f)),
            lambda x: x.inv(t_terms=t_window, s_terms=s_window),
            lambda x: x.sign(), _sample_hilbert, t_window, s_window)
    raise DomainError(f"unknown system {name!r}")


def _frac_inv(x: Fraction) -> Fraction:
    if x == 0:
        raise DomainError("inverse of zero")
    return Fraction(1) / x


SYSTEM_NAMES = ("rational", "quadext", "quaternion", "octonion",
                "ratfunc", "laurent", "hilbert")


def sys_arith(sys: SystemDescriptor, x, y, op: str):
    """Exact add/sub/mul in the given system."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise DomainError(f"unknown op {op!r}")


def sys_inv(sys: SystemDescriptor, x):
    return sys.inv(x)


def sys_sign(sys: SystemDescriptor, x) -> int:
    if not sys.ordered:
        raise CapabilityError(f"{sys.name} is not ordered")
    return sys.sign(x)


def is_zero(x) -> bool:
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()


def archimedean_witness(sys: SystemDescriptor, a, b, n_max: int):
    """Least n <= n_max with n*a > b, or None when n_max*a <= b.

    n*a grows monotonically in n, so the bound is checked once and the
    least witness located by bisection; both steps use exact signs only.
    """
    if not sys.ordered:
        raise CapabilityError(f"{sys.name} is not ordered")
    if sys.sign(a) <= 0 or sys.sign(b) <= 0:
        raise DomainError("witness search needs positive a and b")

    def beats(n):
        return sys.sign(sys.from_fraction(Fraction(n)) * a - b) > 0

    if not beats(n_max):
        return None
    lo, hi = 1, n_max
    while lo < hi:
        mid = (lo + hi) // 2
        if beats(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _exact_floor(x) -> int:
    if isinstance(x, (int, Fraction)):
        return math.floor(x)
    if isinstance(x, QuadExt):
        approx = x.a + x.b * Fraction(math.isqrt(x.d * 10 ** 12), 10 ** 6)
        n = math.floor(approx)
        while x < QuadExt(n, 0):
            n -= 1
        while x >= QuadExt(n + 1, 0):
            n += 1
        return n
    raise CapabilityError(f"no exact floor for {type(x).__name__}")


def rational_between(sys: SystemDescriptor, a, b):
    """A rational strictly between a and b, found by the dense-subfield recipe.

    Translate so the lower endpoint is positive, take n with n <= a < n+1;
    if n+1 already separates, use it, otherwise pick m with m(b-a) > 1 and
    return (k+1)/m for k = floor(m a).  The result is returned embedded in
    the system's rational subfield.
    """
    if not sys.ordered:
        raise CapabilityError(f"{sys.name} is not ordered")
    if not sys.archimedean:
        raise CapabilityError(f"{sys.name} is not Archimedean")
    if sys.sign(b - a) <= 0:
        raise DomainError("needs a < b")

    shift = 0
    if sys.sign(a) <= 0:
        shift = 1 - _exact_floor(a)
        a = a + sys.from_fraction(Fraction(shift))
        b = b + sys.from_fraction(Fraction(shift))

    n = _exact_floor(a)
    cand = Fraction(n + 1)
    if sys.sign(b - sys.from_fraction(cand)) > 0:
        rho = cand
    else:
        gap = b - a
        m = _exact_floor(sys.inv(gap)) + 1
        k = _exact_floor(sys.from_fraction(Fraction(m)) * a)
        rho = Fraction(k + 1, m)
    rho -= shift
    return sys.from_fraction(rho)
