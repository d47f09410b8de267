"""Exact arithmetic in K = Q(zeta), zeta a primitive 8th root of unity.

Elements are stored as four integer numerators over one positive common
denominator, in the power basis 1, z, z^2, z^3 with z^4 = -1.  Every
operation returns a canonical representative (content and denominator
coprime), so structural equality is field equality.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = [
    "FieldElement", "DivisionByZero", "ParseError", "ZERO", "ONE", "ZETA", "XI",
    "SQRT2", "HALF", "parse_literal", "fe", "xi_pow", "is_root_of_unity",
]


class DivisionByZero(ZeroDivisionError):
    pass


class ParseError(ValueError):
    pass


def _canon(c0, c1, c2, c3, d):
    if d < 0:
        c0, c1, c2, c3, d = -c0, -c1, -c2, -c3, -d
    if d != 1:
        g = gcd(gcd(gcd(c0, c1), gcd(c2, c3)), d)
        if g != 1:
            c0 //= g; c1 //= g; c2 //= g; c3 //= g; d //= g
    return c0, c1, c2, c3, d


class FieldElement:
    """Element n0/d + n1/d z + n2/d z^2 + n3/d z^3 of Q(zeta_8)."""

    __slots__ = ("c", "d", "_h")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        vals = [Fraction(v) for v in (c0, c1, c2, c3)]
        d = 1
        for v in vals:
            d = d * v.denominator // gcd(d, v.denominator)
        nums = [v.numerator * (d // v.denominator) for v in vals]
        c0, c1, c2, c3, d = _canon(nums[0], nums[1], nums[2], nums[3], d)
        self.c = (c0, c1, c2, c3)
        self.d = d
        self._h = None

    @classmethod
    def _raw(cls, c, d):
        # c, d assumed canonical
        obj = object.__new__(cls)
        obj.c = c
        obj.d = d
        obj._h = None
        return obj

    @classmethod
    def _make(cls, c0, c1, c2, c3, d):
        if d != 1:
            c0, c1, c2, c3, d = _canon(c0, c1, c2, c3, d)
        obj = object.__new__(cls)
        obj.c = (c0, c1, c2, c3)
        obj.d = d
        obj._h = None
        return obj

    # ---- coercion -------------------------------------------------------
    @staticmethod
    def coerce(x) -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, int):
            return FieldElement._raw((x, 0, 0, 0), 1)
        if isinstance(x, Fraction):
            return FieldElement._raw((x.numerator, 0, 0, 0), x.denominator)
        if isinstance(x, str):
            return parse_literal(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")

    @property
    def coeffs(self):
        d = self.d
        return tuple(Fraction(n, d) for n in self.c)

    def is_zero(self) -> bool:
        return self.c == (0, 0, 0, 0)

    def is_rational(self) -> bool:
        c = self.c
        return c[1] == 0 and c[2] == 0 and c[3] == 0

    def __bool__(self):
        return self.c != (0, 0, 0, 0)

    # ---- arithmetic -----------------------------------------------------
    def __add__(self, o):
        if not isinstance(o, FieldElement):
            if isinstance(o, (int, Fraction)):
                o = FieldElement.coerce(o)
            else:
                return NotImplemented
        a = self.c; b = o.c
        d1 = self.d; d2 = o.d
        if d1 == d2:
            if d1 == 1:
                return FieldElement._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]), 1)
            return FieldElement._make(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3], d1)
        if d2 == 1:
            return FieldElement._raw((a[0] + b[0] * d1, a[1] + b[1] * d1, a[2] + b[2] * d1,
                                      a[3] + b[3] * d1), d1)
        if d1 == 1:
            return FieldElement._raw((a[0] * d2 + b[0], a[1] * d2 + b[1], a[2] * d2 + b[2],
                                      a[3] * d2 + b[3]), d2)
        return FieldElement._make(a[0] * d2 + b[0] * d1, a[1] * d2 + b[1] * d1,
                                  a[2] * d2 + b[2] * d1, a[3] * d2 + b[3] * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return FieldElement._raw((-a[0], -a[1], -a[2], -a[3]), self.d)

    def __sub__(self, o):
        if not isinstance(o, FieldElement):
            if isinstance(o, (int, Fraction)):
                o = FieldElement.coerce(o)
            else:
                return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if not isinstance(o, FieldElement):
            if isinstance(o, int):
                a = self.c
                return FieldElement._make(a[0] * o, a[1] * o, a[2] * o, a[3] * o, self.d)
            if isinstance(o, Fraction):
                o = FieldElement.coerce(o)
            else:
                return NotImplemented
        a0, a1, a2, a3 = self.c
        b0, b1, b2, b3 = o.c
        c0 = a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
        c1 = a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
        c2 = a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        d = self.d * o.d
        if d == 1:
            return FieldElement._raw((c0, c1, c2, c3), 1)
        return FieldElement._make(c0, c1, c2, c3, d)

    __rmul__ = __mul__

    def galois(self, k: int) -> "FieldElement":
        """Image under the automorphism z -> z^k (k odd)."""
        k %= 8
        if k % 2 == 0:
            raise ValueError("k must be odd")
        out = [0, 0, 0, 0]
        for i, n in enumerate(self.c):
            e = (i * k) % 8
            if e >= 4:
                out[e - 4] -= n
            else:
                out[e] += n
        return FieldElement._raw(tuple(out), self.d)

    def conjugate(self):
        return self.galois(7)

    def norm(self) -> Fraction:
        p = self * self.galois(3) * self.galois(5) * self.galois(7)
        assert p.is_rational()
        return Fraction(p.c[0], p.d)

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("inverse of zero in K")
        if self.is_rational():
            n = self.c[0]
            if n < 0:
                return FieldElement._raw((-self.d, 0, 0, 0), -n)
            return FieldElement._raw((self.d, 0, 0, 0), n)
        rest = self.galois(3) * self.galois(5) * self.galois(7)
        p = self * rest
        n = Fraction(p.c[0], p.d)
        return rest * FieldElement.coerce(1 / n)

    def __truediv__(self, o):
        o = FieldElement.coerce(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return FieldElement.coerce(o) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        r = ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # ---- comparison / hashing ------------------------------------------
    def __eq__(self, o):
        if isinstance(o, FieldElement):
            return self.c == o.c and self.d == o.d
        if isinstance(o, (int, Fraction)):
            return self == FieldElement.coerce(o)
        return NotImplemented

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        h = self._h
        if h is None:
            h = self._h = hash((self.c, self.d))
        return h

    def __complex__(self):
        import cmath
        z = cmath.exp(1j * cmath.pi / 4)
        return sum(n / self.d * z ** i for i, n in enumerate(self.c))

    def __repr__(self):
        return f"FieldElement({format_literal(self)!r})"

    def __str__(self):
        return format_literal(self)

    def to_literal(self) -> str:
        return format_literal(self)


def format_literal(x: FieldElement) -> str:
    names = ("", "z", "z2", "z3")
    parts = []
    for i, n in enumerate(x.c):
        if n == 0:
            continue
        q = Fraction(n, x.d)
        sign = "-" if q < 0 else "+"
        q = abs(q)
        mag = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        if i == 0:
            body = mag
        elif q == 1:
            body = names[i]
        else:
            body = f"{mag}*{names[i]}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


_SYMBOLS = {
    "z": (0, 1, 0, 0), "z1": (0, 1, 0, 0), "z2": (0, 0, 1, 0), "z3": (0, 0, 0, 1),
    "xi": (0, 0, 1, 0), "sqrt2": (0, 1, 0, -1), "i": (0, 0, 1, 0),
}
_TERM = re.compile(r"\s*([+-]?)\s*(?:(\d+)(?:\s*/\s*(\d+))?)?\s*(\*?)\s*([A-Za-z][A-Za-z0-9]*)?\s*")


def parse_literal(s: str) -> FieldElement:
    """Parse a literal like ``1/2 + 3*z - z3``, also accepting ``xi`` and ``sqrt2``."""
    if not isinstance(s, str):
        raise ParseError(f"expected string, got {type(s).__name__}")
    text = s.strip()
    if not text:
        raise ParseError("empty literal")
    acc = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"bad literal {s!r} at {pos}")
        sign, num, den, star, sym = m.groups()
        if not first and not sign:
            raise ParseError(f"missing operator in {s!r}")
        if num is None and sym is None:
            raise ParseError(f"bad term in {s!r}")
        if star and (num is None or sym is None):
            raise ParseError(f"dangling '*' in {s!r}")
        coef = Fraction(1)
        if num is not None:
            if den is not None:
                if int(den) == 0:
                    raise ParseError(f"zero denominator in {s!r}")
                coef = Fraction(int(num), int(den))
            else:
                coef = Fraction(int(num))
        if sign == "-":
            coef = -coef
        vec = (1, 0, 0, 0)
        if sym is not None:
            if sym not in _SYMBOLS:
                raise ParseError(f"unknown symbol {sym!r} in {s!r}")
            vec = _SYMBOLS[sym]
        for i in range(4):
            acc[i] += coef * vec[i]
        pos = m.end()
        first = False
    return FieldElement(*acc)


def fe(x) -> FieldElement:
    """Shorthand coercion used throughout the package."""
    return FieldElement.coerce(x)


ZERO = FieldElement._raw((0, 0, 0, 0), 1)
ONE = FieldElement._raw((1, 0, 0, 0), 1)
ZETA = FieldElement._raw((0, 1, 0, 0), 1)
XI = FieldElement._raw((0, 0, 1, 0), 1)          # primitive 4th root of unity
SQRT2 = FieldElement._raw((0, 1, 0, -1), 1)      # z - z^3
HALF = FieldElement._raw((1, 0, 0, 0), 2)

_XI_POWS = (ONE, XI, -ONE, -XI)


def xi_pow(n: int) -> FieldElement:
    return _XI_POWS[n % 4]


def is_root_of_unity(x: FieldElement, order: int) -> bool:
    return x ** order == ONE
