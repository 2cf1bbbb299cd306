"""Rational functions in one generic (transcendental) marker over a tower.

Deformations replace a truncated root tail by ``theta * x^M`` with theta a
generic scalar: nothing met later may vanish on it.  Realizing theta as a
genuine transcendental (num/den polynomials in theta with tower
coefficients) makes that literal: a value is zero iff it is identically
zero in theta, and every nonzero value is invertible.
"""

from .errors import DivisionByZero
from .rationals import is_rat


class ThetaElem:
    __slots__ = ("s", "num", "den")

    def __init__(self, session, num, den=None):
        self.s = session
        self.num = _trim(num)
        self.den = _trim(den) if den is not None else [session.one()]
        if not self.den:
            raise DivisionByZero("theta element with zero denominator")

    @classmethod
    def const(cls, session, value):
        return cls(session, [session.num(value)])

    @classmethod
    def marker(cls, session):
        return cls(session, [session.zero(), session.one()])

    def _coerce(self, other):
        if isinstance(other, ThetaElem):
            return other
        if isinstance(other, int) or is_rat(other) or hasattr(other, "is_zero"):
            return ThetaElem.const(self.s, other)
        return NotImplemented

    def is_zero(self):
        """Certified: zero iff identically zero in the marker."""
        return all(c.is_zero() for c in self.num)

    def structurally_zero(self):
        return not self.num

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return ThetaElem(self.s, n, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return ThetaElem(self.s, [-c for c in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ThetaElem(self.s, _pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero theta element")
        return ThetaElem(self.s, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        diff = _trim(_psub(_pmul(self.num, o.den), _pmul(o.num, self.den)))
        return all(c.is_zero() for c in diff)

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        def side(p):
            parts = []
            for i, c in enumerate(p):
                if c.is_zero():
                    continue
                mono = "" if i == 0 else ("T" if i == 1 else "T^%d" % i)
                cs = repr(c)
                parts.append(cs if not mono else ("%s*%s" % (cs, mono) if cs != "1" else mono))
            return " + ".join(parts) or "0"

        if len(self.den) == 1 and (self.den[0] - 1).is_zero():
            return side(self.num)
        return "(%s)/(%s)" % (side(self.num), side(self.den))


def _coeff_zero(c):
    sz = getattr(c, "structurally_zero", None)
    return sz() if sz is not None else c.is_zero()


def _trim(p):
    p = list(p) if p is not None else []
    while p and _coeff_zero(p[-1]):
        p.pop()
    return p


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return out


def _psub(a, b):
    return _padd(a, [-y for y in b])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [a[0].s.zero() if hasattr(a[0], "s") else a[0] * 0 for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if _coeff_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out
