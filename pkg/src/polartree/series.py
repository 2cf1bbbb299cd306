"""Truncated Puiseux series: fractional exponents, exact below a bound.

A series is a sorted list of (exponent, coefficient) terms plus an
exclusive truncation order: the object equals its root below that bound.
Arithmetic propagates exactness bounds, so downstream order measurements
(contacts, valuations, constant terms) are certified rather than hoped.
"""

from .errors import TruncationTooShort
from .rationals import INF, rat, rat_str
from .theta import ThetaElem

_MATH_GCD = __import__("math").gcd


def _cheap_zero(c):
    sz = getattr(c, "structurally_zero", None)
    return sz() if sz is not None else c.is_zero()


class PuiseuxSeries:
    __slots__ = ("terms", "truncation")

    def __init__(self, terms=(), truncation=INF, _trusted=False):
        if _trusted:
            self.terms = list(terms)
        else:
            kept = [(rat(e), c) for e, c in terms if not _cheap_zero(c)]
            kept.sort(key=lambda t: t[0])
            tr = truncation
            self.terms = [(e, c) for e, c in kept if e < tr]
        self.truncation = truncation

    @classmethod
    def zero(cls, truncation=INF):
        return cls((), truncation, _trusted=True)

    @classmethod
    def monomial(cls, coeff, exp, truncation=INF):
        if coeff.is_zero():
            return cls.zero(truncation)
        return cls([(rat(exp), coeff)], truncation, _trusted=True)

    def is_exact(self):
        return self.truncation == INF

    def is_exactly_zero(self):
        return not self.terms and self.is_exact()

    def order(self):
        """Structural lower bound on the x-order (exact when terms certified)."""
        if self.terms:
            return self.terms[0][0]
        return INF if self.is_exact() else self.truncation

    def first_certified_term(self):
        """(exponent, coeff) of the least certified-nonzero term; None if none.

        Prunes proved-zero entries, so the order becomes exact afterwards.
        """
        while self.terms:
            e, c = self.terms[0]
            if c.is_zero():
                self.terms.pop(0)
            else:
                return e, c
        return None

    @property
    def ramification(self):
        n = 1
        for e, _ in self.terms:
            n = n * e.denominator // _MATH_GCD(n, int(e.denominator))
        return n

    def support(self):
        return [e for e, _ in self.terms]

    def coeff(self, e):
        e = rat(e)
        for ee, c in self.terms:
            if ee == e:
                return c
        return None

    def __add__(self, other):
        tr = min(self.truncation, other.truncation)
        terms = {}
        for e, c in self.terms + other.terms:
            if e in terms:
                terms[e] = terms[e] + c
            else:
                terms[e] = c
        return PuiseuxSeries(terms.items(), tr)

    def __neg__(self):
        return PuiseuxSeries([(e, -c) for e, c in self.terms], self.truncation,
                             _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PuiseuxSeries):
            return self.scale(other)
        if self.is_exactly_zero() or other.is_exactly_zero():
            return PuiseuxSeries.zero()
        oa = self.order()
        ob = other.order()
        tr = min(
            self.truncation + (ob if ob != INF else 0) if self.truncation != INF else INF,
            other.truncation + (oa if oa != INF else 0) if other.truncation != INF else INF,
        )
        terms = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                if tr != INF and e >= tr:
                    continue
                if e in terms:
                    terms[e] = terms[e] + c1 * c2
                else:
                    terms[e] = c1 * c2
        return PuiseuxSeries(terms.items(), tr)

    def scale(self, k):
        return PuiseuxSeries([(e, c * k) for e, c in self.terms], self.truncation)

    def shift(self, e0):
        e0 = rat(e0)
        tr = self.truncation if self.truncation == INF else self.truncation + e0
        return PuiseuxSeries([(e + e0, c) for e, c in self.terms], tr, _trusted=True)

    def truncate_lt(self, M):
        """Terms with exponent < M, as an exact finite series."""
        M = rat(M)
        if M > self.truncation:
            raise TruncationTooShort(
                "truncation at %s requested beyond exactness bound %s"
                % (rat_str(M), rat_str(self.truncation) if self.truncation != INF else "inf")
            )
        return PuiseuxSeries([(e, c) for e, c in self.terms if e < M], INF,
                             _trusted=True)

    def deform(self, M, session):
        """The truncation below M plus a generic marker term at M."""
        M = rat(M)
        base = self.truncate_lt(M)
        lifted = [(e, ThetaElem.const(session, c)) for e, c in base.terms]
        lifted.append((M, ThetaElem.marker(session)))
        return PuiseuxSeries(lifted, INF, _trusted=True)

    def conjugate(self, zeta_pows, N):
        """Apply x^(1/N) -> zeta x^(1/N): coefficient of x^e picks zeta^(eN)."""
        out = []
        for e, c in self.terms:
            k = int(e * N) % N
            out.append((e, c * zeta_pows[k]))
        return PuiseuxSeries(out, self.truncation, _trusted=True)

    def render(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(
                "(%s)*x^%s" % (repr(c), rat_str(e)) if e != 0 else "(%s)" % repr(c)
                for e, c in self.terms
            )
        if self.truncation == INF:
            return body
        return "%s + O(x^%s)" % (body, rat_str(self.truncation))

    __repr__ = render


def series_contact(a, b):
    """O_x(a - b) when certified by both truncations; None if unresolved."""
    d = a - b
    first = d.first_certified_term()
    if first is not None:
        return first[0]
    if d.is_exact():
        return INF
    return None


def eval_ypoly_at_series(yp, gamma):
    """Evaluate a y-polynomial at a truncated series (Horner), exactly tracked."""
    acc = PuiseuxSeries.zero()
    for lp in reversed(yp.cy):
        lifted = PuiseuxSeries([(e, c) for e, c in lp.terms.items()], INF)
        acc = acc * gamma + lifted
    return acc


def truncate_lt(gamma, M):
    return gamma.truncate_lt(M)


def deform(gamma, M, session):
    return gamma.deform(M, session)
