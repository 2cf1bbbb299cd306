"""Curve data model: Laurent coefficients, y-polynomials, calculus, resultants.

A curve is monic in y with Laurent polynomial coefficients in x; internal
objects (edge data, substituted polynomials, reconstructed factors) relax
both monicity and exponent integrality, so the workhorse classes here allow
fractional x-exponents and any coefficient implementing the small scalar
protocol (is_zero/inverse/arithmetic): tower elements or theta elements.
"""

from .errors import DivisionByZero, NonReduced, ZeroPolynomial
from .rationals import INF, ZERO, is_rat, rat, rat_str

_MATH_GCD = __import__("math").gcd


def _cheap_zero(c):
    """Structural zero test: True is a proof, False only means undecided."""
    sz = getattr(c, "structurally_zero", None)
    if sz is not None:
        return sz()
    return c.is_zero()


class LaurentPoly:
    """Finite sum of coeff * x^e with rational exponents (possibly negative).

    Arithmetic filters only structurally zero coefficients; certified zero
    tests (which may split the tower) run at the decision points:
    x_valuation, prune, is_zero_sound.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None, _trusted=False):
        if not terms:
            self.terms = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            self.terms = {
                rat(e): c for e, c in dict(terms).items() if not _cheap_zero(c)
            }

    @classmethod
    def monomial(cls, coeff, exp=0):
        if _cheap_zero(coeff):
            return cls()
        return cls({rat(exp): coeff}, _trusted=True)

    def is_zero(self):
        """Structural: empty support.  Use is_zero_sound for a certificate."""
        return not self.terms

    def is_zero_sound(self):
        return self.sound_valuation() is None

    def sound_valuation(self):
        """Certified least exponent (pruning proved-zero entries); None if zero."""
        while self.terms:
            e = min(self.terms)
            if self.terms[e].is_zero():
                del self.terms[e]
            else:
                return e
        return None

    def prune(self):
        """Drop every coefficient that is provably zero."""
        for e in [e for e, c in self.terms.items() if c.is_zero()]:
            del self.terms[e]
        return self

    def x_valuation(self):
        """Certified least exponent with nonzero coefficient; +inf for zero."""
        v = self.sound_valuation()
        return INF if v is None else v

    def x_degree(self):
        self.prune()
        return max(self.terms) if self.terms else -INF

    def coeff(self, e):
        return self.terms.get(rat(e))

    def leading_coeff(self):
        v = self.sound_valuation()
        return self.terms[v]

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                v = out[e] + c
                if _cheap_zero(v):
                    del out[e]
                else:
                    out[e] = v
            else:
                out[e] = c
        return LaurentPoly(out, _trusted=True)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    if e in out:
                        out[e] = out[e] + c1 * c2
                    else:
                        out[e] = c1 * c2
            return LaurentPoly(out)
        return self.scale(other)

    def scale(self, k):
        """Multiply every coefficient by a scalar."""
        if hasattr(k, "is_zero") and _cheap_zero(k):
            return LaurentPoly()
        return LaurentPoly({e: c * k for e, c in self.terms.items()})

    def shift(self, e0):
        """Multiply by x^e0."""
        e0 = rat(e0)
        return LaurentPoly({e + e0: c for e, c in self.terms.items()}, _trusted=True)

    def derivative_x(self):
        return LaurentPoly({e - 1: c * e for e, c in self.terms.items() if e != 0})

    def equals(self, other):
        return (self - other).is_zero_sound()

    def integer_exponents(self):
        return all(e.denominator == 1 for e in self.terms)

    def render(self, var="x"):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            cs = repr(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = var if e == 1 else "%s^%s" % (var, rat_str(e))
                parts.append(mono if cs == "1" else "%s*%s" % (cs, mono))
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


class YPoly:
    """Dense polynomial in y whose coefficients are Laurent polynomials."""

    __slots__ = ("cy",)

    def __init__(self, cy=()):
        cs = list(cy)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.cy = cs

    @property
    def degree(self):
        return len(self.cy) - 1

    def is_zero(self):
        return not self.cy

    def coeff(self, j):
        return self.cy[j] if j < len(self.cy) else LaurentPoly()

    def lc(self):
        return self.cy[-1]

    def sound_trim(self):
        """Certify the leading coefficient nonzero (pops proved-zero rows)."""
        while self.cy and self.cy[-1].sound_valuation() is None:
            self.cy.pop()
        return self

    def is_zero_sound(self):
        return self.sound_trim().is_zero()

    def y_valuation(self):
        """Certified number of leading zero rows from the bottom."""
        v = 0
        while v < len(self.cy) and self.cy[v].sound_valuation() is None:
            v += 1
        return v

    def __add__(self, other):
        a, b = self.cy, other.cy
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return YPoly(out)

    def __neg__(self):
        return YPoly([-c for c in self.cy])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, YPoly):
            if not self.cy or not other.cy:
                return YPoly()
            out = [LaurentPoly() for _ in range(len(self.cy) + len(other.cy) - 1)]
            for i, a in enumerate(self.cy):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.cy):
                    out[i + j] = out[i + j] + a * b
            return YPoly(out)
        return YPoly([c * other for c in self.cy])

    def scale(self, lp):
        """Multiply every y-coefficient by a Laurent polynomial."""
        return YPoly([c * lp for c in self.cy])

    def shift_x(self, e):
        """Multiply by x^e."""
        return YPoly([c.shift(e) for c in self.cy])

    def shift_mul(self, lp, k):
        """lp * y^k * self."""
        return YPoly([LaurentPoly() for _ in range(k)] + [c * lp for c in self.cy])

    def derivative_y(self):
        return YPoly([self.cy[i].scale(i) for i in range(1, len(self.cy))])

    def derivative_x(self):
        return YPoly([c.derivative_x() for c in self.cy])

    def equals(self, other):
        return (self - other).is_zero_sound()

    def support(self):
        """All (x-exponent, y-degree) points carrying a nonzero coefficient."""
        pts = []
        for j, c in enumerate(self.cy):
            for e in c.terms:
                pts.append((e, j))
        return pts

    def shift_y_by_term(self, coeff, exp):
        """Substitute y -> y + coeff*x^exp (binomial convolution)."""
        n = len(self.cy)
        out = list(self.cy)
        t = LaurentPoly.monomial(coeff, exp)
        # synthetic Taylor shift: repeated Horner update
        for i in range(1, n):
            for j in range(n - 1 - i, n - 1):
                out[j] = out[j] + t * out[j + 1]
        return YPoly(out)

    def shift_y_by_series(self, terms):
        """Substitute y -> y + sum of coeff*x^exp over the given terms."""
        g = self
        for exp, coeff in terms:
            g = g.shift_y_by_term(coeff, exp)
        return g

    def map_coeffs(self, fn):
        return YPoly([LaurentPoly({e: fn(c) for e, c in lp.terms.items()}) for lp in self.cy])

    def render(self):
        if not self.cy:
            return "0"
        parts = []
        for j in range(len(self.cy) - 1, -1, -1):
            c = self.cy[j]
            if c.is_zero():
                continue
            mono = "" if j == 0 else ("y" if j == 1 else "y^%d" % j)
            parts.append("(%s)%s" % (c.render(), "*" + mono if mono else ""))
        return " + ".join(parts)

    __repr__ = render


class CurvePoly:
    """Monic-in-y polynomial with integer-exponent Laurent coefficients."""

    __slots__ = ("s", "yp", "_reduced")

    def __init__(self, session, ypoly):
        if ypoly.is_zero():
            raise ZeroPolynomial("zero curve polynomial")
        self.s = session
        self.yp = ypoly
        self._reduced = None
        lead = ypoly.lc()
        lv = lead.x_valuation()
        ok = (
            lv == 0
            and lead.x_degree() == 0
            and (lead.leading_coeff() - 1).is_zero()
        )
        if not ok:
            from .errors import NotMonic

            raise NotMonic("leading y-coefficient is not 1")
        for c in ypoly.cy:
            if not c.integer_exponents():
                raise ValueError("curve coefficients need integer x-exponents")

    @property
    def degree(self):
        return self.yp.degree

    def coeff(self, j):
        return self.yp.coeff(j)

    def is_reduced(self):
        """Discriminant test: Res_y(f, f_y) != 0.

        Rational-coefficient curves are checked through specializations of x
        (one nonzero value certifies reducedness; a degree bound many zeros
        certify a repeated factor); others fall through to the factored
        resultant.
        """
        if self._reduced is None:
            if self.degree == 0:
                self._reduced = True
            elif self._all_rational():
                self._reduced = self._reduced_by_specialization()
            else:
                fy = self.yp.derivative_y()
                self._reduced = not resultant_factored(self.yp, fy).is_zero()
        return self._reduced

    def _all_rational(self):
        return all(
            c.is_rational() for lp in self.yp.cy for c in lp.terms.values()
        )

    def _reduced_by_specialization(self):
        from .towers import UniPoly, unipoly_resultant

        n = self.degree
        span = 0
        for lp in self.yp.cy:
            if lp.terms:
                span = max(span, int(max(lp.terms) - min(min(lp.terms), 0)))
        bound = (2 * n - 1) * span + 1
        for t in range(1, bound + 1):
            tv = rat(t)
            p = UniPoly(self.s, [_eval_laurent_rat(lp, tv) for lp in self.yp.cy])
            q = p.derivative()
            if not unipoly_resultant(p, q).is_zero():
                return True
        return False

    def require_reduced(self):
        if not self.is_reduced():
            raise NonReduced("curve polynomial has a repeated factor")

    def __mul__(self, other):
        return CurvePoly(self.s, self.yp * other.yp)

    def render(self):
        return self.yp.render()

    __repr__ = render


def _eval_laurent_rat(lp, t):
    """Evaluate a rational-coefficient Laurent polynomial at a rational point."""
    acc = rat(0)
    for e, c in lp.terms.items():
        p, q = int(e.numerator), int(e.denominator)
        if q != 1:
            raise ValueError("fractional exponent in specialization")
        acc += rat(c.as_rational()) * (t ** p if p >= 0 else rat(1) / (t ** (-p)))
    return acc


def derivative_y_raw(f):
    """The plain y-derivative, not normalized (used by the Jacobian)."""
    return f.yp.derivative_y()


def derivative_y(f):
    """f_y / deg(f): the monic normalization of the y-derivative."""
    if f.degree < 1:
        raise ZeroPolynomial("derivative of a constant curve")
    raw = f.yp.derivative_y()
    inv = rat(1, f.degree)
    return CurvePoly(f.s, raw * f.s.num(inv))


def jacobian(f, g):
    """f_x*g_y - f_y*g_x, exact; may be zero, non-monic, or of low y-degree."""
    fy, gy = f.yp.derivative_y(), g.yp.derivative_y()
    fx, gx = f.yp.derivative_x(), g.yp.derivative_x()
    return fx * gy - fy * gx


def x_valuation(lp):
    return lp.x_valuation()


# -- rational functions in x over the tower ------------------------------


def laurent_to_unipoly(session, lp):
    """(UniPoly in t, shift, scale) with x^e -> t^((e-shift)*scale)."""
    from .towers import UniPoly

    if lp.is_zero():
        return UniPoly(session, []), ZERO, 1
    exps = sorted(lp.terms)
    scale = 1
    for e in exps:
        scale = scale * e.denominator // _MATH_GCD(scale, int(e.denominator))
    shift = exps[0]
    deg = int((exps[-1] - shift) * scale)
    cs = [session.zero() for _ in range(deg + 1)]
    for e, c in lp.terms.items():
        cs[int((e - shift) * scale)] = c
    return UniPoly(session, cs), shift, scale


def unipoly_to_laurent(up, shift, scale):
    return LaurentPoly(
        {shift + rat(i, scale): c for i, c in enumerate(up.coeffs()) if not c.is_zero()}
    )


def laurent_divexact(session, a, b):
    """a / b in the Laurent ring (raises if not exact)."""
    if b.is_zero():
        raise DivisionByZero("Laurent division by zero")
    if a.is_zero():
        return LaurentPoly()
    scale = 1
    for e in list(a.terms) + list(b.terms):
        scale = scale * e.denominator // _MATH_GCD(scale, int(e.denominator))
    ua, sa, _ = _to_unipoly_scaled(session, a, scale)
    ub, sb, _ = _to_unipoly_scaled(session, b, scale)
    q = ua.divexact(ub)
    return unipoly_to_laurent(q, sa - sb, scale)


def _to_unipoly_scaled(session, lp, scale):
    from .towers import UniPoly

    exps = sorted(lp.terms)
    shift = exps[0]
    deg = int((exps[-1] - shift) * scale)
    cs = [session.zero() for _ in range(deg + 1)]
    for e, c in lp.terms.items():
        cs[int((e - shift) * scale)] = c
    return UniPoly(session, cs), shift, scale


def laurent_gcd(session, a, b):
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    scale = 1
    for e in list(a.terms) + list(b.terms):
        scale = scale * e.denominator // _MATH_GCD(scale, int(e.denominator))
    ua, _, _ = _to_unipoly_scaled(session, a, scale)
    ub, _, _ = _to_unipoly_scaled(session, b, scale)
    g = ua.gcd(ub)
    return unipoly_to_laurent(g, ZERO, scale)


class FracX:
    """Quotient of Laurent polynomials (the coefficient field for y-gcds)."""

    __slots__ = ("s", "num", "den")

    def __init__(self, session, num, den=None):
        self.s = session
        if den is None:
            den = LaurentPoly.monomial(session.one())
        if den.is_zero():
            raise DivisionByZero("FracX with zero denominator")
        if num.terms and den.terms:
            # strip the common monomial content (structural minima suffice)
            v = min(min(num.terms), min(den.terms))
            if v != 0:
                num = num.shift(-v)
                den = den.shift(-v)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, session, value):
        return cls(session, LaurentPoly.monomial(session.num(value)))

    @classmethod
    def of(cls, session, lp):
        return cls(session, lp)

    def is_zero(self):
        return self.num.is_zero_sound()

    def structurally_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, FracX):
            return other
        if isinstance(other, int) or is_rat(other):
            return FracX.const(self.s, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FracX(self.s, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FracX(self.s, -self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FracX(self.s, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return FracX(self.s, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def normalized(self):
        if self.num.is_zero():
            return self
        g = laurent_gcd(self.s, self.num, self.den)
        if g.is_zero() or (g.x_degree() == g.x_valuation()):
            num, den = self.num, self.den
        else:
            num = laurent_divexact(self.s, self.num, g)
            den = laurent_divexact(self.s, self.den, g)
        return FracX(self.s, num, den)

    def as_laurent(self):
        return laurent_divexact(self.s, self.num, self.den)

    def valuation(self):
        if self.num.is_zero():
            return INF
        return self.num.x_valuation() - self.den.x_valuation()

    def __repr__(self):
        if self.den.x_degree() == self.den.x_valuation() == 0 and (
            self.den.leading_coeff() - 1
        ).is_zero():
            return self.num.render()
        return "(%s)/(%s)" % (self.num.render(), self.den.render())


# -- generic dense polynomials over a coefficient field ------------------


def ftrim(p):
    p = list(p)
    while p and p[-1].is_zero():
        p.pop()
    return p


def fadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return ftrim(out)


def fneg(a):
    return [-x for x in a]


def fsub(a, b):
    return fadd(a, fneg(b))


def fmul(a, b):
    if not a or not b:
        return []
    out = [a[0] - a[0] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return ftrim(out)


def fdivmod(a, b):
    if not b:
        raise DivisionByZero("polynomial division by zero")
    binv = b[-1].inverse()
    r = list(a)
    q = [a[0] - a[0]] * max(0, len(r) - len(b) + 1) if a else []
    while True:
        r = ftrim(r)
        if len(r) < len(b):
            break
        f = r[-1] * binv
        off = len(r) - len(b)
        q[off] = f
        for i in range(len(b) - 1):
            r[off + i] = r[off + i] - f * b[i]
        r.pop()
    return q, r


def fdivexact(a, b):
    q, r = fdivmod(a, b)
    if ftrim(r):
        raise ArithmeticError("inexact polynomial division")
    return ftrim(q)


def fgcd(a, b):
    a, b = ftrim(a), ftrim(b)
    while b:
        a, b = b, ftrim(fdivmod(a, b)[1])
    if not a:
        return []
    inv = a[-1].inverse()
    return [x * inv for x in a]


def fderiv(a):
    return ftrim([c * i for i, c in enumerate(a) if i > 0])


def yun_squarefree(session, yp):
    """Squarefree decomposition of a y-polynomial: [(factor, multiplicity)].

    Factors come back as y-polynomials with Laurent coefficients (cleared
    denominators), monic up to Laurent content, pairwise coprime.
    """
    if yp.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    a = [FracX(session, c) for c in yp.cy]
    a = ftrim(a)
    lead_inv = a[-1].inverse()
    a = [x * lead_inv for x in a]
    out = []
    ap = fderiv(a)
    g = fgcd(a, ap)
    w = fdivexact(a, g)
    y = fdivexact(ap, g)
    i = 1
    while len(w) > 1:
        z = fsub(y, fderiv(w))
        h = fgcd(w, z)
        if len(h) > 1:
            out.append((fx_list_to_ypoly(session, h), i))
        w = fdivexact(w, h)
        y = fdivexact(z, h)
        i += 1
    return out


def fx_list_to_ypoly(session, coeffs):
    """Clear denominators of a FracX coefficient list into a YPoly."""
    den = LaurentPoly.monomial(session.one())
    for c in coeffs:
        c2 = c.normalized()
        g = laurent_gcd(session, den, c2.den)
        extra = laurent_divexact(session, c2.den, g) if not g.is_zero() else c2.den
        den = den * extra
    cy = []
    for c in coeffs:
        c2 = c.normalized()
        cy.append(c2.num * laurent_divexact(session, den, c2.den))
    return YPoly(cy)


def ypoly_gcd(session, a, b):
    """Monic gcd in y over the rational-function coefficient field."""
    fa = ftrim([FracX(session, c) for c in a.cy])
    fb = ftrim([FracX(session, c) for c in b.cy])
    g = fgcd(fa, fb)
    if not g:
        return YPoly()
    return fx_list_to_ypoly(session, g)


# -- resultants -----------------------------------------------------------


def _prem(A, B):
    """Pseudo-remainder: lc(B)^k * A = Q*B + R with deg R < deg B; returns (R, k)."""
    d = B.lc()
    R = A
    k = 0
    while not R.is_zero() and R.degree >= B.degree:
        R = R.scale(d) - B.shift_mul(R.lc(), R.degree - B.degree)
        k += 1
    return R, k


class FactoredResultant:
    """Res as sign * prod(num)^e / prod(den)^e, kept factored.

    The valuation is a sum of factor valuations (no expansion needed);
    expanding to a value is reserved for small inputs.
    """

    __slots__ = ("s", "sign", "num", "den", "zero")

    def __init__(self, session, sign=1, num=(), den=(), zero=False):
        self.s = session
        self.sign = sign
        self.num = list(num)  # [(LaurentPoly, int power)]
        self.den = list(den)
        self.zero = zero

    def is_zero(self):
        return self.zero

    def valuation(self):
        if self.zero:
            return INF
        v = rat(0)
        for lp, k in self.num:
            v += lp.x_valuation() * k
        for lp, k in self.den:
            v -= lp.x_valuation() * k
        return v

    def as_fracx(self):
        if self.zero:
            return FracX(self.s, LaurentPoly())
        num = LaurentPoly.monomial(self.s.one())
        den = LaurentPoly.monomial(self.s.one())
        for lp, k in self.num:
            for _ in range(k):
                num = num * lp
        for lp, k in self.den:
            for _ in range(k):
                den = den * lp
        if self.sign < 0:
            num = -num
        return FracX(self.s, num, den)

    def as_laurent(self):
        return self.as_fracx().as_laurent()


def _try_divide_rows(session, R, kappa):
    """Divide every coefficient of R by kappa, or return None if inexact."""
    if kappa.is_zero():
        return None
    try:
        return YPoly([
            laurent_divexact(session, c, kappa) if c.terms else c for c in R.cy
        ])
    except (ArithmeticError, DivisionByZero):
        return None


def resultant_factored(A, B):
    """Exact resultant of two y-polynomials, in factored form.

    Pseudo-remainder sequence with tracked multipliers: the subresultant
    g*h^delta divisor controls intermediate growth, every division verified
    exact, all removed content compensated in the factor lists.
    """
    A = A.yp if isinstance(A, CurvePoly) else A
    B = B.yp if isinstance(B, CurvePoly) else B
    if A.is_zero() or B.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    s = _session_of(A) or _session_of(B)
    res = FactoredResultant(s)
    A = YPoly(list(A.cy)).sound_trim()
    B = YPoly(list(B.cy)).sound_trim()
    if A.degree < B.degree:
        if (A.degree * B.degree) % 2 == 1:
            res.sign = -res.sign
        A, B = B, A
    g = None
    h = None
    while B.degree > 0:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        lcB = LaurentPoly(dict(B.lc().terms), _trusted=True)
        R, k = _prem(A, B)
        R.sound_trim()
        if R.is_zero():
            res.zero = True
            return res
        if (dA * dB) % 2 == 1:
            res.sign = -res.sign
        res.den.append((lcB, k * dB))
        # monomial content (exactness-neutral size control)
        v = min(min(c.terms) for c in R.cy if c.terms)
        if v != 0:
            R = YPoly([c.shift(-v) for c in R.cy])
            res.num.append((LaurentPoly.monomial(s.one(), v), dB))
        # subresultant divisor, verified exact
        if k == delta + 1 and g is not None:
            kappa = g
            for _ in range(delta):
                kappa = kappa * h
            divided = _try_divide_rows(s, R, kappa)
            if divided is not None:
                R = divided
                res.num.append((kappa, dB))
        res.num.append((lcB, dA - R.degree))
        # Brown's g/h bookkeeping (size control only; corrections are exact)
        if h is None:
            h = _lp_pow(lcB, delta) if delta > 0 else LaurentPoly.monomial(s.one())
        else:
            hn = _lp_pow(lcB, delta)
            if delta == 0:
                pass
            elif delta == 1:
                h = hn
            else:
                try:
                    h = laurent_divexact(s, hn, _lp_pow(h, delta - 1))
                except (ArithmeticError, DivisionByZero):
                    h = hn
        g = lcB
        A, B = B, R
    b0 = B.coeff(0)
    res.num.append((LaurentPoly(dict(b0.terms), _trusted=True), A.degree))
    return res


def resultant_fx(A, B):
    """Exact resultant as a rational function (expands the factored form)."""
    return resultant_factored(A, B).as_fracx()


def _lp_pow(lp, n):
    s = _session_of_coeff(lp)
    out = LaurentPoly.monomial(s.one())
    base = lp
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def _session_of(yp):
    for c in yp.cy:
        s = _session_of_coeff(c)
        if s is not None:
            return s
    return None


def _session_of_coeff(lp):
    for c in lp.terms.values():
        return c.s
    return None


def resultant_y(f, g):
    """Res_y as an exact Laurent polynomial (inputs as CurvePoly or YPoly)."""
    fr = resultant_factored(f, g)
    if fr.is_zero():
        return LaurentPoly()
    return fr.as_laurent()


def intersection_valuation(f, g):
    """O_x Res_y(f, g): the intersection number int(f, g) for monic f, g."""
    fr = resultant_factored(f, g)
    if fr.is_zero():
        raise NonReduced("curves share a component; intersection undefined")
    return fr.valuation()
