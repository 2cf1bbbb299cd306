"""Exact arithmetic in lazily built algebraic extension towers.

A :class:`Session` owns a tower of extensions of Q.  Each level adjoins a
root of a squarefree (not necessarily irreducible) polynomial over the
levels below.  Arithmetic is exact; when an operation meets a zero divisor
the offending level polynomial factors and the session continues,
deterministically, in one factor (dynamic evaluation).  The discovered
factorization is logged and can be surfaced as a :class:`SplitEvent`.

Values are plain recursive data: a rational, or ``Ext(lvl, coeffs)`` with
coefficients from lower levels, reduced modulo the level polynomial.
Everything an analysis ultimately reports (orders, contacts, degrees,
intersection numbers, sets of irregular values) is independent of which
factor the session follows, so continuing in a single branch is sound.
"""

from .errors import DivisionByZero, TowerDepthExceeded, ZeroPolynomial
from .rationals import ZERO, ONE, is_rat, rat, rat_str


class Ext:
    """A tower element of positive level: dense rep in the level generator."""

    __slots__ = ("lvl", "c")

    def __init__(self, lvl, c):
        self.lvl = lvl
        self.c = tuple(c)


def _lvl(v):
    return v.lvl if isinstance(v, Ext) else 0


def _szero(v):
    return not isinstance(v, Ext) and v == 0


def _mk(lvl, coeffs):
    cs = list(coeffs)
    while cs and _szero(cs[-1]):
        cs.pop()
    if not cs:
        return ZERO
    if len(cs) == 1:
        return cs[0]
    return Ext(lvl, cs)


class SplitRequest(Exception):
    """Internal control flow: a level polynomial must split before retrying."""

    def __init__(self, level, factors, kind):
        super().__init__("split at level %d" % level)
        self.level = level
        self.factors = factors  # tuple of coefficient tuples, monic
        self.kind = kind  # "zero" or "invert"


class SplitEvent:
    """Discovered factorization of a level polynomial (dynamic evaluation)."""

    def __init__(self, session, level, factors):
        self.session = session
        self.level = level
        self.factors = tuple(
            UniPoly(session, list(f), _trusted=True) for f in factors
        )
        self.original = UniPoly(
            session, list(session.tower.levels[level - 1].minpoly), _trusted=True
        )

    def __repr__(self):
        return "SplitEvent(level=%d, factors=%r)" % (self.level, list(self.factors))


class Level:
    __slots__ = ("name", "minpoly", "tag")

    def __init__(self, name, minpoly, tag=None):
        self.name = name
        self.minpoly = tuple(minpoly)  # dense, monic, degree >= 1
        self.tag = tag


class Tower:
    """Immutable snapshot of the extension chain."""

    __slots__ = ("levels",)

    def __init__(self, levels=()):
        self.levels = tuple(levels)

    @property
    def depth(self):
        return len(self.levels)

    def extended(self, level):
        return Tower(self.levels + (level,))

    def replaced(self, idx, level):
        ls = list(self.levels)
        ls[idx] = level
        return Tower(ls)


class Session:
    """Mutable holder of the current tower; all arithmetic routes through it.

    Not thread safe: share one session per curve analysis, values created in
    it stay valid as the tower grows or splits (representations re-reduce
    lazily).
    """

    def __init__(self, depth_cap=8):
        self.tower = Tower()
        self.depth_cap = depth_cap
        self.split_log = []
        self._tags = {}
        self.generation = 0

    # -- raw arithmetic ------------------------------------------------

    def add(self, a, b):
        if not isinstance(a, Ext) and not isinstance(b, Ext):
            return a + b
        la, lb = _lvl(a), _lvl(b)
        if la == lb:
            ca, cb = a.c, b.c
            if len(ca) < len(cb):
                ca, cb = cb, ca
            out = list(ca)
            for i, y in enumerate(cb):
                out[i] = self.add(out[i], y)
            return _mk(la, out)
        if la < lb:
            a, b = b, a
            la = lb
        out = list(a.c)
        out[0] = self.add(out[0], b)
        return _mk(la, out)

    def neg(self, a):
        if not isinstance(a, Ext):
            return -a
        return Ext(a.lvl, tuple(self.neg(x) for x in a.c))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not isinstance(a, Ext) and not isinstance(b, Ext):
            return a * b
        if _szero(a) or _szero(b):
            return ZERO
        la, lb = _lvl(a), _lvl(b)
        if la == lb:
            ca, cb = a.c, b.c
            out = [ZERO] * (len(ca) + len(cb) - 1)
            for i, x in enumerate(ca):
                if _szero(x):
                    continue
                for j, y in enumerate(cb):
                    if _szero(y):
                        continue
                    out[i + j] = self.add(out[i + j], self.mul(x, y))
            return self._rem(la, out)
        if la < lb:
            a, b = b, a
            la = lb
        return _mk(la, [self.mul(x, b) for x in a.c])

    def _rem(self, lvl, coeffs):
        """Reduce a dense rep modulo the (monic) level polynomial."""
        mp = self.tower.levels[lvl - 1].minpoly
        dm = len(mp) - 1
        cs = list(coeffs)
        while len(cs) > dm:
            lead = cs.pop()
            if _szero(lead):
                continue
            off = len(cs) - dm
            for i in range(dm):
                cs[off + i] = self.sub(cs[off + i], self.mul(lead, mp[i]))
        return _mk(lvl, cs)

    def deep(self, v):
        """Fully re-reduce a possibly stale value against the current tower."""
        if not isinstance(v, Ext):
            return v
        return self._rem(v.lvl, [self.deep(x) for x in v.c])

    # -- zero tests and inversion (where splits happen) ------------------

    def is_zero_raw(self, v):
        while True:
            try:
                return self._is_zero_once(v)
            except SplitRequest as sr:
                self._apply_split(sr, prefer=0)

    def inv_raw(self, v):
        while True:
            try:
                return self._inv_once(v)
            except SplitRequest as sr:
                self._apply_split(sr, prefer=1)

    def _is_zero_once(self, v):
        v = self.deep(v)
        if not isinstance(v, Ext):
            return v == 0
        k = v.lvl
        g = _pgcd(self, list(v.c), list(self.tower.levels[k - 1].minpoly))
        if len(g) == 1:
            return False
        q = _pdivexact(self, list(self.tower.levels[k - 1].minpoly), g)
        raise SplitRequest(k, (tuple(g), tuple(q)), "zero")

    def _inv_once(self, v):
        v = self.deep(v)
        if not isinstance(v, Ext):
            if v == 0:
                raise DivisionByZero("inverse of zero")
            return rat(1) / v
        k = v.lvl
        mp = list(self.tower.levels[k - 1].minpoly)
        g, u = _pxgcd(self, list(v.c), mp)
        if len(g) == 1:
            return self._rem(k, u)
        q = _pdivexact(self, mp, g)
        raise SplitRequest(k, (tuple(g), tuple(q)), "invert")

    def _apply_split(self, sr, prefer):
        idx = sr.level - 1
        old = self.tower.levels[idx]
        self.split_log.append(SplitEvent(self, sr.level, sr.factors))
        chosen = sr.factors[prefer]
        if len(chosen) < 2:
            raise DivisionByZero("inverse of zero divisor with empty branch")
        self.tower = self.tower.replaced(idx, Level(old.name, chosen, old.tag))
        # rewrite higher level polynomials against the shrunken level
        for j in range(idx + 1, self.tower.depth):
            lev = self.tower.levels[j]
            mp = tuple(self.deep(c) for c in lev.minpoly)
            self.tower = self.tower.replaced(j, Level(lev.name, mp, lev.tag))
        self.generation += 1

    # -- construction ----------------------------------------------------

    def num(self, x):
        """Coerce an int/Fraction/AlgNum into an AlgNum of this session."""
        if isinstance(x, AlgNum):
            if x.s is not self:
                raise ValueError("value belongs to a different session")
            return x
        if isinstance(x, Ext):
            return AlgNum(self, x)
        return AlgNum(self, rat(x))

    def zero(self):
        return AlgNum(self, ZERO)

    def one(self):
        return AlgNum(self, ONE)

    def gen(self, level):
        return AlgNum(self, self._rem(level, [ZERO, ONE]))

    def adjoin(self, p, name=None, tag=None):
        """Adjoin a root of ``p`` (its squarefree part is taken first).

        Degree-one paths return the root without extending the tower; a tag
        lets callers reuse a previously adjoined level (cyclotomics).
        """
        if p.is_zero():
            raise ZeroPolynomial("cannot adjoin a root of the zero polynomial")
        if p.degree == 0:
            raise ZeroPolynomial("cannot adjoin a root of a nonzero constant")
        if tag is not None and tag in self._tags:
            return self.gen(self._tags[tag])
        sf = p.monic().squarefree_part()
        if sf.degree == 1:
            return AlgNum(self, self.neg(sf.c[0]))
        if self.tower.depth + 1 > self.depth_cap:
            raise TowerDepthExceeded(
                "tower depth cap %d exceeded; raise --depth-cap" % self.depth_cap
            )
        lvl = self.tower.depth + 1
        level = Level(name or "a%d" % lvl, tuple(self.deep(c) for c in sf.c), tag)
        self.tower = self.tower.extended(level)
        if tag is not None:
            self._tags[tag] = lvl
        return self.gen(lvl)

    def clone(self):
        s = Session(self.depth_cap)
        s.tower = self.tower
        s._tags = dict(self._tags)
        return s

    def repr_raw(self, v):
        if not isinstance(v, Ext):
            return rat_str(v)
        name = self.tower.levels[v.lvl - 1].name
        parts = []
        for i, c in enumerate(v.c):
            if _szero(c):
                continue
            cs = self.repr_raw(c)
            if isinstance(c, Ext):
                cs = "(%s)" % cs
            if i == 0:
                parts.append(cs)
            else:
                mono = name if i == 1 else "%s^%d" % (name, i)
                parts.append(mono if cs == "1" else "%s*%s" % (cs, mono))
        return " + ".join(parts) if parts else "0"


# -- dense polynomial helpers over raw values ---------------------------
# Used for level arithmetic: gcds of representations against level
# polynomials.  Coefficients live strictly below the level being worked.


def _ptrim(s, p):
    while p and s.is_zero_raw(p[-1]):
        p.pop()
    return p


def _pdivmod(s, a, b):
    binv = s.inv_raw(b[-1])
    r = list(a)
    q = [ZERO] * max(0, len(r) - len(b) + 1)
    while True:
        _ptrim(s, r)
        if len(r) < len(b):
            break
        f = s.mul(r[-1], binv)
        off = len(r) - len(b)
        q[off] = f
        for i in range(len(b) - 1):
            r[off + i] = s.sub(r[off + i], s.mul(f, b[i]))
        r.pop()
    return q, r


def _pgcd(s, a, b):
    a = _ptrim(s, list(a))
    b = _ptrim(s, list(b))
    while b:
        a, b = b, _pdivmod(s, a, b)[1]
        _ptrim(s, b)
    if not a:
        return []
    inv = s.inv_raw(a[-1])
    return [s.mul(c, inv) for c in a]


def _pxgcd(s, a, b):
    """Monic g = gcd(a, b) plus u with u*a = g (mod b)."""
    r0, r1 = _ptrim(s, list(a)), _ptrim(s, list(b))
    u0, u1 = [ONE], []
    while r1:
        q, r = _pdivmod(s, r0, r1)
        _ptrim(s, r)
        # u_next = u0 - q*u1
        prod = [ZERO] * (len(q) + len(u1) - 1) if q and u1 else []
        for i, x in enumerate(q):
            if _szero(x):
                continue
            for j, y in enumerate(u1):
                prod[i + j] = s.add(prod[i + j], s.mul(x, y))
        un = list(u0) + [ZERO] * max(0, len(prod) - len(u0))
        for i, x in enumerate(prod):
            un[i] = s.sub(un[i], x)
        r0, u0, r1, u1 = r1, u1, r, _ptrim(s, un)
        u0 = list(u0)
    if not r0:
        return [], []
    inv = s.inv_raw(r0[-1])
    g = [s.mul(c, inv) for c in r0]
    u = [s.mul(c, inv) for c in u0]
    return g, u


def _pdivexact(s, a, b):
    q, r = _pdivmod(s, list(a), list(b))
    _ptrim(s, r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(s, q)


class AlgNum:
    """Exact element of the session tower (rationals are level zero)."""

    __slots__ = ("s", "v")

    def __init__(self, session, value):
        self.s = session
        self.v = value

    def _coerce(self, other):
        if isinstance(other, AlgNum):
            if other.s is not self.s:
                raise ValueError("mixing sessions")
            return other.v
        if isinstance(other, Ext):
            return other
        if isinstance(other, int) or is_rat(other):
            return rat(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.add(self.v, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.sub(self.v, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.sub(o, self.v))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.mul(self.v, o))

    __rmul__ = __mul__

    def __neg__(self):
        return AlgNum(self.s, self.s.neg(self.v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.mul(self.v, self.s.inv_raw(o)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgNum(self.s, self.s.mul(o, self.s.inv_raw(self.v)))

    def __pow__(self, n):
        if n < 0:
            return (self.one_like() / self) ** (-n)
        out = AlgNum(self.s, ONE)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def one_like(self):
        return AlgNum(self.s, ONE)

    def is_zero(self):
        return self.s.is_zero_raw(self.v)

    def structurally_zero(self):
        """Cheap proof of zero; False only means "not obviously zero"."""
        return _szero(self.v)

    def inverse(self):
        return AlgNum(self.s, self.s.inv_raw(self.v))

    def is_rational(self):
        return not isinstance(self.s.deep(self.v), Ext)

    def as_rational(self):
        v = self.s.deep(self.v)
        if isinstance(v, Ext):
            raise ValueError("not a rational value")
        return v

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.s.is_zero_raw(self.s.sub(self.v, o))

    def __ne__(self, other):
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    __hash__ = None

    def __repr__(self):
        return self.s.repr_raw(self.s.deep(self.v))


def alg_invert(a):
    """Invert, or surface the factorization found on a zero divisor.

    Returns the inverse when the representation is a unit, a
    :class:`SplitEvent` when a proper factor of the level polynomial is
    discovered, and raises DivisionByZero when the value is zero outright.
    """
    try:
        return AlgNum(a.s, a.s._inv_once(a.v))
    except SplitRequest as sr:
        return SplitEvent(a.s, sr.level, sr.factors)


def dispatch_per_factor(event, fn):
    """Re-run a computation in one cloned session per discovered factor."""
    out = []
    for fac in event.factors:
        s = event.session.clone()
        idx = event.level - 1
        old = s.tower.levels[idx]
        s.tower = s.tower.replaced(idx, Level(old.name, tuple(c.v for c in fac.coeffs()), old.tag))
        for j in range(idx + 1, s.tower.depth):
            lev = s.tower.levels[j]
            s.tower = s.tower.replaced(
                j, Level(lev.name, tuple(s.deep(c) for c in lev.minpoly), lev.tag)
            )
        out.append(fn(s))
    return out


class UniPoly:
    """Dense univariate polynomial over the session tower."""

    __slots__ = ("s", "c")

    def __init__(self, session, coeffs, _trusted=False):
        self.s = session
        if _trusted:
            self.c = list(coeffs)
            return
        raw = []
        for x in coeffs:
            if isinstance(x, AlgNum):
                raw.append(x.v)
            elif isinstance(x, Ext):
                raw.append(x)
            else:
                raw.append(rat(x))
        while raw and session.is_zero_raw(raw[-1]):
            raw.pop()
        self.c = raw

    @property
    def degree(self):
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def coeffs(self):
        return [AlgNum(self.s, c) for c in self.c]

    def coeff(self, i):
        return AlgNum(self.s, self.c[i] if i < len(self.c) else ZERO)

    def is_rational(self):
        return all(not isinstance(self.s.deep(c), Ext) for c in self.c)

    def __add__(self, other):
        s = self.s
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = s.add(out[i], y)
        return UniPoly(s, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly(self.s, [self.s.neg(x) for x in self.c], _trusted=True)

    def __mul__(self, other):
        s = self.s
        if isinstance(other, (AlgNum, int)) or is_rat(other):
            ov = other.v if isinstance(other, AlgNum) else rat(other)
            return UniPoly(s, [s.mul(x, ov) for x in self.c])
        if not self.c or not other.c:
            return UniPoly(s, [], _trusted=True)
        out = [ZERO] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if _szero(x):
                continue
            for j, y in enumerate(other.c):
                out[i + j] = s.add(out[i + j], s.mul(x, y))
        return UniPoly(s, out)

    __rmul__ = __mul__

    def monic(self):
        if not self.c:
            return self
        inv = self.s.inv_raw(self.c[-1])
        return UniPoly(self.s, [self.s.mul(x, inv) for x in self.c])

    def divmod_(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q, r = _pdivmod(self.s, list(self.c), list(other.c))
        return (
            UniPoly(self.s, q),
            UniPoly(self.s, r),
        )

    def divexact(self, other):
        q, r = self.divmod_(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def gcd(self, other):
        return UniPoly(self.s, _pgcd(self.s, list(self.c), list(other.c)))

    def derivative(self):
        return UniPoly(
            self.s, [self.s.mul(rat(i), c) for i, c in enumerate(self.c) if i > 0]
        )

    def squarefree_part(self):
        """Product of the distinct factors, monic (characteristic zero)."""
        if self.is_zero():
            raise ZeroPolynomial("squarefree part of zero")
        if self.degree == 0:
            return UniPoly(self.s, [ONE], _trusted=True)
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self.monic()
        return self.divexact(g).monic()

    def eval(self, x):
        x = self.s.num(x)
        acc = self.s.zero()
        for c in reversed(self.c):
            acc = acc * x + AlgNum(self.s, c)
        return acc

    def shift_roots(self, a):
        """p(y + a) as a new polynomial."""
        s = self.s
        out = list(self.c)
        n = len(out)
        av = s.num(a).v
        for i in range(1, n):
            for j in range(n - 1 - i, n - 1):
                out[j] = s.add(out[j], s.mul(av, out[j + 1]))
        return UniPoly(s, out)

    def y_valuation(self):
        v = 0
        while v < len(self.c) and self.s.is_zero_raw(self.c[v]):
            v += 1
        return v

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            if _szero(self.c[i]):
                continue
            cs = self.s.repr_raw(self.s.deep(self.c[i]))
            mono = "" if i == 0 else ("y" if i == 1 else "y^%d" % i)
            if mono and cs == "1":
                parts.append(mono)
            else:
                parts.append(cs if not mono else "(%s)*%s" % (cs, mono))
        return " + ".join(parts)


def tower_adjoin(session, p, name=None, tag=None):
    """Extend the session tower with a root of ``p``; returns the root."""
    return session.adjoin(p, name=name, tag=tag)


def unipoly_resultant(p, q):
    """Resultant of two univariate polynomials over the tower (field Euclid)."""
    s = p.s
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    acc = s.one()
    sign = 1
    A, B = p, q
    if A.degree < B.degree:
        if (A.degree * B.degree) % 2 == 1:
            sign = -sign
        A, B = B, A
    while B.degree > 0:
        dA, dB = A.degree, B.degree
        R = A.divmod_(B)[1]
        if R.is_zero():
            return s.zero()
        acc = acc * (B.coeff(B.degree) ** (dA - R.degree))
        if (dA * dB) % 2 == 1:
            sign = -sign
        A, B = B, R
    acc = acc * (B.coeff(0) ** A.degree)
    return acc if sign > 0 else -acc


def squarefree_part(p):
    return p.squarefree_part()


def _int_divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(p):
    """All rational roots of a rational-coefficient polynomial, with multiplicity."""
    if p.is_zero():
        raise ZeroPolynomial("rational_roots of zero")
    if not p.is_rational():
        raise ValueError("rational_roots needs rational coefficients")
    coeffs = [rat(p.s.deep(c)) for c in p.c]
    den = 1
    for c in coeffs:
        den = den * c.denominator // __import__("math").gcd(den, int(c.denominator))
    ints = [int(c * den) for c in coeffs]
    roots = []
    v = 0
    while v < len(ints) and ints[v] == 0:
        v += 1
    roots.extend([rat(0)] * v)
    ints = ints[v:]
    if len(ints) <= 1:
        return sorted(roots)
    cands = set()
    for pn in _int_divisors(ints[0]):
        for qn in _int_divisors(ints[-1]):
            cands.add(rat(pn, qn))
            cands.add(rat(-pn, qn))
    poly = list(ints)

    def ev(cs, x):
        acc = rat(0)
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    for cand in sorted(cands):
        while len(poly) > 1 and ev(poly, cand) == 0:
            # synthetic division by (y - cand)
            out = []
            acc = rat(0)
            for c in reversed(poly):
                acc = acc * cand + c
                out.append(acc)
            poly = [x for x in reversed(out[:-1])]
            roots.append(cand)
    return sorted(roots)


def all_roots(session, p):
    """Every root of ``p`` with multiplicity, adjoining levels as needed.

    Rational roots are peeled first; what remains is adjoined squarefree and
    divided out, recursing on the quotient, so the returned multiset covers
    deg(p) roots.
    """
    p = p.monic()
    out = []
    while p.degree > 0:
        sf = p.squarefree_part()
        root = None
        if sf.is_rational():
            rr = rational_roots(sf)
            if rr:
                root = session.num(rr[0])
        if root is None:
            root = session.adjoin(sf)
        lin = UniPoly(session, [-root, session.one()])
        mult = 0
        while True:
            q, r = p.divmod_(lin)
            if r.is_zero():
                p = q
                mult += 1
            else:
                break
        if mult == 0:
            raise ArithmeticError("adjoined root does not divide its polynomial")
        out.append((root, mult))
    return out


_CYCLO_CACHE = {1: [-1, 1]}


def _zpoly_div(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] // b[-1]
        off = len(a) - len(b)
        q[off] = f
        for i in range(len(b)):
            a[off + i] -= f * b[i]
        a.pop()
    return q


def cyclotomic(n):
    """Integer coefficient list of the n-th cyclotomic polynomial."""
    if n not in _CYCLO_CACHE:
        num = [0] * n + [1]
        num[0] = -1
        for d in range(1, n):
            if n % d == 0:
                num = _zpoly_div(num, cyclotomic(d))
        _CYCLO_CACHE[n] = num
    return list(_CYCLO_CACHE[n])


def primitive_root_of_unity(session, n):
    """A primitive n-th root of unity, reusing the level across calls."""
    if n == 1:
        return session.one()
    if n == 2:
        return session.num(-1)
    p = UniPoly(session, cyclotomic(n))
    return session.adjoin(p, name="w%d" % n, tag=("cyclotomic", n))
