"""Parser and canonical printer for curve expressions.

Grammar (UTF-8): tokens ``x``, ``y``, integer and rational literals
(``3``, ``3/2``), operators ``+ - * ^`` and parentheses.  ``^`` takes a
negative integer exponent on ``x`` only; multiplication is always explicit.
The printer emits the same grammar, so parse(print(f)) round-trips.
"""

from .curves import CurvePoly, LaurentPoly, YPoly
from .errors import CurveSyntaxError
from .rationals import rat, rat_str

_OPS = set("+-*^()/")


def _lex(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch in ("x", "y"):
            toks.append((ch, ch, i))
            i += 1
            continue
        raise CurveSyntaxError("unexpected character %r" % ch, i,
                               expected=("x", "y", "integer", "operator"))
    toks.append(("end", None, n))
    return toks


class _Parser:
    def __init__(self, session, text):
        self.s = session
        self.toks = _lex(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise CurveSyntaxError("expected %s" % kind, tok[2], expected=(kind,))
        self.pos += 1
        return tok

    def parse(self):
        v = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise CurveSyntaxError("trailing input", tok[2], expected=("end",))
        return v

    def expr(self):
        if self.peek()[0] == "-":
            self.take()
            acc = -self.term()
        else:
            acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind = self.peek()[0]
        base, is_x = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take("^")
        neg = False
        if self.peek()[0] == "-":
            caret_pos = self.take()[2]
            neg = True
            if not is_x:
                raise CurveSyntaxError(
                    "negative exponents are allowed on x only", caret_pos,
                    expected=("integer",))
        tok = self.take("int")
        e = -tok[1] if neg else tok[1]
        if neg:
            return YPoly([LaurentPoly.monomial(self.s.one(), rat(e))])
        return _ypow(base, e)

    def atom(self):
        """Returns (value as YPoly, is_plain_x)."""
        tok = self.peek()
        if tok[0] == "(":
            self.take()
            v = self.expr()
            close = self.peek()
            if close[0] != ")":
                raise CurveSyntaxError("expected ')'", close[2], expected=(")",))
            self.take()
            return v, False
        if tok[0] == "x":
            self.take()
            return YPoly([LaurentPoly.monomial(self.s.one(), 1)]), True
        if tok[0] == "y":
            self.take()
            return YPoly([LaurentPoly(), LaurentPoly.monomial(self.s.one())]), False
        if tok[0] == "int":
            self.take()
            num = tok[1]
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("int")
                if den_tok[1] == 0:
                    raise CurveSyntaxError("zero denominator", den_tok[2],
                                           expected=("nonzero integer",))
                value = rat(num, den_tok[1])
            else:
                value = rat(num)
            return YPoly([LaurentPoly.monomial(self.s.num(value))]), False
        raise CurveSyntaxError("expected a value", tok[2],
                               expected=("x", "y", "integer", "("))


def _ypow(v, e):
    if e == 0:
        return YPoly([LaurentPoly.monomial(_one_of(v))])
    acc = v
    for _ in range(e - 1):
        acc = acc * v
    return acc


def _one_of(v):
    for lp in v.cy:
        for c in lp.terms.values():
            return c.s.one()
    raise CurveSyntaxError("0^0 in input", 0)


def parse_ypoly(session, text):
    """Parse to a plain y-polynomial (no monicity requirement)."""
    return _Parser(session, text).parse()


def parse_curve(session, text):
    """Parse to a CurvePoly; raises NotMonic if the leading y-coefficient is not 1."""
    return CurvePoly(session, parse_ypoly(session, text))


def print_curve(f):
    """Canonical form in the input grammar (rational coefficients only)."""
    yp = f.yp if isinstance(f, CurvePoly) else f
    pieces = []
    for j in range(yp.degree, -1, -1):
        lp = yp.coeff(j)
        for e in sorted(lp.terms):
            c = lp.terms[e]
            if not c.is_rational():
                raise ValueError("printer requires rational coefficients")
            pieces.append((rat(c.as_rational()), e, j))
    if not pieces:
        return "0"
    out = []
    for k, (c, e, j) in enumerate(pieces):
        neg = c < 0
        mag = -c if neg else c
        factors = []
        if mag != 1 or (e == 0 and j == 0):
            factors.append(rat_str(mag))
        if e != 0:
            factors.append("x" if e == 1 else "x^%s" % rat_str(e))
        if j != 0:
            factors.append("y" if j == 1 else "y^%d" % j)
        term = "*".join(factors)
        if k == 0:
            out.append("-" + term if neg else term)
        else:
            out.append(("- " if neg else "+ ") + term)
    return " ".join(out)
