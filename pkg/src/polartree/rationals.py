"""Exact rational scalars.

Everything downstream (contact levels, polygon slopes, valuations,
characteristic exponents) is an exact rational.  gmpy2.mpq is used when
importable because it is markedly faster on gcd-heavy workloads; the
stdlib Fraction is a drop-in fallback.  Set POLARTREE_PURE_RAT=1 to force
the fallback (used by the backend benchmark).
"""

import os
from fractions import Fraction
from math import gcd, inf

if os.environ.get("POLARTREE_PURE_RAT"):
    _impl = "fraction"
else:
    try:
        from gmpy2 import mpq as _mpq

        _impl = "gmpy2"
    except ImportError:  # pragma: no cover
        _impl = "fraction"

if _impl == "gmpy2":
    def rat(p, q=1):
        return _mpq(p, q)
else:
    def rat(p, q=1):
        return Fraction(p, q)

BACKEND = _impl

ZERO = rat(0)
ONE = rat(1)

#: exclusive upper bound used for "+infinity" orders/contacts
INF = inf


def is_rat(v) -> bool:
    return isinstance(v, (int, Fraction)) or type(v).__name__ == "mpq"


def numer(v) -> int:
    return int(v.numerator) if not isinstance(v, int) else v


def denom(v) -> int:
    return int(v.denominator) if not isinstance(v, int) else 1


def rat_str(v) -> str:
    """Render as "p" or "p/q" (the only rational wire format)."""
    if v == INF:
        return "inf"
    n, d = numer(v), denom(v)
    return str(n) if d == 1 else "%d/%d" % (n, d)


def parse_rat(text: str):
    text = text.strip()
    if "/" in text:
        p, q = text.split("/", 1)
        return rat(int(p), int(q))
    return rat(int(text))


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b
