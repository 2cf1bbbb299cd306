"""Newton polygon geometry for y-polynomials with fractional x-supports.

The polygon is the chain of compact faces of the Newton boundary, with
vertices listed by strictly decreasing y-degree, so edge slopes strictly
increase and the last edge is the one nearest the x-axis.  Slopes are the
x-orders of roots: an edge of height h carries h roots of that order
(negative slopes happen for meromorphic curves).
"""

from .curves import CurvePoly, LaurentPoly, YPoly
from .errors import EmptySupport, GammaIsRoot, TruncationTooShort
from .rationals import INF, rat, rat_str


class Edge:
    __slots__ = ("index", "hi", "lo", "slope", "height", "restriction")

    def __init__(self, index, hi, lo, restriction):
        self.index = index
        self.hi = hi  # (alpha, k) with the larger y-degree
        self.lo = lo
        self.slope = rat(lo[0] - hi[0]) / rat(hi[1] - lo[1])
        self.height = hi[1] - lo[1]
        self.restriction = restriction  # YPoly: terms on the edge segment

    def line_value(self):
        """a0 such that e + slope*j = a0 on the edge; (a0, 0) is the x-intercept."""
        return self.hi[0] + self.slope * self.hi[1]

    def face_unipoly(self, session):
        """The edge polynomial at x = 1, as a univariate polynomial in y."""
        from .towers import UniPoly

        cs = [session.zero() for _ in range(self.restriction.degree + 1)]
        for j, lp in enumerate(self.restriction.cy):
            for c in lp.terms.values():
                cs[j] = cs[j] + c
        return UniPoly(session, cs)

    def __repr__(self):
        return "Edge(%d: (%s,%d)->(%s,%d) slope %s)" % (
            self.index, rat_str(self.hi[0]), self.hi[1],
            rat_str(self.lo[0]), self.lo[1], rat_str(self.slope),
        )


class Polygon:
    __slots__ = ("vertices", "edges", "y_valuation", "y_degree")

    def __init__(self, vertices, edges, y_valuation, y_degree):
        self.vertices = vertices  # [(alpha, k)], k strictly decreasing
        self.edges = edges
        self.y_valuation = y_valuation
        self.y_degree = y_degree

    @property
    def last_edge(self):
        return self.edges[-1] if self.edges else None

    def meets_x_axis(self):
        return self.vertices[-1][1] == 0

    def __repr__(self):
        return "Polygon(%s)" % ", ".join(
            "(%s,%d)" % (rat_str(a), k) for a, k in self.vertices
        )


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_of(F):
    """Polygon of a y-polynomial (or CurvePoly); needs a nonzero input."""
    yp = F.yp if isinstance(F, CurvePoly) else F
    yp.sound_trim()
    if yp.is_zero():
        raise EmptySupport("polygon of the zero polynomial")
    pts = []
    for j in range(yp.degree + 1):
        v = yp.coeff(j).sound_valuation()
        if v is not None:
            pts.append((j, v))
    hull = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    vertices = [(alpha, j) for j, alpha in reversed(hull)]
    edges = []
    for idx in range(1, len(vertices)):
        hi, lo = vertices[idx - 1], vertices[idx]
        slope = rat(lo[0] - hi[0]) / rat(hi[1] - lo[1])
        a0 = hi[0] + slope * hi[1]
        rows = []
        for j in range(yp.degree + 1):
            keep = {}
            if lo[1] <= j <= hi[1]:
                for e, c in yp.coeff(j).terms.items():
                    if e + slope * j == a0:
                        keep[e] = c
            rows.append(LaurentPoly(keep, _trusted=True))
        edges.append(Edge(idx, hi, lo, YPoly(rows)))
    return Polygon(vertices, edges, pts[0][0], yp.degree)


def orders_of_roots(F):
    """Multiset of x-orders of the roots: [(order, multiplicity)], ascending."""
    poly = F if isinstance(F, Polygon) else polygon_of(F)
    return [(e.slope, e.height) for e in poly.edges]


def initial_form(F, M):
    """Terms minimizing e + M*j; returns (in_M as YPoly, a0, is_monomial)."""
    yp = F.yp if isinstance(F, CurvePoly) else F
    for c in yp.cy:
        c.prune()
    yp.sound_trim()
    if yp.is_zero():
        raise EmptySupport("initial form of the zero polynomial")
    M = rat(M)
    a0 = None
    for e, j in yp.support():
        v = e + M * j
        if a0 is None or v < a0:
            a0 = v
    rows = []
    count = 0
    for j in range(yp.degree + 1):
        keep = {}
        for e, c in yp.coeff(j).terms.items():
            if e + M * j == a0:
                keep[e] = c
                count += 1
        rows.append(LaurentPoly(keep, _trusted=True))
    return YPoly(rows), a0, count == 1


def polygon_wrt(f, gamma, contact_certified=False):
    """Polygon of f with respect to a series: substitute y -> y + gamma.

    The caller certifies that gamma is truncated past its maximal contact
    with the roots of f (or is exact); the orders of the result are then the
    contacts of the roots with gamma.  Returns (polygon, substituted YPoly).
    """
    yp = f.yp if isinstance(f, CurvePoly) else f
    if not (contact_certified or gamma.truncation == INF):
        raise TruncationTooShort(
            "gamma must be truncated past its maximal contact with the roots"
        )
    sub = yp.shift_y_by_series(gamma.terms)
    if sub.y_valuation() >= 1:
        raise GammaIsRoot("the substituted series is a root of the curve")
    return polygon_of(sub), sub


def polygon_dot(poly, name="newton"):
    """Debug DOT rendering of a polygon (vertices and edge slopes)."""
    lines = ["graph %s {" % name, '  node [shape=point];']
    for i, (a, k) in enumerate(poly.vertices):
        lines.append('  v%d [pos="%s,%d!", xlabel="(%s,%d)"];'
                     % (i, rat_str(a), k, rat_str(a), k))
    for e in poly.edges:
        lines.append('  v%d -- v%d [label="%s"];'
                     % (e.index - 1, e.index, rat_str(e.slope)))
    lines.append("}")
    return "\n".join(lines)
