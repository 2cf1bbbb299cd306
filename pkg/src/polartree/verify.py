"""Prediction-versus-observation comparison and the root-counting checks.

A report line pairs every predicted quantity (degree, contact,
intersection) with its observed value; sections aggregate the counting
identities and the deformation-polygon facts, each instance checked
exactly.  The verdict is PASS only with zero mismatches, and the CLI turns
that into the process exit code.
"""

from .branches import expand_roots, match_branches_to_factor, s_function
from .curves import CurvePoly, derivative_y, jacobian
from .errors import InternalInconsistency
from .oracle import observe_jacobian, observe_polar
from .predict import MIXED, classify_points, predict_jacobian, predict_polar
from .rationals import INF, rat, rat_str
from .series import series_contact
from .theta import ThetaElem
from .tree import build_tree


class Section:
    __slots__ = ("name", "instances", "failures", "notes")

    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.failures = 0
        self.notes = []

    def check(self, ok, note=None):
        self.instances += 1
        if not ok:
            self.failures += 1
            if note:
                self.notes.append(note)

    def skip(self, note):
        self.notes.append("skipped: %s" % note)


class VerificationReport:
    def __init__(self):
        self.items = []  # (label, predicted, observed, ok)
        self.sections = []

    def add(self, label, predicted, observed):
        ok = predicted == observed
        self.items.append((label, predicted, observed, ok))
        return ok

    def section(self, name):
        s = Section(name)
        self.sections.append(s)
        return s

    @property
    def passed(self):
        return all(ok for _, _, _, ok in self.items) and all(
            s.failures == 0 for s in self.sections
        )

    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def mismatches(self):
        return [it for it in self.items if not it[3]]


def _fmt(v):
    try:
        return rat_str(v)
    except Exception:
        return str(v)


def verify_polar(session, f, bs=None, tree=None, inject_degree_error=False):
    """Predict and observe the polar factorization; compare everything."""
    from .branches import analyze_curve

    if bs is None:
        bs = analyze_curve(session, f)
    if tree is None:
        tree = build_tree(bs)
    pred = predict_polar(bs, tree, inject_degree_error=inject_degree_error)
    obs = observe_polar(session, f, bs=bs, tree=tree)
    report = VerificationReport()
    for row in pred.rows:
        key = row.point.key()
        group = obs.groups.get(key)
        observed_deg = group.degree if group else rat(0)
        report.add("deg Q(%s)" % row.point.label, row.degree, observed_deg)
        if row.degree == 0 or group is None:
            continue
        for k in range(bs.size):
            lbl = bs.branches[k].label
            report.add(
                "c(%s, %s)" % (lbl, row.point.label),
                row.contacts[k], group.contacts[k],
            )
            report.add(
                "int(%s, Q(%s))" % (lbl, row.point.label),
                row.ints[k], group.ints[k],
            )
    report.add("sum deg Q", pred.total_degree(), obs.total_degree)
    return pred, obs, report


def verify_jacobian(session, f, g, report=None):
    """Predict and observe the Jacobian factorization over T(fg)."""
    from .branches import analyze_curve

    fg = CurvePoly(session, f.yp * g.yp)
    bs = analyze_curve(session, fg)
    tree = build_tree(bs)
    f_idx = match_branches_to_factor(session, bs, f)
    g_idx = match_branches_to_factor(session, bs, g)
    J = jacobian(f, g)
    J.sound_trim()
    jac_degree = J.degree if not J.is_zero() else None
    pred = predict_jacobian(bs, tree, f_idx, g_idx, jac_degree=jac_degree)
    mixed = [k for k, v in pred.labels.items() if v == MIXED]
    obs = observe_jacobian(session, f, g, bs, tree, mixed)
    if report is None:
        report = VerificationReport()
    for row in pred.rows:
        key = row.point.key()
        group = obs.groups.get(key)
        observed_deg = group.degree if group else rat(0)
        report.add("deg Q_J(%s)" % row.point.label, row.degree, observed_deg)
        if row.degree == 0 or group is None:
            continue
        for k in range(bs.size):
            lbl = bs.branches[k].label
            report.add(
                "c(%s, %s)" % (lbl, row.point.label),
                row.contacts[k], group.contacts[k],
            )
            report.add(
                "int(%s, Q_J(%s))" % (lbl, row.point.label),
                row.ints[k], group.ints[k],
            )
    if pred.residual_degree is not None:
        report.add("deg residual", pred.residual_degree, obs.residual_degree())
    if any(r.degree > 0 for r in pred.rows):
        report.add("pure points force roots", True, obs.total_degree > 0)
    return pred, obs, report, (bs, tree, f_idx, g_idx)


# -- counting identities ---------------------------------------------------


def _component_contact(bs, comp, i):
    best = None
    for y in bs.branches[i].members:
        for z in comp.members:
            c = series_contact(y, z)
            if c is None:
                raise InternalInconsistency("unresolved contact in counting")
            best = c if best is None else max(best, c)
    return best


def check_counting(session, bs, tree, obs_polar, report, jac_ctx=None):
    """Root-counting identities for the polar (and optionally the Jacobian)."""
    sec = report.section("counting-polar")
    comps = obs_polar.components
    xi = bs.size
    for i, b in enumerate(bs.branches):
        bd = b.data
        candidate_levels = set(bd.mn_list())
        for j in range(xi):
            if j != i:
                candidate_levels.add(bs.contact(i, j))
        for M in sorted(candidate_levels):
            lhs = sum(
                c.n * c.mult for c in comps if _component_contact(bs, c, i) == M
            )
            cross = sum(
                bs.branches[k].n * bs.branches[k].mult
                for k in range(xi)
                if k != i and bs.contact(i, k) == M
            )
            if M in bd.mn_list():
                theta = bd.mn_list().index(M) + 1
                extra = (bd.e[theta - 1] - 1) * bd.nd(theta)
                if xi == 1:
                    sec.check(
                        lhs == extra,
                        "one-branch count at %s: %s vs %s" % (_fmt(M), lhs, extra),
                    )
                sec.check(
                    lhs == cross + extra,
                    "count with exponent at %s, %s: %s vs %s"
                    % (b.label, _fmt(M), lhs, cross + extra),
                )
            else:
                sec.check(
                    lhs == cross,
                    "count off exponents at %s, %s: %s vs %s"
                    % (b.label, _fmt(M), lhs, cross),
                )
    # root-level correspondence: f-roots vs polar roots at every contact
    sec44 = report.section("counting-root-correspondence")
    all_roots = [(bi, y) for bi, b in enumerate(bs.branches) for y in b.members]
    for bi, y in all_roots:
        levels = {}
        for bj, y2 in all_roots:
            if y2 is y:
                continue
            c = series_contact(y, y2)
            levels[c] = levels.get(c, 0) + 1
        polar_levels = {}
        for comp in comps:
            for z in comp.members:
                c = series_contact(y, z)
                if c is None:
                    raise InternalInconsistency("unresolved root contact")
                polar_levels[c] = polar_levels.get(c, 0) + comp.mult
        for M, count in levels.items():
            sec44.check(
                polar_levels.get(M, 0) == count,
                "root correspondence at %s: %s vs %s"
                % (_fmt(M), polar_levels.get(M, 0), count),
            )
    if jac_ctx is None:
        return
    (bs_fg, obs_jac, f_idx, g_idx) = jac_ctx
    secj = report.section("counting-jacobian")
    jcomps = list(obs_jac.components)
    for i in f_idx:
        b = bs_fg.branches[i]
        bd = b.data
        crossmax = max(
            (bs_fg.contact(i, j) for j in g_idx), default=-INF
        )
        candidate_levels = set(bd.mn_list())
        for j in f_idx:
            if j != i:
                candidate_levels.add(bs_fg.contact(i, j))
        for M in sorted(candidate_levels):
            if not M > crossmax:
                secj.skip("level %s not above the cross contact" % _fmt(M))
                continue
            lhs = sum(
                c.n * c.mult
                for c in jcomps
                if _component_contact(bs_fg, c, i) == M
            )
            cross = sum(
                bs_fg.branches[k].n
                for k in f_idx
                if k != i and bs_fg.contact(i, k) == M
            )
            if M in bd.mn_list():
                theta = bd.mn_list().index(M) + 1
                rhs = cross + (bd.e[theta - 1] - 1) * bd.nd(theta)
            else:
                rhs = cross
            secj.check(
                lhs == rhs,
                "jacobian count at %s, %s: %s vs %s" % (b.label, _fmt(M), lhs, rhs),
            )


# -- deformation checks ------------------------------------------------------


def _theta_lift(session, yp):
    return yp.map_coeffs(lambda c: ThetaElem.const(session, c))


def _orders_multiset(poly):
    from .polygon import orders_of_roots

    out = {}
    for slope, height in orders_of_roots(poly):
        out[slope] = out.get(slope, 0) + height
    return out


def _last_edge_row_one(polygon):
    """(alpha1 carried at y-degree one, is_vertex) of the last edge."""
    edge = polygon.last_edge
    if edge is None:
        return None, None
    row = edge.restriction.coeff(1)
    v = row.sound_valuation() if row.terms else None
    if v is None:
        return None, None
    is_vertex = any(k == 1 for _, k in polygon.vertices)
    return v, is_vertex


def check_deformation_lemmas(session, f, bs, report, g=None, gbs=None):
    """Deformation-polygon facts for every root of f (and a pair when given)."""
    from .polygon import polygon_of

    sec = report.section("deformation-single")
    lifted = _theta_lift(session, f.yp)
    all_roots = [(bi, y) for bi, b in enumerate(bs.branches) for y in b.members]
    g_roots = []
    if g is not None:
        g_roots = [z for b in gbs.branches for z in b.members]
        lifted_g = _theta_lift(session, g.yp)
        secp = report.section("deformation-pair")
    for bi, y in all_roots:
        contacts = []
        for bj, y2 in all_roots:
            if y2 is not y:
                contacts.append(series_contact(y, y2))
        if not contacts:
            continue
        M = max(contacts)
        tilde = y.deform(M, session)
        F = lifted.shift_y_by_series(tilde.terms)
        poly = polygon_of(F)
        expected = {}
        for c in contacts + [M]:
            expected[c] = expected.get(c, 0) + 1
        sec.check(_orders_multiset(poly) == expected, "orders after deformation")
        sec.check(max(e.slope for e in poly.edges) == M, "max order is the deformation level")
        sec.check(poly.meets_x_axis(), "last vertex on the x-axis")
        a1, is_vertex = _last_edge_row_one(poly)
        sec.check(a1 is not None and not is_vertex, "degree-one support off the vertex set")
        # y-derivative polygon: translation by (0,-1)
        Fy = F.derivative_y()
        poly_y = polygon_of(Fy)
        sec.check(
            [(a, k - 1) for a, k in poly.vertices] == poly_y.vertices,
            "derivative polygon is the unit translation",
        )
        sec.check(
            _orders_multiset(poly) == _orders_multiset(poly_y),
            "derivative keeps the order multiset",
        )
        sec.check(
            poly.last_edge.restriction.degree - 1
            == poly_y.last_edge.restriction.degree,
            "last edge degree drops by one",
        )
        if g is None:
            continue
        crossmax = max(series_contact(y, z) for z in g_roots)
        if not M > crossmax:
            secp.skip("deformation level within the cross contact")
            continue
        G = lifted_g.shift_y_by_series(tilde.terms)
        gpoly = polygon_of(G)
        secp.check(gpoly.meets_x_axis(), "pair: last vertex of G on the x-axis")
        secp.check(
            max(e.slope for e in gpoly.edges) < M,
            "pair: G orders stay below the deformation level",
        )
        b1, b_is_vertex = _last_edge_row_one(gpoly)
        secp.check(
            b1 is not None and not b_is_vertex,
            "pair: degree-one support of G off the vertex set",
        )
        # last-edge identity of the Jacobian under the pair hypotheses
        last_g = gpoly.last_edge
        g_bottom = last_g.restriction.coeff(0)
        g_bottom.prune()
        if len(g_bottom.terms) == 1 and poly.vertices[-1][0] != 0 and gpoly.vertices[-1][0] != 0:
            (beta_exp, acoef), = g_bottom.terms.items()
            Fx, Gy = F.derivative_x(), G.derivative_y()
            Gx = G.derivative_x()
            Jd = Fx * Gy - Fy * Gx
            jpoly = polygon_of(Jd)
            secp.check(
                max(e.slope for e in jpoly.edges)
                == max(e.slope for e in poly.edges),
                "pair: Jacobian max order equals the curve max order",
            )
            expected_vertex = a1 + beta_exp - 1
            secp.check(
                jpoly.vertices[-1] == (expected_vertex, 0),
                "pair: Jacobian last vertex position",
            )
            scale = acoef * beta_exp
            lhs = jpoly.last_edge.restriction
            rhs = (poly_y.last_edge.restriction * (-scale)).shift_x(beta_exp - 1)
            secp.check(lhs.equals(rhs), "pair: Jacobian last edge identity")
    return report
