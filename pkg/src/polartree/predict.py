"""Closed-form predictions: polar and Jacobian factorizations, regularity.

Every tree point names one factor of the y-derivative (resp. of the
Jacobian over the product tree): its degree comes from the dominator
split into "contact equals the scaled characteristic exponent" (A) versus
"contact below it" (B), plus the branches leaving at the point.  Degrees,
contacts and intersection numbers here use only tree data (characteristic
sequences and the contact table), never expanded polars, so the oracle
comparison is meaningful.
"""

from .branches import s_function
from .errors import InternalInconsistency, NotGeneric
from .rationals import INF, rat, rat_str
from .tree import ALMOST_EQUIVALENT, EQUIVALENT, SINGLETON, classify_sequence


class PointPrediction:
    """One predicted factor: degree plus per-branch contact and intersection."""

    __slots__ = (
        "point", "degree", "theta", "a", "b", "dsum", "contacts", "ints",
        "seqclass",
    )

    def __init__(self, point, degree, theta, a, b, dsum, contacts, ints, seqclass):
        self.point = point
        self.degree = degree
        self.theta = theta
        self.a = a
        self.b = b
        self.dsum = dsum
        self.contacts = contacts  # branch index -> contact of the components
        self.ints = ints  # branch index -> intersection number
        self.seqclass = seqclass

    def __repr__(self):
        return "Q(%s): deg %s" % (self.point.label, self.degree)


def _ab_split(bs, point):
    """Split the strict dominators into the A and B classes."""
    M = point.level
    theta = point.theta
    A, B = [], []
    for q in point.dominators:
        vals = {bs.branches[i].data.mn(theta) for i in q.members}
        if len(vals) != 1:
            raise InternalInconsistency(
                "scaled exponent differs inside dominator %s" % q.label
            )
        v = vals.pop()
        if v == M:
            A.append(q)
        elif v > M:
            B.append(q)
        else:
            raise InternalInconsistency(
                "dominator %s below the level of %s" % (q.label, point.label)
            )
    return A, B


def _common_nd(bs, branch_indices, k):
    vals = {bs.branches[i].data.nd(k) for i in branch_indices}
    if len(vals) != 1:
        raise InternalInconsistency("n/d_%d differs across a class" % k)
    return vals.pop()


def _degree_final(bs, point, A, B):
    theta = point.theta
    a, b = len(A), len(B)
    dsum = sum(bs.branches[i].n for i in point.D)
    term_a = rat(0)
    if a:
        members_a = [i for q in A for i in q.members]
        term_a = a * _common_nd(bs, members_a, theta + 1)
    nd_theta = _common_nd(bs, point.members, theta)
    return term_a + (b - 1) * nd_theta + dsum


def _degree_two_case(bs, point, distinguished):
    """The raw two-case formula, for one choice of distinguished dominator."""
    theta = point.theta
    M = point.level
    total = sum(bs.branches[i].n for i in point.D)
    for q in point.dominators:
        if q is distinguished:
            continue
        bd = bs.branches[min(q.members)].data
        total += bd.n - sum(
            (bd.e[j - 1] - 1) * bd.nd(j)
            for j in range(1, bd.h + 1)
            if M < bd.mn(j)
        )
    bd1 = bs.branches[min(distinguished.members)].data
    if M == bd1.mn(theta):
        total += (bd1.e[theta - 1] - 1) * bd1.nd(theta)
    return total


def _degree_top(bs, point, seqclass):
    """Top point degrees by the three-case statement."""
    M = point.level
    ms = sorted(point.members, key=lambda i: -bs.branches[i].n)
    n1 = bs.branches[ms[0]].n
    bd1 = bs.branches[ms[0]].data
    r = len(ms)
    if seqclass.kind == ALMOST_EQUIVALENT:
        return (r - 1) * rat(n1)
    if bd1.h > 0 and M == bd1.mn(bd1.h):
        return (r - 1) * rat(n1) + (bd1.e[bd1.h - 1] - 1) * bd1.nd(bd1.h)
    return (r - 1) * rat(n1)


def point_prediction(bs, tree, point):
    """Degree / contact / intersection prediction for one tree point."""
    M = point.level
    A, B = _ab_split(bs, point)
    deg = _degree_final(bs, point, A, B)
    # the equivalent formulations must coincide
    for q in point.dominators:
        alt = _degree_two_case(bs, point, q)
        if alt != deg:
            raise InternalInconsistency(
                "degree formulations disagree at %s: %s vs %s"
                % (point.label, deg, alt)
            )
    seqclass = None
    if point.is_top:
        seqclass = classify_sequence(bs, point.members, M)
        alt = _degree_top(bs, point, seqclass)
        if alt != deg:
            raise InternalInconsistency(
                "top-point degree disagrees at %s: %s vs %s"
                % (point.label, deg, alt)
            )
    contacts = {}
    ints = {}
    for k in range(bs.size):
        if k in point.members:
            c = M
        else:
            cs = {bs.contact(k, i) for i in point.members}
            if len(cs) != 1:
                raise InternalInconsistency(
                    "outside contact not constant on %s" % point.label
                )
            c = cs.pop()
            if not c < M:
                raise InternalInconsistency("outside contact not below the level")
        contacts[k] = c
        bd = bs.branches[k].data
        ints[k] = s_function(bd, c) * deg / rat(bd.n)
    return PointPrediction(
        point, deg, point.theta, len(A), len(B),
        sum(bs.branches[i].n for i in point.D), contacts, ints, seqclass,
    )


class PolarPrediction:
    """Per-point polar factor predictions for a whole tree."""

    def __init__(self, bs, tree, rows):
        self.branchset = bs
        self.tree = tree
        self.rows = rows

    def nonzero_rows(self):
        return [r for r in self.rows if r.degree > 0]

    def total_degree(self):
        return sum(r.degree for r in self.rows)


def predict_polar(bs, tree, inject_degree_error=False):
    """Predicted factorization of the y-derivative over the contact tree."""
    rows = [point_prediction(bs, tree, p) for p in tree.points]
    rows.sort(key=lambda r: (r.point.level, r.point.index))
    n = bs.total_degree()
    if sum(r.degree for r in rows) != n - 1:
        raise InternalInconsistency(
            "predicted polar degrees do not sum to deg(f) - 1"
        )
    if inject_degree_error:
        for r in rows:
            if r.degree > 0:
                r.degree = r.degree + 1
                break
    return PolarPrediction(bs, tree, rows)


def predict_polar_irreducible(branch):
    """The irreducible case: one factor per characteristic exponent."""
    bd = branch.data
    out = []
    for k in range(1, bd.h + 1):
        deg = (bd.e[k - 1] - 1) * bd.nd(k)
        inter = (bd.e[k - 1] - 1) * rat(bd.r[k])
        out.append({"k": k, "degree": deg, "int": inter, "contact": bd.mn(k)})
    return out


F_POINT = "f-point"
G_POINT = "g-point"
MIXED = "mixed"


def classify_points(tree, f_indices, g_indices):
    """Label each point of the product tree f-point / g-point / mixed."""
    f_set, g_set = set(f_indices), set(g_indices)
    labels = {}
    for p in tree.points:
        has_f = bool(p.members & f_set)
        has_g = bool(p.members & g_set)
        if has_f and not has_g:
            labels[p.key()] = F_POINT
        elif has_g and not has_f:
            labels[p.key()] = G_POINT
        else:
            labels[p.key()] = MIXED
    # upward closedness: a point above an f-point stays an f-point
    for p in tree.points:
        for q in p.dominators:
            if labels[p.key()] in (F_POINT, G_POINT) and labels[q.key()] != labels[p.key()]:
                raise InternalInconsistency(
                    "taxonomy not monotone: %s above %s" % (q.label, p.label)
                )
    return labels


class JacobianPrediction:
    def __init__(self, bs, tree, labels, rows, residual_degree=None):
        self.branchset = bs
        self.tree = tree
        self.labels = labels
        self.rows = rows  # PointPrediction for f-points and g-points
        self.residual_degree = residual_degree

    def nonzero_rows(self):
        return [r for r in self.rows if r.degree > 0]


def predict_jacobian(bs, tree, f_indices, g_indices, jac_degree=None):
    """Jacobian factor predictions over the f-points and g-points of T(fg)."""
    labels = classify_points(tree, f_indices, g_indices)
    rows = []
    for p in tree.points:
        if labels[p.key()] == MIXED:
            continue
        rows.append(point_prediction(bs, tree, p))
    rows.sort(key=lambda r: (r.point.level, r.point.index))
    residual = None
    if jac_degree is not None:
        residual = jac_degree - sum(r.degree for r in rows)
        if residual < 0:
            raise InternalInconsistency("predicted Jacobian degrees exceed deg J")
    pred = JacobianPrediction(bs, tree, labels, rows, residual)
    _check_cor_irreducible(bs, tree, labels, f_indices, g_indices, rows)
    return pred


def _check_cor_irreducible(bs, tree, labels, f_indices, g_indices, rows):
    """When f is irreducible, the f-point rows follow the one-branch formulas."""
    for indices, kind in ((list(f_indices), F_POINT), (list(g_indices), G_POINT)):
        if len(indices) != 1 or set(indices) & (set(f_indices) & set(g_indices)):
            continue
        bd = bs.branches[indices[0]].data
        for r in rows:
            if labels[r.point.key()] != kind or r.degree == 0:
                continue
            M = r.point.level
            ks = [k for k in range(1, bd.h + 1) if bd.mn(k) == M]
            if len(ks) != 1:
                raise InternalInconsistency(
                    "irreducible-side point level is not a scaled exponent"
                )
            k = ks[0]
            if r.degree != (bd.e[k - 1] - 1) * bd.nd(k):
                raise InternalInconsistency("irreducible Jacobian degree mismatch")
            if r.ints[indices[0]] != (bd.e[k - 1] - 1) * rat(bd.r[k]):
                raise InternalInconsistency("irreducible Jacobian intersection mismatch")


GOOD = "good"
BAD = "bad"


class RegularityReport:
    def __init__(self, generic, labels, point_sums, irregular_values, per_point,
                 xi, diagnostics):
        self.generic = generic
        self.labels = labels  # point key -> GOOD | BAD (points with a factor)
        self.point_sums = point_sums  # point key -> predicted int(f, Q)
        self.irregular_values = irregular_values  # list of (repr string, value)
        self.per_point = per_point  # point key -> (count, bound)
        self.xi = xi
        self.diagnostics = diagnostics

    @property
    def count(self):
        return len(self.irregular_values)


def _lambda_bound(bs, point, seqclass):
    r = len(point.members)
    ms = sorted(point.members, key=lambda i: -bs.branches[i].n)
    bd1 = bs.branches[ms[0]].data
    if seqclass.kind == ALMOST_EQUIVALENT:
        return r - 1
    if bd1.h > 0 and point.level == bd1.mn(bd1.h):
        return r
    return r - 1


def regularity(bs, tree, f, observation=None):
    """Good/bad partition plus the set of irregular values.

    Labels come from the sign of the predicted intersection of the polar
    factor with the whole curve (contact dictionary only); the values
    themselves come from expansions of the actual polar components at each
    bad point, so the count checks are evidence rather than circular.
    """
    pred = predict_polar(bs, tree)
    labels = {}
    sums = {}
    for row in pred.rows:
        if row.degree == 0:
            continue
        total = sum(row.ints[k] * bs.branches[k].mult for k in range(bs.size))
        sums[row.point.key()] = total
        if total > 0:
            raise NotGeneric(
                "component at %s meets the curve with intersection %s"
                % (row.point.label, rat_str(total)),
                point=row.point, intersection=total,
            )
        labels[row.point.key()] = BAD if total == 0 else GOOD
    diagnostics = []
    bad_points = [
        row.point for row in pred.rows
        if labels.get(row.point.key()) == BAD
    ]
    for p in bad_points:
        if not p.is_top:
            diagnostics.append(
                "bad point %s is not a top point" % p.label
            )
    if observation is None:
        from .oracle import observe_polar

        observation = observe_polar(bs.session, f, bs=bs, tree=tree)
    values = []
    per_point = {}
    for p in bad_points:
        group = observation.groups.get(p.key())
        if group is None:
            raise InternalInconsistency("bad point carries no observed factor")
        lams = []
        for comp in group.components:
            lam = _constant_term_on_roots(bs, comp.rep)
            if not any((lam - other).is_zero() for other in lams):
                lams.append(lam)
        seqclass = classify_sequence(bs, p.members, p.level)
        bound = _lambda_bound(bs, p, seqclass)
        per_point[p.key()] = (len(lams), bound)
        if len(lams) > bound:
            raise InternalInconsistency(
                "irregular value count %d exceeds its bound %d at %s"
                % (len(lams), bound, p.label)
            )
        for lam in lams:
            if not any((lam - other).is_zero() for other in values):
                values.append(lam)
    xi = bs.size
    if len(values) > xi:
        raise InternalInconsistency("more irregular values than branches")
    if len(values) == xi:
        diagnostics.append("irregular value count reaches the branch count")
        for p in tree.points:
            if not p.is_top and p.D:
                diagnostics.append(
                    "nonempty exit set at non-top %s under a full irregular set"
                    % p.label
                )
    if len(bad_points) == 1 and len(values) > max(0, xi - 1):
        diagnostics.append("single bad point exceeds the sharper bound")
    return RegularityReport(
        True, labels, sums, [(repr(v), v) for v in values], per_point, xi,
        diagnostics,
    )


def _constant_term_on_roots(bs, gamma):
    """f(x, gamma) evaluated as a product over the expanded roots of f.

    For a component with intersection zero the order is exactly zero and the
    constant term is the irregular value.
    """
    prod = None
    for b in bs.branches:
        for mem in b.members:
            diff = gamma - mem
            prod = diff if prod is None else prod * diff
    first = prod.first_certified_term()
    if first is None or first[0] != 0:
        raise InternalInconsistency(
            "irregular-value evaluation did not produce order zero"
        )
    return first[1]