"""Newton-Puiseux expansion, branch grouping, characteristic data, contacts.

The engine expands every root of a squarefree y-polynomial by iterating
polygon / edge-polynomial-root / substitution steps, carrying one work item
per root cluster.  Items fork exactly at contact levels, so once every item
holds a single root, all pairwise contacts and characteristic exponents are
already visible; a second phase then extends every item to one common
exactness bound.  Conjugacy classes of the resulting series are the
branches; their numerics (characteristic sequences, semigroups, the contact
dictionary) are derived from term supports and cross-checked through
resultants.
"""

from .curves import CurvePoly, LaurentPoly, YPoly, resultant_factored
from .errors import InternalInconsistency, NonReduced
from .polygon import polygon_of
from .rationals import INF, rat, rat_str
from .series import PuiseuxSeries, eval_ypoly_at_series, series_contact
from .towers import AlgNum, UniPoly, all_roots, primitive_root_of_unity

_MATH_GCD = __import__("math").gcd


class _Item:
    __slots__ = ("terms", "lam", "count", "g")

    def __init__(self, terms, lam, count, g):
        self.terms = terms  # [(exp, AlgNum coeff)] exact prefix of the root(s)
        self.lam = lam  # last exponent consumed (None before the first term)
        self.count = count  # roots attached to this prefix
        self.g = g  # F(x, prefix + y)


def _children(session, item):
    """One polygon step: exact-root emission plus one child per edge root."""
    g = item.g
    v = g.y_valuation()
    exact = None
    if v >= 1:
        if v > 1:
            raise NonReduced("input to the expansion engine is not squarefree")
        exact = PuiseuxSeries(list(item.terms), INF, _trusted=True)
    kids = []
    if g.degree > v:
        poly = polygon_of(g)
        for edge in poly.edges:
            if item.lam is not None and not (edge.slope > item.lam):
                continue
            face = edge.face_unipoly(session)
            base = UniPoly(session, face.coeffs()[edge.lo[1]:])
            for root, mult in all_roots(session, base):
                kids.append(
                    _Item(
                        item.terms + [(edge.slope, root)],
                        edge.slope,
                        mult,
                        g.shift_y_by_term(root, edge.slope),
                    )
                )
    got = (1 if exact is not None else 0) + sum(k.count for k in kids)
    if got != item.count:
        raise InternalInconsistency(
            "root count mismatch in expansion: expected %d, found %d"
            % (item.count, got)
        )
    return exact, kids


def _prefix_contact(a_terms, b_terms):
    """Contact of two roots from their (exact) term prefixes."""
    for (ea, ca), (eb, cb) in zip(a_terms, b_terms):
        if ea != eb:
            return min(ea, eb)
        if not (ca - cb).is_zero():
            return ea
    if len(a_terms) == len(b_terms):
        return None
    longer = a_terms if len(a_terms) > len(b_terms) else b_terms
    return longer[min(len(a_terms), len(b_terms))][0]


def _char_exponents_from_support(exps):
    """(n, characteristic integer exponents) from a full exponent support."""
    n = 1
    for e in exps:
        n = n * e.denominator // _MATH_GCD(n, int(e.denominator))
    d = n
    ms = []
    for e in exps:
        i = int(e * n)
        if d == 1:
            break
        if i % d != 0:
            ms.append(i)
            d = _MATH_GCD(d, abs(i))
    if d != 1:
        raise InternalInconsistency("support does not reach full ramification")
    return n, ms


def expand_roots(session, F, floor=None, margin=rat(0)):
    """All roots of a squarefree y-polynomial, exact beyond one common bound.

    Returns (series list, maxlevel) where maxlevel is the largest pairwise
    contact / characteristic exponent seen (at least ``floor`` when given);
    every returned series is exact strictly beyond maxlevel + margin (each
    item stops at its first edge slope past the bound, the 1/N margin).
    """
    yp = F.yp if isinstance(F, CurvePoly) else F
    total = yp.degree
    if total <= 0:
        return [], floor if floor is not None else rat(0)
    exacts = []
    parked = []
    queue = [_Item([], None, total, yp)]
    while queue:
        item = queue.pop()
        exact, kids = _children(session, item)
        if exact is not None:
            exacts.append(exact)
        for kid in kids:
            (parked if kid.count == 1 else queue).append(kid)

    # every contact and characteristic exponent is now on the table
    levels = set()
    all_prefixes = [it.terms for it in parked] + [ex.terms for ex in exacts]
    for i in range(len(all_prefixes)):
        for j in range(i + 1, len(all_prefixes)):
            c = _prefix_contact(all_prefixes[i], all_prefixes[j])
            if c is None:
                raise InternalInconsistency("two expansion items share a prefix")
            levels.add(c)
    for terms in all_prefixes:
        exps = [e for e, _ in terms]
        if exps:
            n, ms = _char_exponents_from_support(exps)
            for m in ms:
                levels.add(rat(m, n))
    if floor is not None:
        levels.add(rat(floor))
    maxlevel = max(levels) if levels else rat(0)
    target = maxlevel + margin

    out = list(exacts)
    for item in parked:
        while True:
            g = item.g
            if g.y_valuation() >= 1:
                out.append(PuiseuxSeries(list(item.terms), INF, _trusted=True))
                break
            poly = polygon_of(g)
            cont = [e for e in poly.edges if item.lam is None or e.slope > item.lam]
            if len(cont) != 1 or cont[0].height != 1:
                raise InternalInconsistency("separated item lost its single root")
            edge = cont[0]
            if edge.slope > target:
                out.append(
                    PuiseuxSeries(list(item.terms), edge.slope, _trusted=True)
                )
                break
            face = edge.face_unipoly(session)
            base = UniPoly(session, face.coeffs()[edge.lo[1]:])
            roots = all_roots(session, base)
            if len(roots) != 1 or roots[0][1] != 1:
                raise InternalInconsistency("simple edge carries several roots")
            root = roots[0][0]
            item.terms.append((edge.slope, root))
            item.lam = edge.slope
            item.g = g.shift_y_by_term(root, edge.slope)
    if len(out) != total:
        raise InternalInconsistency("expansion lost roots")
    return out, maxlevel


class BranchData:
    """Characteristic sequences of one branch (integers scaled by n)."""

    __slots__ = ("n", "h", "m", "d", "e", "r", "sign")

    def __init__(self, n, m_list):
        self.n = n
        self.m = list(m_list)
        self.h = len(self.m)
        d = [n]
        for mk in self.m:
            d.append(_MATH_GCD(d[-1], abs(mk)))
        if d[-1] != 1:
            raise InternalInconsistency("characteristic gcd chain does not end at 1")
        self.d = d  # d_1 .. d_{h+1}
        self.e = [d[k] // d[k + 1] for k in range(self.h)]
        r = [n]
        for k in range(1, self.h + 1):
            if k == 1:
                r.append(self.m[0])
            else:
                r.append(r[k - 1] * (d[k - 2] // d[k - 1]) + self.m[k - 1] - self.m[k - 2])
        self.r = r  # r_0 .. r_h
        if not self.m:
            self.sign = "positive"
        elif all(mk > 0 for mk in self.m):
            self.sign = "positive"
        elif all(mk < 0 for mk in self.m):
            self.sign = "negative"
        else:
            self.sign = "mixed"

    def mn(self, k):
        """m_k / n; +inf beyond the last characteristic exponent."""
        if k <= 0 or k > self.h:
            return INF
        return rat(self.m[k - 1], self.n)

    def mn_list(self):
        return [rat(mk, self.n) for mk in self.m]

    def dk(self, k):
        """d_k for 1 <= k <= h+1 (d_{h+1} = 1; constant 1 beyond)."""
        if k <= 0:
            return self.n
        if k > self.h + 1:
            return 1
        return self.d[k - 1]

    def nd(self, k):
        return rat(self.n, self.dk(k))

    def semigroup(self):
        return list(self.r)

    def __repr__(self):
        return "BranchData(n=%d, m=%s)" % (self.n, self.m)


def s_function(bd, M):
    """Contact-to-intersection dictionary of one branch, at contact level M.

    Piecewise linear and strictly increasing, with slope n*d_{k+1} between
    consecutive scaled characteristic exponents; below the first one the
    value is (nM)*d_1, which glues continuously.
    """
    M = rat(M)
    if bd.h == 0 or M < bd.mn(1):
        return M * bd.n * bd.dk(1)
    k = bd.h
    while k >= 1 and bd.mn(k) > M:
        k -= 1
    return bd.r[k] * bd.dk(k) + (bd.n * M - bd.m[k - 1]) * bd.dk(k + 1)


def s_inverse(bd, value):
    """The unique M with s_function(bd, M) == value (S is strictly increasing)."""
    value = rat(value)
    if bd.h == 0 or value < rat(bd.m[0] * bd.n):
        return value / rat(bd.n * bd.dk(1))
    k = bd.h
    while k >= 1 and rat(bd.r[k] * bd.dk(k)) > value:
        k -= 1
    if k == 0:
        return value / rat(bd.n * bd.dk(1))
    M = bd.mn(k) + (value - bd.r[k] * bd.dk(k)) / rat(bd.n * bd.dk(k + 1))
    if s_function(bd, M) != value:
        raise InternalInconsistency("intersection dictionary failed to invert")
    return M


class Branch:
    """One irreducible factor: a conjugacy class of Puiseux roots."""

    __slots__ = ("session", "members", "rep", "data", "mult", "_factor", "label")

    def __init__(self, session, members, rep, data, mult=1):
        self.session = session
        self.members = members
        self.rep = rep
        self.data = data
        self.mult = mult
        self._factor = None
        self.label = None

    @property
    def n(self):
        return self.data.n

    def factor_ypoly(self):
        """The monic factor from the truncated members (exact below the bound)."""
        if self._factor is None:
            s = self.session
            one = s.one()
            acc = YPoly([LaurentPoly.monomial(one)])
            for mem in self.members:
                lin = YPoly(
                    [LaurentPoly({e: -c for e, c in mem.terms}), LaurentPoly.monomial(one)]
                )
                acc = acc * lin
            # symmetric products collapse hard: certify and compress them
            for c in acc.cy:
                c.prune()
                for e in list(c.terms):
                    c.terms[e] = AlgNum(s, s.deep(c.terms[e].v))
            self._factor = acc
        return self._factor

    def __repr__(self):
        return "Branch(%s, n=%d)" % (self.label or "?", self.n)


def _sort_key(series):
    return (
        series.order() if series.terms else INF,
        tuple(e for e, _ in series.terms),
        tuple(repr(c) for _, c in series.terms),
    )


def group_branches(session, series_list):
    """Partition expanded roots into conjugacy classes (one Branch each)."""
    pool = list(series_list)
    used = [False] * len(pool)
    branches = []
    for i, ser in enumerate(pool):
        if used[i]:
            continue
        N = ser.ramification
        orbit_idx = [i]
        used[i] = True
        if N > 1:
            zeta = primitive_root_of_unity(session, N)
            pows = [zeta ** k for k in range(N)]
            for k in range(1, N):
                conj = ser.conjugate([pows[(j * k) % N] for j in range(N)], N)
                found = None
                for j, other in enumerate(pool):
                    if used[j]:
                        continue
                    if _same_series(conj, other):
                        found = j
                        break
                if found is None:
                    raise InternalInconsistency("conjugate root missing from expansion")
                used[found] = True
                orbit_idx.append(found)
        members = [pool[j] for j in orbit_idx]
        rep = min(members, key=_sort_key)
        n, ms = (
            _char_exponents_from_support([e for e, _ in rep.terms])
            if rep.terms
            else (1, [])
        )
        if n != len(members):
            raise InternalInconsistency(
                "conjugacy class size %d does not match ramification %d"
                % (len(members), n)
            )
        branches.append(Branch(session, members, rep, BranchData(n, ms)))
    branches.sort(key=lambda b: _sort_key(b.rep))
    return branches


def _same_series(a, b):
    if len(a.terms) != len(b.terms):
        return False
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea != eb:
            return False
        if not (ca - cb).is_zero():
            return False
    return True


class BranchSet:
    """Branches of one reduced curve plus the exact pairwise contact table."""

    def __init__(self, session, curve, branches, contacts, maxlevel):
        self.session = session
        self.curve = curve  # YPoly
        self.branches = branches
        self.contacts = contacts  # dict[(i, j)] -> Fraction, i < j
        self.maxlevel = maxlevel
        for k, b in enumerate(branches):
            b.label = "f%d" % (k + 1)

    @property
    def size(self):
        return len(self.branches)

    def contact(self, i, j):
        """Contact of branches by index; +inf on the diagonal."""
        if i == j:
            return INF
        key = (min(i, j), max(i, j))
        return self.contacts[key]

    def levels(self):
        """C(f): pairwise contacts plus all characteristic exponents."""
        out = set()
        for (i, j), c in self.contacts.items():
            out.add(c)
        for b in self.branches:
            out.update(b.data.mn_list())
        return sorted(out)

    def total_degree(self):
        return sum(b.n * b.mult for b in self.branches)


def measured_branch_contact(b1, b2):
    """Largest order of difference over member pairs (the defining formula)."""
    best = None
    for s1 in b1.members:
        for s2 in b2.members:
            c = series_contact(s1, s2)
            if c is None:
                raise InternalInconsistency(
                    "contact unresolved at the common truncation"
                )
            best = c if best is None else max(best, c)
    return best


def resultant_branch_contact(session, b1, b2):
    """Contact recovered from the intersection number via the S dictionary."""
    fx = resultant_factored(b1.factor_ypoly(), b2.factor_ypoly())
    if fx.is_zero():
        raise InternalInconsistency("reconstructed factors share a root")
    inter = fx.valuation()
    return s_inverse(b1.data, inter * rat(b1.n, b2.n))


def branch_contact(session, b1, b2):
    """Contact computed both ways; the two must agree exactly."""
    a = measured_branch_contact(b1, b2)
    b = resultant_branch_contact(session, b1, b2)
    if a != b:
        raise InternalInconsistency(
            "contact mismatch: measured %s vs dictionary %s" % (rat_str(a), rat_str(b))
        )
    return a


def analyze_curve(session, f, margin=rat(0), check_contacts_both_ways=True):
    """Expand, group and measure a reduced curve: the full BranchSet."""
    f.require_reduced()
    series, maxlevel = expand_roots(session, f.yp, margin=margin)
    branches = group_branches(session, series)
    contacts = {}
    for i in range(len(branches)):
        for j in range(i + 1, len(branches)):
            if check_contacts_both_ways:
                contacts[(i, j)] = branch_contact(session, branches[i], branches[j])
            else:
                contacts[(i, j)] = measured_branch_contact(branches[i], branches[j])
    return BranchSet(session, f.yp, branches, contacts, maxlevel)


def characteristic(branch):
    """(n, h, m, d, e, r, semigroup generators) of one branch."""
    bd = branch.data
    return (bd.n, bd.h, list(bd.m), list(bd.d), list(bd.e), list(bd.r), bd.semigroup())


def same_root(a, b, maxlevel):
    """True when two expanded series are the same root of a common curve.

    Distinct roots differ at or below maxlevel; identical prefixes past it
    mean identity (both series must be exact beyond maxlevel).
    """
    c = series_contact(a, b)
    return c is None or c == INF or c > maxlevel


def match_branches_to_factor(session, bs, g):
    """Indices of branches of ``bs`` whose roots are roots of the factor g."""
    gp = g.yp if hasattr(g, "yp") else g
    roots, _ = expand_roots(session, gp, floor=bs.maxlevel)
    out = []
    for i, b in enumerate(bs.branches):
        if any(same_root(b.rep, r, bs.maxlevel) for r in roots):
            out.append(i)
    return out


def curve_value_on_series(yp, series):
    """f(x, gamma) as a truncated series (used for irregular values)."""
    return eval_ypoly_at_series(yp, series)
