"""The contact tree: levels, points, domination, tops, partitions.

Points at a level are the equivalence classes of "contact at least M" among
the branches still related at that level; a point is strictly dominated by
the classes it splits into at the successor level.  The literal
construction keeps pass-through points (same members as their unique
dominator, level irrelevant to them); they carry no polar factor and are
marked invisible for display.
"""

from .errors import ContradictionWitness, InternalInconsistency
from .rationals import INF, rat, rat_str


class TreePoint:
    __slots__ = (
        "level", "members", "index", "dominators", "parent", "D", "theta",
        "visible", "scount", "ccount",
    )

    def __init__(self, level, members):
        self.level = level
        self.members = frozenset(members)
        self.index = None
        self.dominators = []
        self.parent = None
        self.D = frozenset()
        self.theta = None
        self.visible = False
        self.scount = None
        self.ccount = None

    @property
    def is_top(self):
        return self.members == self.D

    @property
    def label(self):
        return "P_%d^{%s}" % (self.index, rat_str(self.level))

    def key(self):
        return (self.level, tuple(sorted(self.members)))

    def __repr__(self):
        return "%s{%s}" % (self.label, ",".join("f%d" % (i + 1) for i in sorted(self.members)))


class ContactTree:
    def __init__(self, branchset, levels, points):
        self.branchset = branchset
        self.levels = levels
        self.points = points
        self._by_key = {p.key(): p for p in points}

    def point(self, level, members):
        return self._by_key.get((rat(level), tuple(sorted(members))))

    def points_at(self, level):
        return [p for p in self.points if p.level == level]

    def tops(self):
        return [p for p in self.points if p.is_top]

    def visible_points(self):
        return [p for p in self.points if p.visible]

    def root(self):
        if not self.points:
            return None
        return min(self.points, key=lambda p: (p.level, -len(p.members)))

    def point_of_branch(self, level, branch_idx):
        for p in self.points_at(level):
            if branch_idx in p.members:
                return p
        return None


def _member_theta(bs, point):
    """Smallest k with M <= m_k/n for every member (consistent by contact)."""
    thetas = set()
    for i in point.members:
        bd = bs.branches[i].data
        k = 1
        while bd.mn(k) < point.level:
            k += 1
        thetas.add(k)
    if len(thetas) != 1:
        raise InternalInconsistency(
            "theta differs across the members of %s" % point.label
        )
    return thetas.pop()


def build_tree(bs):
    """Contact tree of a BranchSet: points, domination, D sets, thetas."""
    levels = bs.levels()
    points = []
    prev = {}
    for lvl_idx, M in enumerate(levels):
        # membership at this level
        members = []
        for i, b in enumerate(bs.branches):
            self_ok = any(mn >= M for mn in b.data.mn_list())
            cross_ok = any(
                bs.contact(i, j) >= M for j in range(bs.size) if j != i
            )
            if self_ok or cross_ok:
                members.append(i)
        # classes of the "contact >= M" relation
        parent_uf = {i: i for i in members}

        def find(i):
            while parent_uf[i] != i:
                parent_uf[i] = parent_uf[parent_uf[i]]
                i = parent_uf[i]
            return i

        for a in members:
            for b2 in members:
                if a < b2 and bs.contact(a, b2) >= M:
                    ra, rb = find(a), find(b2)
                    if ra != rb:
                        parent_uf[ra] = rb
        classes = {}
        for i in members:
            classes.setdefault(find(i), []).append(i)
        here = []
        for group in classes.values():
            here.append(TreePoint(M, group))
        here.sort(key=lambda p: min(p.members))
        for idx, p in enumerate(here):
            p.index = idx + 1
        # domination: the class at the previous level containing the members
        if lvl_idx > 0:
            for p in here:
                for q in prev.values():
                    if p.members <= q.members:
                        p.parent = q
                        q.dominators.append(p)
                        break
                else:
                    raise InternalInconsistency(
                        "%s has no parent at the previous level" % p.label
                    )
        points.extend(here)
        prev = {tuple(sorted(p.members)): p for p in here}
    for p in points:
        dominated = set()
        for q in p.dominators:
            dominated |= q.members
        p.D = frozenset(p.members - dominated)
        p.theta = _member_theta(bs, p)
        p.visible = _is_visible(bs, p)
        t = len(p.dominators)
        p.ccount = t + len(p.D)
        p.scount = 1
        for q in p.dominators:
            p.scount *= len(q.members)
    return ContactTree(bs, levels, points)


def _is_visible(bs, point):
    M = point.level
    for i in point.members:
        if M in bs.branches[i].data.mn_list():
            return True
    ms = sorted(point.members)
    for a in ms:
        for b in ms:
            if a < b and bs.contact(a, b) == M:
                return True
    return False


def x_partition(tree, point):
    """(s(M,i), c(M,i), the X sets): one member per dominator, plus D.

    The X sets are the maximal subsets with pairwise contact exactly M; each
    meets each strictly dominating point in exactly one branch.
    """
    from itertools import product

    choices = [sorted(q.members) for q in point.dominators]
    xs = []
    for combo in product(*choices) if choices else [()]:
        xs.append(frozenset(set(combo) | point.D))
    s = len(xs)
    if s != point.scount:
        raise InternalInconsistency("partition count mismatch at %s" % point.label)
    sizes = {len(x) for x in xs}
    if len(sizes) != 1:
        raise InternalInconsistency("X sets of unequal size at %s" % point.label)
    c = sizes.pop()
    if c != point.ccount:
        raise InternalInconsistency(
            "c(M,i) = %d but t + card(D) = %d at %s" % (c, point.ccount, point.label)
        )
    return s, c, xs


EQUIVALENT = "equivalent"
ALMOST_EQUIVALENT = "almost-equivalent"
SINGLETON = "singleton"


class SeqClass:
    __slots__ = ("kind", "odd_member", "members")

    def __init__(self, kind, members, odd_member=None):
        self.kind = kind
        self.members = list(members)
        self.odd_member = odd_member

    def __repr__(self):
        if self.kind == ALMOST_EQUIVALENT:
            return "SeqClass(%s, odd=f%d)" % (self.kind, self.odd_member + 1)
        return "SeqClass(%s)" % self.kind


def _equivalent_pair(bs, i, j):
    a, b = bs.branches[i].data, bs.branches[j].data
    if a.h != b.h:
        return False
    if a.mn_list() != b.mn_list():
        return False
    if a.h == 0:
        return True
    return bs.contact(i, j) >= a.mn(a.h)


def _almost_equivalent_pair(bs, i, j):
    """j almost equivalent to i (i carries one extra characteristic exponent)."""
    a, b = bs.branches[i].data, bs.branches[j].data
    if a.h != b.h + 1:
        return False
    if a.mn_list()[: b.h] != b.mn_list():
        return False
    return bs.contact(i, j) == a.mn(a.h)


def classify_sequence(bs, members, M=None):
    """Constant-contact families are equivalent or almost equivalent."""
    ms = sorted(members)
    if len(ms) == 1:
        return SeqClass(SINGLETON, ms)
    ms.sort(key=lambda i: -bs.branches[i].n)
    lead = ms[0]
    if all(_equivalent_pair(bs, lead, j) for j in ms[1:]):
        ns = {bs.branches[i].n for i in ms}
        if len(ns) != 1:
            raise ContradictionWitness("equivalent family with mixed degrees")
        return SeqClass(EQUIVALENT, ms)
    for odd in ms:
        rest = [i for i in ms if i != odd]
        if len(rest) > 1 and not all(
            _equivalent_pair(bs, rest[0], j) for j in rest[1:]
        ):
            continue
        if all(_almost_equivalent_pair(bs, i, odd) for i in rest):
            big = bs.branches[rest[0]].data
            if bs.branches[odd].n * big.dk(big.h) != big.n:
                raise ContradictionWitness(
                    "almost equivalent member has the wrong degree"
                )
            return SeqClass(ALMOST_EQUIVALENT, ms, odd_member=odd)
    raise ContradictionWitness(
        "family {%s} is neither equivalent nor almost equivalent"
        % ",".join("f%d" % (i + 1) for i in ms)
    )


def q_component(tree, point, h_ids, cross_contact):
    """Components of a factored polynomial attached to one tree point.

    ``h_ids`` lists component identifiers of H, ``cross_contact(f_idx, h)``
    gives the exact contact of H-component ``h`` with branch ``f_idx``.  The
    direct definition (contact M with every member) is cross-checked against
    the quotient formula through the R_{=M} / R_{>M} products.
    """
    M = point.level
    direct = [
        h for h in h_ids
        if all(cross_contact(i, h) == M for i in point.members)
    ]

    def r_eq(f_idx):
        return {h for h in h_ids if cross_contact(f_idx, h) == M}

    def r_gt(f_idx):
        return {h for h in h_ids if cross_contact(f_idx, h) > M}

    if point.dominators:
        for q in point.dominators:
            reps = [r_eq(i) for i in sorted(q.members)]
            if any(r != reps[0] for r in reps[1:]):
                raise InternalInconsistency(
                    "R_= differs inside dominating point %s" % q.label
                )
        base_point = point.dominators[0]
        base = r_eq(min(base_point.members))
        removed = set()
        for q in point.dominators[1:]:
            part = r_gt(min(q.members))
            if not part <= base:
                raise InternalInconsistency("R_> not contained in R_= (dominator)")
            removed |= part
        for g in sorted(point.D):
            part = r_gt(g)
            if not part <= base:
                raise InternalInconsistency("R_> not contained in R_= (D member)")
            removed |= part
        quotient = sorted(base - removed)
    else:
        # top point (or a root with no dominators): quotient over D
        members = sorted(point.D if point.D else point.members)
        f0 = members[0]
        base = r_eq(f0)
        removed = set()
        for g in members[1:]:
            part = r_gt(g)
            if not part <= base:
                raise InternalInconsistency("R_> not contained in R_= (top)")
            removed |= part
        quotient = sorted(base - removed)
    if quotient != sorted(direct):
        raise InternalInconsistency(
            "quotient and direct component sets differ at %s" % point.label
        )
    return direct


def tree_json(tree):
    bs = tree.branchset
    return {
        "levels": [rat_str(l) for l in tree.levels],
        "points": [
            {
                "id": p.label,
                "level": rat_str(p.level),
                "members": [bs.branches[i].label for i in sorted(p.members)],
                "D": [bs.branches[i].label for i in sorted(p.D)],
                "theta": p.theta,
                "top": p.is_top,
                "visible": p.visible,
                "dominates": [q.label for q in p.dominators],
            }
            for p in tree.points
        ],
    }


def tree_dot(tree, include_hidden=False):
    bs = tree.branchset
    lines = ["digraph contact_tree {", "  rankdir=BT;", '  node [shape=box];']
    shown = [p for p in tree.points if include_hidden or p.visible]
    ids = {p.key(): "p%d" % k for k, p in enumerate(shown)}

    def visible_parent(p):
        q = p.parent
        while q is not None and q.key() not in ids:
            q = q.parent
        return q

    for p in shown:
        mem = ",".join(bs.branches[i].label for i in sorted(p.members))
        arrows = " " + "".join("^" for _ in p.D) if p.D else ""
        lines.append(
            '  %s [label="%s = {%s}%s"];' % (ids[p.key()], p.label, mem, arrows)
        )
    for p in shown:
        q = visible_parent(p)
        if q is not None:
            lines.append("  %s -> %s;" % (ids[q.key()], ids[p.key()]))
    lines.append("}")
    return "\n".join(lines)
