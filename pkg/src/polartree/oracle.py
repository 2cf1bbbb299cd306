"""Independent ground truth: expand the polar / Jacobian and measure.

Observation never consults predictions: components are grouped purely by
their measured contacts with the expanded branches of the curve, degrees
are summed with multiplicities from the squarefree decomposition, and
intersection numbers come from pairwise root contact sums.  Agreement with
the closed-form predictions is then evidence, not circularity.
"""

from .branches import expand_roots, group_branches
from .curves import derivative_y, jacobian, yun_squarefree
from .errors import InternalInconsistency, ZeroJacobian
from .rationals import INF, rat
from .series import series_contact


class ObservedGroup:
    """All components of the target attached to one tree point."""

    __slots__ = ("point", "components", "degree", "contacts", "ints")

    def __init__(self, point):
        self.point = point
        self.components = []
        self.degree = rat(0)
        self.contacts = {}
        self.ints = {}


class TargetObservation:
    """Expanded components of a polar or Jacobian, grouped by tree point."""

    def __init__(self, kind, components, groups, residual, total_degree):
        self.kind = kind
        self.components = components
        self.groups = groups  # point key -> ObservedGroup
        self.residual = residual  # [(component, contact dict)] at mixed points
        self.total_degree = total_degree

    def residual_degree(self):
        return sum(c.n * c.mult for c, _ in self.residual)


def expand_components(session, yp, floor):
    """Branches of a (possibly non-reduced) y-polynomial, with multiplicity."""
    comps = []
    for part, mult in yun_squarefree(session, yp):
        roots, _ = expand_roots(session, part, floor=floor)
        for br in group_branches(session, roots):
            br.mult = mult
            comps.append(br)
    return comps


def component_contacts(bs, comp):
    """Measured contact of one target component with every branch of f."""
    out = {}
    for i, b in enumerate(bs.branches):
        best = None
        for y in b.members:
            for z in comp.members:
                c = series_contact(y, z)
                if c is None:
                    raise InternalInconsistency(
                        "component contact unresolved at the truncation"
                    )
                best = c if best is None else max(best, c)
        out[i] = best
    return out


def _pair_contact_sum(branch, comp):
    total = rat(0)
    for y in branch.members:
        for z in comp.members:
            total += series_contact(y, z)
    return total


def observe_target(session, bs, tree, target_yp, kind, mixed_keys=()):
    """Group the components of a target polynomial by tree point."""
    target_yp.sound_trim()
    comps = expand_components(session, target_yp, floor=bs.maxlevel)
    groups = {}
    residual = []
    mixed_keys = set(mixed_keys)
    for comp in comps:
        cc = component_contacts(bs, comp)
        level = max(cc.values())
        members = frozenset(i for i, c in cc.items() if c == level)
        point = tree.point(level, members)
        if point is None:
            raise InternalInconsistency(
                "observed component level/members do not form a tree point"
            )
        if point.key() in mixed_keys:
            residual.append((comp, cc))
            continue
        g = groups.get(point.key())
        if g is None:
            g = groups[point.key()] = ObservedGroup(point)
        g.components.append(comp)
        g.degree += comp.n * comp.mult
        for i, c in cc.items():
            prev = g.contacts.get(i)
            if prev is not None and prev != c:
                raise InternalInconsistency(
                    "contacts differ across components of one group"
                )
            g.contacts[i] = c
    for g in groups.values():
        for i, b in enumerate(bs.branches):
            total = rat(0)
            for comp in g.components:
                total += comp.mult * _pair_contact_sum(b, comp)
            g.ints[i] = total
    total_degree = sum(c.n * c.mult for c in comps)
    return TargetObservation(kind, comps, groups, residual, total_degree)


def observe_polar(session, f, bs=None, tree=None):
    """Expand the monic-normalized y-derivative and group its components."""
    from .branches import analyze_curve
    from .tree import build_tree

    if bs is None:
        bs = analyze_curve(session, f)
    if tree is None:
        tree = build_tree(bs)
    fy = derivative_y(f)
    obs = observe_target(session, bs, tree, fy.yp, "polar")
    if obs.residual:
        raise InternalInconsistency("polar component escaped the tree grouping")
    if obs.total_degree != f.degree - 1:
        raise InternalInconsistency("polar expansion lost degree")
    return obs


def observe_jacobian(session, f, g, bs, tree, mixed_keys):
    """Expand J(f, g) and group; mixed-point components form the residual."""
    J = jacobian(f, g)
    if J.is_zero_sound():
        raise ZeroJacobian("the Jacobian vanishes identically")
    if J.degree < 1 or all(c.is_zero() for c in J.cy[1:]):
        # no roots to group: everything is residual content
        return TargetObservation("jacobian", [], {}, [], rat(0))
    obs = observe_target(session, bs, tree, J, "jacobian", mixed_keys=mixed_keys)
    return obs
