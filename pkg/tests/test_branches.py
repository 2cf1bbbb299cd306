import pytest

from polartree.branches import (
    BranchData,
    analyze_curve,
    characteristic,
    curve_value_on_series,
    expand_roots,
    group_branches,
    s_function,
    s_inverse,
)
from polartree.errors import InternalInconsistency
from polartree.parsing import parse_curve
from polartree.rationals import INF, rat
from polartree.series import series_contact
from polartree.towers import Session


@pytest.fixture
def s():
    return Session(depth_cap=16)


def test_expand_cusp(s):
    f = parse_curve(s, "y^2 - x^3")
    roots, maxlevel = expand_roots(s, f)
    assert len(roots) == 2
    assert maxlevel == rat(3, 2)
    orders = sorted(r.order() for r in roots)
    assert orders == [rat(3, 2), rat(3, 2)]
    # the two roots differ in the sign of the leading coefficient
    lead = [r.terms[0][1] for r in roots]
    assert (lead[0] + lead[1]).is_zero()


def test_expand_quartic_second_exponent(s):
    f = parse_curve(s, "(y^2 - x^3)^2 - x^5*y")
    roots, maxlevel = expand_roots(s, f)
    assert len(roots) == 4
    assert maxlevel == rat(7, 4)
    for r in roots:
        assert r.terms[0][0] == rat(3, 2)
        assert r.terms[1][0] == rat(7, 4)


def test_expand_meromorphic_orders(s):
    f = parse_curve(s, "y^4 + x^-1*y^2 + y + 1")
    roots, _ = expand_roots(s, f)
    orders = sorted(r.order() for r in roots)
    assert orders == [rat(-1, 2), rat(-1, 2), rat(1, 2), rat(1, 2)]


def test_group_branches_two_cusps(s):
    f = parse_curve(s, "(y^2 - x^3)*(y^2 + x^3)")
    roots, _ = expand_roots(s, f)
    branches = group_branches(s, roots)
    assert [b.n for b in branches] == [2, 2]


def test_group_branches_degree_four_example(s):
    f = parse_curve(s, "((y^2 - x^3)^2 - x^5*y)*((y^2 - x^3)^2 + x^5*y)")
    bs = analyze_curve(s, f)
    assert [b.n for b in bs.branches] == [4, 4]
    assert bs.contact(0, 1) == rat(7, 4)
    assert bs.contact(0, 0) == INF


def test_characteristic_cusp(s):
    f = parse_curve(s, "y^2 - x^3")
    bs = analyze_curve(s, f)
    n, h, m, d, e, r, gamma = characteristic(bs.branches[0])
    assert (n, h) == (2, 1)
    assert m == [3]
    assert d == [2, 1]
    assert e == [2]
    assert r == [2, 3]


def test_characteristic_quartic(s):
    f = parse_curve(s, "(y^2 - x^3)^2 - x^5*y")
    bs = analyze_curve(s, f)
    b = bs.branches[0]
    assert b.n == 4
    assert b.data.m == [6, 7]
    assert b.data.d == [4, 2, 1]
    assert b.data.r == [4, 6, 13]
    assert b.data.semigroup() == [4, 6, 13]


def test_s_function_values():
    bd = BranchData(4, [6, 7])
    assert s_function(bd, rat(3, 2)) == 24
    assert s_function(bd, rat(7, 4)) == 26
    assert s_function(bd, rat(1)) == 16
    # continuity across the breakpoints
    assert s_function(bd, rat(6, 4)) == rat(6) * 4
    for v in (rat(5), rat(24), rat(26), rat(27), rat(3)):
        assert s_function(bd, s_inverse(bd, v)) == v


def test_s_function_smooth_branch():
    bd = BranchData(1, [])
    assert s_function(bd, rat(5, 2)) == rat(5, 2)
    assert s_inverse(bd, rat(7)) == rat(7)


def test_contact_table_example_two_branches(s):
    f1 = "(y^2 - x^3)^2 - x^5*y"
    f2 = "y^2 - x^3"
    f3 = "y^2 + x^3"
    f = parse_curve(s, "(%s)*(%s)*(%s)" % (f1, f2, f3))
    bs = analyze_curve(s, f)
    assert bs.size == 3
    by_n = sorted(range(3), key=lambda i: -bs.branches[i].n)
    big = by_n[0]
    small = by_n[1:]
    # contacts: quartic with one cusp 7/4, everything else 3/2
    vals = sorted(bs.contact(big, j) for j in small)
    assert vals == [rat(3, 2), rat(7, 4)]
    assert bs.contact(small[0], small[1]) == rat(3, 2)


def test_levels_and_total_degree(s):
    f = parse_curve(s, "((y^2 - x^3)^2 - x^5*y)*(y^2 - x^3)*(y^2 + x^3)")
    bs = analyze_curve(s, f)
    assert bs.total_degree() == 8
    assert bs.levels() == [rat(3, 2), rat(7, 4)]


def test_factor_reconstruction_vanishes(s):
    f = parse_curve(s, "(y^2 - x^3)*(y^2 + x^3)")
    bs = analyze_curve(s, f)
    for b in bs.branches:
        fac = b.factor_ypoly()
        assert fac.degree == b.n
        for mem in b.members:
            val = curve_value_on_series(fac, mem)
            assert not val.terms  # vanishes to the certified order


def test_curve_value_on_root_vanishes(s):
    f = parse_curve(s, "(y^2 - x^3)^2 - x^5*y")
    roots, _ = expand_roots(s, f)
    for r in roots:
        v = curve_value_on_series(f.yp, r)
        assert not v.terms
        assert v.truncation > 0


def test_series_contact_between_root_sets(s):
    f = parse_curve(s, "y^2 - x^3")
    g = parse_curve(s, "y^2 + x^3")
    rf, _ = expand_roots(s, f, floor=rat(3, 2))
    rg, _ = expand_roots(s, g, floor=rat(3, 2))
    cs = {series_contact(a, b) for a in rf for b in rg}
    assert cs == {rat(3, 2)}
