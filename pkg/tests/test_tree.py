import pytest

from polartree.branches import analyze_curve
from polartree.parsing import parse_curve
from polartree.rationals import rat
from polartree.towers import Session
from polartree.tree import (
    ALMOST_EQUIVALENT,
    EQUIVALENT,
    SINGLETON,
    build_tree,
    classify_sequence,
    tree_dot,
    tree_json,
    x_partition,
)

EX1 = "((y^2 - x^3)^2 - x^5*y)*((y^2 - x^3)^2 + x^5*y)"
EX2 = ("((y^2 - x^3)^2 - x^5*y)*((y^2 - x^3)^2 + x^5*y)"
       "*((y^2 - x^3)^2 + x^5*y - x^7)*((y^2 + x^3)^2 - x^5*y)")
EX3 = "((y^2 - x^3)^2 - x^5*y)*(y^2 - x^3)*(y^2 + x^3)"


def analyzed(text, cap=24):
    s = Session(depth_cap=cap)
    f = parse_curve(s, text)
    bs = analyze_curve(s, f)
    return s, bs


def by_factor(s, bs, factor_texts):
    """Map paper factor order to our branch indices (root matching)."""
    from polartree.branches import match_branches_to_factor
    from polartree.parsing import parse_curve as pc

    out = []
    for txt in factor_texts:
        hits = match_branches_to_factor(s, bs, pc(s, txt))
        assert len(hits) == 1, txt
        out.append(hits[0])
    return out


def test_cusp_tree():
    s, bs = analyzed("y^2 - x^3")
    t = build_tree(bs)
    assert len(t.points) == 1
    p = t.points[0]
    assert p.level == rat(3, 2)
    assert p.is_top and p.D == p.members
    assert p.theta == 1
    s_, c_, xs = x_partition(t, p)
    assert (s_, c_) == (1, 1)


def test_example_one_tree():
    s, bs = analyzed(EX1)
    t = build_tree(bs)
    assert t.levels == [rat(3, 2), rat(7, 4)]
    assert len(t.points) == 2
    low = t.point(rat(3, 2), {0, 1})
    high = t.point(rat(7, 4), {0, 1})
    assert low is not None and high is not None
    assert high.is_top and not low.is_top
    assert low.D == frozenset()
    assert high.D == frozenset({0, 1})
    assert low.theta == 1 and high.theta == 2
    s_, c_, _ = x_partition(t, low)
    assert (s_, c_) == (2, 1)
    s_, c_, _ = x_partition(t, high)
    assert (s_, c_) == (1, 2)


def test_example_two_tree():
    s, bs = analyzed(EX2)
    t = build_tree(bs)
    f = by_factor(s, bs, [
        "(y^2 - x^3)^2 - x^5*y",
        "(y^2 - x^3)^2 + x^5*y",
        "(y^2 - x^3)^2 + x^5*y - x^7",
        "(y^2 + x^3)^2 - x^5*y",
    ])
    assert t.levels == [rat(3, 2), rat(7, 4), rat(9, 4)]
    pts = {p.key() for p in t.visible_points()}
    assert len(t.points) == 4 and len(pts) == 4
    p32 = t.point(rat(3, 2), {f[0], f[1], f[2], f[3]})
    p74a = t.point(rat(7, 4), {f[0], f[1], f[2]})
    p74b = t.point(rat(7, 4), {f[3]})
    p94 = t.point(rat(9, 4), {f[1], f[2]})
    assert None not in (p32, p74a, p74b, p94)
    assert p74a.D == frozenset({f[0]})
    assert p32.D == frozenset()
    assert p74b.is_top and p94.is_top and not p74a.is_top
    # partition counts from the counting identity c = t + card(D)
    s_, c_, xs = x_partition(t, p74a)
    assert (s_, c_) == (2, 2)
    assert {frozenset(x) for x in xs} == {
        frozenset({f[0], f[1]}), frozenset({f[0], f[2]})
    }
    s_, c_, _ = x_partition(t, p32)
    assert (s_, c_) == (3, 2)


def test_example_three_tree_and_classification():
    s, bs = analyzed(EX3)
    t = build_tree(bs)
    f = by_factor(s, bs, ["(y^2 - x^3)^2 - x^5*y", "y^2 - x^3", "y^2 + x^3"])
    assert t.levels == [rat(3, 2), rat(7, 4)]
    p32 = t.point(rat(3, 2), {f[0], f[1], f[2]})
    p74 = t.point(rat(7, 4), {f[0], f[1]})
    assert p32 is not None and p74 is not None
    assert p32.D == frozenset({f[2]})
    assert p74.is_top
    cls = classify_sequence(bs, p74.members, p74.level)
    assert cls.kind == ALMOST_EQUIVALENT
    assert cls.odd_member == f[1]
    cls2 = classify_sequence(bs, {f[1], f[2]})
    assert cls2.kind == EQUIVALENT
    cls3 = classify_sequence(bs, {f[0]})
    assert cls3.kind == SINGLETON


def test_pass_through_point_is_hidden():
    s, bs = analyzed(
        "((y^2 - x^3)^2 - x^5*y)^2 + x^10*(y^2 - x^3)", cap=24)
    # irreducible of degree 8 with m/n = 3/2, 7/4, 15/8: chain of three points
    t = build_tree(bs)
    assert all(p.visible for p in t.points)
    assert [p.level for p in t.points] == [rat(3, 2), rat(7, 4), rat(15, 8)]


def test_tree_emitters():
    s, bs = analyzed(EX1)
    t = build_tree(bs)
    j = tree_json(t)
    assert j["levels"] == ["3/2", "7/4"]
    assert len(j["points"]) == 2
    dot = tree_dot(t)
    assert "digraph" in dot and "P_1^{7/4}" in dot


def test_top_points_partition_branches():
    s, bs = analyzed(EX2)
    t = build_tree(bs)
    tops = t.tops()
    seen = set()
    for p in tops:
        assert not (seen & p.members)
        seen |= p.members
