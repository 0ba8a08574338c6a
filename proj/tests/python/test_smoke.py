from fractions import Fraction
from itertools import combinations

import pytest

import emptri


def orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def inside(q, a, b, c):
    s = [orient(a, b, q), orient(b, c, q), orient(c, a, q)]
    return all(v > 0 for v in s) or all(v < 0 for v in s)


def brute_empty(pts):
    out = []
    for i, j, k in combinations(range(len(pts)), 3):
        if orient(pts[i], pts[j], pts[k]) == 0:
            continue
        if not any(inside(pts[q], pts[i], pts[j], pts[k]) for q in range(len(pts)) if q not in (i, j, k)):
            out.append((i, j, k))
    return out


def test_horton_roundtrip_and_check():
    h = emptri.generate_horton(4)
    assert len(h) == 16
    assert h.family == "horton"
    assert emptri.is_horton(h)
    back = emptri.PointSet.from_epts(h.to_epts())
    assert back.points == h.points
    assert back.params == h.params


def test_empty_triangles_match_python_oracle():
    s = emptri.generate_squared_horton(4)
    pts = emptri.points_of(s)
    tris, truncated = emptri.empty_triangles(s)
    assert not truncated
    assert tris == brute_empty(pts)
    assert tris == emptri.empty_triangles_bruteforce(s)


def test_convex_quadrilateral_depth():
    s = emptri.point_set([(0, 0), (4, 0), (5, 4), (0, 4)])
    tris, _ = emptri.empty_triangles(s)
    assert len(tris) == 4
    assert emptri.stab(s, (Fraction(2), Fraction(1)), tris) == 2
    assert emptri.stab(s, (2, 2), tris) == 1  # on a diagonal
    assert emptri.stab(s, (0, 0), tris) == 0
    assert emptri.max_stab_exact_small(s, tris)["count"] == 2
    assert emptri.incidence_counts(s, tris) == [3, 3, 3, 3]


def test_collinear_points_raise():
    s = emptri.point_set([(0, 0), (1, 1), (2, 2), (0, 3)])
    with pytest.raises(ValueError):
        emptri.empty_triangles(s)
    assert not emptri.check_general_position(s)["ok"]


def test_validators_and_reports():
    s = emptri.generate_squared_horton(4)
    rep = emptri.validate_squared_horton(s)
    assert rep["ok"] and rep["checks"]["orientation"]["ok"]
    ok, text = emptri.verify_report("lattice-heights", g=6)
    assert ok and "check.height_at_most_2: pass" in text
    assert emptri.analyze_report(s) == emptri.analyze_report(s)
    d = emptri.generate_diamond_squared_horton(4, 4)
    assert len(d) == 16 and emptri.validate_diamond_properties(d)["ok"]


def test_candidates_never_beat_exact():
    h = emptri.generate_horton(4)
    tris, _ = emptri.empty_triangles(h)
    exact = emptri.max_stab_exact_small(h, tris)
    for strat in ("a", "a+d", "a+b+c+d"):
        est = emptri.max_stab_candidates(h, tris, strat)
        assert est["count"] <= exact["count"]
        assert emptri.stab(h, tuple(Fraction(v) for v in est["point"]), tris) == est["count"]
