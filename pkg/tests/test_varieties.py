import pytest

from chevlab import gf, varieties
from chevlab.errors import AmbientTooLarge, ArityMismatch


def test_poly_parse_and_evaluate():
    F = gf.make_field(7)
    P = varieties.poly_parse(F, 3, "2*x1^2*x3 - x2 + 3")
    for x1 in range(7):
        for x2 in range(7):
            for x3 in range(7):
                want = (2 * x1 * x1 * x3 - x2 + 3) % 7
                assert P.evaluate((x1, x2, x3)) == want
    assert P.total_degree == 3


def test_poly_parse_errors():
    F = gf.make_field(5)
    with pytest.raises(ArityMismatch):
        varieties.poly_parse(F, 2, "x3 + 1")
    with pytest.raises(ValueError):
        varieties.poly_parse(F, 2, "")


def test_point_count_det_variety_matches_group_order():
    # x1 x4 - x2 x3 = 1 cuts SL_2 out of the 4-dimensional ambient space
    for q, order in ((3, 24), (5, 120)):
        F = gf.make_field(q)
        P = varieties.poly_parse(F, 4, "x1*x4-x2*x3-1")
        V = varieties.VarietySpec(4, [P], 3, 2)
        rep = varieties.point_count(V, F)
        assert rep["count"] == order
        assert rep["pass"]  # |V| <= D q^d = 2 q^3


def test_point_count_worker_independence():
    F = gf.make_field(5)
    P = varieties.poly_parse(F, 4, "x1*x4-x2*x3-1")
    V = varieties.VarietySpec(4, [P], 3, 2)
    counts = {varieties.point_count(V, F, workers=w)["count"]
              for w in (1, 2, 3, 8)}
    assert counts == {120}


def test_point_count_cap():
    F = gf.make_field(11)
    P = varieties.poly_parse(F, 6, "x1")
    V = varieties.VarietySpec(6, [P], 5, 1)
    with pytest.raises(AmbientTooLarge):
        varieties.point_count(V, F, cap=10 ** 5)


def test_hypersurface_count_exact():
    # a line in the plane has exactly q points
    F = gf.make_field(7)
    P = varieties.poly_parse(F, 2, "x1+2*x2-3")
    V = varieties.VarietySpec(2, [P], 1, 1)
    assert varieties.point_count(V, F)["count"] == 7


def test_bezout_and_budgets():
    F = gf.make_field(7)
    A = varieties.VarietySpec(2, [varieties.poly_parse(F, 2, "x1^2-x2")],
                              1, 2)
    B = varieties.VarietySpec(2, [varieties.poly_parse(F, 2, "x1^3-x2")],
                              1, 3)
    assert varieties.bezout_degree([A, B], "intersect").exact == 6
    assert varieties.bezout_degree([A, B], "union").exact == 5
    assert varieties.image_degree_bound(B, 2, 1).exact == 6
    assert varieties.intersection_chain_budget(2, 3).exact == 27


def test_serialization_round_trip():
    F = gf.make_field(5)
    P = varieties.poly_parse(F, 4, "x1*x4-x2*x3-1")
    V = varieties.VarietySpec(4, [P], 3, 2)
    text = varieties.variety_dumps(V)
    W = varieties.variety_loads(F, text)
    assert W.ambient == 4
    assert W.declared_dim == 3 and W.declared_deg == 2
    assert varieties.point_count(W, F)["count"] == 120


def test_contains_matches_evaluate():
    F = gf.make_field(3)
    P1 = varieties.poly_parse(F, 2, "x1-1")
    P2 = varieties.poly_parse(F, 2, "x2-2")
    V = varieties.VarietySpec(2, [P1, P2], 0, 1)
    hits = [(a, b) for a in range(3) for b in range(3)
            if V.contains((a, b))]
    assert hits == [(1, 2)]
