import random

import pytest

from chevlab import bfs, classify, gf, groups


def test_poly_gcd_and_resultant_small():
    F = gf.make_field(7)
    # (x-1)(x-2) and (x-2)(x-3) share the factor (x-2)
    a = classify.poly_mul(F, (6, 1), (5, 1))
    b = classify.poly_mul(F, (5, 1), (4, 1))
    g = classify.poly_gcd(F, a, b)
    assert len(g) == 2 and F.mul(g[0], F.inv(g[1])) == 5  # monic x - 2
    assert classify.resultant(F, a, b) == 0
    c = classify.poly_mul(F, (6, 1), (3, 1))  # (x-1)(x-4), coprime to b
    assert classify.resultant(F, b, c) != 0


def test_discriminant_matches_root_differences():
    # disc of (x-a)(x-b) is (a-b)^2
    F = gf.make_field(11)
    for a in range(11):
        for b in range(11):
            poly = classify.poly_mul(F, (F.neg(a), 1), (F.neg(b), 1))
            want = F.mul(F.sub(a, b), F.sub(a, b))
            assert classify.poly_disc(F, poly) == want


def test_char_poly_of_diagonal():
    F = gf.make_field(7)
    mat = (2, 0, 0, 3)
    coeffs = classify.char_poly(F, 2, mat)
    # (x-2)(x-3) = x^2 - 5x + 6
    assert coeffs == (6, F.neg(5), 1)
    data = classify.char_poly_data(F, 2, mat)
    assert data.disc == F.mul(F.sub(2, 3), F.sub(2, 3))


def test_regular_semisimple_examples():
    F5 = gf.make_field(5)
    assert not classify.is_regular_semisimple(F5, 2, (1, 0, 0, 1))  # identity
    assert classify.is_regular_semisimple(F5, 2, (2, 0, 0, 3))
    # unipotent: repeated eigenvalue 1
    assert not classify.is_regular_semisimple(F5, 2, (1, 1, 0, 1))
    F7 = gf.make_field(7)
    # diag(2,4,4,2): eigenvalues repeat even though 2*4 = 1 mod 7
    assert not classify.is_regular_semisimple(F7, 4, tuple(
        v for i, d in enumerate((2, 4, 4, 2))
        for v in [0] * i + [d] + [0] * (3 - i)))
    # diag(3,2,5,4): 3*5 = 2*4 = 1 mod 7, all entries distinct
    assert classify.is_regular_semisimple(F7, 4, tuple(
        v for i, d in enumerate((3, 2, 5, 4))
        for v in [0] * i + [d] + [0] * (3 - i)))


def test_disc_vs_gcd_crosscheck_random():
    rng = random.Random(17)
    for fam, n, q in (("SL", 2, 5), ("SL", 3, 11), ("Sp", 2, 7)):
        spec = groups.GroupSpec(fam, n)
        F = gf.make_field(q)
        for _ in range(100):
            g = groups.random_group_element(spec, F, rng)
            # crosscheck raises if the two detectors ever disagree
            classify.is_regular_semisimple(F, spec.N, g, crosscheck=True)


def test_split_torus_nonrs_count_sl2():
    spec = groups.GroupSpec("SL", 2)
    F = gf.make_field(5)
    pts = groups.torus_points(spec, F)
    nonrs = [m for m in pts if not classify.is_regular_semisimple(F, 2, m)]
    assert len(nonrs) == 2  # exactly +/- identity


def test_nonrs_subtori_catalogue():
    sl2 = groups.GroupSpec("SL", 2)
    rels = classify.nonrs_subtori(sl2)
    assert len(rels) <= 1 * 2  # r(r+1)
    sp4 = groups.GroupSpec("Sp", 2)
    rels = classify.nonrs_subtori(sp4)
    kinds = {(rel.kind, rel.indices) for rel in rels}
    assert ("equal", (0, 1)) in kinds or ("equal", (1, 0)) in kinds
    assert len(rels) <= 2 * 3  # r(r+1)


def test_torus_nonrs_count_two_ways():
    sp4 = groups.GroupSpec("Sp", 2)
    F = gf.make_field(5)
    pts = groups.torus_points(sp4, F)
    direct = classify.count_nonrs_in_torus(sp4, F, pts)
    by_cat = classify.count_nonrs_by_catalogue(sp4, F, pts)
    brute = sum(1 for m in pts
                if not classify.is_regular_semisimple(F, 4, m))
    assert direct == by_cat == brute


def test_orbit_stabilizer_and_group_count():
    spec = groups.GroupSpec("SL", 2)
    F = gf.make_field(5)
    gens = groups.standard_generators(spec, F)
    ball = bfs.closure(F, 2, gens)
    order = len(ball)
    rng = random.Random(5)
    mats = list(ball.mats())
    for _ in range(25):
        g = mats[rng.randrange(order)]
        cl = classify.conjugacy_class(F, 2, g, gens)
        cen = classify.centralizer(F, 2, g, ball)
        assert len(cl) * len(cen) == order
    assert classify.nonrs_count_in_group(F, 2, ball) == 2 * 25


def test_classification_record_fields():
    F = gf.make_field(5)
    rec = classify.classification_record(F, 2, (2, 0, 0, 3))
    assert rec["regular_semisimple"] is True
    assert rec["matrix"] == "2,0,0,3"
    assert set(rec) >= {"matrix", "charpoly", "disc", "regular_semisimple"}
