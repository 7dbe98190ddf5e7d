import pytest

from chevlab import degrees, groups
from chevlab.errors import KTooLarge


def test_small_path_counts():
    assert degrees.path_count(2).exact == 1
    assert degrees.path_count(3).exact == 2
    assert degrees.path_count(4).exact == 5
    assert degrees.path_count(5).exact == 24


def test_methods_agree():
    for k in range(2, 11):
        a = degrees.path_count(k, "enumerate").exact
        b = degrees.path_count(k, "determinant").exact
        assert a == b


def test_product_bound_dominates():
    for k in range(2, 14):
        res = degrees.path_count(k)
        assert res.exact <= res.product_bound


def test_k_limits():
    with pytest.raises(KTooLarge):
        degrees.path_count(1)
    with pytest.raises(KTooLarge):
        degrees.path_count(degrees.ENUM_K_MAX + 1, "enumerate")
    with pytest.raises(ValueError):
        degrees.path_count(4, "magic")


def test_exact_group_degrees():
    assert degrees.exact_group_degree(groups.GroupSpec("SL", 2)) == 2
    assert degrees.exact_group_degree(groups.GroupSpec("SL", 7)) == 7
    # Sp_4: P(5) = 24
    assert degrees.exact_group_degree(groups.GroupSpec("Sp", 2)) == 24
    # SO_7: 2^6 P(7)
    so7 = degrees.exact_group_degree(groups.GroupSpec("SOodd", 3))
    assert so7 == 64 * degrees.path_count(7).exact
    so8 = degrees.exact_group_degree(groups.GroupSpec("SOeven", 4))
    assert so8 == 128 * degrees.path_count(8).exact


def test_exact_within_table_bound():
    specs = [groups.GroupSpec("SL", n) for n in range(2, 13)]
    specs += [groups.GroupSpec("Sp", n) for n in range(2, 7)]
    specs += [groups.GroupSpec("SOeven", n) for n in range(4, 7)]
    specs += [groups.GroupSpec("SOodd", n) for n in range(3, 6)]
    for spec in specs:
        if spec.N > 12:
            continue
        exact = degrees.exact_group_degree(spec)
        bound = degrees.table_degree_bound(spec)
        assert bound.exact is not None
        assert exact <= bound.exact


def test_class_degree_bound_forms():
    for fam, n in (("SL", 2), ("SL", 3), ("Sp", 2), ("SOodd", 3),
                   ("SOeven", 4)):
        rep = degrees.cl_degree_bound(groups.GroupSpec(fam, n))
        assert rep["factorial_form"] <= rep["closed_form"]
