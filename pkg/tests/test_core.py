import pytest

from groupoids import (FiniteGroupoid, GroupoidMorphism, SizeCapError,
                       WideSubgroupoid, components, compose_morphisms,
                       cyclic_group, direct_product_group, disjoint_union,
                       discrete_groupoid, full_subgroupoid,
                       group_isomorphic, groupoid_from_group,
                       identity_morphism, is_connected, is_covering,
                       is_discrete, is_fibration, is_normal_subgroupoid,
                       is_quotient_morphism, is_tree_groupoid, kernel,
                       object_group, one_object_groupoid, quotient_group,
                       search_isomorphism, star, symmetric_group,
                       tree_groupoid, trivial_group, validate_group,
                       validate_groupoid, validate_morphism)
from groupoids.core import element_order, is_abelian_group, is_normal_subgroup, \
    subgroup_closure, subgroup_table


def test_tree_groupoid_shape():
    t = tree_groupoid(("a", "b", "c"))
    assert validate_groupoid(t) == []
    assert is_connected(t)
    assert is_tree_groupoid(t)
    assert not is_discrete(t)
    assert len(t.arrows) == 9
    assert t.compose[("b>c", "a>b")] == "a>c"


def test_discrete_groupoid():
    d = discrete_groupoid(("p", "q"))
    assert validate_groupoid(d) == []
    assert is_discrete(d)
    assert not is_connected(d)
    assert components(d) == [["p"], ["q"]]


def test_validate_groupoid_catches_bad_composition():
    t = tree_groupoid(("a", "b"))
    broken = FiniteGroupoid(
        t.objects, t.arrows, dict(t.source), dict(t.target),
        dict(t.identity_of), dict(t.inverse_of),
        {**t.compose, ("a>b", "b>a"): "id_a"}, name="broken")
    problems = validate_groupoid(broken)
    assert problems
    assert "a>b" in problems[0]


def test_star_orders_arrows_by_input():
    t = tree_groupoid(("a", "b", "c"))
    assert star(t, "a") == ("id_a", "a>b", "a>c")


def test_group_table_basics():
    z6 = cyclic_group(6)
    assert validate_group(z6) == []
    assert z6.order == 6
    assert element_order(z6, "2") == 3
    assert is_abelian_group(z6)
    s3 = symmetric_group(3)
    assert not is_abelian_group(s3)
    assert sorted(element_order(s3, x) for x in s3.elements) == \
        [1, 2, 2, 2, 3, 3]


def test_subgroups_of_s3():
    s3 = symmetric_group(3)
    a3 = subgroup_closure(s3, ["(012)"])
    assert len(a3) == 3
    assert is_normal_subgroup(s3, a3)
    flip = subgroup_closure(s3, ["(01)"])
    assert len(flip) == 2
    assert not is_normal_subgroup(s3, flip)
    assert validate_group(subgroup_table(s3, a3)) == []


def test_quotient_group():
    z4 = cyclic_group(4)
    q = quotient_group(z4, ["0", "2"])
    assert q.order == 2
    assert group_isomorphic(q, cyclic_group(2))


def test_direct_product_group():
    z2 = cyclic_group(2)
    z3 = cyclic_group(3)
    p = direct_product_group(z2, z3)
    assert p.order == 6
    assert is_abelian_group(p)
    assert group_isomorphic(p, cyclic_group(6))


def test_object_group_reads_loops():
    gpd = groupoid_from_group(symmetric_group(3))
    g = object_group(gpd, "pt")
    assert g.order == 6
    assert group_isomorphic(g, symmetric_group(3))


def test_morphism_validation():
    t = tree_groupoid(("x", "y"))
    z2 = groupoid_from_group(cyclic_group(2))
    fold = GroupoidMorphism(
        t, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "1"},
        name="fold")
    assert validate_morphism(fold) == []
    assert is_fibration(fold)
    assert is_covering(fold)
    # hom(x, y) has one arrow but hom(pt, pt) has two, so fold is not full
    assert not is_quotient_morphism(fold)
    bad = GroupoidMorphism(
        t, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "id_pt"},
        name="bad")
    assert validate_morphism(bad)


def test_kernel_is_normal():
    z4 = groupoid_from_group(cyclic_group(4))
    z2 = groupoid_from_group(cyclic_group(2), name="half")
    halve = GroupoidMorphism(
        z4, z2, {"pt": "pt"},
        {"id_pt": "id_pt", "1": "1", "2": "id_pt", "3": "1"}, name="halve")
    assert validate_morphism(halve) == []
    assert is_quotient_morphism(halve)
    ker = kernel(halve)
    assert set(ker.arrows) == {"id_pt", "2"}
    assert ker.normal
    assert is_normal_subgroupoid(ker)


def test_wide_subgroupoid_basics():
    z4 = groupoid_from_group(cyclic_group(4))
    # identities are added whether listed or not
    w = WideSubgroupoid(z4, ("2",))
    assert w.at("pt") == ("id_pt", "2")
    assert w.contains("2") and not w.contains("1")
    assert validate_groupoid(w.as_groupoid()) == []


def test_wide_subgroupoid_closure_checks():
    z4 = groupoid_from_group(cyclic_group(4))
    with pytest.raises(ValueError):
        WideSubgroupoid(z4, ("1",))    # inverse 3 missing
    s3 = groupoid_from_group(symmetric_group(3))
    with pytest.raises(ValueError):
        WideSubgroupoid(s3, ("(01)", "(02)"))   # product escapes
    with pytest.raises(ValueError):
        WideSubgroupoid(s3, ("(01)",), normal=True)


def test_compose_and_identity_morphisms():
    t = tree_groupoid(("x", "y"))
    ident = identity_morphism(t)
    assert validate_morphism(ident) == []
    z2 = groupoid_from_group(cyclic_group(2))
    fold = GroupoidMorphism(
        t, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "1"},
        name="fold")
    both = compose_morphisms(fold, ident)
    assert validate_morphism(both) == []
    assert both.arrow_map == fold.arrow_map
    with pytest.raises(ValueError):
        compose_morphisms(ident, fold)


def test_full_subgroupoid_and_disjoint_union():
    t = tree_groupoid(("a", "b", "c"))
    sub = full_subgroupoid(t, ("a", "c"))
    assert set(sub.objects) == {"a", "c"}
    assert len(sub.arrows) == 4
    d = discrete_groupoid(("p",))
    u = disjoint_union(sub, d)
    assert len(components(u)) == 2
    with pytest.raises(ValueError):
        disjoint_union(t, t)


def test_search_isomorphism():
    a = groupoid_from_group(cyclic_group(4), name="a")
    b = groupoid_from_group(cyclic_group(4), object_name="o", name="b")
    iso = search_isomorphism(a, b)
    assert iso is not None
    c = groupoid_from_group(direct_product_group(cyclic_group(2),
                                                 cyclic_group(2)), name="c")
    assert search_isomorphism(a, c) is None


def test_search_isomorphism_cap():
    big = tree_groupoid([f"v{i}" for i in range(9)])
    assert len(big.arrows) == 81
    with pytest.raises(SizeCapError):
        search_isomorphism(big, big)


def test_one_object_groupoid_round():
    gpd, arrow_of = one_object_groupoid(symmetric_group(3))
    assert arrow_of["(01)"] == "(01)"
    assert arrow_of[symmetric_group(3).identity] == "id_pt"
    assert validate_groupoid(gpd) == []


def test_trivial_group():
    one = trivial_group()
    assert one.order == 1
    assert validate_group(one) == []
