import pytest

from groupoids import (GroupoidMorphism, action_from_object_map,
                       cyclic_group, generated_wide_subgroupoid,
                       group_isomorphic, groupoid_from_group, is_covering,
                       is_fibration, is_quotient_morphism, kernel,
                       normal_closure, object_group, orbit_groupoid,
                       orbit_kernel_generators, quotient_groupoid,
                       regular_cover_orbit_check,
                       restrict_orbit_full_subgroupoid, semidirect_product,
                       symmetric_group, tree_groupoid, tree_orbit_group,
                       trivial_action, trivial_group, validate_groupoid,
                       validate_morphism)
from groupoids.constructions import semidirect_action_on_arrows
from groupoids.corpus import named_actions


def _named(name):
    return dict(named_actions())[name]


def test_semidirect_product_of_tree_swap():
    act = _named("tree-swap")
    sd = semidirect_product(act)
    assert validate_groupoid(sd.groupoid) == []
    assert len(sd.groupoid.objects) == 2
    assert len(sd.groupoid.arrows) == 8
    assert is_fibration(sd.projection)
    # (x>y, 1) starts at the preimage of x under the swap
    assert sd.groupoid.source["(x>y,1)"] == "y"
    assert sd.groupoid.target["(x>y,1)"] == "y"


def test_semidirect_pairing_laws():
    act = _named("zmod4-inversion")
    sd = semidirect_product(act)
    g = sd.groupoid
    # pairing with the group part last only relabels
    assert g.compose[("(1,0)", "(id_pt,1)")] == "(1,1)"
    # pairing an identity pair first twists the arrow
    assert g.compose[("(id_pt,1)", "(1,0)")] == "(3,1)"


def test_semidirect_rejects_invalid_action():
    act = _named("tree-swap")
    broken = type(act)(act.group, act.space, dict(act.act_obj),
                       {**act.act_arrow, ("1", "x>y"): "x>y"},
                       name="broken")
    with pytest.raises(ValueError):
        semidirect_product(broken)


def test_semidirect_action_on_arrows():
    act = _named("tree-swap")
    assert semidirect_action_on_arrows(act, ("x>y", "1"), "x>y") == "id_y"
    with pytest.raises(ValueError):
        semidirect_action_on_arrows(act, ("x>y", "1"), "y>x")


def test_generated_wide_subgroupoid():
    s3 = groupoid_from_group(symmetric_group(3))
    w = generated_wide_subgroupoid(s3, [])
    assert w.arrows == ("id_pt",)
    w = generated_wide_subgroupoid(s3, ["(012)"])
    assert set(w.arrows) == {"id_pt", "(012)", "(021)"}
    with pytest.raises(ValueError):
        generated_wide_subgroupoid(s3, ["nope"])


def test_normal_closure_in_a_group():
    s3 = groupoid_from_group(symmetric_group(3))
    n = normal_closure(s3, ["(01)"])
    assert len(n.arrows) == 6
    assert n.normal
    n = normal_closure(s3, ["(012)"])
    assert set(n.arrows) == {"id_pt", "(012)", "(021)"}
    n = normal_closure(s3, [])
    assert n.arrows == ("id_pt",)


def test_quotient_groupoid_requires_normal():
    s3 = groupoid_from_group(symmetric_group(3))
    w = generated_wide_subgroupoid(s3, ["(01)"])
    with pytest.raises(ValueError):
        quotient_groupoid(s3, w)
    other = groupoid_from_group(cyclic_group(2), name="other")
    n = normal_closure(other, [])
    with pytest.raises(ValueError):
        quotient_groupoid(s3, n)


def test_quotient_groupoid_of_group():
    s3 = groupoid_from_group(symmetric_group(3))
    n = normal_closure(s3, ["(012)"])
    quot = quotient_groupoid(s3, n)
    assert len(quot.groupoid.arrows) == 2
    assert is_quotient_morphism(quot.morphism)
    assert set(kernel(quot.morphism).arrows) == set(n.arrows)
    assert group_isomorphic(object_group(quot.groupoid, "[pt]"),
                            cyclic_group(2))


def test_quotient_collapses_connected_normal_subgroupoid():
    act = _named("tree-swap")
    sd = semidirect_product(act)
    n = normal_closure(sd.groupoid, ["(id_x,1)"])
    quot = quotient_groupoid(sd.groupoid, n)
    # the relation pairs connect the two objects, so one class remains
    assert len(quot.groupoid.objects) == 1
    assert quot.object_class_of["x"] == quot.object_class_of["y"]


def test_orbit_groupoid_objects_are_orbits():
    act = _named("threefold-rotation")
    orb = orbit_groupoid(act)
    assert len(orb.groupoid.objects) == 1
    assert is_fibration(orb.morphism)
    assert group_isomorphic(object_group(orb.groupoid,
                                         orb.groupoid.objects[0]),
                            cyclic_group(3))


def test_orbit_groupoid_of_free_action_is_covering():
    act = _named("point-swap")
    orb = orbit_groupoid(act)
    assert is_covering(orb.morphism)
    assert len(orb.groupoid.objects) == 1


def test_orbit_groupoid_fixed_point_connected_is_quotient():
    act = _named("zmod4-inversion")
    orb = orbit_groupoid(act)
    assert is_quotient_morphism(orb.morphism)
    assert not is_covering(orb.morphism)
    assert set(kernel(orb.morphism).arrows) == {"id_pt", "2"}


def test_orbit_kernel_generators():
    act = _named("zmod4-inversion")
    gens = orbit_kernel_generators(act)
    assert "2" in gens
    generated = generated_wide_subgroupoid(act.space, gens)
    orb = orbit_groupoid(act)
    assert set(generated.arrows) == set(kernel(orb.morphism).arrows)


def test_tree_orbit_group():
    assert group_isomorphic(tree_orbit_group(_named("tree-swap")),
                            cyclic_group(2))
    assert group_isomorphic(tree_orbit_group(_named("path-reflection-fixed")),
                            trivial_group())
    assert group_isomorphic(tree_orbit_group(_named("threefold-rotation")),
                            cyclic_group(3))
    with pytest.raises(ValueError):
        tree_orbit_group(_named("zmod4-inversion"))


def test_restrict_orbit_fixed_object():
    act = _named("path-reflection-fixed")
    report = restrict_orbit_full_subgroupoid(act, ("b",))
    assert report.hypothesis_ok
    assert report.embedding_ok
    assert report.ok


def test_restrict_orbit_missing_fixed_component():
    act = _named("path-reflection-fixed")
    report = restrict_orbit_full_subgroupoid(act, ("a", "c"))
    assert not report.hypothesis_ok
    assert report.hypothesis_failures
    assert not report.embedding_ok


def test_restrict_orbit_rejects_non_invariant_sets():
    act = _named("path-reflection-fixed")
    with pytest.raises(ValueError):
        restrict_orbit_full_subgroupoid(act, ("a",))
    with pytest.raises(ValueError):
        restrict_orbit_full_subgroupoid(act, ("a", "zzz"))


def test_regular_cover_check_accepts_the_fold():
    seg = tree_groupoid(("x", "y"), name="seg")
    z2 = groupoid_from_group(cyclic_group(2), name="z2")
    fold = GroupoidMorphism(
        seg, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "1"},
        name="fold")
    assert validate_morphism(fold) == []
    z2t = cyclic_group(2)
    deck = action_from_object_map(
        z2t, seg,
        {("0", "x"): "x", ("0", "y"): "y", ("1", "x"): "y", ("1", "y"): "x"},
        name="deck")
    report = regular_cover_orbit_check(fold, deck)
    assert report.ok
    assert report.orbit_iso_ok
    assert report.object_group_iso_ok


def test_regular_cover_check_rejects_non_free_deck():
    seg = tree_groupoid(("x", "y"), name="seg")
    z2 = groupoid_from_group(cyclic_group(2), name="z2")
    fold = GroupoidMorphism(
        seg, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "1"},
        name="fold")
    lazy = trivial_action(cyclic_group(2), seg, name="lazy")
    with pytest.raises(ValueError):
        regular_cover_orbit_check(fold, lazy)


def test_regular_cover_check_rejects_non_covering():
    z4 = groupoid_from_group(cyclic_group(4), name="z4")
    z2 = groupoid_from_group(cyclic_group(2), name="z2half")
    halve = GroupoidMorphism(
        z4, z2, {"pt": "pt"},
        {"id_pt": "id_pt", "1": "1", "2": "id_pt", "3": "1"}, name="halve")
    deck = trivial_action(trivial_group(), z4, name="one")
    with pytest.raises(ValueError):
        regular_cover_orbit_check(halve, deck)
