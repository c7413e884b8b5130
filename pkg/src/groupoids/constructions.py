"""Groupoid constructions: semidirect products, normal closures, quotient
groupoids, and orbit groupoids of group actions.

The semidirect product of an action has the same objects as the acted-on
groupoid; an arrow x -> y is a pair (a, g) where a runs from g.x to y.
Addition is (b, h) + (a, g) = (b + h.a, hg) and the negative of (a, g) is
(g^-1.(-a), g^-1).  The orbit groupoid is the quotient of the semidirect
product by the normal closure of the pairs (identity at g.x, g), and its
canonical morphism from the acted-on groupoid is constant on orbits and
universal among such morphisms.
"""

from __future__ import annotations

from .actions import (GroupoidAction, fixed_subgroupoid, is_free_action,
                      object_orbits, restrict_action, stabilizer,
                      validate_action)
from .catalog import group_isomorphic, one_object_groupoid
from .core import (FiniteGroupoid, GroupoidMorphism, WideSubgroupoid,
                   components, compose_morphisms, is_covering, is_fibration,
                   is_normal_subgroup, is_normal_subgroupoid,
                   is_quotient_morphism, is_tree_groupoid, kernel,
                   object_group, quotient_group, search_isomorphism,
                   subgroup_closure, validate_groupoid, validate_morphism)


class SemidirectProduct:
    """Result bundle: unpacks as (groupoid, projection)."""

    def __init__(self, groupoid, projection, action, name_of, pair_of,
                 group_arrow):
        self.groupoid = groupoid
        self.projection = projection
        self.action = action
        self.name_of = name_of        # (arrow, group element) -> arrow name
        self.pair_of = pair_of        # arrow name -> (arrow, group element)
        self.group_arrow = group_arrow  # group element -> arrow of cod(projection)

    def __iter__(self):
        return iter((self.groupoid, self.projection))


def semidirect_product(act, name=None):
    """The semidirect product groupoid of an action, with its projection.

    The projection onto the one-object groupoid of the acting group sends
    (a, g) to g; it is always a fibration.
    """
    problems = validate_action(act)
    if problems:
        raise ValueError(f"{act.name}: invalid action: {problems[0]}")
    G, sp = act.group, act.space
    name = name or f"{sp.name}x{G.name}"

    name_of = {}
    pair_of = {}
    order = []
    for x in sp.objects:
        pair = (sp.identity_of[x], G.identity)
        label = f"id_{x}"
        name_of[pair] = label
        pair_of[label] = pair
        order.append(pair)
    for a in sp.arrows:
        for g in G.elements:
            pair = (a, g)
            if pair in name_of:
                continue
            label = f"({a},{g})"
            name_of[pair] = label
            pair_of[label] = pair
            order.append(pair)

    source = {}
    target = {}
    for (a, g) in order:
        u = name_of[(a, g)]
        source[u] = act.act_obj[(G.inv[g], sp.source[a])]
        target[u] = sp.target[a]

    inverse = {}
    for (a, g) in order:
        ginv = G.inv[g]
        inverse[name_of[(a, g)]] = \
            name_of[(act.act_arrow[(ginv, sp.inverse_of[a])], ginv)]

    compose = {}
    for (b, h) in order:
        v = name_of[(b, h)]
        for (a, g) in order:
            u = name_of[(a, g)]
            if target[u] != source[v]:
                continue
            compose[(v, u)] = \
                name_of[(sp.compose[(b, act.act_arrow[(h, a)])], G.prod(h, g))]

    gpd = FiniteGroupoid(
        sp.objects, [name_of[p] for p in order], source, target,
        {x: f"id_{x}" for x in sp.objects}, inverse, compose, name=name)

    cod, group_arrow = one_object_groupoid(G, name=f"{G.name}-gpd")
    projection = GroupoidMorphism(
        gpd, cod, {x: "pt" for x in sp.objects},
        {name_of[(a, g)]: group_arrow[g] for (a, g) in order},
        name=f"proj-{name}")
    assert validate_morphism(projection) == []
    assert is_fibration(projection)
    return SemidirectProduct(gpd, projection, act, name_of, pair_of,
                             group_arrow)


def semidirect_action_on_arrows(act, pair, delta):
    """The pair (a, g) acts on an arrow d whose target is the pair's source
    object: (a, g).d = a + g.d."""
    a, g = pair
    sp = act.space
    src_obj = act.act_obj[(act.group.inv[g], sp.source[a])]
    if sp.target[delta] != src_obj:
        raise ValueError(
            f"target of {delta} is not the source object of ({a}, {g})")
    return sp.add(a, act.act_arrow[(g, delta)])


def generated_wide_subgroupoid(g, arrows, name=None):
    """Saturate a set of arrows with identities, inverses, and compositions."""
    current = set(g.identity_of.values())
    for u in arrows:
        if u not in g.arrow_index:
            raise ValueError(f"{g.name}: unknown arrow {u}")
        current.add(u)
    changed = True
    while changed:
        changed = False
        for u in list(current):
            v = g.inverse_of[u]
            if v not in current:
                current.add(v)
                changed = True
        for v in list(current):
            for u in list(current):
                if g.target[u] == g.source[v]:
                    w = g.compose[(v, u)]
                    if w not in current:
                        current.add(w)
                        changed = True
    ordered = [u for u in g.arrows if u in current]
    return WideSubgroupoid(g, ordered, normal=False,
                           name=name or f"W{len(ordered)}")


def normal_closure(g, arrows, name=None):
    """Smallest normal wide subgroupoid containing the given arrows.

    Built as the subgroupoid generated by the plain closure of the arrows
    together with all conjugates of its loops; a single conjugation round
    suffices, and the result is asserted normal.
    """
    first = generated_wide_subgroupoid(g, arrows)
    conjugates = []
    for h in first.arrows:
        x = g.source[h]
        if g.target[h] != x:
            continue
        for k in g.arrows:
            if g.source[k] != x:
                continue
            conjugates.append(g.compose[(g.compose[(k, h)], g.inverse_of[k])])
    closed = generated_wide_subgroupoid(g, list(first.arrows) + conjugates)
    assert is_normal_subgroupoid(closed), \
        "one conjugation round did not normalize the closure"
    return WideSubgroupoid(g, closed.arrows, normal=True,
                           name=name or f"N{len(closed.arrows)}")


class QuotientGroupoid:
    """Result bundle: unpacks as (groupoid, morphism)."""

    def __init__(self, groupoid, morphism, object_class_of, class_of):
        self.groupoid = groupoid
        self.morphism = morphism
        self.object_class_of = object_class_of
        self.class_of = class_of

    def __iter__(self):
        return iter((self.groupoid, self.morphism))


def quotient_groupoid(k, n, name=None):
    """Quotient of a groupoid by a normal wide subgroupoid.

    Objects are the components of n, named "[x]" after their first object;
    arrows are the equivalence classes under a ~ m + a + n', named "[a]"
    after their first member.  Class addition picks the first connecting
    arrow of n in input order; the result is independent of that choice.
    """
    if not isinstance(n, WideSubgroupoid) or n.ambient is not k:
        raise ValueError("quotient needs a wide subgroupoid of the same groupoid")
    if not n.normal:
        raise ValueError(f"{n.name}: not normal; quotient is undefined")
    name = name or f"{k.name}/{n.name}"

    blocks = components(n.as_groupoid())
    object_class_of = {}
    class_objects = []
    for block in blocks:
        label = f"[{block[0]}]"
        class_objects.append(label)
        for x in block:
            object_class_of[x] = label

    # arrow classes: [a] = { m + a + n' : m, n' in n }
    by_source = {}
    by_target = {}
    for u in n.arrows:
        by_source.setdefault(k.source[u], []).append(u)
        by_target.setdefault(k.target[u], []).append(u)
    class_of = {}
    class_members = {}
    class_order = []
    for a in k.arrows:
        if a in class_of:
            continue
        members = set()
        for nn in by_target.get(k.source[a], ()):
            mid = k.compose[(a, nn)]
            for m in by_source.get(k.target[a], ()):
                members.add(k.compose[(m, mid)])
        is_identity_class = any(k.is_identity_arrow(u) for u in members)
        label = (f"id_{object_class_of[k.source[a]]}"
                 if is_identity_class else f"[{a}]")
        for u in members:
            assert u not in class_of, "equivalence classes overlap"
            class_of[u] = label
        class_members[label] = sorted(members, key=k.arrow_index.__getitem__)
        class_order.append(label)

    rep_of = {label: members[0] for label, members in class_members.items()}
    source = {label: object_class_of[k.source[rep_of[label]]]
              for label in class_order}
    target = {label: object_class_of[k.target[rep_of[label]]]
              for label in class_order}
    identity_of = {object_class_of[x]: class_of[k.identity_of[x]]
                   for x in k.objects}
    inverse = {label: class_of[k.inverse_of[rep_of[label]]]
               for label in class_order}

    # identities first, then the rest, by first-member index
    arrows = sorted(class_order,
                    key=lambda lbl: (0 if lbl.startswith("id_") else 1,
                                     k.arrow_index[rep_of[lbl]]))

    compose = {}
    for v in arrows:
        for u in arrows:
            if target[u] != source[v]:
                continue
            k2 = rep_of[v]
            k1 = rep_of[u]
            connectors = [l for l in n.arrows
                          if k.source[l] == k.target[k1]
                          and k.target[l] == k.source[k2]]
            link = connectors[0]
            compose[(v, u)] = class_of[
                k.compose[(k.compose[(k2, link)], k1)]]

    gpd = FiniteGroupoid(class_objects, arrows, source, target,
                         identity_of, inverse, compose, name=name)
    problems = validate_groupoid(gpd)
    assert problems == [], f"quotient is not a groupoid: {problems[0]}"
    morphism = GroupoidMorphism(k, gpd, object_class_of, class_of,
                                name=f"cls-{name}")
    assert validate_morphism(morphism) == []
    assert is_quotient_morphism(morphism)
    return QuotientGroupoid(gpd, morphism, object_class_of, class_of)


class OrbitGroupoid:
    """Result bundle: unpacks as (groupoid, morphism)."""

    def __init__(self, groupoid, morphism, semidirect, relation_arrows,
                 normal, quotient):
        self.groupoid = groupoid
        self.morphism = morphism
        self.semidirect = semidirect
        self.relation_arrows = relation_arrows
        self.normal = normal
        self.quotient = quotient

    def __iter__(self):
        return iter((self.groupoid, self.morphism))


def orbit_groupoid(act, name=None):
    """The orbit groupoid of an action, with its canonical morphism.

    Quotient of the semidirect product by the normal closure of the pairs
    (identity at g.x, g).  The canonical morphism sends an arrow a to the
    class of (a, 1); it is constant on orbits, surjective, and a fibration,
    and its objects correspond to the object orbits.
    """
    G, sp = act.group, act.space
    sd = semidirect_product(act)
    relation_arrows = []
    seen = set()
    for a, g in ((sp.identity_of[x], g) for x in sp.objects
                 for g in G.elements):
        moved = act.act_arrow[(g, a)]
        label = sd.name_of[(moved, g)]
        if label not in seen:
            seen.add(label)
            relation_arrows.append(label)
    n = normal_closure(sd.groupoid, relation_arrows, name="N-orbit")
    q = quotient_groupoid(sd.groupoid, n,
                          name=name or f"{sp.name}//{G.name}")
    embed = GroupoidMorphism(
        sp, sd.groupoid, {x: x for x in sp.objects},
        {a: sd.name_of[(a, G.identity)] for a in sp.arrows},
        name="unit-embed")
    assert validate_morphism(embed) == []
    morphism = compose_morphisms(q.morphism, embed, name=f"orbit-{act.name}")

    for g in G.elements:
        for x in sp.objects:
            assert morphism.object_map[act.act_obj[(g, x)]] == \
                morphism.object_map[x]
        for a in sp.arrows:
            assert morphism.arrow_map[act.act_arrow[(g, a)]] == \
                morphism.arrow_map[a]
    orbit_blocks = {frozenset(block) for block in object_orbits(act)}
    fiber = {}
    for x in sp.objects:
        fiber.setdefault(morphism.object_map[x], []).append(x)
    assert {frozenset(v) for v in fiber.values()} == orbit_blocks
    assert set(morphism.object_map.values()) == set(q.groupoid.objects)
    assert set(morphism.arrow_map.values()) == set(q.groupoid.arrows)
    assert is_fibration(morphism)
    return OrbitGroupoid(q.groupoid, morphism, sd, tuple(relation_arrows),
                         n, q)


def orbit_kernel_generators(act, orbit=None):
    """Arrows a - g.a for g stabilizing the source of a, deduplicated.

    These generate the kernel of the orbit morphism as a wide subgroupoid;
    the equality is asserted against orbit_groupoid (pass a precomputed
    result to avoid recomputing it).
    """
    sp = act.space
    gens = []
    seen = set()
    for a in sp.arrows:
        x = sp.source[a]
        for g in act.group.elements:
            if act.act_obj[(g, x)] != x:
                continue
            moved = act.act_arrow[(g, a)]
            diff = sp.compose[(a, sp.inverse_of[moved])]
            if diff not in seen:
                seen.add(diff)
                gens.append(diff)
    if orbit is None:
        orbit = orbit_groupoid(act)
    generated = generated_wide_subgroupoid(sp, gens)
    ker = kernel(orbit.morphism)
    assert set(generated.arrows) == set(ker.arrows), \
        "kernel generators do not generate the orbit kernel"
    return tuple(gens)


def tree_orbit_group(act):
    """Orbit object group of an action on a tree groupoid, computed as G/K.

    K is the subgroup generated by the elements with a fixed object; it is
    normal, and the quotient is asserted isomorphic to every object group of
    the orbit groupoid.
    """
    G, sp = act.group, act.space
    if not is_tree_groupoid(sp):
        raise ValueError(f"{sp.name}: not a tree groupoid")
    fixers = [g for g in G.elements
              if any(act.act_obj[(g, x)] == x for x in sp.objects)]
    members = subgroup_closure(G, fixers)
    assert is_normal_subgroup(G, members)
    quot = quotient_group(G, members, name=f"{G.name}/K")
    orbit = orbit_groupoid(act)
    for x in orbit.groupoid.objects:
        assert group_isomorphic(object_group(orbit.groupoid, x), quot), \
            f"orbit object group at {x} is not G/K"
    return quot


class RestrictOrbitReport:
    """Outcome of restricting an orbit groupoid to an invariant object set."""

    def __init__(self, hypothesis_ok, hypothesis_failures, embedding_ok,
                 details):
        self.hypothesis_ok = hypothesis_ok
        self.hypothesis_failures = tuple(hypothesis_failures)
        self.embedding_ok = embedding_ok
        self.details = tuple(details)

    @property
    def ok(self):
        return self.hypothesis_ok and self.embedding_ok


def restrict_orbit_full_subgroupoid(act, objects):
    """Check that the orbit groupoid of the full subgroupoid on an invariant
    object set embeds as a full subgroupoid of the whole orbit groupoid.

    Stated hypothesis: for each group element g, the object set meets every
    component of the substructure of the space fixed by g (g = identity makes
    this "meets every component of the space").  A violated hypothesis is
    reported, not raised; a non-invariant object set is an error.
    """
    sp = act.space
    oset = set(objects)
    unknown = oset - set(sp.objects)
    if unknown:
        raise ValueError(f"{sp.name}: unknown objects {sorted(unknown)}")

    hypothesis_failures = []
    for g in act.group.elements:
        fixed = fixed_subgroupoid(act, elements=(g,))
        for block in components(fixed):
            if not (set(block) & oset):
                hypothesis_failures.append(
                    f"object set misses a fixed component of {g}: "
                    f"{{{' '.join(block)}}}")
    hypothesis_ok = not hypothesis_failures

    sub_act = restrict_action(act, objects)   # raises if not invariant
    sub_orbit = orbit_groupoid(sub_act)
    whole_orbit = orbit_groupoid(act)

    details = []
    embedding_ok = True

    # the canonical map sends the sub-orbit class of an arrow of the full
    # subgroupoid to its class in the whole orbit groupoid
    obj_map = {}
    for x in sub_act.space.objects:
        cls = sub_orbit.morphism.object_map[x]
        img = whole_orbit.morphism.object_map[x]
        if obj_map.setdefault(cls, img) != img:
            embedding_ok = False
            details.append(f"object map not well defined at {cls}")
    arr_map = {}
    for a in sub_act.space.arrows:
        cls = sub_orbit.morphism.arrow_map[a]
        img = whole_orbit.morphism.arrow_map[a]
        if arr_map.setdefault(cls, img) != img:
            embedding_ok = False
            details.append(f"arrow map not well defined at {cls}")

    if embedding_ok:
        canonical = GroupoidMorphism(sub_orbit.groupoid, whole_orbit.groupoid,
                                     obj_map, arr_map, name="restrict-embed")
        problems = validate_morphism(canonical)
        if problems:
            embedding_ok = False
            details.append(f"canonical map not a morphism: {problems[0]}")
    if embedding_ok:
        image_objects = {obj_map[x] for x in sub_orbit.groupoid.objects}
        expected_objects = {whole_orbit.morphism.object_map[x]
                            for x in oset}
        if image_objects != expected_objects:
            embedding_ok = False
            details.append("image objects differ from the orbit of the object set")
        if len({obj_map[x] for x in sub_orbit.groupoid.objects}) != \
                len(sub_orbit.groupoid.objects):
            embedding_ok = False
            details.append("canonical map not injective on objects")
        if len({arr_map[a] for a in sub_orbit.groupoid.arrows}) != \
                len(sub_orbit.groupoid.arrows):
            embedding_ok = False
            details.append("canonical map not injective on arrows")
    if embedding_ok:
        # fullness onto the full subgroupoid on the image objects
        image_arrows = {arr_map[a] for a in sub_orbit.groupoid.arrows}
        wanted = {u for u in whole_orbit.groupoid.arrows
                  if whole_orbit.groupoid.source[u] in image_objects
                  and whole_orbit.groupoid.target[u] in image_objects}
        if image_arrows != wanted:
            embedding_ok = False
            details.append("image is not the full subgroupoid on the image objects")
    if embedding_ok:
        details.append(
            f"embeds as the full subgroupoid on "
            f"{len({obj_map[x] for x in sub_orbit.groupoid.objects})} objects")
    return RestrictOrbitReport(hypothesis_ok, hypothesis_failures,
                               embedding_ok, details)


class RegularCoverReport:
    """Outcome of checking a covering morphism against the orbit construction."""

    def __init__(self, orbit_iso_ok, object_group_iso_ok, details):
        self.orbit_iso_ok = orbit_iso_ok
        self.object_group_iso_ok = object_group_iso_ok
        self.details = tuple(details)

    @property
    def ok(self):
        return self.orbit_iso_ok and self.object_group_iso_ok


def regular_cover_orbit_check(p, deck):
    """Verify that a covering morphism with a free deck action is the orbit
    morphism of that action.

    Preconditions (errors): p is a covering morphism; deck acts freely on the
    source of p; p is constant on deck orbits.  Checks: the orbit groupoid of
    the deck action is isomorphic to the target over p, and the target object
    group at p(x) is isomorphic to the object group of the semidirect product
    at x, for every x.
    """
    problems = validate_morphism(p)
    if problems:
        raise ValueError(f"{p.name}: not a morphism: {problems[0]}")
    if not is_covering(p):
        raise ValueError(f"{p.name}: not a covering morphism")
    if deck.space is not p.dom:
        raise ValueError("deck action must act on the source of the morphism")
    problems = validate_action(deck)
    if problems:
        raise ValueError(f"{deck.name}: invalid action: {problems[0]}")
    if not is_free_action(deck):
        raise ValueError(f"{deck.name}: deck action is not free")
    for g in deck.group.elements:
        for x in p.dom.objects:
            if p.object_map[deck.act_obj[(g, x)]] != p.object_map[x]:
                raise ValueError(f"{p.name}: not constant on deck orbits")
        for a in p.dom.arrows:
            if p.arrow_map[deck.act_arrow[(g, a)]] != p.arrow_map[a]:
                raise ValueError(f"{p.name}: not constant on deck orbits")

    details = []
    orbit = orbit_groupoid(deck)
    obj_map = {}
    arr_map = {}
    orbit_iso_ok = True
    for x in p.dom.objects:
        cls = orbit.morphism.object_map[x]
        if obj_map.setdefault(cls, p.object_map[x]) != p.object_map[x]:
            orbit_iso_ok = False
            details.append(f"induced object map not well defined at {cls}")
    for a in p.dom.arrows:
        cls = orbit.morphism.arrow_map[a]
        if arr_map.setdefault(cls, p.arrow_map[a]) != p.arrow_map[a]:
            orbit_iso_ok = False
            details.append(f"induced arrow map not well defined at {cls}")
    if orbit_iso_ok:
        induced = GroupoidMorphism(orbit.groupoid, p.cod, obj_map, arr_map,
                                   name="induced")
        problems = validate_morphism(induced)
        if problems:
            orbit_iso_ok = False
            details.append(f"induced map not a morphism: {problems[0]}")
        else:
            objects_bijective = (
                len(set(obj_map.values())) == len(orbit.groupoid.objects)
                and set(obj_map.values()) == set(p.cod.objects))
            arrows_bijective = (
                len(set(arr_map.values())) == len(orbit.groupoid.arrows)
                and set(arr_map.values()) == set(p.cod.arrows))
            if not (objects_bijective and arrows_bijective):
                orbit_iso_ok = False
                details.append("induced map is not an isomorphism")
    if orbit_iso_ok:
        details.append("orbit groupoid of the deck action matches the target")

    object_group_iso_ok = True
    for x in p.dom.objects:
        target_group = object_group(p.cod, p.object_map[x])
        lifted_group = object_group(orbit.semidirect.groupoid, x)
        if not group_isomorphic(target_group, lifted_group):
            object_group_iso_ok = False
            details.append(
                f"object group at {p.object_map[x]} does not match the "
                f"semidirect object group at {x}")
    if object_group_iso_ok:
        details.append("target object groups match the semidirect object groups")
    return RegularCoverReport(orbit_iso_ok, object_group_iso_ok, details)
