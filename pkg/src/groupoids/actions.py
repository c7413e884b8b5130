"""Actions of a finite group on a finite groupoid by automorphisms."""

from __future__ import annotations

from .core import (FiniteGroupoid, GroupTable, full_subgroupoid,
                   subgroup_table)


class GroupoidAction:
    """A group acting on a groupoid.

    act_obj maps (g, object) to an object, act_arrow maps (g, arrow) to an
    arrow; both are total.  The constructor only stores; validate_action
    checks the axioms (unit, composition, additivity, identity preservation).
    """

    def __init__(self, group, space, act_obj, act_arrow, name="act",
                 group_groupoid=None):
        self.name = name
        self.group = group
        self.space = space
        self.act_obj = dict(act_obj)
        self.act_arrow = dict(act_arrow)
        # optional: the one-object groupoid the group was read from, kept so
        # emitting the action reproduces the original block byte for byte
        self.group_groupoid = group_groupoid

    def on_object(self, g, x):
        return self.act_obj[(g, x)]

    def on_arrow(self, g, a):
        return self.act_arrow[(g, a)]

    def __repr__(self):
        return (f"GroupoidAction({self.name!r}: {self.group.name} on "
                f"{self.space.name})")


def validate_action(act):
    """Return a list of violated action axioms; empty means valid."""
    problems = []
    G, sp = act.group, act.space
    for g in G.elements:
        for x in sp.objects:
            y = act.act_obj.get((g, x))
            if y is None:
                problems.append(f"missing object image ({g}, {x})")
            elif y not in sp.object_index:
                problems.append(f"({g}, {x}) maps to unknown object {y}")
        for a in sp.arrows:
            b = act.act_arrow.get((g, a))
            if b is None:
                problems.append(f"missing arrow image ({g}, {a})")
            elif b not in sp.arrow_index:
                problems.append(f"({g}, {a}) maps to unknown arrow {b}")
    if problems:
        return problems

    e = G.identity
    for x in sp.objects:
        if act.act_obj[(e, x)] != x:
            problems.append(f"unit axiom fails: {e}*{x} != {x}")
    for a in sp.arrows:
        if act.act_arrow[(e, a)] != a:
            problems.append(f"unit axiom fails on arrow {a}")
    for g in G.elements:
        for h in G.elements:
            gh = G.prod(g, h)
            for x in sp.objects:
                if act.act_obj[(g, act.act_obj[(h, x)])] != \
                        act.act_obj[(gh, x)]:
                    problems.append(
                        f"composition axiom fails on objects: "
                        f"g={g}, h={h}, x={x}")
            for a in sp.arrows:
                if act.act_arrow[(g, act.act_arrow[(h, a)])] != \
                        act.act_arrow[(gh, a)]:
                    problems.append(
                        f"composition axiom fails on arrows: "
                        f"g={g}, h={h}, a={a}")
    for g in G.elements:
        for a in sp.arrows:
            b = act.act_arrow[(g, a)]
            if sp.source[b] != act.act_obj[(g, sp.source[a])]:
                problems.append(f"source not respected: g={g}, a={a}")
            if sp.target[b] != act.act_obj[(g, sp.target[a])]:
                problems.append(f"target not respected: g={g}, a={a}")
        for x in sp.objects:
            if act.act_arrow[(g, sp.identity_of[x])] != \
                    sp.identity_of[act.act_obj[(g, x)]]:
                problems.append(f"identity not preserved: g={g}, x={x}")
        for (v, u), w in sp.compose.items():
            gv = act.act_arrow[(g, v)]
            gu = act.act_arrow[(g, u)]
            # .get: the image pair need not be composable when incidence
            # is already broken, and that was reported above
            if sp.compose.get((gv, gu)) != act.act_arrow[(g, w)]:
                problems.append(f"additivity fails: g={g}, pair=({v}, {u})")
    return problems


def _orbits(act, items, image):
    index = {v: i for i, v in enumerate(items)}
    seen = set()
    blocks = []
    for x in items:
        if x in seen:
            continue
        block = {x}
        for g in act.group.elements:
            block.add(image(g, x))
        seen |= block
        blocks.append(sorted(block, key=index.__getitem__))
    return blocks


def object_orbits(act):
    """Orbit partition of the objects, blocks ordered by first member."""
    return _orbits(act, act.space.objects,
                   lambda g, x: act.act_obj[(g, x)])


def arrow_orbits(act):
    return _orbits(act, act.space.arrows,
                   lambda g, a: act.act_arrow[(g, a)])


def stabilizer(act, x):
    """The stabilizer subgroup of an object, as a group table."""
    if x not in act.space.object_index:
        raise ValueError(f"{act.space.name}: unknown object {x}")
    members = [g for g in act.group.elements if act.act_obj[(g, x)] == x]
    return subgroup_table(act.group, members, name=f"Stab({x})")


def is_free_action(act):
    """No non-identity element fixes any object."""
    e = act.group.identity
    return all(act.act_obj[(g, x)] != x
               for g in act.group.elements if g != e
               for x in act.space.objects)


def fixed_subgroupoid(act, elements=None, name=None):
    """The substructure fixed by every listed group element (default: all).

    Returned as a plain FiniteGroupoid on the fixed objects and fixed arrows;
    it is generally not wide in the ambient groupoid, and it may be empty
    (no fixed objects at all).
    """
    sp = act.space
    if elements is None:
        elements = act.group.elements
    objs = tuple(x for x in sp.objects
                 if all(act.act_obj[(g, x)] == x for g in elements))
    oset = set(objs)
    arrows = tuple(a for a in sp.arrows
                   if sp.source[a] in oset and sp.target[a] in oset
                   and all(act.act_arrow[(g, a)] == a for g in elements))
    aset = set(arrows)
    compose = {(v, u): w for (v, u), w in sp.compose.items()
               if v in aset and u in aset}
    return FiniteGroupoid(
        objs, arrows,
        {a: sp.source[a] for a in arrows},
        {a: sp.target[a] for a in arrows},
        {x: sp.identity_of[x] for x in objs},
        {a: sp.inverse_of[a] for a in arrows},
        compose, name=name or f"{sp.name}^fix")


def trivial_action(group, space, name=None):
    act_obj = {(g, x): x for g in group.elements for x in space.objects}
    act_arrow = {(g, a): a for g in group.elements for a in space.arrows}
    return GroupoidAction(group, space, act_obj, act_arrow,
                          name=name or f"trivial-{group.name}")


def action_from_object_map(group, space, act_obj, name="act",
                           group_groupoid=None):
    """Derive the arrow map when every hom-set has at most one arrow.

    Works for discrete groupoids, tree groupoids, and their disjoint unions,
    where an automorphism is determined by what it does to objects.
    """
    act_arrow = {}
    for g in group.elements:
        for a in space.arrows:
            x = act_obj[(g, space.source[a])]
            y = act_obj[(g, space.target[a])]
            hom = space.hom(x, y)
            if len(hom) != 1:
                raise ValueError(
                    f"{space.name}: hom({x}, {y}) is not a singleton; "
                    f"the arrow map is not determined")
            act_arrow[(g, a)] = hom[0]
    return GroupoidAction(group, space, act_obj, act_arrow, name=name,
                          group_groupoid=group_groupoid)


def restrict_action(act, objects, name=None):
    """Restrict to the full subgroupoid on an invariant object subset."""
    oset = set(objects)
    for g in act.group.elements:
        for x in objects:
            if act.act_obj[(g, x)] not in oset:
                raise ValueError(
                    f"{act.name}: object set is not invariant "
                    f"({g} moves {x} outside)")
    sub = full_subgroupoid(act.space, objects,
                           name=f"{act.space.name}|{len(oset)}")
    act_obj = {(g, x): act.act_obj[(g, x)]
               for g in act.group.elements for x in sub.objects}
    act_arrow = {(g, a): act.act_arrow[(g, a)]
                 for g in act.group.elements for a in sub.arrows}
    return GroupoidAction(act.group, sub, act_obj, act_arrow,
                          name=name or f"{act.name}|A",
                          group_groupoid=act.group_groupoid)
