"""Stock groups and groupoids used by tests, the CLI corpus, and the docs."""

from __future__ import annotations

from itertools import permutations

from .core import (FiniteGroupoid, GroupTable, direct_product_group,
                   element_order, is_abelian_group, object_group,
                   search_isomorphism)


def trivial_group(name="1"):
    return GroupTable(("e",), {("e", "e"): "e"}, name=name)


def cyclic_group(n, name=None):
    elements = [str(k) for k in range(n)]
    mul = {(str(a), str(b)): str((a + b) % n)
           for a in range(n) for b in range(n)}
    return GroupTable(elements, mul, name=name or f"Z{n}")


def klein_group(name="Z2xZ2"):
    return direct_product_group(cyclic_group(2), cyclic_group(2), name=name)


def _cycle_name(perm):
    seen = set()
    parts = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cycle = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cycle.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + "".join(str(k) for k in cycle) + ")")
    return "".join(parts) if parts else "e"


def _perm_group(perms, name):
    perms = sorted(perms)
    names = {p: _cycle_name(p) for p in perms}
    elements = [names[p] for p in perms]
    mul = {}
    for p in perms:
        for q in perms:
            # (p*q)(i) = p(q(i)): q acts first
            r = tuple(p[q[i]] for i in range(len(p)))
            mul[(names[p], names[q])] = names[r]
    return GroupTable(elements, mul, name=name)


def symmetric_group(n, name=None):
    return _perm_group(list(permutations(range(n))), name or f"S{n}")


def _is_even(perm):
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return inversions % 2 == 0


def alternating_group(n, name=None):
    perms = [p for p in permutations(range(n)) if _is_even(p)]
    return _perm_group(perms, name or f"A{n}")


def dihedral_group(n, name=None):
    """Symmetries of the n-gon: r of order n, s of order 2, srs = r^-1."""
    def label(k, j):
        rk = "" if k == 0 else ("r" if k == 1 else f"r{k}")
        sj = "s" if j else ""
        return (rk + sj) or "e"
    elements = [label(k, j) for j in (0, 1) for k in range(n)]
    key = {label(k, j): (k, j) for j in (0, 1) for k in range(n)}
    mul = {}
    for a in elements:
        for b in elements:
            k1, j1 = key[a]
            k2, j2 = key[b]
            k = (k1 + (k2 if j1 == 0 else -k2)) % n
            mul[(a, b)] = label(k, (j1 + j2) % 2)
    return GroupTable(elements, mul, name=name or f"D{n}")


def quaternion_group(name="Q8"):
    base = {
        ("1", "1"): ("1", 1), ("1", "i"): ("i", 1), ("1", "j"): ("j", 1),
        ("1", "k"): ("k", 1),
        ("i", "1"): ("i", 1), ("i", "i"): ("1", -1), ("i", "j"): ("k", 1),
        ("i", "k"): ("j", -1),
        ("j", "1"): ("j", 1), ("j", "i"): ("k", -1), ("j", "j"): ("1", -1),
        ("j", "k"): ("i", 1),
        ("k", "1"): ("k", 1), ("k", "i"): ("j", 1), ("k", "j"): ("i", -1),
        ("k", "k"): ("1", -1),
    }
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def split(u):
        return (u[1:], -1) if u.startswith("-") else (u, 1)

    def join(letter, sign):
        return letter if sign == 1 else f"-{letter}"

    mul = {}
    for a in units:
        for b in units:
            la, sa = split(a)
            lb, sb = split(b)
            letter, sign = base[(la, lb)]
            mul[(a, b)] = join(letter, sa * sb * sign)
    return GroupTable(units, mul, name=name)


def one_object_groupoid(gt, object_name="pt", name=None):
    """A group as a one-object groupoid.

    Returns (groupoid, element_to_arrow): the identity element becomes the
    identity arrow id_<object>, every other element keeps its name.
    """
    ident = f"id_{object_name}"
    elem_arrow = {g: (ident if g == gt.identity else g) for g in gt.elements}
    arrows = [ident] + [g for g in gt.elements if g != gt.identity]
    compose = {}
    for a in gt.elements:
        for b in gt.elements:
            compose[(elem_arrow[a], elem_arrow[b])] = elem_arrow[gt.prod(a, b)]
    gpd = FiniteGroupoid(
        (object_name,), arrows,
        {u: object_name for u in arrows}, {u: object_name for u in arrows},
        {object_name: ident},
        {elem_arrow[g]: elem_arrow[gt.inv[g]] for g in gt.elements},
        compose, name=name or f"{gt.name}-gpd")
    return gpd, elem_arrow


def discrete_groupoid(objects, name="discrete"):
    objects = tuple(objects)
    idents = {x: f"id_{x}" for x in objects}
    arrows = [idents[x] for x in objects]
    return FiniteGroupoid(
        objects, arrows,
        {idents[x]: x for x in objects}, {idents[x]: x for x in objects},
        idents, {idents[x]: idents[x] for x in objects},
        {(idents[x], idents[x]): idents[x] for x in objects}, name=name)


def tree_groupoid(objects, name="tree"):
    """The connected groupoid with exactly one arrow between any two objects."""
    objects = tuple(objects)

    def arrow(x, y):
        return f"id_{x}" if x == y else f"{x}>{y}"

    arrows = [arrow(x, x) for x in objects]
    arrows += [arrow(x, y) for x in objects for y in objects if x != y]
    source = {}
    target = {}
    for x in objects:
        for y in objects:
            source[arrow(x, y)] = x
            target[arrow(x, y)] = y
    compose = {}
    for x in objects:
        for y in objects:
            for z in objects:
                compose[(arrow(y, z), arrow(x, y))] = arrow(x, z)
    return FiniteGroupoid(
        objects, arrows, source, target,
        {x: arrow(x, x) for x in objects},
        {arrow(x, y): arrow(y, x) for x in objects for y in objects},
        compose, name=name)


def connected_groupoid(objects, vertex_group, name=None):
    """Connected groupoid with the given object group at every object.

    Arrows are labelled triples x:v:y; (y,w,z) + (x,v,y) = (x, w*v, z).
    """
    objects = tuple(objects)
    vg = vertex_group

    def arrow(x, v, y):
        if x == y and v == vg.identity:
            return f"id_{x}"
        return f"{x}:{v}:{y}"

    arrows = [arrow(x, vg.identity, x) for x in objects]
    for x in objects:
        for v in vg.elements:
            for y in objects:
                if x == y and v == vg.identity:
                    continue
                arrows.append(arrow(x, v, y))
    source = {}
    target = {}
    inverse = {}
    for x in objects:
        for v in vg.elements:
            for y in objects:
                u = arrow(x, v, y)
                source[u] = x
                target[u] = y
                inverse[u] = arrow(y, vg.inv[v], x)
    compose = {}
    for x in objects:
        for v in vg.elements:
            for y in objects:
                for w in vg.elements:
                    for z in objects:
                        compose[(arrow(y, w, z), arrow(x, v, y))] = \
                            arrow(x, vg.prod(w, v), z)
    return FiniteGroupoid(
        objects, arrows, source, target,
        {x: arrow(x, vg.identity, x) for x in objects},
        inverse, compose, name=name or f"{vg.name}-bundle")


def group_isomorphic(a, b):
    """Group-table isomorphism via search on the one-object groupoids."""
    if a.order != b.order:
        return False
    if is_abelian_group(a) != is_abelian_group(b):
        return False
    if sorted(element_order(a, x) for x in a.elements) != \
            sorted(element_order(b, x) for x in b.elements):
        return False
    ga, _ = one_object_groupoid(a)
    gb, _ = one_object_groupoid(b)
    return search_isomorphism(ga, gb) is not None


def groupoid_from_group(gt, object_name="pt", name=None):
    """one_object_groupoid without the element map, for call sites that
    only need the groupoid."""
    gpd, _ = one_object_groupoid(gt, object_name=object_name, name=name)
    return gpd


def group_of_one_object_groupoid(gpd):
    """Read a group table off a one-object groupoid (elements = arrows)."""
    if len(gpd.objects) != 1:
        raise ValueError(f"{gpd.name}: expected exactly one object")
    x = gpd.objects[0]
    gt = object_group(gpd, x)
    gt.name = gpd.name
    return gt
