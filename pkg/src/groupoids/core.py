"""Finite groupoids, group tables, morphisms, and structural predicates.

Composition is written additively and runs right to left: ``add(v, u)`` is
``v + u``, the arrow that traverses ``u`` first and then ``v``.  It is defined
exactly when ``target(u) == source(v)``.

Objects and arrows are opaque strings.  Input order is the canonical order and
is used for every deterministic tie-break in this package; no operation ever
iterates an unordered set to produce output.
"""

from __future__ import annotations


class SizeCapError(ValueError):
    """An operation was asked to exceed one of its documented size caps."""


# Soft cap for isomorphism search; inputs above this raise SizeCapError.
ISO_ARROW_CAP = 64


class FiniteGroupoid:
    """A finite groupoid given by explicit enumeration of its tables.

    Fields mirror the data: objects, arrows, source/target maps, one identity
    arrow per object, an inverse involution, and a composition table keyed by
    ``(v, u)`` with value ``v + u``.  The constructor only stores and indexes;
    run validate_groupoid to check the axioms.
    """

    def __init__(self, objects, arrows, source, target, identity_of,
                 inverse_of, compose, name="G"):
        self.name = name
        self.objects = tuple(objects)
        self.arrows = tuple(arrows)
        self.source = dict(source)
        self.target = dict(target)
        self.identity_of = dict(identity_of)
        self.inverse_of = dict(inverse_of)
        self.compose = dict(compose)
        self.object_index = {x: i for i, x in enumerate(self.objects)}
        self.arrow_index = {u: i for i, u in enumerate(self.arrows)}
        if len(self.object_index) != len(self.objects):
            raise ValueError(f"{name}: duplicate object names")
        if len(self.arrow_index) != len(self.arrows):
            raise ValueError(f"{name}: duplicate arrow names")
        self._identities = set(self.identity_of.values())
        self._hom = {}
        for u in self.arrows:
            key = (self.source.get(u), self.target.get(u))
            self._hom.setdefault(key, []).append(u)

    def add(self, v, u):
        """v + u: traverse u first, then v."""
        try:
            return self.compose[(v, u)]
        except KeyError:
            raise ValueError(
                f"{self.name}: compose({v}, {u}) is not defined") from None

    def inv(self, u):
        return self.inverse_of[u]

    def identity(self, x):
        return self.identity_of[x]

    def is_identity_arrow(self, u):
        return u in self._identities

    def hom(self, x, y):
        """Arrows x -> y in input order."""
        return tuple(self._hom.get((x, y), ()))

    def loops(self, x):
        return self.hom(x, x)

    def __repr__(self):
        return (f"FiniteGroupoid({self.name!r}, {len(self.objects)} objects, "
                f"{len(self.arrows)} arrows)")


def star(g, x):
    """All arrows with source x, in input order."""
    if x not in g.object_index:
        raise ValueError(f"{g.name}: unknown object {x}")
    return tuple(u for u in g.arrows if g.source[u] == x)


def components(g):
    """Partition of the objects into connected components.

    Blocks are ordered by their first object in input order; members keep
    input order.
    """
    adjacent = {x: [] for x in g.objects}
    for u in g.arrows:
        adjacent[g.source[u]].append(g.target[u])
        adjacent[g.target[u]].append(g.source[u])
    seen = set()
    blocks = []
    for x in g.objects:
        if x in seen:
            continue
        queue = [x]
        seen.add(x)
        block = []
        while queue:
            y = queue.pop(0)
            block.append(y)
            for z in adjacent[y]:
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        blocks.append(sorted(block, key=g.object_index.__getitem__))
    return blocks


def is_connected(g):
    return len(components(g)) <= 1


def is_discrete(g):
    """Only identity arrows."""
    return all(g.is_identity_arrow(u) for u in g.arrows)


def is_tree_groupoid(g):
    """Connected with exactly one arrow between each ordered pair of objects."""
    if not is_connected(g):
        return False
    return all(len(g.hom(x, y)) == 1 for x in g.objects for y in g.objects)


def validate_groupoid(g):
    """Return a list of violated invariants; empty means valid."""
    problems = []
    for x in g.objects:
        e = g.identity_of.get(x)
        if e is None:
            problems.append(f"no identity arrow at {x}")
        elif e not in g.arrow_index:
            problems.append(f"identity at {x} is not an arrow: {e}")
        elif g.source.get(e) != x or g.target.get(e) != x:
            problems.append(f"identity at {x} is not a loop at {x}")
    for u in g.arrows:
        if g.source.get(u) not in g.object_index:
            problems.append(f"arrow {u} has unknown source {g.source.get(u)}")
        if g.target.get(u) not in g.object_index:
            problems.append(f"arrow {u} has unknown target {g.target.get(u)}")
        v = g.inverse_of.get(u)
        if v is None or v not in g.arrow_index:
            problems.append(f"arrow {u} has no inverse")
        else:
            if g.source.get(v) != g.target.get(u) or g.target.get(v) != g.source.get(u):
                problems.append(f"inverse of {u} has wrong endpoints")
            if g.inverse_of.get(v) != u:
                problems.append(f"inverse is not an involution at {u}")
    if problems:
        return problems

    # composition table keyed exactly by the composable pairs
    for (v, u), w in g.compose.items():
        if v not in g.arrow_index or u not in g.arrow_index:
            problems.append(f"compose({v}, {u}) involves unknown arrows")
            continue
        if g.target[u] != g.source[v]:
            problems.append(f"compose({v}, {u}) defined but not composable")
            continue
        if w not in g.arrow_index:
            problems.append(f"compose({v}, {u}) = {w} is not an arrow")
        elif g.source[w] != g.source[u] or g.target[w] != g.target[v]:
            problems.append(f"compose({v}, {u}) = {w} has wrong endpoints")
    for v in g.arrows:
        for u in g.arrows:
            if g.target[u] == g.source[v] and (v, u) not in g.compose:
                problems.append(f"missing composition: compose {v} {u}")
    if problems:
        return problems

    for u in g.arrows:
        x, y = g.source[u], g.target[u]
        if g.compose[(u, g.identity_of[x])] != u:
            problems.append(f"{u} + id_{x} != {u}")
        if g.compose[(g.identity_of[y], u)] != u:
            problems.append(f"id_{y} + {u} != {u}")
        v = g.inverse_of[u]
        if g.compose[(u, v)] != g.identity_of[y]:
            problems.append(f"{u} + inverse({u}) is not the identity at {y}")
        if g.compose[(v, u)] != g.identity_of[x]:
            problems.append(f"inverse({u}) + {u} is not the identity at {x}")
    for (v, u) in g.compose:
        vu = g.compose[(v, u)]
        for w in g.arrows:
            if g.target[v] == g.source[w]:
                left = g.compose[(g.compose[(w, v)], u)]
                right = g.compose[(w, vu)]
                if left != right:
                    problems.append(
                        f"associativity fails on ({w}, {v}, {u})")
    return problems


class GroupTable:
    """A finite group as an explicit multiplication table.

    elements keep input order; ``mul`` maps (g, h) to gh.  identity and
    inverses are derived from the table when not supplied.
    """

    def __init__(self, elements, mul, name="G", identity=None, inv=None):
        self.name = name
        self.elements = tuple(elements)
        self.mul = dict(mul)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError(f"{name}: duplicate element names")
        if identity is None:
            for e in self.elements:
                if all(self.mul.get((e, x)) == x and self.mul.get((x, e)) == x
                       for x in self.elements):
                    identity = e
                    break
            else:
                raise ValueError(f"{name}: no identity element found")
        self.identity = identity
        if inv is None:
            inv = {}
            for x in self.elements:
                for y in self.elements:
                    if (self.mul.get((x, y)) == identity
                            and self.mul.get((y, x)) == identity):
                        inv[x] = y
                        break
                else:
                    raise ValueError(f"{name}: element {x} has no inverse")
        self.inv = dict(inv)

    @property
    def order(self):
        return len(self.elements)

    def prod(self, a, b):
        return self.mul[(a, b)]

    def inverse(self, a):
        return self.inv[a]

    def __repr__(self):
        return f"GroupTable({self.name!r}, order {self.order})"


def validate_group(gt):
    """Return a list of violated group axioms; empty means valid."""
    problems = []
    for a in gt.elements:
        for b in gt.elements:
            c = gt.mul.get((a, b))
            if c is None:
                problems.append(f"missing product {a}*{b}")
            elif c not in gt.index:
                problems.append(f"product {a}*{b} = {c} is not an element")
    if problems:
        return problems
    e = gt.identity
    for a in gt.elements:
        if gt.mul[(e, a)] != a or gt.mul[(a, e)] != a:
            problems.append(f"identity law fails at {a}")
        b = gt.inv.get(a)
        if b is None or gt.mul[(a, b)] != e or gt.mul[(b, a)] != e:
            problems.append(f"inverse law fails at {a}")
    for a in gt.elements:
        for b in gt.elements:
            for c in gt.elements:
                if gt.mul[(gt.mul[(a, b)], c)] != gt.mul[(a, gt.mul[(b, c)])]:
                    problems.append(f"associativity fails on ({a}, {b}, {c})")
    return problems


def element_order(gt, x):
    k = 1
    y = x
    while y != gt.identity:
        y = gt.prod(y, x)
        k += 1
    return k


def is_abelian_group(gt):
    return all(gt.prod(a, b) == gt.prod(b, a)
               for a in gt.elements for b in gt.elements)


def subgroup_closure(gt, gens):
    """Elements of the subgroup generated by gens, in ambient element order."""
    members = {gt.identity}
    work = [g for g in gens if g not in members]
    members.update(work)
    while work:
        fresh = []
        for a in list(members):
            for b in work:
                for c in (gt.prod(a, b), gt.prod(b, a)):
                    if c not in members:
                        members.add(c)
                        fresh.append(c)
        work = fresh
    return tuple(x for x in gt.elements if x in members)


def subgroup_table(gt, members, name=None):
    members = tuple(x for x in gt.elements if x in set(members))
    mset = set(members)
    for a in members:
        for b in members:
            if gt.prod(a, b) not in mset:
                raise ValueError(f"{gt.name}: subset not closed at {a}*{b}")
    mul = {(a, b): gt.prod(a, b) for a in members for b in members}
    return GroupTable(members, mul, name=name or f"{gt.name}-sub",
                      identity=gt.identity,
                      inv={a: gt.inv[a] for a in members})


def is_normal_subgroup(gt, members):
    mset = set(members)
    return all(gt.prod(gt.prod(g, n), gt.inv[g]) in mset
               for g in gt.elements for n in members)


def quotient_group(gt, members, name=None):
    """Quotient of gt by a normal subgroup given as an element subset.

    Cosets are named "[r]" after their first element in input order.
    """
    members = tuple(x for x in gt.elements if x in set(members))
    mset = set(members)
    if gt.identity not in mset:
        raise ValueError(f"{gt.name}: subgroup misses the identity")
    for a in members:
        for b in members:
            if gt.prod(a, b) not in mset:
                raise ValueError(f"{gt.name}: subset not closed under product")
    if not is_normal_subgroup(gt, members):
        raise ValueError(f"{gt.name}: subgroup is not normal")
    coset_of = {}
    reps = []
    for x in gt.elements:
        if x in coset_of:
            continue
        label = f"[{x}]"
        reps.append((x, label))
        for n in members:
            coset_of[gt.prod(x, n)] = label
    elements = [label for _, label in reps]
    rep_of = {label: x for x, label in reps}
    mul = {}
    for la in elements:
        for lb in elements:
            mul[(la, lb)] = coset_of[gt.prod(rep_of[la], rep_of[lb])]
    return GroupTable(elements, mul, name=name or f"{gt.name}/N",
                      identity=coset_of[gt.identity],
                      inv={la: coset_of[gt.inv[rep_of[la]]] for la in elements})


def direct_product_group(a, b, name=None):
    elements = [f"({x},{y})" for x in a.elements for y in b.elements]
    mul = {}
    for x1 in a.elements:
        for y1 in b.elements:
            for x2 in a.elements:
                for y2 in b.elements:
                    mul[(f"({x1},{y1})", f"({x2},{y2})")] = \
                        f"({a.prod(x1, x2)},{b.prod(y1, y2)})"
    return GroupTable(elements, mul, name=name or f"{a.name}x{b.name}",
                      identity=f"({a.identity},{b.identity})",
                      inv={f"({x},{y})": f"({a.inv[x]},{b.inv[y]})"
                           for x in a.elements for y in b.elements})


class GroupoidMorphism:
    """A morphism of finite groupoids: an object map and an arrow map."""

    def __init__(self, dom, cod, object_map, arrow_map, name="f"):
        self.name = name
        self.dom = dom
        self.cod = cod
        self.object_map = dict(object_map)
        self.arrow_map = dict(arrow_map)

    def on_object(self, x):
        return self.object_map[x]

    def on_arrow(self, u):
        return self.arrow_map[u]

    def __repr__(self):
        return f"GroupoidMorphism({self.name!r}: {self.dom.name} -> {self.cod.name})"


def validate_morphism(f):
    """Return a list of violated morphism conditions; empty means valid."""
    problems = []
    for x in f.dom.objects:
        y = f.object_map.get(x)
        if y is None:
            problems.append(f"object {x} has no image")
        elif y not in f.cod.object_index:
            problems.append(f"object {x} maps to unknown object {y}")
    for u in f.dom.arrows:
        w = f.arrow_map.get(u)
        if w is None:
            problems.append(f"arrow {u} has no image")
        elif w not in f.cod.arrow_index:
            problems.append(f"arrow {u} maps to unknown arrow {w}")
    if problems:
        return problems
    for u in f.dom.arrows:
        w = f.arrow_map[u]
        if f.cod.source[w] != f.object_map[f.dom.source[u]]:
            problems.append(f"image of {u} has wrong source")
        if f.cod.target[w] != f.object_map[f.dom.target[u]]:
            problems.append(f"image of {u} has wrong target")
    for x in f.dom.objects:
        if f.arrow_map[f.dom.identity_of[x]] != \
                f.cod.identity_of[f.object_map[x]]:
            problems.append(f"identity at {x} is not preserved")
    if problems:
        return problems
    for (v, u), w in f.dom.compose.items():
        if f.cod.compose[(f.arrow_map[v], f.arrow_map[u])] != f.arrow_map[w]:
            problems.append(f"composition not preserved on ({v}, {u})")
    return problems


def identity_morphism(g):
    return GroupoidMorphism(g, g, {x: x for x in g.objects},
                            {u: u for u in g.arrows}, name=f"id_{g.name}")


def compose_morphisms(outer, inner, name=None):
    if inner.cod is not outer.dom:
        raise ValueError("morphisms are not composable")
    return GroupoidMorphism(
        inner.dom, outer.cod,
        {x: outer.object_map[inner.object_map[x]] for x in inner.dom.objects},
        {u: outer.arrow_map[inner.arrow_map[u]] for u in inner.dom.arrows},
        name=name or f"{outer.name}.{inner.name}")


def same_maps(f, g):
    return f.object_map == g.object_map and f.arrow_map == g.arrow_map


class WideSubgroupoid:
    """A wide subgroupoid of an ambient groupoid, stored as an arrow subset.

    Contains every identity and is closed under inverse and composition; the
    constructor verifies this, and verifies normality when the flag is set.
    """

    def __init__(self, ambient, arrows, normal=False, name=None):
        self.ambient = ambient
        self.name = name or f"{ambient.name}-sub"
        aset = set(arrows)
        missing = [u for u in aset if u not in ambient.arrow_index]
        if missing:
            raise ValueError(f"{self.name}: unknown arrows {missing}")
        for x in ambient.objects:
            aset.add(ambient.identity_of[x])
        for u in list(aset):
            if ambient.inverse_of[u] not in aset:
                raise ValueError(f"{self.name}: not closed under inverse at {u}")
        for v in aset:
            for u in aset:
                if ambient.target[u] == ambient.source[v]:
                    if ambient.compose[(v, u)] not in aset:
                        raise ValueError(
                            f"{self.name}: not closed under composition "
                            f"at ({v}, {u})")
        self.arrows = tuple(u for u in ambient.arrows if u in aset)
        self.arrow_set = aset
        self.normal = bool(normal)
        if self.normal and not _normal_scan(ambient, aset):
            raise ValueError(f"{self.name}: claimed normal but is not")

    def contains(self, u):
        return u in self.arrow_set

    def at(self, x):
        """Loops of the subgroupoid at x, in input order."""
        return tuple(u for u in self.arrows
                     if self.ambient.source[u] == x
                     and self.ambient.target[u] == x)

    def as_groupoid(self, name=None):
        g = self.ambient
        compose = {(v, u): w for (v, u), w in g.compose.items()
                   if v in self.arrow_set and u in self.arrow_set}
        return FiniteGroupoid(
            g.objects, self.arrows,
            {u: g.source[u] for u in self.arrows},
            {u: g.target[u] for u in self.arrows},
            dict(g.identity_of),
            {u: g.inverse_of[u] for u in self.arrows},
            compose, name=name or self.name)

    def __repr__(self):
        flag = "normal" if self.normal else "wide"
        return f"WideSubgroupoid({self.name!r}, {len(self.arrows)} arrows, {flag})"


def _normal_scan(g, arrow_set):
    for a in g.arrows:
        x = g.source[a]
        for h in arrow_set:
            if g.source[h] == x and g.target[h] == x:
                conj = g.compose[(g.compose[(a, h)], g.inverse_of[a])]
                if conj not in arrow_set:
                    return False
    return True


def is_normal_subgroupoid(n):
    """Conjugation-stability of a wide subgroupoid by every ambient arrow."""
    return _normal_scan(n.ambient, n.arrow_set)


def kernel(f, name=None):
    """Arrows sent to identities; returned as a verified normal subgroupoid."""
    arrows = [u for u in f.dom.arrows
              if f.cod.is_identity_arrow(f.arrow_map[u])]
    return WideSubgroupoid(f.dom, arrows, normal=True,
                           name=name or f"Ker({f.name})")


def is_quotient_morphism(f):
    """Surjective on objects and full on every hom-set."""
    if set(f.object_map[x] for x in f.dom.objects) != set(f.cod.objects):
        return False
    for x in f.dom.objects:
        for y in f.dom.objects:
            images = {f.arrow_map[u] for u in f.dom.hom(x, y)}
            needed = set(f.cod.hom(f.object_map[x], f.object_map[y]))
            if not needed <= images:
                return False
    return True


def is_fibration(f):
    """The induced map star(x) -> star(f x) is surjective for every x."""
    for x in f.dom.objects:
        images = {f.arrow_map[u] for u in f.dom.arrows if f.dom.source[u] == x}
        needed = {w for w in f.cod.arrows
                  if f.cod.source[w] == f.object_map[x]}
        if not needed <= images:
            return False
    return True


def is_covering(f):
    """The induced map star(x) -> star(f x) is bijective for every x."""
    for x in f.dom.objects:
        image_list = [f.arrow_map[u] for u in f.dom.arrows
                      if f.dom.source[u] == x]
        needed = {w for w in f.cod.arrows
                  if f.cod.source[w] == f.object_map[x]}
        if len(image_list) != len(set(image_list)):
            return False
        if set(image_list) != needed:
            return False
    return True


def full_subgroupoid(g, objects, name=None):
    """The full subgroupoid on a subset of objects (all arrows between them)."""
    objs = tuple(x for x in g.objects if x in set(objects))
    unknown = set(objects) - set(g.objects)
    if unknown:
        raise ValueError(f"{g.name}: unknown objects {sorted(unknown)}")
    oset = set(objs)
    arrows = tuple(u for u in g.arrows
                   if g.source[u] in oset and g.target[u] in oset)
    aset = set(arrows)
    compose = {(v, u): w for (v, u), w in g.compose.items()
               if v in aset and u in aset}
    return FiniteGroupoid(
        objs, arrows,
        {u: g.source[u] for u in arrows},
        {u: g.target[u] for u in arrows},
        {x: g.identity_of[x] for x in objs},
        {u: g.inverse_of[u] for u in arrows},
        compose, name=name or f"{g.name}|{len(objs)}")


def disjoint_union(a, b, name=None):
    if set(a.objects) & set(b.objects):
        raise ValueError("object names collide in disjoint union")
    if set(a.arrows) & set(b.arrows):
        raise ValueError("arrow names collide in disjoint union")
    compose = dict(a.compose)
    compose.update(b.compose)
    return FiniteGroupoid(
        a.objects + b.objects, a.arrows + b.arrows,
        {**a.source, **b.source}, {**a.target, **b.target},
        {**a.identity_of, **b.identity_of},
        {**a.inverse_of, **b.inverse_of},
        compose, name=name or f"{a.name}+{b.name}")


def object_group(g, x):
    """The group of loops at x under composition."""
    if x not in g.object_index:
        raise ValueError(f"{g.name}: unknown object {x}")
    loops = g.loops(x)
    mul = {(p, q): g.compose[(p, q)] for p in loops for q in loops}
    return GroupTable(loops, mul, name=f"{g.name}({x})",
                      identity=g.identity_of[x],
                      inv={u: g.inverse_of[u] for u in loops})


def _object_profile(g, x):
    loop_count = len(g.loops(x))
    out_count = sum(1 for u in g.arrows if g.source[u] == x)
    in_count = sum(1 for u in g.arrows if g.target[u] == x)
    return (loop_count, out_count, in_count)


def search_isomorphism(a, b):
    """Plain backtracking search for an isomorphism a -> b.

    Returns a GroupoidMorphism or None.  Deterministic: candidates are tried
    in input order.  Inputs above ISO_ARROW_CAP arrows are rejected.
    """
    if len(a.arrows) > ISO_ARROW_CAP or len(b.arrows) > ISO_ARROW_CAP:
        raise SizeCapError(
            f"isomorphism search capped at {ISO_ARROW_CAP} arrows")
    if len(a.objects) != len(b.objects) or len(a.arrows) != len(b.arrows):
        return None

    profiles_b = {y: _object_profile(b, y) for y in b.objects}
    object_map = {}
    used_objects = set()

    non_identity = [u for u in a.arrows if not a.is_identity_arrow(u)]
    arrow_map = {}
    used_arrows = set()

    # composition triples indexed by participating arrow, for incremental checks
    triples_of = {u: [] for u in a.arrows}
    for (v, u), w in a.compose.items():
        for key in {v, u, w}:
            triples_of[key].append((v, u, w))

    def arrow_consistent(u, w):
        partner = a.inverse_of[u]
        if partner in arrow_map and arrow_map[partner] != b.inverse_of[w]:
            return False
        arrow_map[u] = w
        try:
            for (p, q, r) in triples_of[u]:
                fp = arrow_map.get(p)
                fq = arrow_map.get(q)
                fr = arrow_map.get(r)
                if fp is not None and fq is not None:
                    got = b.compose.get((fp, fq))
                    if got is None:
                        return False
                    if fr is not None and got != fr:
                        return False
        finally:
            del arrow_map[u]
        return True

    def assign_arrows(k):
        if k == len(non_identity):
            return True
        u = non_identity[k]
        x = object_map[a.source[u]]
        y = object_map[a.target[u]]
        for w in b.hom(x, y):
            if w in used_arrows or b.is_identity_arrow(w):
                continue
            if not arrow_consistent(u, w):
                continue
            arrow_map[u] = w
            used_arrows.add(w)
            if assign_arrows(k + 1):
                return True
            del arrow_map[u]
            used_arrows.remove(w)
        return False

    def hom_counts_match():
        for x in a.objects:
            for y in a.objects:
                if len(a.hom(x, y)) != len(b.hom(object_map[x], object_map[y])):
                    return False
        return True

    def assign_objects(i):
        if i == len(a.objects):
            if not hom_counts_match():
                return False
            for x in a.objects:
                arrow_map[a.identity_of[x]] = b.identity_of[object_map[x]]
            ok = assign_arrows(0)
            if not ok:
                for x in a.objects:
                    del arrow_map[a.identity_of[x]]
            return ok
        x = a.objects[i]
        profile = _object_profile(a, x)
        for y in b.objects:
            if y in used_objects or profiles_b[y] != profile:
                continue
            object_map[x] = y
            used_objects.add(y)
            if assign_objects(i + 1):
                return True
            del object_map[x]
            used_objects.remove(y)
        return False

    if not assign_objects(0):
        return None
    iso = GroupoidMorphism(a, b, object_map, arrow_map,
                           name=f"{a.name}~{b.name}")
    assert validate_morphism(iso) == []
    return iso
