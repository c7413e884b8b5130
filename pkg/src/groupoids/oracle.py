"""Brute-force verifiers used to cross-check the constructions.

Everything here recomputes from first principles: morphism enumeration by
backtracking, subgroupoid lattices by breadth-first generation, quotients by
conjugation saturation, and abelian invariants by counting element orders.
None of it calls the construction code it is meant to check.
"""

from __future__ import annotations

import itertools

from .core import (GroupoidMorphism, SizeCapError, is_abelian_group,
                   quotient_group, validate_morphism)

MAX_SOURCE_ARROWS = 10
MAX_TARGET_ARROWS = 8
MAX_LATTICE_ARROWS = 24
MAX_GROUP_ORDER = 1000


def enumerate_morphisms(dom, cod):
    """All morphisms dom -> cod, in deterministic order.

    Backtracking over object maps and arrow maps; identities are forced.
    Capped at MAX_SOURCE_ARROWS and MAX_TARGET_ARROWS.
    """
    if len(dom.arrows) > MAX_SOURCE_ARROWS:
        raise SizeCapError(
            f"morphism enumeration capped at {MAX_SOURCE_ARROWS} source arrows")
    if len(cod.arrows) > MAX_TARGET_ARROWS:
        raise SizeCapError(
            f"morphism enumeration capped at {MAX_TARGET_ARROWS} target arrows")

    non_identity = [u for u in dom.arrows if not dom.is_identity_arrow(u)]
    triples = list(dom.compose.items())

    found = []
    for images in itertools.product(cod.objects, repeat=len(dom.objects)):
        object_map = dict(zip(dom.objects, images))
        arrow_map = {dom.identity_of[x]: cod.identity_of[object_map[x]]
                     for x in dom.objects}

        def consistent():
            for (v, u), w in triples:
                fv = arrow_map.get(v)
                fu = arrow_map.get(u)
                fw = arrow_map.get(w)
                if fv is None or fu is None or fw is None:
                    continue
                if cod.compose.get((fv, fu)) != fw:
                    return False
            return True

        def extend(k):
            if k == len(non_identity):
                found.append(GroupoidMorphism(
                    dom, cod, dict(object_map), dict(arrow_map),
                    name=f"hom{len(found)}"))
                return
            a = non_identity[k]
            if a in arrow_map:
                extend(k + 1)
                return
            partner = dom.inverse_of[a]
            x = object_map[dom.source[a]]
            y = object_map[dom.target[a]]
            for b in cod.hom(x, y):
                if partner == a and cod.inverse_of[b] != b:
                    continue
                arrow_map[a] = b
                if partner != a:
                    arrow_map[partner] = cod.inverse_of[b]
                if consistent():
                    extend(k + 1)
                del arrow_map[a]
                if partner != a:
                    del arrow_map[partner]

        extend(0)
    for f in found:
        assert validate_morphism(f) == []
    return found


def invariant_morphisms(act, cod):
    """Morphisms from the acted-on groupoid that are constant on orbits."""
    out = []
    for f in enumerate_morphisms(act.space, cod):
        if all(f.object_map[act.act_obj[(g, x)]] == f.object_map[x]
               for g in act.group.elements for x in act.space.objects) and \
           all(f.arrow_map[act.act_arrow[(g, a)]] == f.arrow_map[a]
               for g in act.group.elements for a in act.space.arrows):
            out.append(f)
    return out


class UniversalPropertyReport:
    """Per-target factorization counts for a candidate orbit morphism."""

    def __init__(self, entries):
        # entries: (target name, invariant morphism count, existence failures,
        #           uniqueness failures)
        self.entries = tuple(entries)

    @property
    def ok(self):
        return all(e == 0 and u == 0 for (_n, _c, e, u) in self.entries)

    def lines(self):
        out = []
        for (tname, count, missing, extra) in self.entries:
            status = "ok" if missing == 0 and extra == 0 else (
                f"{missing} without factorization, {extra} with several")
            out.append(f"target {tname}: {count} invariant morphisms, {status}")
        return out


def check_universal_property(act, candidate, targets):
    """Verify the candidate factors invariant morphisms uniquely.

    For every target and every morphism from the acted-on groupoid that is
    constant on orbits, exactly one morphism from the candidate's codomain
    must compose with the candidate to give it.  The candidate itself must
    be a valid, invariant morphism; that is a precondition, not a finding.
    """
    problems = validate_morphism(candidate)
    if problems:
        raise ValueError(f"{candidate.name}: not a morphism: {problems[0]}")
    if candidate.dom is not act.space:
        raise ValueError(f"{candidate.name}: domain is not the acted-on groupoid")
    for g in act.group.elements:
        for x in act.space.objects:
            if candidate.object_map[act.act_obj[(g, x)]] != \
                    candidate.object_map[x]:
                raise ValueError(f"{candidate.name}: not constant on orbits")
        for a in act.space.arrows:
            if candidate.arrow_map[act.act_arrow[(g, a)]] != \
                    candidate.arrow_map[a]:
                raise ValueError(f"{candidate.name}: not constant on orbits")

    entries = []
    for cod in targets:
        factored = enumerate_morphisms(candidate.cod, cod)
        missing = 0
        extra = 0
        wanted = invariant_morphisms(act, cod)
        for f in wanted:
            hits = 0
            for psi in factored:
                composed_obj = {x: psi.object_map[candidate.object_map[x]]
                                for x in act.space.objects}
                composed_arr = {a: psi.arrow_map[candidate.arrow_map[a]]
                                for a in act.space.arrows}
                if composed_obj == f.object_map and \
                        composed_arr == f.arrow_map:
                    hits += 1
            if hits == 0:
                missing += 1
            elif hits > 1:
                extra += 1
        entries.append((cod.name, len(wanted), missing, extra))
    return UniversalPropertyReport(entries)


def _closure(g, seed):
    """Arrow set closure under identities, inverses, and composition.

    Local to the oracle on purpose; the construction code has its own.
    """
    current = set(g.identity_of.values()) | set(seed)
    changed = True
    while changed:
        changed = False
        for u in list(current):
            if g.inverse_of[u] not in current:
                current.add(g.inverse_of[u])
                changed = True
        for v in list(current):
            for u in list(current):
                if g.target[u] == g.source[v] and \
                        g.compose[(v, u)] not in current:
                    current.add(g.compose[(v, u)])
                    changed = True
    return frozenset(current)


def _is_normal_arrow_set(g, arrow_set):
    for a in g.arrows:
        x = g.source[a]
        for h in arrow_set:
            if g.source[h] == x and g.target[h] == x:
                if g.compose[(g.compose[(a, h)], g.inverse_of[a])] \
                        not in arrow_set:
                    return False
    return True


def wide_subgroupoid_lattice(g):
    """Arrow sets of all wide subgroupoids, by breadth-first generation.

    Starts from the discrete one and grows by a single generator at a time;
    returns a list of frozensets in discovery order.  Capped at
    MAX_LATTICE_ARROWS ambient arrows.
    """
    if len(g.arrows) > MAX_LATTICE_ARROWS:
        raise SizeCapError(
            f"subgroupoid lattice capped at {MAX_LATTICE_ARROWS} arrows")
    base = _closure(g, ())
    seen = {base}
    order = [base]
    queue = [base]
    while queue:
        current = queue.pop(0)
        for a in g.arrows:
            if a in current:
                continue
            grown = _closure(g, current | {a})
            if grown not in seen:
                seen.add(grown)
                order.append(grown)
                queue.append(grown)
    return order


def minimal_normal_closure(g, arrows):
    """Intersection of every normal wide subgroupoid containing the arrows.

    Independent route to the normal closure: enumerate the whole lattice,
    keep the normal members that contain the generating set, intersect.
    """
    wanted = set(arrows)
    candidates = [s for s in wide_subgroupoid_lattice(g)
                  if wanted <= s and _is_normal_arrow_set(g, s)]
    if not candidates:
        raise ValueError(f"{g.name}: no normal subgroupoid contains the set")
    meet = set(candidates[0])
    for s in candidates[1:]:
        meet &= s
    return frozenset(meet)


def group_normal_closure(gt, elements):
    """Elements of the normal closure of a subset, by conjugation saturation."""
    if gt.order > MAX_GROUP_ORDER:
        raise SizeCapError(f"group operations capped at order {MAX_GROUP_ORDER}")
    current = {gt.identity}
    for x in elements:
        current.add(x)
        current.add(gt.inv[x])
    changed = True
    while changed:
        changed = False
        for a in list(current):
            for b in list(current):
                if gt.prod(a, b) not in current:
                    current.add(gt.prod(a, b))
                    changed = True
        for g in gt.elements:
            for n in list(current):
                conj = gt.prod(gt.prod(g, n), gt.inv[g])
                if conj not in current:
                    current.add(conj)
                    changed = True
    return tuple(x for x in gt.elements if x in current)


def finite_quotient(gt, elements, name=None):
    """Quotient of a group by the normal closure of the given elements."""
    members = group_normal_closure(gt, elements)
    return quotient_group(gt, members, name=name or f"{gt.name}/<<S>>")


def _factor(n):
    primes = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


def _invariants_from_orders(orders):
    """Invariant factors of an abelian group from its element orders.

    For each prime p, count the elements of order dividing p^j; the jumps of
    the base-p logarithm give the number of cyclic p-factors of each length.
    Factors are combined largest-with-largest across primes and returned in
    ascending divisibility order.
    """
    n = len(orders)
    parts_by_prime = {}
    for p in _factor(n):
        p_part = sum(1 for o in orders if _is_power_of(o, p))
        logs = [0]
        j = 1
        while True:
            count = sum(1 for o in orders if p ** j % o == 0)
            logs.append(_int_log(count, p))
            if count == p_part:
                break
            j += 1
        m = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        parts = []
        i = 1
        while True:
            width = sum(1 for mj in m if mj >= i)
            if width == 0:
                break
            parts.append(width)
            i += 1
        parts_by_prime[p] = parts
    depth = max((len(v) for v in parts_by_prime.values()), default=0)
    factors = []
    for i in range(depth):
        f = 1
        for p, parts in parts_by_prime.items():
            if i < len(parts):
                f *= p ** parts[i]
        factors.append(f)
    return tuple(reversed(factors))


def _int_log(n, p):
    k = 0
    while n > 1:
        if n % p != 0:
            raise ValueError(f"{n} is not a power of {p}")
        n //= p
        k += 1
    return k


def _is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def abelian_group_invariants(gt):
    """Invariant factors of an abelian group table, by order counting."""
    if gt.order > MAX_GROUP_ORDER:
        raise SizeCapError(f"group operations capped at order {MAX_GROUP_ORDER}")
    if not is_abelian_group(gt):
        raise ValueError(f"{gt.name}: not abelian")
    orders = [_element_order(gt, x) for x in gt.elements]
    return _invariants_from_orders(orders)


def _element_order(gt, x):
    k = 1
    y = x
    while y != gt.identity:
        y = gt.prod(y, x)
        k += 1
    return k


def brute_abelianization(gt):
    """Invariant factors of the abelianization, from scratch.

    The commutator subgroup is the plain product closure of all commutators
    (the set of commutators is closed under conjugation and inversion), the
    cosets are built directly, and coset orders are read off by taking powers
    of a representative.
    """
    if gt.order > MAX_GROUP_ORDER:
        raise SizeCapError(f"group operations capped at order {MAX_GROUP_ORDER}")
    commutators = set()
    for a in gt.elements:
        for b in gt.elements:
            commutators.add(
                gt.prod(gt.prod(a, b), gt.prod(gt.inv[a], gt.inv[b])))
    derived = {gt.identity} | commutators
    changed = True
    while changed:
        changed = False
        for a in list(derived):
            for b in list(derived):
                if gt.prod(a, b) not in derived:
                    derived.add(gt.prod(a, b))
                    changed = True

    coset_of = {}
    reps = []
    for x in gt.elements:
        if x in coset_of:
            continue
        reps.append(x)
        for n in derived:
            coset_of[gt.prod(x, n)] = x
    orders = []
    for x in reps:
        k = 1
        y = x
        while y not in derived:
            y = gt.prod(y, x)
            k += 1
        orders.append(k)
    return _invariants_from_orders(orders)
