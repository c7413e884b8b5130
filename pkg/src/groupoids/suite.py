"""Named verification checks over the built-in corpora.

Each check cross-checks a construction against an independent computation
and returns a CheckResult.  The CLI verify verb runs them all, and the
acceptance tests run them one criterion at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import corpus, oracle
from .actions import is_free_action, trivial_action, validate_action
from .catalog import (alternating_group, cyclic_group, dihedral_group,
                      group_isomorphic, groupoid_from_group, quaternion_group,
                      symmetric_group, tree_groupoid, trivial_group)
from .constructions import (normal_closure, orbit_groupoid,
                            orbit_kernel_generators, quotient_groupoid,
                            regular_cover_orbit_check,
                            restrict_orbit_full_subgroupoid, semidirect_product,
                            tree_orbit_group)
from .core import (GroupoidMorphism, components, direct_product_group,
                   disjoint_union, is_connected, is_covering, is_discrete,
                   is_quotient_morphism, kernel, object_group, quotient_group,
                   search_isomorphism, validate_groupoid, validate_morphism)
from .fileformat import parse_text, render_entities
from .oracle import MAX_LATTICE_ARROWS, MAX_SOURCE_ARROWS
from .presented import (GroupPresentation, abelian_invariants,
                        describe_vertex_group, orbit_presentation,
                        symmetric_square_presentation,
                        vertex_group_presentation)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def _actions(max_arrows):
    acts = [act for _name, act in corpus.named_actions()]
    acts += corpus.random_actions()
    if max_arrows is not None:
        acts = [a for a in acts if len(a.space.arrows) <= max_arrows]
    return acts


def _orbit_actions(max_arrows):
    cap = MAX_SOURCE_ARROWS if max_arrows is None \
        else min(max_arrows, MAX_SOURCE_ARROWS)
    return [a for a in _actions(None) + corpus.random_orbit_instances()
            if len(a.space.arrows) <= cap]


def check_corpus_valid(max_arrows=None):
    count = 0
    for act in _actions(max_arrows):
        problems = validate_groupoid(act.space)
        if problems:
            return CheckResult("corpus-valid", False,
                               f"{act.space.name}: {problems[0]}")
        problems = validate_action(act)
        if problems:
            return CheckResult("corpus-valid", False,
                               f"{act.name}: {problems[0]}")
        count += 1
    for (k, _gens) in corpus.random_quotient_instances():
        problems = validate_groupoid(k)
        if problems:
            return CheckResult("corpus-valid", False,
                               f"{k.name}: {problems[0]}")
        count += 1
    return CheckResult("corpus-valid", True,
                       f"{count} corpus instances validate")


def check_semidirect_laws(max_arrows=None):
    checked = 0
    validated = 0
    for act in _actions(max_arrows):
        sp, G = act.space, act.group
        sd = semidirect_product(act)
        e = G.identity
        for g in G.elements:
            for a in sp.arrows:
                y = sp.target[a]
                left = sd.groupoid.compose[(
                    sd.name_of[(sp.identity_of[act.act_obj[(g, y)]], g)],
                    sd.name_of[(a, e)])]
                if left != sd.name_of[(act.act_arrow[(g, a)], g)]:
                    return CheckResult(
                        "semidirect-laws", False,
                        f"{act.name}: pairing an identity pair with ({a}, 1) "
                        f"is not the twisted arrow")
                x = sp.source[a]
                right = sd.groupoid.compose[(
                    sd.name_of[(a, e)],
                    sd.name_of[(sp.identity_of[x], g)])]
                if right != sd.name_of[(a, g)]:
                    return CheckResult(
                        "semidirect-laws", False,
                        f"{act.name}: ({a}, 1) + (identity, {g}) "
                        f"is not ({a}, {g})")
        if len(sd.groupoid.arrows) <= 48:
            problems = validate_groupoid(sd.groupoid)
            if problems:
                return CheckResult("semidirect-laws", False,
                                   f"{act.name}: {problems[0]}")
            validated += 1
        checked += 1
    return CheckResult(
        "semidirect-laws", True,
        f"{checked} semidirect products obey both pairing laws; "
        f"{validated} fully validated")


def _projection_iso_on_object_groups(sd):
    G = sd.action.group
    for x in sd.groupoid.objects:
        loops = sd.groupoid.loops(x)
        if len(loops) != G.order:
            return False
        if len({sd.projection.arrow_map[u] for u in loops}) != len(loops):
            return False
    return True


def check_trichotomy(max_arrows=None):
    branches = {"quotient": 0, "covering": 0, "object-iso": 0}
    for act in _actions(max_arrows):
        sp = act.space
        sd = semidirect_product(act)
        q = sd.projection
        if is_quotient_morphism(q) != is_connected(sp):
            return CheckResult(
                "projection-trichotomy", False,
                f"{act.name}: quotient-morphism test disagrees with "
                f"connectedness")
        if is_covering(q) != is_discrete(sp):
            return CheckResult(
                "projection-trichotomy", False,
                f"{act.name}: covering test disagrees with discreteness")
        trivial_groups = all(len(sp.loops(x)) == 1 for x in sp.objects)
        block_of = {}
        for i, block in enumerate(components(sp)):
            for x in block:
                block_of[x] = i
        fixes_components = all(
            block_of[act.act_obj[(g, x)]] == block_of[x]
            for g in act.group.elements for x in sp.objects)
        if _projection_iso_on_object_groups(sd) != \
                (trivial_groups and fixes_components):
            return CheckResult(
                "projection-trichotomy", False,
                f"{act.name}: object-group test disagrees with the "
                f"trivial-groups and component criterion")
        if is_connected(sp):
            branches["quotient"] += 1
        if is_discrete(sp):
            branches["covering"] += 1
        if trivial_groups and fixes_components:
            branches["object-iso"] += 1
    if min(branches.values()) == 0:
        return CheckResult("projection-trichotomy", False,
                           f"corpus misses a branch: {branches}")
    return CheckResult(
        "projection-trichotomy", True,
        f"quotient {branches['quotient']}, covering {branches['covering']}, "
        f"object-iso {branches['object-iso']} instances agree")


def check_first_isomorphism(max_arrows=None):
    checked = 0
    for (k, gens) in corpus.random_quotient_instances():
        if max_arrows is not None and len(k.arrows) > max_arrows:
            continue
        n = normal_closure(k, gens)
        quot = quotient_groupoid(k, n, name=f"{k.name}-mod")
        f = quot.morphism
        if set(kernel(f).arrows) != set(n.arrows):
            return CheckResult("first-isomorphism", False,
                               f"{k.name}: kernel differs from the "
                               f"normal closure")
        by_st = {}
        for u in n.arrows:
            by_st.setdefault((k.source[u], k.target[u]), []).append(u)
        for a in k.arrows:
            for b in k.arrows:
                same = f.arrow_map[a] == f.arrow_map[b]
                related = any(
                    k.compose[(m, k.compose[(a, nn)])] == b
                    for nn in by_st.get((k.source[b], k.source[a]), ())
                    for m in by_st.get((k.target[a], k.target[b]), ()))
                if same != related:
                    return CheckResult(
                        "first-isomorphism", False,
                        f"{k.name}: images of {a} and {b} "
                        f"{'collide' if same else 'differ'} but the arrows "
                        f"are {'not ' if not related else ''}related by the "
                        f"kernel")
        for x in k.objects:
            small = quotient_group(object_group(k, x), n.at(x))
            big = object_group(quot.groupoid, quot.object_class_of[x])
            if not group_isomorphic(small, big):
                return CheckResult(
                    "first-isomorphism", False,
                    f"{k.name}: object group at {x} does not match the "
                    f"quotient of object groups")
        checked += 1
    return CheckResult("first-isomorphism", True,
                       f"{checked} quotients factor correctly")


def check_normal_closure_minimal(max_arrows=None):
    instances = []
    for (k, gens) in corpus.random_quotient_instances():
        instances.append((k, gens))
    for name in ("tree-swap", "point-swap", "zmod4-inversion",
                 "trivial-on-z2", "path-reflection-fixed"):
        act = dict(corpus.named_actions())[name]
        sd = semidirect_product(act)
        instances.append((sd.groupoid, sd.groupoid.arrows[-2:]))
    checked = 0
    for (k, gens) in instances:
        if len(k.arrows) > MAX_LATTICE_ARROWS:
            continue
        if max_arrows is not None and len(k.arrows) > max_arrows:
            continue
        built = set(normal_closure(k, gens).arrows)
        brute = set(oracle.minimal_normal_closure(k, gens))
        if built != brute:
            return CheckResult(
                "normal-closure-minimal", False,
                f"{k.name}: closure has {len(built)} arrows but the lattice "
                f"minimum has {len(brute)}")
        checked += 1
    return CheckResult("normal-closure-minimal", True,
                       f"{checked} closures equal the lattice minimum")


def check_orbit_kernel(max_arrows=None):
    covering = 0
    quotient = 0
    checked = 0
    for act in _orbit_actions(max_arrows):
        orb = orbit_groupoid(act)
        gens = orbit_kernel_generators(act, orbit=orb)
        for u in gens:
            if not orb.groupoid.is_identity_arrow(orb.morphism.arrow_map[u]):
                return CheckResult(
                    "orbit-kernel", False,
                    f"{act.name}: generator {u} survives in the orbit "
                    f"groupoid")
        if is_free_action(act):
            if not is_covering(orb.morphism):
                return CheckResult(
                    "orbit-kernel", False,
                    f"{act.name}: free action but the orbit morphism is "
                    f"not a covering")
            covering += 1
        fixed_object = any(
            all(act.act_obj[(g, x)] == x for g in act.group.elements)
            for x in act.space.objects)
        if fixed_object and is_connected(act.space):
            if not is_quotient_morphism(orb.morphism):
                return CheckResult(
                    "orbit-kernel", False,
                    f"{act.name}: fixed object on a connected groupoid but "
                    f"the orbit morphism is not a quotient morphism")
            quotient += 1
        checked += 1
    if covering == 0 or quotient == 0:
        return CheckResult("orbit-kernel", False,
                           f"corpus misses a branch: covering {covering}, "
                           f"quotient {quotient}")
    return CheckResult(
        "orbit-kernel", True,
        f"{checked} orbit morphisms kill exactly the stabilizer "
        f"differences; {covering} coverings, {quotient} quotient morphisms")


def check_universal_property(targets=None, max_arrows=None):
    targets = targets if targets is not None else \
        corpus.standard_target_family()
    checked = 0
    for act in _orbit_actions(max_arrows):
        orb = orbit_groupoid(act)
        report = oracle.check_universal_property(act, orb.morphism, targets)
        if not report.ok:
            bad = [f"target {t}: {m} without factorization, {e} with several"
                   for (t, _c, m, e) in report.entries if m or e]
            return CheckResult("orbit-universal", False,
                               f"{act.name}: {bad[0]}")
        checked += 1

    # the negative controls need targets rich enough to expose the planted
    # defects (a two-object target for the padding), so they do not follow
    # a user-supplied target list
    control_targets = corpus.standard_target_family()

    # negative control 1: collapsing everything loses factorizations
    z2_space = groupoid_from_group(cyclic_group(2), name="up-z2")
    act = trivial_action(trivial_group(), z2_space, name="up-trivial-act")
    point = groupoid_from_group(trivial_group(), name="up-point")
    collapse = GroupoidMorphism(
        z2_space, point, {z2_space.objects[0]: point.objects[0]},
        {u: point.arrows[0] for u in z2_space.arrows}, name="collapse")
    report = oracle.check_universal_property(act, collapse, control_targets)
    if report.ok:
        return CheckResult("orbit-universal", False,
                           "collapsing candidate passed; the check cannot "
                           "detect missing factorizations")

    # negative control 2: a spare object admits several factorizations
    orb = orbit_groupoid(act)
    spare = disjoint_union(orb.groupoid,
                           groupoid_from_group(trivial_group(),
                                               object_name="spare",
                                               name="up-spare"),
                           name="up-padded")
    padded = GroupoidMorphism(
        z2_space, spare,
        dict(orb.morphism.object_map), dict(orb.morphism.arrow_map),
        name="padded")
    assert validate_morphism(padded) == []
    report = oracle.check_universal_property(act, padded, control_targets)
    if report.ok:
        return CheckResult("orbit-universal", False,
                           "padded candidate passed; the check cannot "
                           "detect non-unique factorizations")
    return CheckResult(
        "orbit-universal", True,
        f"{checked} orbit morphisms factor invariant morphisms uniquely; "
        f"both negative controls fail as they should")


def check_tree_orbit_groups(max_arrows=None):
    expected = {
        "tree-swap": cyclic_group(2),
        "path-reflection": cyclic_group(2),
        "path-reflection-fixed": trivial_group(),
        "threefold-rotation": cyclic_group(3),
        "symmetric-on-tree3": trivial_group(),
    }
    named = dict(corpus.named_actions())
    for name, want in expected.items():
        got = tree_orbit_group(named[name])
        if not group_isomorphic(got, want):
            return CheckResult("tree-orbit-groups", False,
                               f"{name}: orbit object group is not "
                               f"{want.name}")
    return CheckResult("tree-orbit-groups", True,
                       f"{len(expected)} tree actions give the expected "
                       f"orbit object groups")


def check_zmod4_inversion(max_arrows=None):
    act = dict(corpus.named_actions())["zmod4-inversion"]
    orb = orbit_groupoid(act)
    group = object_group(orb.groupoid, orb.groupoid.objects[0])
    if not group_isomorphic(group, cyclic_group(2)):
        return CheckResult("zmod4-inversion", False,
                           "orbit object group is not Z2")
    ker = kernel(orb.morphism)
    space = act.space
    ident = space.identity_of[space.objects[0]]
    if set(ker.arrows) != {ident, "2"}:
        return CheckResult("zmod4-inversion", False,
                           f"kernel is {ker.arrows}, expected the identity "
                           f"and 2")
    if not is_quotient_morphism(orb.morphism) or is_covering(orb.morphism):
        return CheckResult("zmod4-inversion", False,
                           "orbit morphism should be a quotient morphism "
                           "and not a covering")
    return CheckResult("zmod4-inversion", True,
                       "inverting the 4-element cyclic group halves it: "
                       "orbit object group Z2, kernel {0, 2}")


def check_circle_reflection(max_arrows=None):
    acts = dict(corpus.named_graph_actions())
    pres, _elabel, _vlabel = orbit_presentation(acts["circle-reflection"])
    if tuple(pres.graph.vertices) != ("[1]", "[i]", "[-1]") or \
            tuple(pres.graph.edges) != ("[e1]", "[e2]"):
        return CheckResult("circle-reflection", False,
                           f"quotient graph is {pres.graph.vertices} / "
                           f"{pres.graph.edges}")
    if pres.relators:
        return CheckResult("circle-reflection", False,
                           "unexpected inverted edge orbits")
    for v in pres.graph.vertices:
        if describe_vertex_group(pres, v) != "trivial":
            return CheckResult("circle-reflection", False,
                               f"vertex group at orbit({v[1:-1]}) is not "
                               f"trivial")
    return CheckResult("circle-reflection", True,
                       "reflecting the circle leaves a segment: vertex "
                       "group at orbit(1): trivial")


def check_graph_orbit_presentations(max_arrows=None):
    acts = dict(corpus.named_graph_actions())

    pres, _e, _v = orbit_presentation(acts["antipodal"])
    if len(pres.graph.vertices) != 1 or len(pres.graph.edges) != 1 or \
            pres.relators:
        return CheckResult("graph-orbit-presentations", False,
                           "antipodal quotient is not a single loop")
    if describe_vertex_group(pres, pres.graph.vertices[0]) != \
            "free of rank 1":
        return CheckResult("graph-orbit-presentations", False,
                           "antipodal vertex group is not free of rank 1")

    pres, _e, _v = orbit_presentation(acts["edge-inverting-reflection"])
    if len(pres.graph.vertices) != 1 or len(pres.graph.edges) != 2 or \
            len(pres.relators) != 2:
        return CheckResult("graph-orbit-presentations", False,
                           "edge-inverting quotient should be two squared "
                           "loops")
    vp = vertex_group_presentation(pres, pres.graph.vertices[0])
    inv = abelian_invariants(vp)
    if inv.free_rank != 0 or inv.torsion != (2, 2):
        return CheckResult("graph-orbit-presentations", False,
                           f"edge-inverting invariants are {inv}")
    return CheckResult("graph-orbit-presentations", True,
                       "antipodal map gives a free loop; edge-inverting "
                       "reflection gives two squared loops")


_FROZEN_ABELIANIZATIONS = (
    ("Z4", cyclic_group(4), (4,),
     GroupPresentation(("a",), ((("a", 1),) * 4,), name="z4-pres")),
    ("S3", symmetric_group(3), (2,),
     GroupPresentation(("a", "b"),
                       ((("a", 1),) * 3, (("b", 1),) * 2,
                        (("a", 1), ("b", 1), ("a", 1), ("b", 1))),
                       name="s3-pres")),
    ("D4", dihedral_group(4), (2, 2),
     GroupPresentation(("r", "s"),
                       ((("r", 1),) * 4, (("s", 1),) * 2,
                        (("r", 1), ("s", 1), ("r", 1), ("s", 1))),
                       name="d4-pres")),
    ("Q8", quaternion_group(), (2, 2),
     GroupPresentation(("i", "j"),
                       ((("i", 1),) * 4,
                        (("i", 1), ("i", 1), ("j", -1), ("j", -1)),
                        (("i", 1), ("j", 1), ("i", 1), ("j", -1))),
                       name="q8-pres")),
    ("A4", alternating_group(4), (3,),
     GroupPresentation(("a", "b"),
                       ((("a", 1),) * 3, (("b", 1),) * 2,
                        (("a", 1), ("b", 1)) * 3),
                       name="a4-pres")),
)


def check_abelianization(max_arrows=None):
    for (label, gt, frozen, pres) in _FROZEN_ABELIANIZATIONS:
        brute = oracle.brute_abelianization(gt)
        if brute != frozen:
            return CheckResult("abelianization", False,
                               f"{label}: counting route gives {brute}, "
                               f"expected {frozen}")
        square = direct_product_group(gt, gt, name=f"{gt.name}^2")
        diagonal = [f"({h},{gt.inv[h]})" for h in gt.elements]
        folded = oracle.finite_quotient(square, diagonal)
        via_square = oracle.abelian_group_invariants(folded)
        if via_square != frozen:
            return CheckResult("abelianization", False,
                               f"{label}: squared-group route gives "
                               f"{via_square}, expected {frozen}")
        inv = abelian_invariants(pres)
        if inv.free_rank != 0 or inv.torsion != frozen:
            return CheckResult("abelianization", False,
                               f"{label}: presentation route gives {inv}, "
                               f"expected {frozen}")
    return CheckResult(
        "abelianization", True,
        "commutator, squared-group, and presentation routes agree on "
        + ", ".join(label for (label, _g, _f, _p) in _FROZEN_ABELIANIZATIONS))


_SQUARE_CASES = (
    ("free-1", GroupPresentation(("a",), ())),
    ("free-2", GroupPresentation(("a", "b"), ())),
    ("free-3", GroupPresentation(("a", "b", "c"), ())),
    ("free-4", GroupPresentation(("a", "b", "c", "d"), ())),
    ("cyclic-3", GroupPresentation(("a",), ((("a", 1),) * 3,))),
    ("torus", GroupPresentation(
        ("a", "b"), ((("a", 1), ("b", 1), ("a", -1), ("b", -1)),))),
    ("klein-bottle", GroupPresentation(
        ("a", "b"), ((("a", 1), ("b", 1), ("a", 1), ("b", -1)),))),
    ("sym-3", GroupPresentation(
        ("a", "b"), ((("a", 1),) * 3, (("b", 1),) * 2,
                     (("a", 1), ("b", 1), ("a", 1), ("b", 1))))),
)


def check_symmetric_square(max_arrows=None):
    for (label, pres) in _SQUARE_CASES:
        want = abelian_invariants(pres)
        got = abelian_invariants(symmetric_square_presentation(pres))
        if want != got:
            return CheckResult("symmetric-square", False,
                               f"{label}: square abelianizes to {got}, "
                               f"the original to {want}")
    brute = oracle.brute_abelianization(symmetric_group(3))
    square = abelian_invariants(
        symmetric_square_presentation(dict(_SQUARE_CASES)["sym-3"]))
    if square.free_rank != 0 or square.torsion != brute:
        return CheckResult("symmetric-square", False,
                           "symmetric square of the S3 presentation "
                           "disagrees with the brute abelianization")
    return CheckResult(
        "symmetric-square", True,
        f"{len(_SQUARE_CASES)} symmetric squares match the abelianization")


def _folding_cover():
    seg = tree_groupoid(("x", "y"), name="seg")
    z2 = groupoid_from_group(cyclic_group(2), name="z2-gpd")
    p = GroupoidMorphism(
        seg, z2, {"x": "pt", "y": "pt"},
        {"id_x": "id_pt", "id_y": "id_pt", "x>y": "1", "y>x": "1"},
        name="fold")
    deck = corpus._object_action(cyclic_group(2), seg,
                                 {"1": {"x": "y", "y": "x"}},
                                 name="fold-deck")
    return p, deck


def _rotation_cover():
    square = tree_groupoid(("w0", "w1", "w2", "w3"), name="square")
    z4 = cyclic_group(4)
    z4_gpd = groupoid_from_group(z4, name="z4-gpd")

    def image(a):
        if square.is_identity_arrow(a):
            return "id_pt"
        x, y = a.split(">")
        k = (int(y[1]) - int(x[1])) % 4
        return "id_pt" if k == 0 else str(k)

    p = GroupoidMorphism(
        square, z4_gpd, {x: "pt" for x in square.objects},
        {a: image(a) for a in square.arrows}, name="wind")
    moves = {}
    for g in z4.elements:
        if g == z4.identity:
            continue
        moves[g] = {f"w{i}": f"w{(i + int(g)) % 4}" for i in range(4)}
    deck = corpus._object_action(z4, square, moves, name="wind-deck")
    return p, deck


def check_regular_covers(max_arrows=None):
    for (p, deck) in (_folding_cover(), _rotation_cover()):
        report = regular_cover_orbit_check(p, deck)
        if not report.ok:
            return CheckResult("regular-covers", False,
                               f"{p.name}: {report.details[0]}")
    p, _deck = _folding_cover()
    lazy = trivial_action(cyclic_group(2), p.dom, name="lazy-deck")
    try:
        regular_cover_orbit_check(p, lazy)
    except ValueError:
        pass
    else:
        return CheckResult("regular-covers", False,
                           "a non-free deck action was accepted")
    return CheckResult("regular-covers", True,
                       "folding and winding covers are the orbit morphisms "
                       "of their deck actions; a non-free deck is rejected")


def check_restrict_orbit(max_arrows=None):
    act = dict(corpus.named_actions())["path-reflection-fixed"]
    good = restrict_orbit_full_subgroupoid(act, ("b",))
    if not (good.hypothesis_ok and good.embedding_ok):
        return CheckResult("restrict-orbit", False,
                           f"restriction to the fixed object failed: "
                           f"{(good.hypothesis_failures or good.details)[0]}")
    bad = restrict_orbit_full_subgroupoid(act, ("a", "c"))
    if bad.hypothesis_ok:
        return CheckResult("restrict-orbit", False,
                           "object set missing a fixed component passed the "
                           "hypothesis")
    if bad.embedding_ok:
        return CheckResult("restrict-orbit", False,
                           "embedding succeeded although the hypothesis "
                           "fails; the control case is broken")
    try:
        restrict_orbit_full_subgroupoid(act, ("a",))
    except ValueError:
        pass
    else:
        return CheckResult("restrict-orbit", False,
                           "a non-invariant object set was accepted")
    full = restrict_orbit_full_subgroupoid(act, ("a", "b", "c"))
    if not (full.hypothesis_ok and full.embedding_ok):
        return CheckResult("restrict-orbit", False,
                           "restricting to everything failed")
    return CheckResult("restrict-orbit", True,
                       "invariant subsets embed exactly when they meet "
                       "every fixed component")


def _data_files():
    root = resources.files("groupoids").joinpath("data")
    return sorted(entry.name for entry in root.iterdir()
                  if entry.name.endswith((".gpd", ".act", ".pres")))


def check_round_trip(max_arrows=None):
    root = resources.files("groupoids").joinpath("data")
    names = _data_files()
    for fname in names:
        text = root.joinpath(fname).read_text(encoding="utf-8")
        parsed = parse_text(text, path=fname)
        emitted = render_entities(
            [parsed.entities[n] for n in parsed.order])
        reparsed = parse_text(emitted, path=f"{fname}<emitted>")
        again = render_entities(
            [reparsed.entities[n] for n in reparsed.order])
        if emitted != again:
            return CheckResult("round-trip", False,
                               f"{fname}: emission is not byte-stable")
        if reparsed.order != parsed.order:
            return CheckResult("round-trip", False,
                               f"{fname}: entity list changed on re-parse")
    act = dict(corpus.named_actions())["zmod4-inversion"]
    orb = orbit_groupoid(act)
    emitted = render_entities([orb.groupoid])
    reparsed = parse_text(emitted, path="<orbit>")
    back = reparsed.entities[reparsed.order[0]]
    if search_isomorphism(orb.groupoid, back) is None:
        return CheckResult("round-trip", False,
                           "emitted orbit groupoid is not isomorphic to "
                           "the original")
    return CheckResult("round-trip", True,
                       f"{len(names)} data files and one computed orbit "
                       f"groupoid survive the round trip")


ALL_CHECKS = (
    check_corpus_valid,
    check_semidirect_laws,
    check_trichotomy,
    check_first_isomorphism,
    check_normal_closure_minimal,
    check_orbit_kernel,
    check_universal_property,
    check_tree_orbit_groups,
    check_zmod4_inversion,
    check_circle_reflection,
    check_graph_orbit_presentations,
    check_abelianization,
    check_symmetric_square,
    check_regular_covers,
    check_restrict_orbit,
    check_round_trip,
)


def run_all(targets=None, max_arrows=None):
    results = []
    for check in ALL_CHECKS:
        if check is check_universal_property:
            results.append(check(targets=targets, max_arrows=max_arrows))
        else:
            results.append(check(max_arrows=max_arrows))
    return results
