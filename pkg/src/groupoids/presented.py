"""Presented groupoids on directed graphs, orbit presentations under a graph
action, vertex group presentations via a spanning tree, and abelian
invariants by integer Smith normal form.

A word is a sequence of signed edge letters in traversal order; an edge e
from x to y contributes the letter (e, +1) traversing x -> y and (e, -1)
traversing y -> x.  Free reduction cancels adjacent inverse letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Word:
    """A path word: letters in traversal order with its endpoints."""

    letters: tuple          # tuple of (edge name, +1 | -1)
    source: str
    target: str

    def __str__(self):
        if not self.letters:
            return f"1_{self.source}"
        return ".".join(e if s > 0 else f"-{e}" for e, s in self.letters)

    def inverse(self):
        return Word(tuple((e, -s) for e, s in reversed(self.letters)),
                    self.target, self.source)


class DirectedGraph:
    def __init__(self, vertices, edges, source, target, name="graph"):
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.source = dict(source)
        self.target = dict(target)
        self.name = name
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"{name}: duplicate vertex names")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError(f"{name}: duplicate edge names")
        for e in self.edges:
            if self.source[e] not in set(self.vertices) or \
                    self.target[e] not in set(self.vertices):
                raise ValueError(f"{name}: edge {e} has an unknown endpoint")

    def word(self, tokens):
        """Build a word from signed edge tokens like ["e1", "-e2"]."""
        letters = []
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            e = tok[1:] if sign < 0 else tok
            if e not in self.source:
                raise ValueError(f"{self.name}: unknown edge {e}")
            letters.append((e, sign))
        if not letters:
            raise ValueError("empty token list needs an explicit basepoint")
        src = self._start(letters[0])
        at = src
        for letter in letters:
            begin, end = self._ends(letter)
            if begin != at:
                raise ValueError(
                    f"{self.name}: letters do not chain at {at}")
            at = end
        return Word(tuple(letters), src, at)

    def _ends(self, letter):
        e, s = letter
        if s > 0:
            return self.source[e], self.target[e]
        return self.target[e], self.source[e]

    def _start(self, letter):
        return self._ends(letter)[0]


def free_reduce(word):
    """Cancel adjacent mutually inverse letters until none remain."""
    stack = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack), word.source, word.target)


class PresentedGroupoid:
    """A directed graph with a set of relator words, each a loop."""

    def __init__(self, graph, relators, name=None):
        self.graph = graph
        self.relators = tuple(relators)
        self.name = name or f"{graph.name}-presented"
        for w in self.relators:
            if w.source != w.target:
                raise ValueError(
                    f"{self.name}: relator {w} is not a loop "
                    f"({w.source} -> {w.target})")


class GroupPresentation:
    """Generators and relator words over a one-vertex graph."""

    def __init__(self, generators, relators, name="presentation"):
        self.generators = tuple(generators)
        self.relators = tuple(relators)   # tuples of (generator, sign)
        self.name = name
        if len(set(self.generators)) != len(self.generators):
            raise ValueError(f"{name}: duplicate generator names")
        gens = set(self.generators)
        for r in self.relators:
            for g, s in r:
                if g not in gens:
                    raise ValueError(f"{name}: relator uses unknown generator {g}")

    def graph(self):
        g = DirectedGraph(["*"], self.generators,
                          {e: "*" for e in self.generators},
                          {e: "*" for e in self.generators},
                          name=self.name)
        return g

    def relator_words(self):
        return [Word(tuple(r), "*", "*") for r in self.relators]


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank and torsion coefficients in ascending divisibility order."""

    free_rank: int
    torsion: tuple

    def __str__(self):
        if not self.torsion:
            return f"rank {self.free_rank}"
        return (f"rank {self.free_rank}, torsion "
                + " ".join(str(d) for d in self.torsion))


class GraphAction:
    """A group acting on a directed graph.

    act_vertex maps (g, v) to a vertex; act_edge maps (g, e) to a signed
    edge token: "f" if g carries e to f preserving direction, "-f" if it
    reverses direction.
    """

    def __init__(self, group, graph, act_vertex, act_edge, name="graph-action",
                 group_groupoid=None):
        self.group = group
        self.graph = graph
        self.act_vertex = dict(act_vertex)
        self.act_edge = dict(act_edge)
        self.name = name
        # one-object groupoid the group was read from, kept for re-emission
        self.group_groupoid = group_groupoid

    def edge_image(self, g, e):
        tok = self.act_edge[(g, e)]
        if tok.startswith("-"):
            return tok[1:], -1
        return tok, 1


def validate_graph_action(act):
    problems = []
    G, gr = act.group, act.graph
    vset, eset = set(gr.vertices), set(gr.edges)
    for g in G.elements:
        for v in gr.vertices:
            if (g, v) not in act.act_vertex:
                problems.append(f"missing vertex image: {g} on {v}")
            elif act.act_vertex[(g, v)] not in vset:
                problems.append(f"vertex image out of range: {g} on {v}")
        for e in gr.edges:
            if (g, e) not in act.act_edge:
                problems.append(f"missing edge image: {g} on {e}")
                continue
            f, s = act.edge_image(g, e)
            if f not in eset:
                problems.append(f"edge image out of range: {g} on {e}")
    if problems:
        return problems
    for v in gr.vertices:
        if act.act_vertex[(G.identity, v)] != v:
            problems.append(f"identity moves vertex {v}")
    for e in gr.edges:
        if act.edge_image(G.identity, e) != (e, 1):
            problems.append(f"identity moves edge {e}")
    for g in G.elements:
        for h in G.elements:
            gh = G.prod(g, h)
            for v in gr.vertices:
                if act.act_vertex[(g, act.act_vertex[(h, v)])] != \
                        act.act_vertex[(gh, v)]:
                    problems.append(
                        f"vertex action not multiplicative: g={g}, h={h}, v={v}")
            for e in gr.edges:
                f1, s1 = act.edge_image(h, e)
                f2, s2 = act.edge_image(g, f1)
                f3, s3 = act.edge_image(gh, e)
                if (f2, s1 * s2) != (f3, s3):
                    problems.append(
                        f"edge action not multiplicative: g={g}, h={h}, e={e}")
    for g in G.elements:
        for e in gr.edges:
            f, s = act.edge_image(g, e)
            ends = (act.act_vertex[(g, gr.source[e])],
                    act.act_vertex[(g, gr.target[e])])
            want = (gr.source[f], gr.target[f]) if s > 0 else \
                (gr.target[f], gr.source[f])
            if ends != want:
                problems.append(f"edge image breaks incidence: {g} on {e}")
    return problems


def vertex_orbit_map(act):
    """Map each vertex to its orbit name "[rep]", rep first in input order."""
    gr = act.graph
    label = {}
    for v in gr.vertices:
        if v in label:
            continue
        block = {act.act_vertex[(g, v)] for g in act.group.elements}
        for w in gr.vertices:
            if w in block:
                label[w] = f"[{v}]"
    return label


def orbit_presentation(act, name=None):
    """Presentation of the quotient graph with relators for inverted orbits.

    Vertices and edges are orbit classes named "[rep]".  An edge orbit is
    inverted when some group element carries its representative to a
    reversed copy of an edge in the same orbit; such an orbit class E gets
    the relator E.E (the class squares to an identity).
    """
    problems = validate_graph_action(act)
    if problems:
        raise ValueError(f"{act.name}: invalid graph action: {problems[0]}")
    gr = act.graph
    vlabel = vertex_orbit_map(act)
    vclasses = []
    for v in gr.vertices:
        if vlabel[v] == f"[{v}]" and vlabel[v] not in vclasses:
            vclasses.append(vlabel[v])

    elabel = {}
    eclasses = []
    inverted = []
    for e in gr.edges:
        if e in elabel:
            continue
        signed = {(e, 1)}
        changed = True
        while changed:
            changed = False
            for (f, s) in list(signed):
                for g in act.group.elements:
                    f2, s2 = act.edge_image(g, f)
                    if (f2, s * s2) not in signed:
                        signed.add((f2, s * s2))
                        changed = True
        label = f"[{e}]"
        for (f, _s) in signed:
            elabel.setdefault(f, label)
        eclasses.append(label)
        if (e, -1) in signed:
            inverted.append(label)

    source = {}
    target = {}
    for label in eclasses:
        rep = label[1:-1]
        source[label] = vlabel[gr.source[rep]]
        target[label] = vlabel[gr.target[rep]]
    qgraph = DirectedGraph(vclasses, eclasses, source, target,
                           name=name or f"{gr.name}-orbits")
    relators = []
    for label in inverted:
        # an inverted class must be a loop class in the quotient
        assert source[label] == target[label]
        relators.append(Word(((label, 1), (label, 1)),
                             source[label], source[label]))
    return PresentedGroupoid(qgraph, relators,
                             name=name or f"{gr.name}-orbits"), elabel, vlabel


def spanning_tree(graph, root=None):
    """Breadth-first spanning tree edges in input order.

    Returns (tree edge set, word_to_root) where word_to_root[v] is the word
    along tree edges from v to the root.  Raises if the graph is not
    connected (lists the unreachable vertices).
    """
    if not graph.vertices:
        raise ValueError(f"{graph.name}: no vertices")
    root = root or graph.vertices[0]
    incident = {v: [] for v in graph.vertices}
    for e in graph.edges:
        incident[graph.source[e]].append((e, 1))
        incident[graph.target[e]].append((e, -1))
    word_to_root = {root: Word((), root, root)}
    tree = []
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for (e, s) in incident[v]:
                w = graph.target[e] if s > 0 else graph.source[e]
                if w in word_to_root:
                    continue
                tree.append(e)
                # traversing e from w toward v has sign -s
                word_to_root[w] = Word(((e, -s),) + word_to_root[v].letters,
                                       w, root)
                nxt.append(w)
        frontier = nxt
    missing = [v for v in graph.vertices if v not in word_to_root]
    if missing:
        raise ValueError(
            f"{graph.name}: not connected; unreachable from {root}: "
            + " ".join(missing))
    return tree, word_to_root


def vertex_group_presentation(pres, vertex, name=None):
    """Presentation of the vertex group of a presented groupoid.

    Generators are the non-tree edges of the vertex's component; each
    relator in that component is rewritten around the tree (conjugated to
    the basepoint, tree letters dropped) and freely reduced.  Relators in
    other components are skipped.
    """
    gr = pres.graph
    if vertex not in set(gr.vertices):
        raise ValueError(f"{gr.name}: unknown vertex {vertex}")
    component = _component_of(gr, vertex)
    sub_edges = [e for e in gr.edges
                 if gr.source[e] in component]
    sub = DirectedGraph([v for v in gr.vertices if v in component],
                        sub_edges, {e: gr.source[e] for e in sub_edges},
                        {e: gr.target[e] for e in sub_edges},
                        name=f"{gr.name}@{vertex}")
    tree, to_root = spanning_tree(sub, root=vertex)
    tree_set = set(tree)
    generators = [e for e in sub_edges if e not in tree_set]
    relators = []
    for w in pres.relators:
        if w.source not in component:
            continue
        # conjugate to the basepoint: walk root -> w.source, the relator,
        # then w.source -> root, all in traversal order
        path = (to_root[w.source].inverse().letters
                + w.letters
                + to_root[w.source].letters)
        dropped = tuple(l for l in path if l[0] not in tree_set)
        reduced = free_reduce(Word(dropped, vertex, vertex))
        if reduced.letters:
            relators.append(tuple(reduced.letters))
    return GroupPresentation(generators, relators,
                             name=name or f"{pres.name}@{vertex}")


def _component_of(graph, vertex):
    reach = {vertex}
    frontier = [vertex]
    incident = {v: [] for v in graph.vertices}
    for e in graph.edges:
        incident[graph.source[e]].append(graph.target[e])
        incident[graph.target[e]].append(graph.source[e])
    while frontier:
        nxt = []
        for v in frontier:
            for w in incident[v]:
                if w not in reach:
                    reach.add(w)
                    nxt.append(w)
        frontier = nxt
    return reach


def direct_product_presentation(p1, p2, name=None):
    """Presentation of a direct product: disjoint generators suffixed _1 and
    _2, both relator sets, plus commutators of cross pairs."""
    gens = [f"{g}_1" for g in p1.generators] + \
           [f"{g}_2" for g in p2.generators]
    relators = []
    for r in p1.relators:
        relators.append(tuple((f"{g}_1", s) for g, s in r))
    for r in p2.relators:
        relators.append(tuple((f"{g}_2", s) for g, s in r))
    for a in p1.generators:
        for b in p2.generators:
            relators.append(((f"{a}_1", 1), (f"{b}_2", 1),
                             (f"{a}_1", -1), (f"{b}_2", -1)))
    return GroupPresentation(gens, relators,
                             name=name or f"{p1.name}x{p2.name}")


def symmetric_square_presentation(pres, name=None):
    """Presentation of the symmetric square: the direct product of two copies
    with the swapped coordinates identified (g_1 = g_2 for every generator)."""
    square = direct_product_presentation(pres, pres)
    relators = list(square.relators)
    for g in pres.generators:
        relators.append(((f"{g}_1", 1), (f"{g}_2", -1)))
    return GroupPresentation(square.generators, relators,
                             name=name or f"{pres.name}-sym2")


def presentation_relation_matrix(pres):
    """Exponent-sum matrix of the relators, one row per relator."""
    index = {g: i for i, g in enumerate(pres.generators)}
    rows = []
    for r in pres.relators:
        row = [0] * len(pres.generators)
        for g, s in r:
            row[index[g]] += s
        rows.append(row)
    return rows


def smith_normal_form(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the diagonal entries (nonnegative, each dividing the next,
    zeros last).  Exact integer arithmetic throughout.
    """
    m = [list(row) for row in matrix]
    if not m or not m[0]:
        return []
    rows, cols = len(m), len(m[0])
    diag = []
    top = 0
    while top < rows and top < cols:
        # find the nonzero pivot of least absolute value
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] != 0 and (best is None or
                                     abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        dirty = True
        while dirty:
            dirty = False
            for i in range(top + 1, rows):
                if m[i][top] != 0:
                    q = m[i][top] // m[top][top]
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top] != 0:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            for j in range(top + 1, cols):
                if m[top][j] != 0:
                    q = m[top][j] // m[top][top]
                    for row in m:
                        row[j] -= q * row[top]
                    if m[top][j] != 0:
                        for row in m:
                            row[top], row[j] = row[j], row[top]
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                culprit = None
                for i in range(top + 1, rows):
                    for j in range(top + 1, cols):
                        if m[i][j] % m[top][top] != 0:
                            culprit = i
                            break
                    if culprit is not None:
                        break
                if culprit is not None:
                    for j in range(top, cols):
                        m[top][j] += m[culprit][j]
                    dirty = True
        diag.append(abs(m[top][top]))
        top += 1
    # normalize the divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g
    return diag


def abelian_invariants(pres):
    """Abelian invariants of a presented group from its relation matrix."""
    matrix = presentation_relation_matrix(pres)
    n = len(pres.generators)
    if not matrix:
        return AbelianInvariants(n, ())
    diag = smith_normal_form(matrix)
    torsion = tuple(d for d in diag if d > 1)
    killed = sum(1 for d in diag if d != 0)
    return AbelianInvariants(n - killed, torsion)


def describe_vertex_group(pres, vertex):
    """One-line summary of a vertex group: trivial, free, or abelianized."""
    vp = vertex_group_presentation(pres, vertex)
    if not vp.generators:
        return "trivial"
    if not vp.relators:
        return f"free of rank {len(vp.generators)}"
    inv = abelian_invariants(vp)
    return (f"{len(vp.generators)} generators, {len(vp.relators)} relators, "
            f"abelianized {inv}")
