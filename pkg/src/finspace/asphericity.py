"""Asphericity certificates for 2-complexes and group presentations.

Both tests look for loops whose image in the fundamental group has infinite
order, certified through a nonzero free part in the abelianization.
"""
from collections import Counter, deque
from dataclasses import dataclass, field

from .cellular import cellular_structure
from .edgepath import EdgePath, _bfs_tree, path_word, pi1_presentation, tree_paths
from .errors import EpsilonNotUnit, NotHeight2
from .groups import (GroupPresentation, abelianization, exponent_sums, format_word,
                     has_infinite_order_abelian_certificate, inverse_word, reduce_word)
from .poset import Poset, Subdiagram


@dataclass
class ColoredDigraph:
    vertices: list
    edges: list  # (source, target, color word); loops and parallel edges allowed

    def out_degree(self, v):
        return sum(1 for s, _, _ in self.edges if s == v)

    def in_degree(self, v):
        return sum(1 for _, t, _ in self.edges if t == v)

    def incident(self, v):
        """(edge id, other end, direction) for every end of an edge at v."""
        out = []
        for k, (s, t, _) in enumerate(self.edges):
            if s == v:
                out.append((k, t, 1))
            if t == v and s != v:
                out.append((k, s, -1))
        return out

    def components(self):
        seen = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp = [v]
            seen.add(v)
            queue = deque([v])
            while queue:
                u = queue.popleft()
                for _, w, _ in self.incident(u):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(comp)
        return comps

    def weight(self, cycle):
        """Product of colors along [(edge id, +1 | -1), ...]."""
        out = ()
        for k, d in cycle:
            col = self.edges[k][2]
            out = reduce_word(out + (col if d > 0 else inverse_word(col)))
        return out


def build_DP(P):
    """Digraph on the generators that occur exactly twice in the relators.

    Reading each relator cyclically, every occurrence of a vertex letter is
    joined to the next occurrence of a vertex letter.  The color is the word
    strictly between them, prefixed by the first letter when it has exponent
    -1 and followed by the second when it has exponent +1.
    """
    counts = Counter(g for r in P.relators for g, _ in r)
    verts = [g for g in P.generators if counts[g] == 2]
    vset = set(verts)
    edges = []
    for r in P.relators:
        t = len(r)
        occ = [i for i, (g, _) in enumerate(r) if g in vset]
        for pos, i in enumerate(occ):
            j = occ[(pos + 1) % len(occ)]
            m = (j - i) % t or t
            g, e = r[i]
            h, f = r[j]
            color = []
            if e == -1:
                color.append((g, -1))
            color += [r[(i + k) % t] for k in range(1, m)]
            if f == 1:
                color.append((h, 1))
            edges.append((g, h, reduce_word(tuple(color))))
    return ColoredDigraph(verts, edges)


def simple_cycles(D, max_length=8, limit=5000):
    """Vertex-simple cycles of the underlying multigraph, shortest first.

    Each is a list of (edge id, direction); loops and pairs of parallel edges
    count as cycles.
    """
    order = {v: i for i, v in enumerate(D.vertices)}
    found = {}
    for s in D.vertices:
        stack = [(s, [], {s})]
        while stack and len(found) < limit:
            at, path, used = stack.pop()
            for k, w, d in D.incident(at):
                if any(k == k2 for k2, _ in path):
                    continue
                if w == s:
                    cyc = path + [(k, d)]
                    key = frozenset(k2 for k2, _ in cyc)
                    if key not in found:
                        found[key] = cyc
                    continue
                if order[w] < order[s] or w in used or len(path) + 1 >= max_length:
                    continue
                stack.append((w, path + [(k, d)], used | {w}))
    cycles = list(found.values())
    cycles.sort(key=lambda c: (len(c), [k for k, _ in c]))
    return cycles


def fundamental_digraph_cycles(D):
    """One cycle per non-tree edge of a BFS forest of the underlying graph."""
    parent = {}
    tree = set()
    for root in D.vertices:
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for k, w, d in D.incident(u):
                if w not in parent:
                    parent[w] = (u, k, d)
                    tree.add(k)
                    queue.append(w)

    def to_root(v):
        steps = []
        while parent[v] is not None:
            u, k, d = parent[v]
            steps.append((k, -d))
            v = u
        return steps

    out = []
    for k, (s, t, _) in enumerate(D.edges):
        if k in tree:
            continue
        up_s = to_root(s)
        up_t = to_root(t)
        path_in = [(kk, -dd) for kk, dd in reversed(up_s)]
        out.append(path_in + [(k, 1)] + up_t)
    return out


@dataclass
class Certificate:
    component: int
    cycle: list
    vertices: list
    weight: tuple
    abelian_image: tuple
    exponent_sums: list

    def as_record(self):
        return {"component": self.component, "vertices": [str(v) for v in self.vertices],
                "weight": format_word(self.weight),
                "abelian_image": list(self.abelian_image),
                "exponent_sums": self.exponent_sums}


@dataclass
class AsphericityResult:
    verdict: str  # "Aspherical" or "Unknown"
    certificates: list = field(default_factory=list)
    reason: str = ""
    components: int = 0

    def __bool__(self):
        return self.verdict == "Aspherical"

    def as_record(self):
        rec = {"verdict": self.verdict, "components": self.components,
               "certificates": [c.as_record() for c in self.certificates]}
        if self.reason:
            rec["reason"] = self.reason
        return rec


def _cycle_vertices(D, cycle):
    out = []
    for k, d in cycle:
        s, t, _ = D.edges[k]
        out.append(s if d > 0 else t)
    return out


def aspherical_presentation(P, max_length=8, limit=5000):
    """Sufficient test: each relator meets D_P and every component of D_P has
    a cycle of infinite-order weight.  All certified cycles found are kept."""
    D = build_DP(P)
    vset = set(D.vertices)
    bare = [format_word(r) for r in P.relators if not any(g in vset for g, _ in r)]
    if bare:
        return AsphericityResult("Unknown", reason=f"relators without a D_P letter: {bare}")
    comps = D.components()
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    ab = abelianization(P)
    certs = []
    seen = set()
    for cyc in simple_cycles(D, max_length, limit) + fundamental_digraph_cycles(D):
        key = tuple(cyc)
        if key in seen:
            continue
        seen.add(key)
        w = D.weight(cyc)
        if has_infinite_order_abelian_certificate(w, P, ab):
            verts = _cycle_vertices(D, cyc)
            certs.append(Certificate(comp_of[verts[0]], cyc, verts, w, ab.project(w),
                                     exponent_sums(w, P.generators)))
    covered = {c.component for c in certs}
    missing = [i for i in range(len(comps)) if i not in covered]
    if missing or not comps:
        return AsphericityResult("Unknown", certs, reason=(
            "D_P is empty" if not comps else
            f"no infinite-order cycle found in components {missing}"), components=len(comps))
    return AsphericityResult("Aspherical", certs, components=len(comps))


# ------------------------------------------------------- 2-complexes ------

def coface_subposet(X):
    """2-cells together with the 1-cells lying under exactly two 2-cells."""
    heights = {x: X.height_of(x) for x in X.elements}
    keep = [x for x in X.elements if heights[x] == 2
            or (heights[x] == 1 and len(X.upper_covers(x)) == 2)]
    return X.induced(keep)


def aspherical_2complex(X, certified_regular=False):
    """Sufficient test on a height-2 face poset of a regular CW-complex: every
    component of the coface subposet must carry a loop of infinite order."""
    if X.height != 2:
        raise NotHeight2(f"height is {X.height}")
    if not certified_regular:
        return AsphericityResult("Unknown", reason="regularity not certified by caller")
    S = cellular_structure(X)
    bad = [(x, w) for (x, w), e in S.epsilon.items() if e not in (1, -1)]
    if bad:
        raise EpsilonNotUnit(f"incidence numbers not +-1 at {bad[:3]}")
    pres = pi1_presentation(X)
    ab = abelianization(pres.presentation)
    Y = coface_subposet(X)
    comps = Y.components()
    certs = []
    for i, comp in enumerate(comps):
        cs = set(comp)
        D = Subdiagram(X, cs, {e for e in Y.covers if e[0] in cs})
        root = comp[0]
        inner = tree_paths(D, root)
        tree, _ = _bfs_tree(X, root, allowed_edges=D.edges, vertices=D.vertices)
        for a, b in sorted(D.edges, key=lambda e: (X.idx(e[0]), X.idx(e[1]))):
            if (a, b) in tree:
                continue
            loop = inner[a] * EdgePath(X, a, [(a, b)]) * inner[b].inverse()
            # conjugating back to the base point does not change the abelian image
            w = reduce_word(path_word(loop, pres))
            if has_infinite_order_abelian_certificate(w, pres.presentation, ab):
                certs.append(Certificate(i, list(loop.steps), loop.vertices(), w,
                                         ab.project(w),
                                         exponent_sums(w, pres.presentation.generators)))
                break
    covered = {c.component for c in certs}
    missing = [i for i in range(len(comps)) if i not in covered]
    if missing:
        return AsphericityResult("Unknown", certs, components=len(comps),
                                 reason=f"no infinite-order loop in components {missing}")
    return AsphericityResult("Aspherical", certs, components=len(comps))


def presentation_complex_poset(P):
    """Face poset of the subdivided presentation complex (a regular CW-complex).

    One vertex ("v",); per generator a a midpoint ("mid", a) and half-edges
    ("half", a, 0) and ("half", a, 1); per relator j of length m a center
    ("center", j), 2m spokes ("spoke", j, k) and 2m triangles ("tri", j, k).
    """
    v = ("v",)
    elems = [v]
    covers = []
    for a in P.generators:
        mid = ("mid", a)
        elems += [mid, ("half", a, 0), ("half", a, 1)]
        for i in (0, 1):
            covers += [(v, ("half", a, i)), (mid, ("half", a, i))]
    for j, r in enumerate(P.relators):
        center = ("center", j)
        elems.append(center)
        ring = []      # boundary vertices in order
        segs = []      # segment from ring[k] to ring[k + 1]
        for a, e in r:
            ring += [v, ("mid", a)]
            segs += [("half", a, 0), ("half", a, 1)] if e > 0 else [("half", a, 1), ("half", a, 0)]
        n = len(ring)
        spokes = [("spoke", j, k) for k in range(n)]
        for k in range(n):
            elems.append(spokes[k])
            covers += [(center, spokes[k]), (ring[k], spokes[k])]
        for k in range(n):
            tri = ("tri", j, k)
            elems.append(tri)
            covers += [(spokes[k], tri), (spokes[(k + 1) % n], tri), (segs[k], tri)]
    return Poset(elems, covers)
