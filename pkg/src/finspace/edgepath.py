"""Edge-paths in Hasse diagrams and presentations of the fundamental group."""
from collections import deque
from dataclasses import dataclass, field

from .errors import HypothesisViolation, NotConnected, PossiblyNotSimplyConnected, UnknownLabel
from .groups import (GroupPresentation, abelianization, inverse_word, reduce_word,
                     simplify, word_is_trivial)
from .poset import Subdiagram, require_connected
from .truth import Truth


class EdgePath:
    """A walk in the Hasse diagram; each step moves along one cover."""

    def __init__(self, poset, start, steps=()):
        poset.idx(start)
        self.poset = poset
        self.start = start
        self.steps = tuple(tuple(s) for s in steps)
        at = start
        for a, b in self.steps:
            if a != at:
                raise ValueError(f"step {(a, b)!r} does not start at {at!r}")
            if not (poset.is_cover(a, b) or poset.is_cover(b, a)):
                raise UnknownLabel(f"{(a, b)!r} is not a Hasse edge")
            at = b

    @classmethod
    def through(cls, poset, vertices):
        vertices = list(vertices)
        return cls(poset, vertices[0], zip(vertices, vertices[1:]))

    @property
    def end(self):
        return self.steps[-1][1] if self.steps else self.start

    def vertices(self):
        return [self.start] + [b for _, b in self.steps]

    def is_closed(self):
        return self.end == self.start

    def __len__(self):
        return len(self.steps)

    def __mul__(self, other):
        if self.end != other.start:
            raise ValueError("paths do not compose")
        return EdgePath(self.poset, self.start, self.steps + other.steps)

    def inverse(self):
        return EdgePath(self.poset, self.end, [(b, a) for a, b in reversed(self.steps)])

    def is_monotonic(self):
        return all(self.poset.is_cover(a, b) for a, b in self.steps) or \
            all(self.poset.is_cover(b, a) for a, b in self.steps)

    def __eq__(self, other):
        return isinstance(other, EdgePath) and self.start == other.start and self.steps == other.steps

    def __repr__(self):
        return "EdgePath(" + " - ".join(map(repr, self.vertices())) + ")"


@dataclass(frozen=True)
class Digon:
    bottom: object
    top: object
    left: tuple   # chain bottom .. top
    right: tuple

    def is_simple(self):
        return not (set(self.left[1:-1]) & set(self.right[1:-1]))

    def edges(self):
        return list(zip(self.left, self.left[1:])) + list(zip(self.right, self.right[1:]))


def _bfs_tree(poset, root, allowed_edges=None, vertices=None):
    """BFS spanning tree; returns (tree edge set, parent map)."""
    parent = {root: None}
    tree = set()
    queue = deque([root])
    while queue:
        x = queue.popleft()
        i = poset.idx(x)
        for j in poset._down[i] + poset._up[i]:
            y = poset.elements[j]
            if y in parent:
                continue
            e = (y, x) if j in poset._down[i] else (x, y)
            if allowed_edges is not None and e not in allowed_edges:
                continue
            if vertices is not None and y not in vertices:
                continue
            parent[y] = (x, e)
            tree.add(e)
            queue.append(y)
    return tree, parent


def spanning_tree_subdiagram(X, root=None):
    """BFS spanning tree of the Hasse diagram from the first-listed element."""
    require_connected(X)
    if not len(X):
        raise NotConnected("empty poset")
    root = X.elements[0] if root is None else root
    tree, _ = _bfs_tree(X, root)
    return Subdiagram(X, X.elements, tree)


def tree_paths(D, root):
    """Edge-path inside subdiagram D from root to each vertex of D."""
    X = D.parent
    _, parent = _bfs_tree(X, root, allowed_edges=D.edges, vertices=D.vertices)
    paths = {}
    for v in parent:
        seq = [v]
        while parent[seq[-1]] is not None:
            seq.append(parent[seq[-1]][0])
        paths[v] = EdgePath.through(X, reversed(seq)) if len(seq) > 1 else EdgePath(X, v)
    return paths


def simple_digons(X):
    """All simple digons, one per unordered pair of chains, deterministic."""
    out = []
    for x in X.elements:
        for y in X.elements:
            if x == y or not X.lt(x, y) or X.is_cover(x, y):
                continue
            chains = X.saturated_chains(x, y)
            for a in range(len(chains)):
                for b in range(a + 1, len(chains)):
                    d = Digon(x, y, chains[a], chains[b])
                    if d.is_simple():
                        out.append(d)
    return out


@dataclass
class Pi1Presentation:
    presentation: GroupPresentation
    edge_of: dict          # generator -> Hasse edge
    generator_of: dict     # Hasse edge -> generator (non-tree edges only)
    tree: Subdiagram
    base: object
    paths: dict            # element -> EdgePath in the tree from base
    digons: list = field(default_factory=list)

    def word_of_edge(self, a, b):
        """Word for traversing the Hasse edge from a to b."""
        if (a, b) in self.generator_of:
            return ((self.generator_of[(a, b)], 1),)
        if (b, a) in self.generator_of:
            return ((self.generator_of[(b, a)], -1),)
        return ()


def _chain_word(chain, gen_of):
    out = []
    for a, b in zip(chain, chain[1:]):
        g = gen_of.get((a, b))
        if g is not None:
            out.append((g, 1))
    return tuple(out)


def pi1_presentation(X, x0=None, D=None):
    """Generators: Hasse edges outside D.  Relators: one per simple digon,
    (left chain word) * (right chain word)^-1, chains read bottom to top."""
    require_connected(X)
    x0 = X.elements[0] if x0 is None else x0
    X.idx(x0)
    if D is None:
        D = spanning_tree_subdiagram(X)
    else:
        _check_simply_connected_subdiagram(X, D)
    edge_index = {e: k for k, e in enumerate(X.covers)}
    gen_of = {}
    edge_of = {}
    for e in X.covers:
        if e not in D.edges:
            name = f"e{edge_index[e]}"
            gen_of[e] = name
            edge_of[name] = e
    digons = simple_digons(X)
    rels = []
    for d in digons:
        w = reduce_word(_chain_word(d.left, gen_of) + inverse_word(_chain_word(d.right, gen_of)))
        if w:
            rels.append(w)
    P = GroupPresentation(tuple(edge_of), tuple(rels))
    paths = tree_paths(D, x0)
    return Pi1Presentation(P, edge_of, gen_of, D, x0, paths, digons)


def _check_simply_connected_subdiagram(X, D):
    if D.parent is not X and D.parent != X:
        raise PossiblyNotSimplyConnected("subdiagram belongs to another poset")
    if D.vertices != frozenset(X.elements):
        raise PossiblyNotSimplyConnected("subdiagram must contain every element")
    if not D.is_connected():
        raise PossiblyNotSimplyConnected("subdiagram is not connected")
    A = D.as_poset()
    if is_simply_connected(A) is not Truth.YES:
        raise PossiblyNotSimplyConnected("subdiagram not certified simply connected")


def cycle_word(xi, P):
    """Word of non-tree edges traversed by a closed path at the base point."""
    if xi.start != P.base or not xi.is_closed():
        raise ValueError("path must be closed at the presentation's base point")
    return path_word(xi, P)


def path_word(xi, P):
    out = []
    for a, b in xi.steps:
        out.extend(P.word_of_edge(a, b))
    return tuple(out)


def fundamental_cycles(P):
    """(edge, closed path) for each generator edge: gamma_a . e . gamma_b^-1."""
    out = []
    for name, (a, b) in P.edge_of.items():
        X = P.tree.parent
        xi = P.paths[a] * EdgePath(X, a, [(a, b)]) * P.paths[b].inverse()
        out.append(((a, b), xi))
    return out


def is_simply_connected(X):
    require_connected(X)
    P = pi1_presentation(X).presentation
    if simplify(P).is_trivial:
        return Truth.YES
    if not abelianization(P).group.is_trivial():
        return Truth.NO
    return Truth.UNKNOWN


def inclusion_is_trivial(P, D):
    """Does the connected subdiagram D include trivially on pi_1?

    Each loop of D closing a non-tree edge is conjugated to the base point by
    the tree path and must be certified trivial.  Returns (verdict, edge).
    """
    X = P.tree.parent
    xj = next(x for x in X.elements if x in D.vertices)
    inner = tree_paths(D, xj)
    if len(inner) != len(D.vertices):
        return Truth.UNKNOWN, None
    tree, _ = _bfs_tree(X, xj, allowed_edges=D.edges, vertices=D.vertices)
    simp = simplify(P.presentation)
    ab = abelianization(P.presentation)
    gamma = P.paths[xj]
    for a, b in sorted(D.edges, key=lambda e: (X.idx(e[0]), X.idx(e[1]))):
        if (a, b) in tree:
            continue
        loop = gamma * inner[a] * EdgePath(X, a, [(a, b)]) * inner[b].inverse() * gamma.inverse()
        verdict = word_is_trivial(path_word(loop, P), P.presentation, simp, ab)
        if verdict is not Truth.YES:
            return verdict, (a, b)
    return Truth.YES, None


# ---------------------------------------------------------- van Kampen ----

@dataclass
class VanKampenResult:
    presentation: GroupPresentation
    verdict: str  # "Exact" or "EpimorphismOnly"
    tree: Subdiagram
    missing_digons: list


def van_kampen(X, A, B, x0):
    """Pushout presentation from a cover of the Hasse diagram by A and B."""
    failures = []
    for name, S in (("A", A), ("B", B)):
        if not S.is_connected():
            failures.append(f"{name} is not connected")
    uncovered = [e for e in X.covers if e not in A.edges and e not in B.edges]
    if uncovered:
        failures.append(f"edges in neither part: {uncovered[:3]}")
    cv = A.vertices & B.vertices
    C = Subdiagram(X, cv, A.edges & B.edges)
    if not C.is_connected():
        failures.append("intersection is not connected")
    if x0 not in cv:
        failures.append("base point not in the intersection")
    if failures:
        raise HypothesisViolation(failures)

    # tree of C, extended inside A and inside B; the union is a tree
    tree_c, _ = _bfs_tree(X, x0, allowed_edges=C.edges, vertices=C.vertices)
    tree = set(tree_c)
    for S in (A, B):
        reached = set(cv)
        queue = deque(sorted(cv, key=X.idx))
        while queue:
            x = queue.popleft()
            for y in X.neighbors(x):
                e = (x, y) if X.is_cover(x, y) else (y, x)
                if y in reached or e not in S.edges:
                    continue
                reached.add(y)
                tree.add(e)
                queue.append(y)
    D = Subdiagram(X, X.elements, tree)
    edge_index = {e: k for k, e in enumerate(X.covers)}
    gen_of = {e: f"e{edge_index[e]}" for e in X.covers if e not in tree}
    rels = []
    seen = set()
    missing = []
    for d in simple_digons(X):
        edges = d.edges()
        inside = all(e in A.edges for e in edges) or all(e in B.edges for e in edges)
        if not inside:
            missing.append(d)
            continue
        w = reduce_word(_chain_word(d.left, gen_of) + inverse_word(_chain_word(d.right, gen_of)))
        if w and w not in seen:
            seen.add(w)
            rels.append(w)
    P = GroupPresentation(tuple(gen_of[e] for e in X.covers if e in gen_of), tuple(rels))
    return VanKampenResult(P, "EpimorphismOnly" if missing else "Exact", D, missing)
