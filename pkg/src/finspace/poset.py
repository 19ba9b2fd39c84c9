"""Finite posets stored as Hasse diagrams.

Elements are arbitrary hashable labels.  Internally each element gets the
index of its position in the listed order and the order relation is kept as
per-element bitmasks, which makes closures, intervals and induced subposets
cheap set operations.
"""
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import CycleError, FinspaceError, NotConnected, UnknownLabel


class NotMonotone(FinspaceError):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset.  Build with :func:`from_covers`."""

    def __init__(self, elements, covers, _below=None):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        up = [[] for _ in range(n)]
        down = [[] for _ in range(n)]
        pairs = sorted({(self.index[a], self.index[b]) for a, b in covers})
        for i, j in pairs:
            up[i].append(j)
            down[j].append(i)
        self._up = up
        self._down = down
        self.covers = tuple((self.elements[i], self.elements[j]) for i, j in pairs)
        self._cover_idx = tuple(pairs)
        if _below is None:
            _below = _closure(n, down)
        self._below = _below  # U_x as bitmask, x included
        above = [0] * n
        for j in range(n):
            for i in _bits(_below[j]):
                above[i] |= 1 << j
        self._above = above
        h = [0] * n
        for i in _topological(n, down):
            h[i] = max((h[k] + 1 for k in down[i]), default=0)
        self._height = h

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and set(self.covers) == set(other.covers)

    def __hash__(self):
        return hash((frozenset(self.elements), frozenset(self.covers)))

    def __repr__(self):
        return f"Poset({len(self)} elements, {len(self.covers)} covers)"

    def idx(self, x):
        try:
            return self.index[x]
        except (KeyError, TypeError):
            raise UnknownLabel(f"unknown element {x!r}") from None

    def _labels(self, mask):
        return frozenset(self.elements[i] for i in _bits(mask))

    def le(self, x, y):
        return bool(self._below[self.idx(y)] >> self.idx(x) & 1)

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def comparable(self, x, y):
        return self.le(x, y) or self.le(y, x)

    def is_cover(self, x, y):
        return self.idx(y) in self._up[self.idx(x)]

    def down_set(self, x):
        return self._labels(self._below[self.idx(x)])

    def up_set(self, x):
        return self._labels(self._above[self.idx(x)])

    def punctured_down_set(self, x):
        i = self.idx(x)
        return self._labels(self._below[i] & ~(1 << i))

    def punctured_up_set(self, x):
        i = self.idx(x)
        return self._labels(self._above[i] & ~(1 << i))

    def lower_covers(self, x):
        """Elements covered by x, in listed order."""
        return [self.elements[j] for j in self._down[self.idx(x)]]

    def upper_covers(self, x):
        return [self.elements[j] for j in self._up[self.idx(x)]]

    def degree(self, x):
        i = self.idx(x)
        return len(self._up[i]) + len(self._down[i])

    def height_of(self, x):
        return self._height[self.idx(x)]

    @property
    def height(self):
        return max(self._height, default=-1)

    def minimal(self):
        return [x for i, x in enumerate(self.elements) if not self._down[i]]

    def maximal(self):
        return [x for i, x in enumerate(self.elements) if not self._up[i]]

    def interval(self, x, y):
        return self._labels(self._above[self.idx(x)] & self._below[self.idx(y)])

    def neighbors(self, x):
        i = self.idx(x)
        return [self.elements[j] for j in self._down[i] + self._up[i]]

    def linear_extension(self):
        """Elements sorted by (height, listed index)."""
        return sorted(self.elements, key=lambda x: (self._height[self.index[x]], self.index[x]))

    # -- structure -------------------------------------------------------
    def components(self):
        """Connected components of the undirected Hasse graph, listed order."""
        seen = [False] * len(self)
        comps = []
        for s in range(len(self)):
            if seen[s]:
                continue
            comp = []
            seen[s] = True
            queue = deque([s])
            while queue:
                i = queue.popleft()
                comp.append(i)
                for j in self._down[i] + self._up[i]:
                    if not seen[j]:
                        seen[j] = True
                        queue.append(j)
            comps.append([self.elements[i] for i in sorted(comp)])
        return comps

    def is_connected(self):
        return len(self.components()) == 1

    def induced(self, subset):
        """Subposet on ``subset`` with the restricted order."""
        keep = [i for i in range(len(self)) if self.elements[i] in subset]
        if len(keep) != len(set(subset)):
            for x in subset:
                self.idx(x)
        smask = 0
        for i in keep:
            smask |= 1 << i
        covers = []
        for j in keep:
            below = self._below[j] & smask & ~(1 << j)
            for i in _bits(below):
                between = self._above[i] & below & ~(1 << i)
                if not between:
                    covers.append((self.elements[i], self.elements[j]))
        return Poset([self.elements[i] for i in keep], covers)

    def beat_points(self):
        """Elements covering exactly one element or covered by exactly one."""
        return [x for i, x in enumerate(self.elements)
                if len(self._down[i]) == 1 or len(self._up[i]) == 1]

    def core(self):
        """Remove the first-listed beat point until none remain."""
        current = self
        while True:
            beats = current.beat_points()
            if not beats:
                return current
            current = current.induced(set(current.elements) - {beats[0]})

    def chains(self):
        """All nonempty chains, each as a tuple ordered bottom to top."""
        out = []
        n = len(self)
        order = sorted(range(n), key=lambda i: (self._height[i], i))
        rank = {i: r for r, i in enumerate(order)}

        def grow(chain, top):
            out.append(tuple(self.elements[i] for i in chain))
            for j in sorted(_bits(self._above[top] & ~(1 << top)), key=rank.get):
                chain.append(j)
                grow(chain, j)
                chain.pop()

        for i in order:
            grow([i], i)
        return out

    def maximal_chains(self):
        out = []

        def grow(chain):
            i = chain[-1]
            if not self._up[i]:
                out.append(tuple(self.elements[k] for k in chain))
                return
            for j in self._up[i]:
                chain.append(j)
                grow(chain)
                chain.pop()

        for i in range(len(self)):
            if not self._down[i]:
                grow([i])
        return out

    def saturated_chains(self, x, y):
        """All chains x = x1 < x2 < ... < xr = y with each step a cover."""
        i, j = self.idx(x), self.idx(y)
        target = self._below[j]
        out = []

        def grow(path):
            k = path[-1]
            if k == j:
                out.append(tuple(self.elements[t] for t in path))
                return
            for t in self._up[k]:
                if target >> t & 1:
                    path.append(t)
                    grow(path)
                    path.pop()

        if target >> i & 1:
            grow([i])
        return out

    def relabel(self, mapping):
        return Poset([mapping[x] for x in self.elements],
                     [(mapping[a], mapping[b]) for a, b in self.covers])


def _closure(n, down):
    below = [0] * n
    for i in _topological(n, down):
        m = 1 << i
        for k in down[i]:
            m |= below[k]
        below[i] = m
    return below


def _topological(n, down):
    """Indices sorted so every element follows all its lower covers (Kahn,
    smallest index first).  Raises CycleError on a cycle."""
    import heapq
    indeg = [len(d) for d in down]
    up = [[] for _ in range(n)]
    for j, d in enumerate(down):
        for i in d:
            up[i].append(j)
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        i = heapq.heappop(heap)
        out.append(i)
        for j in up[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(out) != n:
        raise CycleError("order relation contains a cycle")
    return out


def from_covers(labels, cover_pairs):
    """Poset generated by ``cover_pairs``; redundant pairs are dropped."""
    labels = list(labels)
    index = {}
    for i, x in enumerate(labels):
        if x in index:
            raise ValueError(f"duplicate label {x!r}")
        index[x] = i
    n = len(labels)
    down = [set() for _ in range(n)]
    for a, b in cover_pairs:
        if a not in index:
            raise UnknownLabel(f"unknown element {a!r}")
        if b not in index:
            raise UnknownLabel(f"unknown element {b!r}")
        if a == b:
            raise CycleError(f"self loop at {a!r}")
        down[index[b]].add(index[a])
    down = [sorted(d) for d in down]
    below = _closure(n, down)
    covers = []
    for j in range(n):
        for i in down[j]:
            # i < j is a cover iff nothing sits strictly between
            between = below[j] & ~(1 << j) & ~(1 << i)
            if not any(below[k] >> i & 1 for k in _bits(between)):
                covers.append((labels[i], labels[j]))
    return Poset(labels, covers)


def from_order(labels, relation):
    """Poset from a predicate ``relation(a, b)`` meaning a <= b."""
    labels = list(labels)
    pairs = [(a, b) for a in labels for b in labels if a != b and relation(a, b)]
    return from_covers(labels, pairs)


# ---------------------------------------------------------------- maps ----

@dataclass(frozen=True)
class MonotoneMap:
    source: Poset
    target: Poset
    assignment: dict = field(hash=False)

    def __post_init__(self):
        for x in self.source.elements:
            if x not in self.assignment:
                raise UnknownLabel(f"map undefined at {x!r}")
            self.target.idx(self.assignment[x])
        for a, b in self.source.covers:
            if not self.target.le(self.assignment[a], self.assignment[b]):
                raise NotMonotone(f"order not preserved on cover ({a!r}, {b!r})")

    def __call__(self, x):
        return self.assignment[x]

    def compose(self, other):
        """self after other."""
        return MonotoneMap(other.source, self.target,
                           {x: self.assignment[other.assignment[x]] for x in other.source})

    def is_surjective(self):
        return set(self.assignment.values()) == set(self.target.elements)

    def fiber(self, y):
        return [x for x in self.source.elements if self.assignment[x] == y]


def identity_map(X):
    return MonotoneMap(X, X, {x: x for x in X})


# ---------------------------------------------------------- subdiagrams --

class Subdiagram:
    """A subgraph of a Hasse diagram (vertices plus a subset of covers)."""

    def __init__(self, parent, vertices, edges):
        self.parent = parent
        self.vertices = frozenset(vertices)
        self.edges = frozenset(tuple(e) for e in edges)
        cover_set = set(parent.covers)
        for v in self.vertices:
            parent.idx(v)
        for e in self.edges:
            if e not in cover_set:
                raise UnknownLabel(f"{e!r} is not a Hasse edge")
            if e[0] not in self.vertices or e[1] not in self.vertices:
                raise UnknownLabel(f"edge {e!r} leaves the vertex set")

    @classmethod
    def from_edges(cls, parent, edges):
        edges = list(edges)
        return cls(parent, {v for e in edges for v in e}, edges)

    @classmethod
    def whole(cls, parent):
        return cls(parent, parent.elements, parent.covers)

    def as_poset(self):
        order = [x for x in self.parent.elements if x in self.vertices]
        cover_order = [e for e in self.parent.covers if e in self.edges]
        return Poset(order, cover_order)

    def components(self):
        return self.as_poset().components()

    def is_connected(self):
        return len(self.vertices) > 0 and len(self.components()) == 1

    def __contains__(self, edge):
        return tuple(edge) in self.edges

    def __repr__(self):
        return f"Subdiagram({len(self.vertices)} vertices, {len(self.edges)} edges)"


# ------------------------------------------------------------ complexes --

class SimplicialComplex:
    """Finite abstract simplicial complex.

    Simplices are tuples of vertices in the complex's vertex order, which
    fixes orientations for boundary maps.
    """

    def __init__(self, vertices, facets=None, simplices=None):
        self.vertices = tuple(vertices)
        self.vindex = {v: i for i, v in enumerate(self.vertices)}
        found = set()
        if simplices is not None:
            for s in simplices:
                if not s:
                    continue
                found.add(self._canon(s))
        for f in facets or ():
            f = self._canon(f)
            if not f:
                continue
            for k in range(1, len(f) + 1):
                found.update(combinations(f, k))
        for v in self.vertices:
            found.add((v,))
        self._simplices = sorted(found, key=lambda s: (len(s), [self.vindex[v] for v in s]))
        self._set = set(self._simplices)

    def _canon(self, s):
        for v in s:
            if v not in self.vindex:
                raise UnknownLabel(f"unknown vertex {v!r}")
        return tuple(sorted(set(s), key=self.vindex.get))

    @property
    def simplices(self):
        return list(self._simplices)

    def by_dimension(self):
        out = {}
        for s in self._simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return out

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self._simplices), default=-1)

    def facets(self):
        out = []
        for s in self._simplices:
            ss = set(s)
            if not any(len(t) == len(s) + 1 and ss <= set(t) for t in self._simplices):
                out.append(s)
        return out

    def f_vector(self):
        bd = self.by_dimension()
        return [len(bd.get(d, [])) for d in range(self.dimension + 1)]

    def euler_characteristic(self):
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def has(self, s):
        return self._canon(s) in self._set

    def __len__(self):
        return len(self._simplices)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._set == other._set

    def __hash__(self):
        return hash(frozenset(self._set))

    def __repr__(self):
        return f"SimplicialComplex(f={self.f_vector()})"


def order_complex(X):
    """Simplicial complex of nonempty chains, vertices ordered by height."""
    return SimplicialComplex(X.linear_extension(), simplices=X.chains())


def face_poset(K):
    """Poset of simplices ordered by inclusion."""
    simplices = K.simplices
    present = set(simplices)
    covers = []
    for s in simplices:
        if len(s) > 1:
            for k in range(len(s)):
                face = s[:k] + s[k + 1:]
                if face in present:
                    covers.append((face, s))
    return Poset(simplices, covers)


# ----------------------------------------------------------- operations --

def product(X, Y):
    elems = [(x, y) for x in X.elements for y in Y.elements]
    covers = [((a, y), (b, y)) for a, b in X.covers for y in Y.elements]
    covers += [((x, a), (x, b)) for x in X.elements for a, b in Y.covers]
    return Poset(elems, covers)


def opposite(X):
    return Poset(X.elements, [(b, a) for a, b in X.covers])


def disjoint_union(X, Y, tags=(0, 1)):
    s, t = tags
    elems = [(s, x) for x in X.elements] + [(t, y) for y in Y.elements]
    covers = [((s, a), (s, b)) for a, b in X.covers] + [((t, a), (t, b)) for a, b in Y.covers]
    return Poset(elems, covers)


def wedge(X, Y, x, y, tags=("X", "Y")):
    """Glue X and Y by identifying x with y (labels become tagged pairs;
    the glued point keeps X's tag)."""
    X.idx(x)
    Y.idx(y)
    s, t = tags

    def ly(v):
        return (s, x) if v == y else (t, v)

    elems = [(s, v) for v in X.elements] + [(t, v) for v in Y.elements if v != y]
    covers = [((s, a), (s, b)) for a, b in X.covers] + [(ly(a), ly(b)) for a, b in Y.covers]
    return from_covers(elems, covers)


@dataclass(frozen=True)
class MappingCylinder:
    poset: Poset
    retraction: MonotoneMap
    include_source: MonotoneMap
    include_target: MonotoneMap


def mapping_cylinder(f):
    """Non-Hausdorff mapping cylinder: source over target, y < x iff y <= f(x).

    Labels are ("src", x) and ("tgt", y).
    """
    S, T = f.source, f.target
    elems = [("tgt", y) for y in T.elements] + [("src", x) for x in S.elements]
    covers = [(("tgt", a), ("tgt", b)) for a, b in T.covers]
    covers += [(("src", a), ("src", b)) for a, b in S.covers]
    covers += [(("tgt", f(x)), ("src", x)) for x in S.elements]
    cyl = from_covers(elems, covers)
    r = {("tgt", y): y for y in T.elements}
    r.update({("src", x): f(x) for x in S.elements})
    return MappingCylinder(
        cyl,
        MonotoneMap(cyl, T, r),
        MonotoneMap(S, cyl, {x: ("src", x) for x in S.elements}),
        MonotoneMap(T, cyl, {y: ("tgt", y) for y in T.elements}),
    )


# -------------------------------------------------------------- builders --

def chain(n):
    """The chain 0 < 1 < ... < n-1."""
    return Poset(range(n), [(i, i + 1) for i in range(n - 1)])


def antichain(n):
    return Poset(range(n), [])


def fence(n):
    """I_n: 0 < 1 > 2 < 3 ... on n + 1 points (even i is below i + 1)."""
    return Poset(range(n + 1), [_fence_edge(i, i + 1) for i in range(n)])


def cyclic_fence(n):
    """C_n: the fence I_n with n identified to 0."""
    if n < 4:
        raise ValueError("cyclic fence needs at least 4 points")
    return Poset(range(n), [_fence_edge(i, (i + 1) % n, i) for i in range(n)])


def _fence_edge(i, j, parity=None):
    p = i if parity is None else parity
    return (i, j) if p % 2 == 0 else (j, i)


def require_connected(X):
    if not X.is_connected():
        raise NotConnected(f"poset has {len(X.components())} components")
