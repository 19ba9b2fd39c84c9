"""Square boards on the rectangle, cylinder and torus, and their colorings.

A board's vertices and edges are the points and Hasse edges of a product of
fences, so an edge coloring is the same thing as a Z_2-coloring of that poset.
Colorings are int bitmasks over the board's edge list (bit k set = edge k red).
"""
from collections import deque
from dataclasses import dataclass, field

from . import linalg
from .colorings import Coloring
from .errors import DimensionTooSmall, ParseError
from .groups import FiniteGroup
from .poset import cyclic_fence, fence, product

KINDS = ("Rectangle", "Cylinder", "Torus")


@dataclass
class Board:
    kind: str
    n: int
    m: int
    poset: object
    edges: list           # Hasse edges (lower, upper), canonical order
    squares: list         # each a tuple of 4 edge indices
    incident: dict        # vertex -> list of edge indices
    edge_index: dict = field(default_factory=dict)
    _moves: object = field(default=None, repr=False, compare=False)

    @property
    def vertices(self):
        return self.poset.elements

    @property
    def num_edges(self):
        return len(self.edges)

    def square_masks(self):
        return [sum(1 << k for k in sq) for sq in self.squares]

    def move_mask(self, v):
        return sum(1 << k for k in self.incident[v])


def _segment(a, b):
    return frozenset((a, b))


def board(kind, n, m):
    """n x m board: I_n x I_m, C_n x I_m or C_n x C_m."""
    if kind not in KINDS:
        raise ValueError(f"unknown board kind {kind!r}")
    if n < 1 or m < 1:
        raise DimensionTooSmall(f"dimensions must be positive, got {n}x{m}")
    if kind in ("Cylinder", "Torus") and n < 4:
        raise DimensionTooSmall(f"cyclic dimension must be at least 4, got {n}")
    if kind == "Torus" and m < 4:
        raise DimensionTooSmall(f"cyclic dimension must be at least 4, got {m}")
    first = fence(n) if kind == "Rectangle" else cyclic_fence(n)
    second = cyclic_fence(m) if kind == "Torus" else fence(m)
    X = product(first, second)
    edges = list(X.covers)
    seg_index = {_segment(a, b): k for k, (a, b) in enumerate(edges)}
    wrap_i = kind != "Rectangle"
    wrap_j = kind == "Torus"
    rows = n if wrap_i else n + 1
    cols = m if wrap_j else m + 1

    def pt(i, j):
        return (i % rows if wrap_i else i, j % cols if wrap_j else j)

    squares = []
    for i in range(n):
        for j in range(m):
            corners = [pt(i, j), pt(i + 1, j), pt(i + 1, j + 1), pt(i, j + 1)]
            sq = tuple(seg_index[_segment(corners[k], corners[(k + 1) % 4])] for k in range(4))
            squares.append(sq)
    incident = {v: [] for v in X.elements}
    for k, (a, b) in enumerate(edges):
        incident[a].append(k)
        incident[b].append(k)
    return Board(kind, n, m, X, edges, squares, incident, {e: k for k, e in enumerate(edges)})


def is_valid(b, col):
    """Even number of red (so of blue) edges on every square."""
    return all(bin(col & mask).count("1") % 2 == 0 for mask in b.square_masks())


def apply_move(b, col, v):
    return col ^ b.move_mask(v)


@dataclass
class MoveEquivalence:
    equivalent: bool
    vertices: list = None

    def __bool__(self):
        return self.equivalent


def _move_basis(b):
    if b._moves is None:
        basis = linalg.F2Basis()
        for v in b.vertices:
            basis.add(b.move_mask(v))
        b._moves = basis
    return b._moves


def moves_equivalent(b, col1, col2):
    """Solve (vertex-edge incidence) x = col1 + col2 over F_2."""
    for col in (col1, col2):
        if not is_valid(b, col):
            raise ValueError("both colorings must be valid")
    combo = _move_basis(b).express(col1 ^ col2)
    if combo is None:
        return MoveEquivalence(False)
    verts = [v for i, v in enumerate(b.vertices) if combo >> i & 1]
    assert col1 ^ sum_moves(b, verts) == col2
    return MoveEquivalence(True, verts)


def sum_moves(b, verts):
    out = 0
    for v in verts:
        out ^= b.move_mask(v)
    return out


def cocycle_dimension(b):
    """Dimension of the space of valid colorings."""
    return b.num_edges - linalg.f2_rank(b.square_masks())


def coboundary_dimension(b):
    return _move_basis(b).rank


def count_classes(b):
    return 2 ** (cocycle_dimension(b) - coboundary_dimension(b))


def valid_basis(b):
    """Bitmask basis of the valid colorings."""
    # nullspace of the square constraints, computed per edge coordinate
    sq = b.square_masks()
    cols = []
    for k in range(b.num_edges):
        cols.append(sum(1 << s for s, mask in enumerate(sq) if mask >> k & 1))
    out = []
    for combo in linalg.f2_nullspace(cols, len(sq)):
        out.append(combo)
    return out


def random_valid(b, rng):
    """Random valid coloring: random combination of a cocycle basis."""
    col = 0
    for vec in valid_basis(b):
        if rng.random() < 0.5:
            col ^= vec
    return col


def seam_coloring(b):
    """Red on every edge joining column 0 to column 1: a ring of squares,
    each with two red edges, going once around a cylinder or torus."""
    col = 0
    for k, (a, c) in enumerate(b.edges):
        if {a[0], c[0]} == {0, 1} and a[1] == c[1]:
            col |= 1 << k
    return col


def to_poset_coloring(b, col):
    """The Z_2-coloring of the board's poset (red = 1)."""
    G = FiniteGroup.cyclic(2)
    return Coloring(b.poset, G, {e: (col >> k) & 1 for k, e in enumerate(b.edges)})


def format_coloring(b, col):
    return "".join("r" if col >> k & 1 else "b" for k in range(b.num_edges))


def parse_coloring(b, text):
    chars = [ch for ch in text if not ch.isspace()]
    if len(chars) != b.num_edges:
        raise ParseError(f"expected {b.num_edges} edge colors, got {len(chars)}")
    col = 0
    for k, ch in enumerate(chars):
        if ch not in "rb":
            raise ParseError(f"bad color {ch!r}; use r or b")
        if ch == "r":
            col |= 1 << k
    return col


# -------------------------------------------------- brute-force oracles ---

def brute_force_valid(b):
    """All valid colorings by enumerating every edge coloring (small boards)."""
    return [c for c in range(1 << b.num_edges) if is_valid(b, c)]


def brute_force_classes(b, colorings=None):
    """Orbits of the move action by BFS, using only the move rule itself."""
    pool = set(brute_force_valid(b) if colorings is None else colorings)
    masks = [b.move_mask(v) for v in b.vertices]
    label = {}
    classes = 0
    for start in sorted(pool):
        if start in label:
            continue
        label[start] = classes
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for mk in masks:
                d = c ^ mk
                if d not in label:
                    label[d] = classes
                    queue.append(d)
        classes += 1
    return classes, label
