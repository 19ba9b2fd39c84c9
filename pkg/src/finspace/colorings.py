"""G-colorings of Hasse diagrams."""
from dataclasses import dataclass, field

from .edgepath import (EdgePath, inclusion_is_trivial, pi1_presentation,
                       spanning_tree_subdiagram, tree_paths)
from .errors import NotAdmissible, TrivialityNotCertified
from .groups import (FgAbelianGroup, FiniteGroup, PresentedGroup, automorphisms,
                     subgroup_closure)
from .poset import Subdiagram, require_connected
from .truth import Truth


class Coloring:
    """Colors live on upward edges only; c(y, x) is derived as c(x, y)^-1."""

    def __init__(self, poset, group, colors, admissible_by_construction=False):
        self.poset = poset
        self.group = group
        self.colors = {}
        for e in poset.covers:
            if e not in colors:
                raise ValueError(f"no color for edge {e!r}")
            self.colors[e] = colors[e]
        extra = set(colors) - set(self.colors)
        if extra:
            raise ValueError(f"colors given for non-edges: {sorted(map(repr, extra))[:3]}")
        self.admissible_by_construction = admissible_by_construction

    def __call__(self, a, b):
        if (a, b) in self.colors:
            return self.colors[(a, b)]
        if (b, a) in self.colors:
            return self.group.inv(self.colors[(b, a)])
        raise KeyError(f"{(a, b)!r} is not a Hasse edge")

    def __eq__(self, other):
        return (isinstance(other, Coloring) and self.poset == other.poset
                and self.colors == other.colors)

    def map(self, f, group):
        """Push colors through a homomorphism f into ``group``."""
        return Coloring(self.poset, group, {e: f(g) for e, g in self.colors.items()},
                        self.admissible_by_construction)

    @classmethod
    def trivial(cls, poset, group):
        return cls(poset, group, {e: group.identity for e in poset.covers}, True)


@dataclass
class ColoringEquivalence:
    """c'(x, y) = phi(g_x c(x, y) g_y^-1) on every edge."""
    phi: dict
    gauge: dict

    def check(self, c, c2):
        G = c.group
        for (x, y), col in c.colors.items():
            val = G.mul(G.mul(self.gauge[x], col), G.inv(self.gauge[y]))
            if self.phi[val] != c2.colors[(x, y)]:
                return False
        return True


def weight(c, xi):
    G = c.group
    acc = G.identity
    for a, b in xi.steps:
        acc = G.mul(acc, c(a, b))
    return acc


@dataclass
class Admissibility:
    verdict: Truth
    counterexample: tuple = None  # (bottom, top, chain1, chain2)

    def __bool__(self):
        return self.verdict is Truth.YES


def is_admissible(c):
    """Every interval's saturated chains must share one weight.

    For each bottom x a single upward sweep assigns each y >= x the weight of
    some saturated chain and compares it with every other lower cover.
    """
    X, G = c.poset, c.group
    if c.admissible_by_construction:
        return Admissibility(Truth.YES)
    unknown = None
    order = X.linear_extension()
    for x in order:
        weights = {x: G.identity}
        witness = {x: (x,)}
        for y in order:
            if y == x or not X.lt(x, y):
                continue
            for z in X.lower_covers(y):
                if z not in weights:
                    continue
                val = G.mul(weights[z], c(z, y))
                if y not in weights:
                    weights[y] = val
                    witness[y] = witness[z] + (y,)
                    continue
                same = G.equal(weights[y], val)
                if same is Truth.NO:
                    return Admissibility(Truth.NO, (x, y, witness[y], witness[z] + (y,)))
                if same is Truth.UNKNOWN and unknown is None:
                    unknown = (x, y, witness[y], witness[z] + (y,))
    if unknown is not None:
        return Admissibility(Truth.UNKNOWN, unknown)
    return Admissibility(Truth.YES)


def fundamental_weights(c, x0=None):
    """Weights of gamma_a . (a, b) . gamma_b^-1 over the non-tree edges."""
    X = c.poset
    require_connected(X)
    x0 = X.elements[0] if x0 is None else x0
    D = spanning_tree_subdiagram(X)
    paths = tree_paths(D, x0)
    out = []
    for e in X.covers:
        if e in D.edges:
            continue
        a, b = e
        xi = paths[a] * EdgePath(X, a, [e]) * paths[b].inverse()
        out.append(weight(c, xi))
    return out, paths


def is_connected_coloring(c, x0=None):
    """Do the weights of closed paths at x0 generate G?"""
    G = c.group
    ws, _ = fundamental_weights(c, x0)
    if isinstance(G, FiniteGroup):
        return Truth.of(len(subgroup_closure(ws, G)) == G.order)
    if isinstance(G, FgAbelianGroup):
        return Truth.of(G.generated_is_everything(ws))
    if isinstance(G, PresentedGroup):
        ab = G.abelianization
        if not ab.group.generated_is_everything([ab.project(w) for w in ws]):
            return Truth.NO
        have = {tuple(w) for w in ws}
        if all(((g, 1),) in have or ((g, -1),) in have for g in G.presentation.generators):
            return Truth.YES
        return Truth.UNKNOWN
    return Truth.UNKNOWN


@dataclass
class EquivalenceResult:
    verdict: Truth
    witness: ColoringEquivalence = None

    def __bool__(self):
        return self.verdict is Truth.YES


def are_equivalent(c1, c2, bound=16):
    """Search Aut(G) for psi matching the fundamental-cycle weights.

    c1 ~ c2 exactly when some automorphism carries the weights of the
    fundamental cycles of c1 onto those of c2 (inner automorphisms absorb the
    change of gauge at the base point), so over a finite group with an
    enumerable automorphism group the answer is complete.
    """
    X = c1.poset
    G = c1.group
    w1, paths = fundamental_weights(c1)
    w2, _ = fundamental_weights(c2)
    if not isinstance(G, FiniteGroup) or G != c2.group or G.order > bound:
        triv1 = all(G.equal(w, G.identity) is Truth.YES for w in w1)
        triv2 = all(c2.group.equal(w, c2.group.identity) is Truth.YES for w in w2)
        nontriv1 = any(G.equal(w, G.identity) is Truth.NO for w in w1)
        nontriv2 = any(c2.group.equal(w, c2.group.identity) is Truth.NO for w in w2)
        if (triv1 and nontriv2) or (triv2 and nontriv1):
            return EquivalenceResult(Truth.NO)
        return EquivalenceResult(Truth.UNKNOWN)
    for phi in automorphisms(G, bound):
        if all(phi[a] == b for a, b in zip(w1, w2)):
            inv_phi = [0] * G.order
            for g, h in enumerate(phi):
                inv_phi[h] = g
            gauge = {}
            for x in X.elements:
                a_x = weight(c1, paths[x])
                b_x = weight(c2, paths[x])
                gauge[x] = G.mul(G.inv(inv_phi[b_x]), a_x)
            witness = ColoringEquivalence(dict(enumerate(phi)), gauge)
            assert witness.check(c1, c2)
            return EquivalenceResult(Truth.YES, witness)
    return EquivalenceResult(Truth.NO)


def apply_equivalence(c, phi, gauge):
    G = c.group
    return Coloring(c.poset, G, {
        (x, y): phi(G.mul(G.mul(gauge[x], col), G.inv(gauge[y])))
        for (x, y), col in c.colors.items()}, c.admissible_by_construction)


def trivialize_on_subdiagrams(c, parts, x0=None, pres=None):
    """Equivalent coloring that is the identity on every edge of every part.

    Each part must be connected with a certified-trivial map on fundamental
    groups; certification rewrites its fundamental cycles into words of the
    poset's own presentation and asks for a triviality proof.
    """
    X, G = c.poset, c.group
    require_connected(X)
    x0 = X.elements[0] if x0 is None else x0
    pres = pres or pi1_presentation(X, x0)
    used = set()
    for D in parts:
        if used & D.vertices:
            raise ValueError("parts must be pairwise disjoint")
        used |= D.vertices
        if not D.is_connected():
            raise TrivialityNotCertified("part is not connected")
    gauge = {x: G.identity for x in X.elements}
    for D in parts:
        verdict, bad = inclusion_is_trivial(pres, D)
        if verdict is not Truth.YES:
            raise TrivialityNotCertified(
                f"cycle through {bad!r} not certified trivial ({verdict})")
        xj = next(x for x in X.elements if x in D.vertices)
        gamma_j = pres.paths[xj]
        inner = tree_paths(D, xj)
        for a in D.vertices:
            gauge[a] = weight(c, gamma_j * inner[a])
    colors = {}
    for (x, y), col in c.colors.items():
        val = G.mul(G.mul(gauge[x], col), G.inv(gauge[y]))
        in_part = any((x, y) in D.edges for D in parts)
        if in_part:
            if G.equal(val, G.identity) is Truth.NO:
                raise TrivialityNotCertified(f"edge {(x, y)!r} keeps a nontrivial color")
            val = G.identity
        colors[(x, y)] = val
    out = Coloring(X, G, colors, c.admissible_by_construction)
    out.gauge = gauge
    return out


def standard_coloring(X, x0=None, pres=None):
    """Tree edges get 1, every other edge its own generator."""
    pres = pres or pi1_presentation(X, x0)
    G = PresentedGroup(pres.presentation)
    colors = {e: pres.word_of_edge(*e) for e in X.covers}
    c = Coloring(X, G, colors, admissible_by_construction=True)
    c.pi1 = pres
    return c


def invert_coloring(c):
    G = c.group
    return Coloring(c.poset, G, {e: G.inv(g) for e, g in c.colors.items()})


def push_standard_coloring(c, realization):
    """Send a standard coloring into a finite realization of its group."""
    G = realization.group
    out = Coloring(c.poset, G, {e: realization(w) for e, w in c.colors.items()},
                   admissible_by_construction=False)
    return out
