"""Cellular posets, incidence numbers and the twisted cellular complex.

All homology here is reduced: chain complexes carry an augmentation to a
copy of Z in degree -1, so a point has no homology at all and the empty
space has Z in degree -1.
"""
from dataclasses import dataclass, field

from . import linalg
from .colorings import Coloring, is_admissible, push_standard_coloring, standard_coloring
from .edgepath import inclusion_is_trivial, pi1_presentation
from .errors import (FinspaceError, InfiniteGroup, NotAdmissible, NotGraded, NotSpherical,
                     TrivialityNotCertified)
from .groups import (FgAbelianGroup, FiniteGroup, PresentedGroup, abelianization,
                     finite_realization, reduce_word, simplify)
from .poset import Subdiagram, order_complex, require_connected
from .truth import Truth


# ------------------------------------------------------------ homology ----

@dataclass
class Homology:
    """Reduced integral homology; only nonzero groups are stored."""
    groups: dict = field(default_factory=dict)

    def __post_init__(self):
        self.groups = {k: g for k, g in self.groups.items() if not g.is_trivial()}

    def __getitem__(self, k):
        return self.groups.get(k, FgAbelianGroup())

    def betti(self, k):
        return self[k].rank

    def torsion(self, k):
        return self[k].torsion

    def __eq__(self, other):
        return isinstance(other, Homology) and self.groups == other.groups

    def describe(self):
        return {k: self.groups[k].describe() for k in sorted(self.groups)}

    def as_record(self):
        return {str(k): {"rank": g.rank, "torsion": list(g.torsion)}
                for k, g in sorted(self.groups.items())}

    def __repr__(self):
        inner = ", ".join(f"H{k}={v}" for k, v in self.describe().items())
        return f"Homology({inner or '0'})"


@dataclass
class ChainComplex:
    """Free chain complex with one basis list per degree.

    ``boundary[k][j]`` is the boundary of the j-th basis element of degree k,
    as a dict from basis indices in degree k-1 to integers.
    """
    bases: dict
    boundary: dict

    @property
    def degrees(self):
        return sorted(self.bases)

    def rank(self, k):
        return len(self.bases.get(k, ()))

    def matrix(self, k):
        """Dense matrix of d_k (rows indexed by degree k-1)."""
        rows = self.rank(k - 1)
        cols = self.boundary.get(k, [])
        out = linalg.zeros(rows, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def dd_zero(self):
        for k in self.degrees:
            lower = self.boundary.get(k - 1)
            if lower is None:
                continue
            for col in self.boundary.get(k, []):
                acc = {}
                for i, v in col.items():
                    for h, u in lower[i].items():
                        acc[h] = acc.get(h, 0) + v * u
                if any(acc.values()):
                    return False
        return True

    def homology(self):
        factors = {k: linalg.invariant_factors(self.boundary.get(k, []))
                   for k in self.degrees}
        groups = {}
        for k in self.degrees:
            here = factors[k]
            above = factors.get(k + 1, [])
            free = self.rank(k) - len(here) - len(above)
            groups[k] = FgAbelianGroup(free, [d for d in above if d > 1])
        return Homology(groups)


def _simplex_boundary(s):
    return [((-1) ** i, s[:i] + s[i + 1:]) for i in range(len(s))]


def simplicial_chain_complex(K):
    """Augmented simplicial chain complex of K (oriented by vertex order)."""
    by_dim = K.by_dimension()
    bases = {-1: [()]}
    for k, simps in by_dim.items():
        bases[k] = simps
    index = {k: {s: i for i, s in enumerate(b)} for k, b in bases.items()}
    boundary = {}
    for k, simps in by_dim.items():
        cols = []
        for s in simps:
            col = {}
            for sign, face in _simplex_boundary(s):
                j = index[k - 1][face]
                col[j] = col.get(j, 0) + sign
            cols.append(col)
        boundary[k] = cols
    return ChainComplex(bases, boundary)


def simplicial_homology(K):
    """Reduced integral homology of a simplicial complex."""
    return simplicial_chain_complex(K).homology()


def poset_homology(X):
    """Reduced homology of the order complex K(X)."""
    return simplicial_homology(order_complex(X))


# ---------------------------------------------------------- cellular ------

@dataclass
class CellularStructure:
    poset: object
    degree: dict
    generator: dict  # element -> {chain tuple: coefficient}, a cycle in K(U^_x)
    epsilon: dict = None

    def cells(self, p):
        return [x for x in self.poset.elements if self.degree[x] == p]

    @property
    def dimension(self):
        return max(self.degree.values(), default=-1)


def _local_complex(X, x):
    """Chains of the punctured down-set of x, grouped by dimension."""
    sub = X.induced(X.punctured_down_set(x))
    by_dim = {}
    for ch in sub.chains():
        by_dim.setdefault(len(ch) - 1, []).append(ch)
    return by_dim


def _sphere_generator(X, x, p):
    """Homology of K(U^_x) and, if it is a (p-1)-sphere's, a generating cycle."""
    if p == 0:
        return None, {(): 1}
    by_dim = _local_complex(X, x)
    K_bases = {-1: [()]}
    K_bases.update(by_dim)
    index = {k: {s: i for i, s in enumerate(b)} for k, b in K_bases.items()}
    boundary = {}
    for k, simps in by_dim.items():
        boundary[k] = []
        for s in simps:
            col = {}
            for sign, face in _simplex_boundary(s):
                j = index[k - 1][face]
                col[j] = col.get(j, 0) + sign
            boundary[k].append(col)
    H = ChainComplex(K_bases, boundary).homology()
    expected = Homology({p - 1: FgAbelianGroup(1)})
    if H != expected:
        return H, None
    # the top chain group has nothing above it, so H_{p-1} is ker d_{p-1}
    cc = ChainComplex(K_bases, boundary)
    basis = linalg.kernel_basis(cc.matrix(p - 1), ncols=cc.rank(p - 1))
    assert len(basis) == 1
    vec = linalg.normalize_sign(basis[0])
    return H, {s: v for s, v in zip(K_bases[p - 1], vec) if v}


def cellular_structure(X):
    """Check gradedness and the sphere condition; fix one generator per cell."""
    degree = {}
    for x in X.linear_extension():
        lows = X.lower_covers(x)
        hs = {degree[w] for w in lows}
        if len(hs) > 1:
            raise NotGraded(x)
        degree[x] = hs.pop() + 1 if hs else 0
    generator = {}
    for x in X.elements:
        H, gen = _sphere_generator(X, x, degree[x])
        if gen is None:
            raise NotSpherical(x, H.describe())
        generator[x] = gen
    S = CellularStructure(X, degree, generator)
    S.epsilon = incidence_numbers(S)
    return S


def incidence_numbers(S):
    """epsilon(x, w) for every cover w < x, by splitting the generator of U^_x.

    The part of the cycle made of chains through w lives in U_w; its
    boundary lies in U^_w and is a multiple of the generator there.
    """
    if S.epsilon is not None:
        return S.epsilon
    X = S.poset
    eps = {}
    for x in X.elements:
        if S.degree[x] == 0:
            continue
        z = S.generator[x]
        for w in X.lower_covers(x):
            bd = {}
            for s, v in z.items():
                if s[-1] != w:
                    continue
                for sign, face in _simplex_boundary(s):
                    bd[face] = bd.get(face, 0) + sign * v
            bd = {s: v for s, v in bd.items() if v}
            gw = S.generator[w]
            key = next(iter(gw))
            ratio, rem = divmod(bd.get(key, 0), gw[key])
            if rem or any(bd.get(s, 0) != ratio * v for s, v in gw.items()) \
                    or set(bd) - set(gw):
                raise FinspaceError(f"boundary at {(x, w)!r} is not a multiple of the generator")
            eps[(x, w)] = ratio
    return eps


def cellular_complex(S, epsilon=None):
    """C_p = Z[X^p] with d(x) = sum eps(x, w) w, augmented by d(x) = 1 in degree 0."""
    X = S.poset
    eps = incidence_numbers(S) if epsilon is None else epsilon
    bases = {-1: [None]}
    for x in X.elements:
        bases.setdefault(S.degree[x], []).append(x)
    index = {x: i for k, b in bases.items() if k >= 0 for i, x in enumerate(b)}
    boundary = {}
    for k in sorted(bases):
        if k < 0:
            continue
        cols = []
        for x in bases[k]:
            if k == 0:
                cols.append({0: 1})
            else:
                cols.append({index[w]: eps[(x, w)] for w in X.lower_covers(x) if eps[(x, w)]})
        boundary[k] = cols
    return ChainComplex(bases, boundary)


def cellular_homology(S):
    if not isinstance(S, CellularStructure):
        S = cellular_structure(S)
    return cellular_complex(S).homology()


# ------------------------------------------------------------ twisted -----

@dataclass
class TwistedComplex:
    group: FiniteGroup
    coloring: Coloring
    structure: CellularStructure
    complex: ChainComplex

    def homology(self):
        return self.complex.homology()


def _finite_coloring(c):
    G = c.group
    if isinstance(G, FiniteGroup):
        return c
    if isinstance(G, FgAbelianGroup) and G.is_finite:
        F, to_idx, _ = G.to_finite()
        return c.map(to_idx, F)
    raise InfiniteGroup(f"{G!r} is not finite")


def twisted_complex(S, c, epsilon=None):
    """Cellular complex of E(c): basis (x, g), d(g x) = sum eps(x, w) g c(w, x)^-1 w."""
    c = _finite_coloring(c)
    adm = is_admissible(c)
    if adm.verdict is not Truth.YES:
        raise NotAdmissible("coloring is not admissible", adm.counterexample)
    G = c.group
    n = G.order
    X = S.poset
    eps = incidence_numbers(S) if epsilon is None else epsilon
    cells = {}
    for x in X.elements:
        cells.setdefault(S.degree[x], []).append(x)
    pos = {x: i for k, b in cells.items() for i, x in enumerate(b)}
    bases = {-1: [None]}
    for k, b in cells.items():
        bases[k] = [(x, g) for x in b for g in range(n)]
    boundary = {}
    for k, b in cells.items():
        cols = []
        for x in b:
            for g in range(n):
                if k == 0:
                    cols.append({0: 1})
                    continue
                col = {}
                for w in X.lower_covers(x):
                    e = eps[(x, w)]
                    if e:
                        h = G.mul(g, G.inv(c(w, x)))
                        j = pos[w] * n + h
                        col[j] = col.get(j, 0) + e
                cols.append(col)
        boundary[k] = cols
    return TwistedComplex(G, c, S, ChainComplex(bases, boundary))


# ------------------------------------------------------------- pi_2 -------

@dataclass
class Pi2:
    """Tagged description of the second homotopy group."""
    kind: str            # AbelianGroup | FreeZGModuleOfRank | GroupRingTensor | Unknown | DirectSum
    group: FgAbelianGroup = None
    rank: int = None
    reason: str = ""
    parts: list = None
    pi1: str = ""

    def describe(self):
        if self.kind == "AbelianGroup":
            return f"AbelianGroup({self.group.describe()})"
        if self.kind == "FreeZGModuleOfRank":
            return f"FreeZGModuleOfRank({self.rank})"
        if self.kind == "GroupRingTensor":
            return f"GroupRingTensor({self.group.describe()})"
        if self.kind == "DirectSum":
            return "DirectSum(" + ", ".join(p.describe() for p in self.parts) + ")"
        return f"Unknown({self.reason})"

    def as_record(self):
        rec = {"kind": self.kind, "description": self.describe()}
        if self.group is not None:
            rec["rank"] = self.group.rank
            rec["torsion"] = list(self.group.torsion)
        if self.rank is not None:
            rec["module_rank"] = self.rank
        if self.reason:
            rec["reason"] = self.reason
        if self.parts:
            rec["parts"] = [p.as_record() for p in self.parts]
        return rec


@dataclass
class HurewiczCondition:
    verdict: Truth
    diagram: Subdiagram
    components: list
    failed: object = None


def hurewicz_condition(X, pres=None):
    """Do the components of the height-1..3 diagram include trivially on pi_1?"""
    require_connected(X)
    pres = pres or pi1_presentation(X)
    verts = {x for x in X.elements if 1 <= X.height_of(x) <= 3}
    edges = {(a, b) for a, b in X.covers if a in verts and b in verts}
    D = Subdiagram(X, verts, edges)
    comps = []
    for comp in D.components():
        cs = set(comp)
        comps.append(Subdiagram(X, cs, {e for e in edges if e[0] in cs}))
    for part in comps:
        verdict, bad = inclusion_is_trivial(pres, part)
        if verdict is not Truth.YES:
            return HurewiczCondition(Truth.UNKNOWN, D, comps, bad)
    return HurewiczCondition(Truth.YES, D, comps)


def pi2(X, x0=None, budget=2000):
    """pi_2 via the universal cover when pi_1 is certified finite, else via the
    height-1..3 triviality test, else Unknown."""
    require_connected(X)
    S = cellular_structure(X)
    pres = pi1_presentation(X, x0)
    simp = simplify(pres.presentation, budget)
    real = finite_realization(pres.presentation, simp)
    if real is not None:
        c = push_standard_coloring(standard_coloring(X, x0, pres), real)
        H = twisted_complex(S, c).homology()
        return Pi2("AbelianGroup", group=H[2], pi1=simp.verdict)
    cond = hurewicz_condition(X, pres)
    if cond.verdict is Truth.YES:
        H2 = cellular_homology(S)[2]
        if H2.torsion:
            return Pi2("GroupRingTensor", group=H2, pi1=simp.verdict)
        return Pi2("FreeZGModuleOfRank", rank=H2.rank, pi1=simp.verdict)
    reason = "pi1 not certified finite; height-1..3 diagram not certified trivial"
    if cond.failed is not None:
        reason += f" at {cond.failed!r}"
    return Pi2("Unknown", reason=reason, pi1=simp.verdict)


def _normal_form(G):
    if isinstance(G, (FiniteGroup, FgAbelianGroup)):
        return lambda g: g
    if isinstance(G, PresentedGroup):
        simp = G.simplification
        if simp.kind in ("trivial", "cyclic", "abelian"):
            return G.abelianization.project
        if simp.kind == "free":
            return lambda w: reduce_word(simp.rewrite(w))
    raise TrivialityNotCertified(f"no normal form for elements of {G!r}")


def pi2_equations(S, c, alpha):
    """Left sides of the equations for (w, h), keyed by (w, normal form of h)."""
    X, G = S.poset, c.group
    eps = incidence_numbers(S)
    nf = _normal_form(G)
    sides = {}
    for (x, g), n in alpha.items():
        if not n:
            continue
        if S.degree[x] != 2:
            raise ValueError(f"{x!r} is not a 2-cell")
        for w in X.lower_covers(x):
            e = eps[(x, w)]
            if not e:
                continue
            h = nf(G.mul(g, G.inv(c(w, x))))
            sides[(w, h)] = sides.get((w, h), 0) + e * n
    return sides


def pi2_membership(X, c, alpha, S=None):
    """Is sum n g x (alpha maps (x, g) to n) a cycle of the twisted complex?

    Each equation, for a 1-cell w and h in G, reads
    sum over x > w of eps(x, w) n^x_{h c(w, x)} = 0; only h coming from the
    support of alpha can give a nonzero left side.
    """
    S = S or cellular_structure(X)
    if S.dimension > 2:
        raise ValueError("poset must have height at most 2")
    return all(v == 0 for v in pi2_equations(S, c, alpha).values())


def wedge_pi2(pi2X, pi1X, pi2Y):
    """pi_2(X v Y) = pi_2(X) + Z[pi_1 X] (x) pi_2(Y) for simply connected Y."""
    if pi2Y.is_trivial():
        return pi2X
    simp = simplify(pi1X)
    real = finite_realization(pi1X, simp)
    if real is not None and not pi2Y.torsion and pi2X.kind == "AbelianGroup":
        n = real.group.order
        g = pi2X.group
        return Pi2("AbelianGroup", group=FgAbelianGroup(g.rank + n * pi2Y.rank, g.torsion),
                   pi1=simp.verdict)
    if pi2Y.torsion:
        extra = Pi2("GroupRingTensor", group=pi2Y, pi1=simp.verdict)
    else:
        extra = Pi2("FreeZGModuleOfRank", rank=pi2Y.rank, pi1=simp.verdict)
    if pi2X.kind == "FreeZGModuleOfRank" and extra.kind == "FreeZGModuleOfRank":
        return Pi2("FreeZGModuleOfRank", rank=pi2X.rank + extra.rank, pi1=simp.verdict)
    if pi2X.kind == "AbelianGroup" and pi2X.group.is_trivial():
        return extra
    return Pi2("DirectSum", parts=[pi2X, extra], pi1=simp.verdict)
