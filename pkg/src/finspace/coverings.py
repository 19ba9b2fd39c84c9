"""Coverings of posets: E(c), verification, lifting, deck groups, Milnor's
construction and the simplicial-complex correspondence checks."""
from collections import deque
from dataclasses import dataclass, field

from .colorings import Coloring, is_admissible, push_standard_coloring, standard_coloring
from .edgepath import EdgePath, pi1_presentation
from .errors import InfiniteGroup, NotAdmissible, NotCovering, NotFiniteOrUnknownPi1
from .groups import FgAbelianGroup, FiniteGroup, finite_realization, simplify
from .poset import MonotoneMap, Poset, SimplicialComplex, _bits, face_poset, order_complex
from .truth import Truth


@dataclass
class CoveringMap:
    total: Poset
    base: Poset
    projection: MonotoneMap
    group: object = None
    coloring: Coloring = None

    def __call__(self, e):
        return self.projection(e)

    def fiber(self, b):
        return self.projection.fiber(b)


@dataclass
class CoveringCheck:
    ok: bool
    counterexample: object = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _as_finite(G):
    if isinstance(G, FiniteGroup):
        return G, None
    if isinstance(G, FgAbelianGroup) and G.is_finite:
        F, to_idx, _ = G.to_finite()
        return F, to_idx
    raise InfiniteGroup(f"{G!r} is not a finite group")


def build_cover(c, check=True):
    """E(c) on B x G with (x, g) < (y, g c(x, y)); fibers in group order."""
    G, convert = _as_finite(c.group)
    if convert is not None:
        c = c.map(convert, G)
    adm = is_admissible(c)
    if adm.verdict is not Truth.YES:
        raise NotAdmissible("coloring is not admissible", adm.counterexample)
    B = c.poset
    elems = [(x, g) for x in B.elements for g in range(G.order)]
    covers = [((x, g), (y, G.mul(g, col))) for (x, y), col in c.colors.items()
              for g in range(G.order)]
    E = Poset(elems, covers)
    p = MonotoneMap(E, B, {(x, g): x for x, g in elems})
    if check:
        res = verify_covering(p)
        if not res:
            raise NotCovering(res.reason, res.counterexample)
    return CoveringMap(E, B, p, G, c)


def verify_covering(p):
    """Surjective, and bijective from each U_e onto U_p(e) and F_e onto F_p(e)."""
    E, B = p.source, p.target
    if not p.is_surjective():
        missing = next(b for b in B.elements if not p.fiber(b))
        return CoveringCheck(False, missing, "not surjective")
    img = [B.index[p(e)] for e in E.elements]
    for i, e in enumerate(E.elements):
        for masks_e, masks_b, what in ((E._below, B._below, "down-set"),
                                       (E._above, B._above, "up-set")):
            seen = 0
            for j in _bits(masks_e[i]):
                bit = 1 << img[j]
                if seen & bit:
                    return CoveringCheck(False, e, f"{what} not injective")
                seen |= bit
            if seen != masks_b[img[i]]:
                return CoveringCheck(False, e, f"{what} not onto")
    return CoveringCheck(True)


def verify_covering_by_chains(p):
    """Preimage of every chain is a disjoint union of chains, each mapped
    bijectively onto it."""
    E, B = p.source, p.target
    if not p.is_surjective():
        return CoveringCheck(False, None, "not surjective")
    fibers = {b: [] for b in B.elements}
    for e in E.elements:
        fibers[p(e)].append(e)
    for ch in B.chains():
        pre = [e for b in ch for e in fibers[b]]
        sub = E.induced(set(pre))
        for comp in sub.components():
            images = sorted((B.index[p(e)] for e in comp))
            if images != sorted(B.index[b] for b in ch):
                return CoveringCheck(False, ch, "component does not map bijectively")
            if len(sub.induced(set(comp)).maximal_chains()) != 1:
                return CoveringCheck(False, ch, "component is not a chain")
    return CoveringCheck(True)


def _step_lift(p, e, a, b):
    E = p.total if isinstance(p, CoveringMap) else p.source
    proj = p.projection if isinstance(p, CoveringMap) else p
    B = proj.target
    if B.is_cover(a, b):
        cands = [f for f in E.upper_covers(e) if proj(f) == b]
    else:
        cands = [f for f in E.lower_covers(e) if proj(f) == b]
    if len(cands) != 1:
        raise NotCovering(f"{len(cands)} lifts of step {(a, b)!r} at {e!r}", e)
    return cands[0]


def lift_path(p, xi, e0):
    """The unique lift of xi starting at e0."""
    if p(e0) != xi.start:
        raise ValueError("e0 is not over the start of the path")
    steps = []
    e = e0
    for a, b in xi.steps:
        f = _step_lift(p, e, a, b)
        steps.append((e, f))
        e = f
    return EdgePath(p.total, e0, steps)


def deck_transformations(p):
    """All automorphisms h of the total space with p h = p.

    Each component is determined by the image of one point; components are
    matched by backtracking so the disconnected case is covered too.
    """
    E = p.total
    comps = E.components()

    def propagate(root, image):
        h = {root: image}
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for f in E.neighbors(e):
                try:
                    val = _step_lift(p, h[e], p(e), p(f))
                except NotCovering:
                    return None
                if f in h:
                    if h[f] != val:
                        return None
                else:
                    h[f] = val
                    queue.append(f)
        return h

    results = []

    def search(k, h, used):
        if k == len(comps):
            results.append(dict(h))
            return
        root = comps[k][0]
        for cand in p.fiber(p(root)):
            if cand in used:
                continue
            part = propagate(root, cand)
            if part is None:
                continue
            vals = set(part.values())
            if len(vals) != len(part) or vals & used:
                continue
            h.update(part)
            search(k + 1, h, used | vals)
            for key in part:
                del h[key]

    search(0, {}, set())
    out = []
    cover_set = set(E.covers)
    for h in results:
        if all((h[a], h[b]) in cover_set for a, b in E.covers):
            out.append(h)
    out.sort(key=lambda h: [E.index[h[e]] for e in E.elements])
    return out


def cover_isomorphism(p, p2, witness):
    """h(x, g) = (x, phi(g g_x^-1)) from E(c) to E(c') when c' = phi(g_x c g_y^-1).

    Returns the map; it is an isomorphism of posets with p2 h = p.
    """
    G = p.group
    h = {}
    for x, g in p.total.elements:
        h[(x, g)] = (x, witness.phi[G.mul(g, G.inv(witness.gauge[x]))])
    f = MonotoneMap(p.total, p2.total, h)
    images = {h[a] for a in p.total.elements}
    edges = {(h[a], h[b]) for a, b in p.total.covers}
    if len(images) != len(h) or edges != set(p2.total.covers):
        raise NotCovering("witness does not give an isomorphism of the covers")
    return f


def universal_cover(X, x0=None):
    """E of the standard coloring pushed into a finite realization of pi_1."""
    pres = pi1_presentation(X, x0)
    simp = simplify(pres.presentation)
    real = finite_realization(pres.presentation, simp)
    if real is None:
        raise NotFiniteOrUnknownPi1(f"fundamental group: {simp.verdict}")
    c = push_standard_coloring(standard_coloring(X, x0, pres), real)
    return build_cover(c)


# ------------------------------------------------------------- Milnor -----

@dataclass
class MilnorConstruction:
    poset: Poset
    group: FiniteGroup
    action: list          # action[g] is a dict element -> element
    quotient: Poset
    projection: MonotoneMap
    covering: CoveringMap = None


def milnor_poset(G):
    """Height-2 poset on G x Z3, G x G x Z3 and G x G x G with free G-action.

    Labels: ("p", g, i) minimal, ("e", g, h, i) middle, ("f", g, h, k) top.
    """
    n = G.order
    elems = [("p", g, i) for g in range(n) for i in range(3)]
    elems += [("e", g, h, i) for g in range(n) for h in range(n) for i in range(3)]
    elems += [("f", g, h, k) for g in range(n) for h in range(n) for k in range(n)]
    covers = []
    for g in range(n):
        for h in range(n):
            for i in range(3):
                e = ("e", g, h, (i + 1) % 3)
                covers.append((("p", g, i), e))
                covers.append((("p", h, (i + 2) % 3), e))
            for k in range(n):
                f = ("f", g, h, k)
                covers += [(("e", g, h, 1), f), (("e", k, g, 2), f), (("e", h, k, 0), f)]
    X = Poset(elems, covers)

    def act(a, x):
        if x[0] == "p":
            return ("p", G.mul(a, x[1]), x[2])
        if x[0] == "e":
            return ("e", G.mul(a, x[1]), G.mul(a, x[2]), x[3])
        return ("f", G.mul(a, x[1]), G.mul(a, x[2]), G.mul(a, x[3]))

    action = [{x: act(a, x) for x in elems} for a in range(n)]

    def rep(x):
        return act(G.inv(x[1]), x)

    q_elems = []
    seen = set()
    for x in elems:
        r = rep(x)
        if r not in seen:
            seen.add(r)
            q_elems.append(r)
    q_covers = {(rep(a), rep(b)) for a, b in covers}
    Q = Poset(q_elems, sorted(q_covers, key=lambda ab: (q_elems.index(ab[0]), q_elems.index(ab[1]))))
    proj = MonotoneMap(X, Q, {x: rep(x) for x in elems})
    res = verify_covering(proj)
    if not res:
        raise NotCovering(res.reason, res.counterexample)
    return MilnorConstruction(X, G, action, Q, proj, CoveringMap(X, Q, proj, G))


# ---------------------------------------------- simplicial correspondence --

@dataclass
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: dict


def order_complex_map(p):
    """K(p) for a covering or monotone map."""
    proj = p.projection if isinstance(p, CoveringMap) else p
    return SimplicialMap(order_complex(proj.source), order_complex(proj.target),
                         dict(proj.assignment))


def simplicial_covering_check(p):
    """Preimage of every simplex of K(B) is a disjoint union of simplices of
    K(E), each mapped isomorphically onto it."""
    phi = p if isinstance(p, SimplicialMap) else order_complex_map(p)
    L, K, f = phi.source, phi.target, phi.vertex_map
    fibers = {}
    for v in L.vertices:
        fibers.setdefault(f[v], []).append(v)
    edges = {}
    for s in L.by_dimension().get(1, []):
        edges.setdefault(s[0], set()).add(s[1])
        edges.setdefault(s[1], set()).add(s[0])
    for sigma in K.simplices:
        pre = {v for b in sigma for v in fibers.get(b, [])}
        if not pre:
            return False
        seen = set()
        for v in sorted(pre, key=L.vindex.get):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in edges.get(u, ()):
                    if w in pre and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            if not L.has(tuple(comp)):
                return False
            if sorted(map(repr, (f[u] for u in comp))) != sorted(map(repr, sigma)):
                return False
    return True


def face_poset_map(phi):
    """X(phi): X(L) -> X(K), a simplex goes to its image simplex."""
    XL, XK = face_poset(phi.source), face_poset(phi.target)
    assignment = {}
    for s in XL.elements:
        img = phi.target._canon([phi.vertex_map[v] for v in s])
        assignment[s] = img
    return MonotoneMap(XL, XK, assignment)


def face_poset_covering_check(phi):
    if isinstance(phi, (CoveringMap, MonotoneMap)):
        phi = order_complex_map(phi)
    return bool(verify_covering(face_poset_map(phi)))
