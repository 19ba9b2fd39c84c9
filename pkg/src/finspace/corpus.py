"""Reproducibility harness: every acceptance check over the bundled spaces.

Each check returns ``(ok, detail)``; ``run_corpus`` collects them into a
deterministic report.  ``fault`` deliberately corrupts one input so the
harness can be seen to fail.
"""
import random
from dataclasses import dataclass

from .asphericity import aspherical_2complex, aspherical_presentation
from .boards import (board, brute_force_classes, brute_force_valid, count_classes,
                     moves_equivalent, seam_coloring, to_poset_coloring, valid_basis)
from .cellular import (cellular_complex, cellular_homology, cellular_structure, pi2,
                       pi2_membership, poset_homology, simplicial_homology, twisted_complex)
from .colorings import (Coloring, invert_coloring, is_admissible, is_connected_coloring,
                        push_standard_coloring, standard_coloring, weight)
from .coverings import (build_cover, deck_transformations, face_poset_covering_check, lift_path,
                        milnor_poset, simplicial_covering_check, universal_cover,
                        verify_covering)
from .edgepath import EdgePath, fundamental_cycles, pi1_presentation, tree_paths
from .groups import (FgAbelianGroup, FiniteGroup, GroupPresentation, abelianization,
                     exponent_sums, simplify)
from . import models
from .poset import face_poset
from .truth import Truth

EXOCTO = "<a, b, c, d, e | b^2 c a^-1 b^-1 d b a, c^-1 d e b e>"
TORUS = "<a, b | a b a^-1 b^-1>"
RP2 = "<a | a^2>"


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str


# ------------------------------------------------------------ helpers -----

def random_loop(X, x0, rng, steps=12):
    """Random walk from x0 closed up through the spanning tree."""
    from .edgepath import spanning_tree_subdiagram
    at = x0
    walk = []
    for _ in range(steps):
        nbrs = X.neighbors(at)
        if not nbrs:
            break
        nxt = rng.choice(sorted(nbrs, key=X.idx))
        walk.append((at, nxt))
        at = nxt
    back = tree_paths(spanning_tree_subdiagram(X), x0)[at].inverse()
    return EdgePath(X, x0, walk) * back


def random_face_poset(rng, max_elements=20):
    while True:
        K = models.random_two_complex(rng, nverts=rng.randint(4, 6), ntri=rng.randint(1, 3),
                                      nextra=rng.randint(0, 2))
        X = face_poset(K)
        if len(X) <= max_elements:
            return K, X


def cyclic_cover_colorings():
    """Some admissible colorings of the 4-point circle and of RP^2."""
    C = models.circle4()
    out = []
    for n in (2, 3, 4):
        G = FiniteGroup.cyclic(n)
        cols = {e: G.identity for e in C.covers}
        cols[C.covers[-1]] = 1
        out.append(Coloring(C, G, cols))
    G2 = FiniteGroup.cyclic(2)
    out.append(Coloring.trivial(C, G2))
    return out


def suite_coverings():
    """(name, covering) for every covering the suite builds."""
    covs = [("milnor Z_2", milnor_poset(FiniteGroup.cyclic(2)).covering),
            ("milnor Z_3", milnor_poset(FiniteGroup.cyclic(3)).covering),
            ("universal cover RP2", universal_cover(models.rp2()))]
    for i, c in enumerate(cyclic_cover_colorings()):
        covs.append((f"circle cover {i} ({c.group.name})", build_cover(c)))
    b = board("Cylinder", 4, 1)
    covs.append(("cylinder seam cover", build_cover(to_poset_coloring(b, seam_coloring(b)))))
    return covs


def covering_loop_properties(cov, rng, loops=100):
    """Unique lifts, and closed lift <=> trivial weight, on fundamental cycles
    plus random loops."""
    B = cov.base
    c = cov.coloring
    base = B.elements[0]
    paths = [xi for _, xi in fundamental_cycles(pi1_presentation(B))]
    paths += [random_loop(B, base, rng) for _ in range(loops)]
    for xi in paths:
        for e0 in cov.fiber(base):
            lift = lift_path(cov, xi, e0)
            if [cov(v) for v in lift.vertices()] != xi.vertices():
                return False, "lift does not project onto the path"
            if c is not None and (weight(c, xi) == c.group.identity) != lift.is_closed():
                return False, f"fix-subgroup property fails on {xi!r}"
    return True, f"{len(paths)} loops"


# ------------------------------------------------------------- checks -----

def check_milnor_rp2(fault=None):
    m = milnor_poset(FiniteGroup.cyclic(2))
    Q = m.quotient
    pres = pi1_presentation(Q)
    simp = simplify(pres.presentation)
    ab = abelianization(pres.presentation).group
    H = cellular_homology(Q)
    U = universal_cover(Q)
    deck = deck_transformations(U)
    p2 = pi2(Q)
    got = {
        "quotient": len(Q), "simplify": simp.verdict, "abelianization": ab.describe(),
        "H1": H[1].describe(), "H2": H[2].describe(), "cover": len(U.total),
        "verified": bool(verify_covering(U.projection)), "deck": len(deck), "pi2": p2.describe(),
    }
    want = {
        "quotient": 13, "simplify": "IsomorphicTo(Z_2)", "abelianization": "Z_2",
        "H1": "Z_2", "H2": "1", "cover": 26, "verified": True, "deck": 2,
        "pi2": "AbelianGroup(Z)",
    }
    return got == want, str(got)


def check_boards(fault=None):
    notes = []
    ok = True
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            k = count_classes(board("Rectangle", n, m))
            ok &= k == 1
    for m in (1, 2):
        k = count_classes(board("Cylinder", 4, m))
        ok &= k == 2
    T = board("Torus", 4, 4)
    basis = valid_basis(T)
    cols = []
    for mask in range(1 << len(basis)):
        col = 0
        for i, vec in enumerate(basis):
            if mask >> i & 1:
                col ^= vec
        cols.append(col)
    brute, _ = brute_force_classes(T, cols)
    ok &= brute == count_classes(T)
    notes.append(f"torus 4x4: {count_classes(T)} classes, brute force {brute}")
    for kind, n, m in small_boards():
        b = board(kind, n, m)
        valid = brute_force_valid(b)
        classes, label = brute_force_classes(b, valid)
        ok &= classes == count_classes(b)
        for c1 in valid:
            for c2 in valid:
                if bool(moves_equivalent(b, c1, c2)) != (label[c1] == label[c2]):
                    ok = False
    notes.append(f"{len(small_boards())} small boards cross-checked")
    return ok, "; ".join(notes)


def small_boards():
    """All boards with at most 12 edges."""
    out = []
    for n in range(1, 4):
        for m in range(1, 4):
            if board("Rectangle", n, m).num_edges <= 12:
                out.append(("Rectangle", n, m))
    out.append(("Cylinder", 4, 1))
    return out


def check_cellular_vs_simplicial(seed=0, count=50, fault=None):
    rng = random.Random(seed)
    spaces = [X for name, X in models.corpus().items()]
    for _ in range(count):
        spaces.append(random_face_poset(rng)[1])
    for X in spaces:
        if cellular_homology(X) != poset_homology(X):
            return False, f"mismatch on a {len(X)}-element poset"
    return True, f"{len(spaces)} posets"


def check_coverings(seed=0, fault=None):
    rng = random.Random(seed)
    names = []
    for name, cov in suite_coverings():
        if not simplicial_covering_check(cov):
            return False, f"{name}: simplicial check failed"
        if not face_poset_covering_check(cov):
            return False, f"{name}: face poset check failed"
        ok, why = covering_loop_properties(cov, rng)
        if not ok:
            return False, f"{name}: {why}"
        names.append(name)
    return True, f"{len(names)} coverings"


def pi2_example_coloring():
    X = models.s1_s2_s2()
    Z = FgAbelianGroup(1)
    cols = {e: (0,) for e in X.covers}
    for e in [("u", "x"), ("t", "x"), ("v", "x"), ("o", "s"), ("o", "r")]:
        cols[e] = (1,)
    return X, Coloring(X, Z, cols)


def check_pi2_equations(seed=0, fault=None):
    rng = random.Random(seed)
    X, c = pi2_example_coloring()
    S = cellular_structure(X)
    a, one = (1,), (0,)
    gens = [{("x", a): 1, ("y", one): -1}, {("z", one): 1, ("w", one): -1}]
    if not all(pi2_membership(X, c, g, S) for g in gens):
        return False, "generators rejected"
    for _ in range(20):
        alpha = perturbed_chain(rng)
        if pi2_membership(X, c, alpha, S):
            return False, f"perturbation accepted: {alpha}"
    p = pi2(X)
    if p.describe() != "FreeZGModuleOfRank(2)":
        return False, p.describe()
    Z4 = FgAbelianGroup(0, [4])
    T = twisted_complex(S, c.map(lambda g: (g[0] % 4,), Z4))
    r = T.homology()[2].rank
    return r == 8, f"twisted H2 rank {r} over Z_4"


def perturbed_chain(rng):
    """Random element of the kernel plus one stray term."""
    alpha = {}

    def add(key, n):
        alpha[key] = alpha.get(key, 0) + n
    for _ in range(rng.randint(1, 3)):
        g = rng.randint(-3, 3)
        k = rng.choice([-2, -1, 1, 2])
        if rng.random() < 0.5:
            add(("x", (g + 1,)), k)
            add(("y", (g,)), -k)
        else:
            add(("z", (g,)), k)
            add(("w", (g,)), -k)
    add((rng.choice("xyzw"), (rng.randint(-4, 4),)), rng.choice([-1, 1]))
    return {k: v for k, v in alpha.items() if v}


def check_hurewicz_degenerate(seed=0, count=20, fault=None):
    rng = random.Random(seed)
    for _ in range(count):
        K = models.random_two_complex(rng, nverts=5, ntri=rng.randint(1, 3),
                                      nextra=rng.randint(0, 2))
        L = models.cone_on_one_skeleton(K)
        X = face_poset(L)
        p = pi2(X)
        H2 = simplicial_homology(L)[2]
        if p.kind != "AbelianGroup" or p.group != H2:
            return False, f"pi2 {p.describe()} vs H2 {H2.describe()}"
    return True, f"{count} coned complexes"


def check_asphericity(fault=None):
    ex = aspherical_presentation(GroupPresentation.parse(EXOCTO))
    sums = [c.exponent_sums for c in ex.certificates]
    got = {
        "exocto": ex.verdict, "a+3b": [1, 3, 0, 0, 0] in sums,
        "torus": aspherical_presentation(GroupPresentation.parse(TORUS)).verdict,
        "rp2": aspherical_presentation(GroupPresentation.parse(RP2)).verdict,
        "torus7": aspherical_2complex(models.torus7(), certified_regular=True).verdict,
        "tetrahedron": aspherical_2complex(models.tetrahedron(), certified_regular=True).verdict,
    }
    want = {"exocto": "Aspherical", "a+3b": True, "torus": "Aspherical", "rp2": "Unknown",
            "torus7": "Aspherical", "tetrahedron": "Unknown"}
    return got == want, str(got)


def check_properties(seed=0, fault=None):
    rng = random.Random(seed)
    spaces = models.corpus()
    # d o d = 0 on plain and twisted complexes
    for name, X in spaces.items():
        S = cellular_structure(X)
        eps = dict(S.epsilon)
        if fault == "epsilon" and name == "rp2":
            k = next(k for k, v in sorted(eps.items(), key=str) if v)
            eps[k] = -eps[k]
        if not cellular_complex(S, eps).dd_zero():
            return False, f"d o d != 0 on {name}"
        if name in ("rp2", "sphere6", "circle4"):
            pres = pi1_presentation(X)
            from .groups import finite_realization
            real = finite_realization(pres.presentation)
            if real is not None and not twisted_complex(
                    S, push_standard_coloring(standard_coloring(X, None, pres), real),
                    eps).complex.dd_zero():
                return False, f"twisted d o d != 0 on {name}"
    # beat points
    for _ in range(100):
        X = models.random_poset(rng, rng.randint(1, 12))
        if poset_homology(X) != poset_homology(X.core()):
            return False, "core changed homology"
    # abelianization = H_1
    for name, X in spaces.items():
        ab = abelianization(pi1_presentation(X).presentation).group
        if ab != poset_homology(X)[1]:
            return False, f"abelianization differs from H1 on {name}"
    # inverse colorings on boards
    for kind, n, m in [("Rectangle", 2, 2), ("Cylinder", 4, 1), ("Cylinder", 4, 2),
                       ("Torus", 4, 4)]:
        X = board(kind, n, m).poset
        c = abelian_board_coloring(X, rng)
        d = invert_coloring(c)
        if not (is_admissible(d) and is_connected_coloring(d) is Truth.YES):
            return False, f"inverse coloring on {kind} {n}x{m}"
    return True, "d o d, core, abelianization, inverse colorings"


def abelian_board_coloring(X, rng):
    """Admissible connected coloring by the abelianized pi_1, randomly gauged."""
    pres = pi1_presentation(X)
    ab = abelianization(pres.presentation)
    A = ab.group
    std = standard_coloring(X, None, pres)
    gauge = {x: tuple(rng.randint(-3, 3) if i < A.rank else rng.randrange(d)
                      for i, d in enumerate([0] * A.rank + list(A.torsion)))
             for x in X.elements}
    cols = {}
    for (x, y), w in std.colors.items():
        cols[(x, y)] = A.mul(A.mul(gauge[x], ab.project(w)), A.inv(gauge[y]))
    return Coloring(X, A, cols)


CHECKS = [
    ("1 milnor/rp2 pipeline", check_milnor_rp2),
    ("2 board theorems", check_boards),
    ("3 cellular = simplicial homology", check_cellular_vs_simplicial),
    ("4 covering correspondence", check_coverings),
    ("5 pi2 equations", check_pi2_equations),
    ("6 hurewicz degenerate case", check_hurewicz_degenerate),
    ("7 asphericity", check_asphericity),
    ("8 property suites", check_properties),
]


def run_corpus(seed=0, fault=None, only=None):
    results = []
    for name, fn in CHECKS:
        if only and not name.startswith(str(only)):
            continue
        kwargs = {"fault": fault}
        if "seed" in fn.__code__.co_varnames:
            kwargs["seed"] = seed
        try:
            ok, detail = fn(**kwargs)
        except Exception as err:  # a crash is a failure, reported like one
            ok, detail = False, f"{type(err).__name__}: {err}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
