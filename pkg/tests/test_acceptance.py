"""Acceptance criteria 1-8, each one test.

The terminal summary (see conftest.py) prints one PASS/FAIL line per
criterion.  Running this file directly prints the same lines.
"""
import random
from collections import deque

from finspace import models
from finspace.asphericity import aspherical_2complex, aspherical_presentation
from finspace.boards import board, count_classes, is_valid, moves_equivalent, seam_coloring, \
    to_poset_coloring
from finspace.cellular import (cellular_complex, cellular_homology, cellular_structure, pi2,
                               pi2_membership, poset_homology, simplicial_chain_complex,
                               simplicial_homology, twisted_complex)
from finspace.colorings import (Coloring, invert_coloring, is_admissible, is_connected_coloring,
                                push_standard_coloring, standard_coloring, weight)
from finspace.coverings import (build_cover, deck_transformations, face_poset_covering_check,
                                lift_path, milnor_poset, simplicial_covering_check,
                                universal_cover, verify_covering)
from finspace.edgepath import EdgePath, fundamental_cycles, pi1_presentation
from finspace.groups import (FgAbelianGroup, FiniteGroup, GroupPresentation, abelianization,
                             finite_realization, simplify)
from finspace.poset import face_poset, order_complex
from finspace.truth import Truth

EXOCTO = "<a, b, c, d, e | b^2 c a^-1 b^-1 d b a, c^-1 d e b e>"


# ------------------------------------------------------------ helpers -----

def closed_random_loop(X, x0, rng, steps=12):
    """Random walk from x0, brought home along a BFS shortest path."""
    at, walk = x0, []
    for _ in range(steps):
        nxt = rng.choice(sorted(X.neighbors(at), key=X.idx))
        walk.append((at, nxt))
        at = nxt
    prev = {at: None}
    queue = deque([at])
    while queue:
        u = queue.popleft()
        for v in sorted(X.neighbors(u), key=X.idx):
            if v not in prev:
                prev[v] = u
                queue.append(v)
    v = x0
    route = [v]
    while prev[v] is not None:
        v = prev[v]
        route.append(v)
    route.reverse()  # at ... x0
    walk += [(route[i], route[i + 1]) for i in range(len(route) - 1)]
    return EdgePath(X, x0, walk)


def neighbour_lift(cov, xi, e0):
    """Lift a path step by step, asserting exactly one candidate per step."""
    E = cov.total
    e, seen = e0, [e0]
    for _, b in xi.steps:
        cands = [f for f in E.neighbors(e) if cov(f) == b]
        assert len(cands) == 1, f"{len(cands)} lifts at {e!r}"
        e = cands[0]
        seen.append(e)
    return seen


def valid_by_backtracking(b):
    """Every valid board coloring, found edge by edge with parity pruning.

    Edges are visited square by square so that squares close early.
    """
    order = []
    for sq in b.squares:
        order += [e for e in sq if e not in order]
    order += [e for e in range(b.num_edges) if e not in order]
    pos = {e: i for i, e in enumerate(order)}
    closing = {}
    for sq in b.squares:
        closing.setdefault(max(pos[e] for e in sq), []).append(sq)
    out = []
    stack = [(0, 0)]
    while stack:
        i, col = stack.pop()
        if i == len(order):
            out.append(col)
            continue
        for bit in (0, 1):
            c = col | bit << order[i]
            if all(sum(c >> e & 1 for e in sq) % 2 == 0 for sq in closing.get(i, ())):
                stack.append((i + 1, c))
    return out


def move_orbits(b, pool):
    """Orbit labels under single vertex moves, by BFS."""
    flips = []
    for v in b.vertices:
        flips.append(sum(1 << k for k, (x, y) in enumerate(b.edges) if v in (x, y)))
    label = {}
    n = 0
    for start in sorted(pool):
        if start in label:
            continue
        label[start] = n
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for mask in flips:
                d = c ^ mask
                if d not in label:
                    label[d] = n
                    queue.append(d)
        n += 1
    return n, label


def suite_covers():
    C = models.circle4()
    covers = []
    for n in (2, 3, 4):
        G = FiniteGroup.cyclic(n)
        cols = {e: 0 for e in C.covers}
        cols[C.covers[-1]] = 1
        covers.append(build_cover(Coloring(C, G, cols)))
    covers.append(build_cover(Coloring.trivial(C, FiniteGroup.cyclic(2))))
    covers.append(build_cover(Coloring.trivial(models.sphere6(), FiniteGroup.cyclic(3))))
    b = board("Cylinder", 4, 1)
    covers.append(build_cover(to_poset_coloring(b, seam_coloring(b))))
    covers.append(universal_cover(models.rp2()))
    for n in (2, 3):
        covers.append(milnor_poset(FiniteGroup.cyclic(n)).covering)
    return covers


def base_weight_function(cov):
    """w(xi) == identity, from the cover's coloring or, for Milnor covers
    (universal by construction), from the base's own pi_1 realization."""
    if cov.coloring is not None:
        c = cov.coloring
    else:
        B = cov.base
        pres = pi1_presentation(B)
        real = finite_realization(pres.presentation)
        c = push_standard_coloring(standard_coloring(B, None, pres), real)
    return lambda xi: c.group.equal(weight(c, xi), c.group.identity) is Truth.YES


def twisted_boundary(T, alpha):
    """d_2 of alpha in the expanded complex; alpha maps (x, k) to n with k in Z_N."""
    index = {cell: j for j, cell in enumerate(T.complex.bases[2])}
    out = {}
    for cell, n in alpha.items():
        for i, v in T.complex.boundary[2][index[cell]].items():
            out[i] = out.get(i, 0) + n * v
    return {i: v for i, v in out.items() if v}


# ----------------------------------------------------------- criteria -----

def test_criterion_1_milnor_rp2_pipeline():
    m = milnor_poset(FiniteGroup.cyclic(2))
    Q = m.quotient
    assert len(Q) == 13
    assert len(m.poset) == 26
    pres = pi1_presentation(Q).presentation
    assert abelianization(pres).group.describe() == "Z_2"
    assert simplify(pres).verdict == "IsomorphicTo(Z_2)"
    H = cellular_homology(Q)
    assert H[1].describe() == "Z_2"
    assert H[2].is_trivial()
    # homology oracle: the order complex
    K = simplicial_homology(order_complex(Q))
    assert K[1] == FgAbelianGroup(0, [2]) and K[2].is_trivial()
    U = universal_cover(Q)
    assert len(U.total) == 26
    assert verify_covering(U.projection)
    assert U.total.is_connected()
    deck = deck_transformations(U)
    assert len(deck) == 2
    for h in deck:
        assert all(U(h[e]) == U(e) for e in U.total.elements)
        assert all(U.total.is_cover(h[a], h[b]) for a, b in U.total.covers)
    p = pi2(Q)
    assert p.describe() == "AbelianGroup(Z)"
    # oracle: the universal cover is simply connected, so pi_2 = H_2 of it
    HE = poset_homology(U.total)
    assert HE[1].is_trivial()
    assert HE[2] == FgAbelianGroup(1) == p.group


def test_criterion_2_board_theorems():
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            assert count_classes(board("Rectangle", n, m)) == 1
    for m in (1, 2):
        assert count_classes(board("Cylinder", 4, m)) == 2
    T = board("Torus", 4, 4)
    valid = valid_by_backtracking(T)
    assert all(is_valid(T, c) for c in valid[:: 97])
    classes, _ = move_orbits(T, valid)
    assert count_classes(T) == classes
    small = [(k, n, m) for k, n, m in
             [("Rectangle", n, m) for n in range(1, 5) for m in range(1, 5)]
             + [("Cylinder", 4, 1), ("Cylinder", 5, 1), ("Torus", 4, 4)]
             if board(k, n, m).num_edges <= 12]
    assert ("Cylinder", 4, 1) in small and ("Rectangle", 2, 2) in small
    for kind, n, m in small:
        b = board(kind, n, m)
        valid = valid_by_backtracking(b)
        classes, label = move_orbits(b, valid)
        assert count_classes(b) == classes
        for c1 in valid:
            for c2 in valid:
                assert bool(moves_equivalent(b, c1, c2)) == (label[c1] == label[c2])


def test_criterion_3_cellular_equals_simplicial():
    rng = random.Random(3)
    spaces = list(models.corpus().values())
    made = 0
    while made < 50:
        K = models.random_two_complex(rng, nverts=rng.randint(4, 6), ntri=rng.randint(1, 3),
                                      nextra=rng.randint(0, 2))
        X = face_poset(K)
        if len(X) > 20:
            continue
        spaces.append(X)
        made += 1
    for X in spaces:
        cell = cellular_homology(X)
        simp = simplicial_homology(order_complex(X))
        for k in range(-1, 4):
            assert cell[k] == simp[k], (X.elements, k)


def test_criterion_4_covering_correspondence():
    rng = random.Random(4)
    for cov in suite_covers():
        assert simplicial_covering_check(cov)
        assert face_poset_covering_check(cov)
        B = cov.base
        trivial = base_weight_function(cov)
        x0 = B.elements[0]
        loops = [xi for _, xi in fundamental_cycles(pi1_presentation(B))]
        loops += [closed_random_loop(B, x0, rng) for _ in range(100)]
        for xi in loops:
            assert xi.is_closed()
            for e0 in cov.fiber(x0):
                lift = lift_path(cov, xi, e0)
                assert lift.vertices() == neighbour_lift(cov, xi, e0)
                assert [cov(v) for v in lift.vertices()] == xi.vertices()
                assert lift.is_closed() == trivial(xi)


def test_criterion_5_pi2_equations():
    X = models.s1_s2_s2()
    Z = FgAbelianGroup(1)
    cols = {e: (0,) for e in X.covers}
    for e in [("u", "x"), ("t", "x"), ("v", "x"), ("o", "s"), ("o", "r")]:
        cols[e] = (1,)
    c = Coloring(X, Z, cols)
    assert is_admissible(c)
    S = cellular_structure(X)
    ax_minus_y = {("x", (1,)): 1, ("y", (0,)): -1}
    z_minus_w = {("z", (0,)): 1, ("w", (0,)): -1}
    assert pi2_membership(X, c, ax_minus_y, S)
    assert pi2_membership(X, c, z_minus_w, S)
    # oracle for membership: the expanded complex over Z_N, N wider than any support
    N = 40
    cN = Coloring(X, FiniteGroup.cyclic(N), {e: g[0] % N for e, g in cols.items()})
    T = twisted_complex(S, cN)

    def expanded(alpha):
        return twisted_boundary(T, {(x, g[0] % N): n for (x, g), n in alpha.items()}) == {}

    assert expanded(ax_minus_y) and expanded(z_minus_w)
    rng = random.Random(5)
    for _ in range(20):
        alpha = {}
        for _ in range(rng.randint(1, 3)):
            g, k = rng.randint(-3, 3), rng.choice([-2, -1, 1, 2])
            gen = ax_minus_y if rng.random() < 0.5 else z_minus_w
            for (x, h), n in gen.items():
                key = (x, (h[0] + g,))
                alpha[key] = alpha.get(key, 0) + k * n
        stray = (rng.choice("xyzw"), (rng.randint(-4, 4),))
        alpha[stray] = alpha.get(stray, 0) + rng.choice([-1, 1])
        alpha = {k: v for k, v in alpha.items() if v}
        assert not pi2_membership(X, c, alpha, S), alpha
        assert not expanded(alpha)
    assert pi2(X).describe() == "FreeZGModuleOfRank(2)"
    Z4 = FgAbelianGroup(0, [4])
    T4 = twisted_complex(S, c.map(lambda g: (g[0] % 4,), Z4))
    assert T4.homology()[2].rank == 2 * 4


def test_criterion_6_hurewicz_degenerate_case():
    rng = random.Random(6)
    for _ in range(20):
        K = models.random_two_complex(rng, nverts=5, ntri=rng.randint(1, 3),
                                      nextra=rng.randint(0, 2))
        L = models.cone_on_one_skeleton(K)
        X = face_poset(L)
        assert simplify(pi1_presentation(X).presentation).is_trivial
        p = pi2(X)
        assert p.kind == "AbelianGroup"
        assert p.group == simplicial_homology(L)[2]


def test_criterion_7_asphericity():
    ex = aspherical_presentation(GroupPresentation.parse(EXOCTO))
    assert ex.verdict == "Aspherical"
    assert [1, 3, 0, 0, 0] in [c.exponent_sums for c in ex.certificates]
    torus = aspherical_presentation(GroupPresentation.parse("<a, b | a b a^-1 b^-1>"))
    assert torus.verdict == "Aspherical"
    assert aspherical_presentation(GroupPresentation.parse("<a | a^2>")).verdict == "Unknown"
    assert aspherical_2complex(models.torus7(), certified_regular=True).verdict == "Aspherical"
    assert aspherical_2complex(models.tetrahedron(), certified_regular=True).verdict == "Unknown"


def test_criterion_8_property_suites():
    rng = random.Random(8)
    spaces = models.corpus()
    # d o d = 0: simplicial, cellular and twisted complexes
    for name, X in spaces.items():
        assert simplicial_chain_complex(order_complex(X)).dd_zero(), name
        S = cellular_structure(X)
        assert cellular_complex(S).dd_zero(), name
        assert twisted_complex(S, Coloring.trivial(X, FiniteGroup.cyclic(2))).complex.dd_zero()
    rp2 = spaces["rp2"]
    pres = pi1_presentation(rp2)
    c = push_standard_coloring(standard_coloring(rp2, None, pres),
                               finite_realization(pres.presentation))
    assert twisted_complex(cellular_structure(rp2), c).complex.dd_zero()
    # beat points do not change homology
    for _ in range(100):
        X = models.random_poset(rng, rng.randint(1, 12))
        assert poset_homology(X) == poset_homology(X.core())
    # abelianized pi_1 is H_1
    for name, X in spaces.items():
        ab = abelianization(pi1_presentation(X).presentation).group
        assert ab == simplicial_homology(order_complex(X))[1], name
    # inverting abelian colorings of boards
    for kind, n, m in [("Rectangle", 2, 2), ("Cylinder", 4, 1), ("Cylinder", 4, 2),
                       ("Cylinder", 5, 1), ("Torus", 4, 4)]:
        b = board(kind, n, m)
        samples = [to_poset_coloring(b, 0)]
        if kind != "Rectangle":
            samples.append(to_poset_coloring(b, seam_coloring(b)))
        samples.append(gauged_abelian_coloring(b.poset, rng))
        for col in samples:
            inv = invert_coloring(col)
            assert is_admissible(col).verdict == is_admissible(inv).verdict
            assert is_connected_coloring(col) == is_connected_coloring(inv)
        assert is_connected_coloring(invert_coloring(samples[-1])) is Truth.YES


def gauged_abelian_coloring(X, rng):
    """Standard coloring pushed to the abelianized pi_1, then randomly gauged."""
    pres = pi1_presentation(X)
    ab = abelianization(pres.presentation)
    A = ab.group
    g = {x: A.normalize([rng.randint(-3, 3) for _ in range(A.rank + len(A.torsion))])
         for x in X.elements}
    std = standard_coloring(X, None, pres)
    return Coloring(X, A, {(x, y): A.mul(A.mul(g[x], ab.project(w)), A.inv(g[y]))
                           for (x, y), w in std.colors.items()})


if __name__ == "__main__":
    tests = [(name, fn) for name, fn in sorted(globals().items())
             if name.startswith("test_criterion_")]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            status = "PASS"
        except Exception as err:  # report and keep going
            status = f"FAIL ({type(err).__name__}: {err})"
            failed += 1
        num, rest = name[len("test_criterion_"):].split("_", 1)
        print(f"criterion {num} ({rest.replace('_', ' ')}): {status}")
    raise SystemExit(1 if failed else 0)
