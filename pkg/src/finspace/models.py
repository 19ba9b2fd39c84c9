"""Small standard spaces used by the tests, the corpus and the CLI."""
import random

from .coverings import milnor_poset
from .groups import FiniteGroup
from .poset import Poset, SimplicialComplex, face_poset, from_covers


def circle4():
    """Minimal finite model of S^1: a, b below c, d."""
    return Poset(["a", "b", "c", "d"],
                 [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])


def sphere(n=2):
    """Minimal finite model of S^n: two points per height."""
    elems = [f"{k}{s}" for k in range(n + 1) for s in "+-"]
    covers = [(f"{k}{s}", f"{k + 1}{t}") for k in range(n) for s in "+-" for t in "+-"]
    return Poset(elems, covers)


def sphere6():
    return sphere(2)


def rp2():
    """13-point projective plane: Milnor quotient for Z_2."""
    return milnor_poset(FiniteGroup.cyclic(2)).quotient


def torus_triangulation():
    """Minimal 7-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7."""
    facets = []
    for i in range(7):
        facets.append([i, (i + 1) % 7, (i + 3) % 7])
        facets.append([i, (i + 2) % 7, (i + 3) % 7])
    return SimplicialComplex(range(7), facets)


def torus7():
    return face_poset(torus_triangulation())


def tetrahedron_boundary():
    return SimplicialComplex(range(4), [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def tetrahedron():
    return face_poset(tetrahedron_boundary())


def two_simplex():
    return face_poset(SimplicialComplex(range(3), [[0, 1, 2]]))


def wedge_of_circles():
    """Two 4-point circles sharing the minimal point a."""
    return Poset(["a", "b", "c", "d", "b2", "c2", "d2"],
                 [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
                  ("a", "c2"), ("a", "d2"), ("b2", "c2"), ("b2", "d2")])


def s1_s2_s2():
    """A circle wedged with two 2-spheres, pi_1 = Z and pi_2 free of rank 2.

    Points p, q, o.  Cells u, t join p and q; v joins p and o; the 2-cells
    x, y both sit over u, t, v, so x and y form a sphere with a hair v.
    Cells s, r join o and p, and the 2-cells z, w over s, r form a second
    sphere.  The two spheres meet only in p and o, which closes a loop.
    """
    elems = ["p", "q", "o", "u", "t", "v", "s", "r", "x", "y", "z", "w"]
    covers = [("p", "u"), ("q", "u"), ("p", "t"), ("q", "t"), ("p", "v"), ("o", "v"),
              ("o", "s"), ("p", "s"), ("o", "r"), ("p", "r")]
    for top in "xy":
        covers += [(c, top) for c in "utv"]
    for top in "zw":
        covers += [(c, top) for c in "sr"]
    return Poset(elems, covers)


def random_two_complex(rng, nverts=5, ntri=3, nextra=2):
    """Random 2-complex on a few vertices: some triangles plus loose edges."""
    verts = list(range(nverts))
    tris = set()
    while len(tris) < ntri:
        tris.add(tuple(sorted(rng.sample(verts, 3))))
    facets = [list(t) for t in sorted(tris)]
    for _ in range(nextra):
        facets.append(sorted(rng.sample(verts, 2)))
    return SimplicialComplex(verts, facets)


def cone_on_one_skeleton(K, apex="*"):
    """K together with the cone over its 1-skeleton (simply connected)."""
    facets = [list(s) for s in K.simplices if len(s) == 3]
    for s in K.simplices:
        if len(s) == 2:
            facets.append(list(s) + [apex])
        if len(s) == 1:
            facets.append([s[0], apex])
    return SimplicialComplex(list(K.vertices) + [apex], facets)


def random_poset(rng, n, height=3, p=0.4):
    """Random poset on n points with at most height + 1 levels."""
    levels = [rng.randrange(height + 1) for _ in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(n)
             if levels[i] < levels[j] and rng.random() < p]
    return from_covers(list(range(n)), pairs)


def corpus():
    """Named cellular test spaces."""
    return {
        "point": Poset(["*"], []),
        "circle4": circle4(),
        "sphere6": sphere6(),
        "rp2": rp2(),
        "torus7": torus7(),
        "tetrahedron": tetrahedron(),
        "two_simplex": two_simplex(),
        "wedge_circles": wedge_of_circles(),
        "s1_s2_s2": s1_s2_s2(),
    }
