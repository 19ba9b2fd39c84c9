import itertools

import pytest
from hypothesis import given, settings

from finspace import models
from finspace.cellular import poset_homology, simplicial_homology
from finspace.errors import CycleError, UnknownLabel
from finspace.poset import (MonotoneMap, Poset, SimplicialComplex, antichain, chain, cyclic_fence,
                            face_poset, fence, from_covers, identity_map, mapping_cylinder,
                            opposite, order_complex, product)

from strategies import posets


def brute_le(X):
    """Reflexive-transitive closure of the covers, by Warshall."""
    n = len(X)
    idx = X.index
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in X.covers:
        le[idx[a]][idx[b]] = True
    for k in range(n):
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    return lambda x, y: le[idx[x]][idx[y]]


def brute_chains(X):
    le = brute_le(X)
    out = []
    for r in range(1, len(X) + 1):
        for sub in itertools.combinations(X.elements, r):
            if all(le(a, b) or le(b, a) for a, b in itertools.combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


def is_circle4(X):
    return (len(X) == 4 and len(X.minimal()) == 2 and len(X.maximal()) == 2
            and len(X.covers) == 4)


# ------------------------------------------------------------ from_covers -

def test_fence_from_covers():
    X = from_covers([0, 1, 2, 3], [(0, 1), (2, 1), (2, 3)])
    assert X == fence(3)
    assert X.minimal() == [0, 2] and X.maximal() == [1, 3]


def test_singleton():
    X = from_covers(["a"], [])
    assert len(X) == 1 and X.height == 0
    assert X.beat_points() == [] and X.core() == X


def test_cycle_rejected():
    with pytest.raises(CycleError):
        from_covers(["a", "b"], [("a", "b"), ("b", "a")])


def test_unknown_label_rejected():
    with pytest.raises(UnknownLabel):
        from_covers(["a"], [("a", "b")])


def test_redundant_pairs_are_reduced():
    X = from_covers("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert X.covers == (("a", "b"), ("b", "c"))
    assert X.le("a", "c")


# -------------------------------------------------------- down/up sets ----

def test_down_set_in_fence():
    X = fence(2)  # 0 < 1 > 2
    assert X.down_set(1) == {0, 1, 2}
    assert X.up_set(0) == {0, 1}
    assert X.punctured_down_set(0) == set()


def test_punctured_down_set_of_sphere_top_is_circle():
    X = models.sphere6()
    top = X.maximal()[0]
    U = X.induced(X.punctured_down_set(top))
    assert is_circle4(U)


def test_unknown_element():
    with pytest.raises(UnknownLabel):
        fence(2).down_set(7)


# --------------------------------------------------------- beat points ----

@pytest.mark.parametrize("n", range(0, 9))
def test_fences_are_contractible(n):
    assert len(fence(n).core()) == 1


def test_circle_is_minimal():
    C = models.circle4()
    assert C.beat_points() == []
    assert C.core() == C


def test_cyclic_fence_needs_four_points():
    with pytest.raises(ValueError):
        cyclic_fence(3)
    assert cyclic_fence(6).core() == cyclic_fence(6)


# ------------------------------------------------------- order complex ----

@pytest.mark.parametrize("n", range(1, 6))
def test_order_complex_of_chain_is_simplex(n):
    K = order_complex(chain(n))
    assert len(K) == 2 ** n - 1
    assert K.dimension == n - 1


def test_order_complex_of_circle():
    K = order_complex(models.circle4())
    assert K.f_vector() == [4, 4]


@settings(max_examples=60, deadline=None)
@given(posets())
def test_order_complex_counts_chains(X):
    K = order_complex(X)
    assert {frozenset(s) for s in K.simplices} == set(brute_chains(X))


# ---------------------------------------------------------- face poset ----

def test_face_poset_of_edge():
    X = face_poset(SimplicialComplex("ab", [["a", "b"]]))
    assert len(X) == 3 and len(X.minimal()) == 2 and len(X.maximal()) == 1


def test_face_poset_of_triangle_boundary():
    K = SimplicialComplex("abc", [["a", "b"], ["b", "c"], ["a", "c"]])
    X = face_poset(K)
    assert len(X) == 6 and len(X.covers) == 6
    assert all(len(X.upper_covers(v)) == 2 for v in X.minimal())
    assert poset_homology(X) == simplicial_homology(K)


@pytest.mark.parametrize("K", [models.torus_triangulation(), models.tetrahedron_boundary(),
                               SimplicialComplex(range(3), [[0, 1, 2]])])
def test_subdivision_keeps_homology(K):
    X = face_poset(K)
    sd = order_complex(X)
    assert len(sd.vertices) == len(K.simplices)
    assert simplicial_homology(sd) == simplicial_homology(K)


# ------------------------------------------------ product and opposite ----

def test_square_of_fences():
    X = product(fence(1), fence(1))
    assert len(X) == 4 and len(X.covers) == 4
    assert X.minimal() == [(0, 0)] and X.maximal() == [(1, 1)]
    le = brute_le(X)
    for a in X.elements:
        for b in X.elements:
            assert le(a, b) == (a[0] <= b[0] and a[1] <= b[1])


def test_product_with_point():
    X = models.circle4()
    P = product(X, antichain(1))
    assert P.relabel({(x, 0): x for x in X.elements}) == X


@settings(max_examples=60, deadline=None)
@given(posets())
def test_opposite_swaps_down_and_up_sets(X):
    Y = opposite(X)
    assert opposite(Y) == X
    for x in X.elements:
        assert len(X.down_set(x)) >= 1 and x in X.down_set(x) and x in X.up_set(x)
        assert Y.down_set(x) == X.up_set(x)


@settings(max_examples=60, deadline=None)
@given(posets())
def test_reduction_is_idempotent(X):
    Y = from_covers(X.elements, X.covers)
    assert Y == X and Y.covers == X.covers
    le = brute_le(X)
    for a in X.elements:
        for b in X.elements:
            assert X.le(a, b) == le(a, b)
    for x in X.elements:
        best = max((X.height_of(y) + 1 for y in X.lower_covers(x)), default=0)
        assert X.height_of(x) == best


@settings(max_examples=40, deadline=None)
@given(posets(max_size=10))
def test_core_keeps_homology(X):
    assert poset_homology(X.core()) == poset_homology(X)


# --------------------------------------------------- mapping cylinder -----

def test_cylinder_of_identity_on_point():
    cyl = mapping_cylinder(identity_map(antichain(1)))
    assert len(cyl.poset) == 2 and len(cyl.poset.covers) == 1


def test_cylinder_of_constant_map():
    f = MonotoneMap(antichain(2), antichain(1), {0: 0, 1: 0})
    cyl = mapping_cylinder(f)
    assert len(cyl.poset) == 3
    assert len(cyl.poset.minimal()) == 1 and len(cyl.poset.maximal()) == 2


def test_cylinder_retraction():
    f = MonotoneMap(fence(3), chain(2), {0: 0, 1: 1, 2: 0, 3: 1})
    cyl = mapping_cylinder(f)
    r = cyl.retraction
    assert r.is_surjective()
    assert r.compose(cyl.include_target).assignment == {y: y for y in chain(2).elements}
    assert len(cyl.poset.core()) == 1


def test_monotone_map_rejects_order_reversal():
    from finspace.poset import NotMonotone
    with pytest.raises(NotMonotone):
        MonotoneMap(chain(2), chain(2), {0: 1, 1: 0})


def test_poset_is_hashable_and_comparable():
    assert hash(fence(2)) == hash(from_covers([0, 1, 2], [(0, 1), (2, 1)]))
    assert fence(2) != chain(3)
    assert isinstance(fence(2), Poset)
