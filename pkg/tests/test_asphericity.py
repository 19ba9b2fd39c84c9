import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from finspace import models
from finspace.asphericity import (aspherical_2complex, aspherical_presentation, build_DP,
                                  coface_subposet, fundamental_digraph_cycles,
                                  presentation_complex_poset, simple_cycles)
from finspace.cellular import cellular_homology, poset_homology
from finspace.edgepath import pi1_presentation
from finspace.errors import EpsilonNotUnit, NotHeight2
from finspace.groups import GroupPresentation, abelianization, parse_word
from finspace.poset import face_poset, order_complex

EXOCTO = "<a, b, c, d, e | b^2 c a^-1 b^-1 d b a, c^-1 d e b e>"
TORUS = "<a, b | a b a^-1 b^-1>"

words = st.lists(st.tuples(st.sampled_from("abcd"), st.sampled_from([1, -1])),
                 min_size=1, max_size=7).map(tuple)
presentations = st.lists(words, min_size=1, max_size=3).map(
    lambda rels: GroupPresentation(("a", "b", "c", "d"), tuple(rels)))


def edge_multiset(D):
    return Counter(D.edges)


# ------------------------------------------------------------------- D_P --

def test_exocto_digraph():
    P = GroupPresentation.parse(EXOCTO)
    D = build_DP(P)
    assert D.vertices == ["a", "c", "d", "e"]
    w = lambda s: parse_word(s, P.generators)
    expected = [("c", "a", ()), ("a", "d", w("a^-1 b^-1 d")), ("d", "a", w("b a")),
                ("a", "c", w("b^2 c")), ("c", "d", w("c^-1 d")), ("d", "e", w("e")),
                ("e", "e", w("b e")), ("e", "c", ())]
    assert D.edges == expected


def test_cube_relator_gives_empty_digraph():
    D = build_DP(GroupPresentation.parse("<a | a^3>"))
    assert D.vertices == [] and D.edges == []


def test_torus_digraph_degrees():
    D = build_DP(GroupPresentation.parse(TORUS))
    assert D.vertices == ["a", "b"]
    for v in D.vertices:
        assert D.in_degree(v) == D.out_degree(v) == 2


@settings(max_examples=150, deadline=None)
@given(presentations)
def test_every_vertex_has_two_ends_each_way(P):
    D = build_DP(P)
    counts = Counter(g for r in P.relators for g, _ in r)
    assert D.vertices == [g for g in P.generators if counts[g] == 2]
    for v in D.vertices:
        assert D.in_degree(v) == D.out_degree(v) == 2
    assert len(D.edges) == 2 * len(D.vertices)


@settings(max_examples=150, deadline=None)
@given(presentations, st.integers(0, 6))
def test_digraph_ignores_relator_rotation(P, k):
    rels = tuple(r[k % len(r):] + r[:k % len(r)] for r in P.relators)
    Q = GroupPresentation(P.generators, rels)
    assert edge_multiset(build_DP(Q)) == edge_multiset(build_DP(P))


def test_cycle_enumeration():
    D = build_DP(GroupPresentation.parse(EXOCTO))
    cycles = simple_cycles(D)
    # the loop at e is the shortest cycle
    assert len(cycles[0]) == 1 and D.edges[cycles[0][0][0]][:2] == ("e", "e")
    for cyc in cycles + fundamental_digraph_cycles(D):
        ends = []
        for k, d in cyc:
            s, t, _ = D.edges[k]
            ends.append((s, t) if d > 0 else (t, s))
        assert all(ends[i][1] == ends[(i + 1) % len(ends)][0] for i in range(len(ends)))
    assert len(fundamental_digraph_cycles(D)) == len(D.edges) - len(D.vertices) + 1


# ------------------------------------------------------- presentations ----

def test_exocto_is_certified():
    P = GroupPresentation.parse(EXOCTO)
    res = aspherical_presentation(P)
    assert res.verdict == "Aspherical" and res.components == 1
    ab = abelianization(P)
    for cert in res.certificates:
        assert any(cert.abelian_image[:ab.group.rank])
        assert cert.abelian_image == ab.project(cert.weight)


@pytest.mark.parametrize("text, verdict", [
    (TORUS, "Aspherical"),
    ("<a, b | a b a b^-1>", "Aspherical"),
    ("<a, b | a^2 b^2>", "Aspherical"),
    ("<a | a^3>", "Unknown"),
    ("<a | a^2>", "Unknown"),
])
def test_presentation_verdicts(text, verdict):
    assert aspherical_presentation(GroupPresentation.parse(text)).verdict == verdict


def test_unknown_reports_why():
    res = aspherical_presentation(GroupPresentation.parse("<a | a^3>"))
    assert "a^3" in res.reason
    res = aspherical_presentation(GroupPresentation.parse("<a | a^2>"))
    assert "component" in res.reason and not res


# --------------------------------------------------------- 2-complexes ----

def test_torus_face_poset_is_certified():
    X = face_poset(models.torus_triangulation())
    res = aspherical_2complex(X, certified_regular=True)
    assert res.verdict == "Aspherical"
    assert all(any(c.abelian_image) for c in res.certificates)


def test_sphere_is_not_certified():
    X = face_poset(models.tetrahedron_boundary())
    assert aspherical_2complex(X, certified_regular=True).verdict == "Unknown"


def test_height_must_be_two():
    with pytest.raises(NotHeight2):
        aspherical_2complex(models.circle4(), certified_regular=True)


def test_regularity_must_be_certified():
    X = face_poset(models.torus_triangulation())
    res = aspherical_2complex(X)
    assert res.verdict == "Unknown" and "regular" in res.reason


def test_non_unit_incidence_rejected():
    with pytest.raises(EpsilonNotUnit):
        aspherical_2complex(models.s1_s2_s2(), certified_regular=True)


@pytest.mark.parametrize("text", [TORUS, "<a, b | a b a b^-1>", "<a | a^2>",
                                  "<a, b | a^2 b^2>"])
def test_presentation_complex(text):
    P = GroupPresentation.parse(text)
    X = presentation_complex_poset(P)
    assert X.height == 2
    assert abelianization(pi1_presentation(X).presentation).group == abelianization(P).group
    H = cellular_homology(X)
    assert H == poset_homology(X)
    euler = 1 - len(P.generators) + len(P.relators)
    assert H.betti(0) - H.betti(1) + H.betti(2) == euler - 1
    assert aspherical_2complex(X, certified_regular=True).verdict == \
        aspherical_presentation(P).verdict


# ------------------------------------------------------- coface subposet --

def test_coface_subposet_of_closed_surface():
    X = face_poset(models.torus_triangulation())
    Y = coface_subposet(X)
    assert len(Y) == len([x for x in X.elements if X.height_of(x) >= 1])
    KX, KY = order_complex(X), order_complex(Y)
    full = {s for s in KX.simplices if set(s) <= set(Y.elements)}
    assert set(KY.simplices) == full


def test_coface_subposet_drops_free_edges():
    X = face_poset(models.random_two_complex(random.Random(3)))
    Y = coface_subposet(X)
    for x in Y.elements:
        if X.height_of(x) == 1:
            assert len(X.upper_covers(x)) == 2
    assert all(X.height_of(x) >= 1 for x in Y.elements)
