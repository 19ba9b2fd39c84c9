import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors as sympy_factors

from finspace import models
from finspace.edgepath import pi1_presentation
from finspace.errors import GroupTooLarge, ParseError, UnknownGenerator
from finspace.groups import (FgAbelianGroup, FiniteGroup, GroupPresentation, abelianization,
                             automorphisms, evaluate, exponent_sums, finite_realization,
                             format_word, group_literal, has_infinite_order_abelian_certificate,
                             inverse_word, parse_group, parse_word, reduce_word, simplify,
                             subgroup_closure, word_is_trivial)
from finspace.truth import Truth

EXOCTO = "<a, b, c, d, e | b^2 c a^-1 b^-1 d b a, c^-1 d e b e>"


def brute_automorphisms(G):
    n = G.order
    out = []
    for perm in itertools.permutations(range(n)):
        if all(perm[G.mul(a, b)] == G.mul(perm[a], perm[b]) for a in range(n) for b in range(n)):
            out.append(list(perm))
    return sorted(out)


def oracle_abelianization(P):
    """Rank and torsion of Z^n / rows, through sympy's Smith form."""
    n = len(P.generators)
    rows = P.relator_matrix()
    if not rows:
        return FgAbelianGroup(n)
    f = [abs(int(x)) for x in sympy_factors(Matrix(rows), domain=ZZ) if x != 0]
    return FgAbelianGroup(n - len(f), [d for d in f if d > 1])


words = st.lists(st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1])), max_size=8)
presentations = st.lists(words, max_size=4).map(
    lambda rels: GroupPresentation(("a", "b", "c"), tuple(tuple(r) for r in rels)))


# ------------------------------------------------------------- evaluate ---

def test_evaluate_empty_word():
    G = FiniteGroup.cyclic(5)
    assert evaluate((), {}, G) == G.identity


def test_evaluate_involution():
    G = FiniteGroup.cyclic(2)
    assert evaluate((("a", 1), ("a", 1)), {"a": 1}, G) == 0


def test_evaluate_needs_every_generator():
    with pytest.raises(UnknownGenerator):
        evaluate((("b", 1),), {"a": 1}, FiniteGroup.cyclic(2))


def test_exocto_loop_abelianizes_to_a_plus_3b():
    P = GroupPresentation.parse(EXOCTO)
    w = parse_word("c^-1 b a b^2 c", P.generators)
    assert exponent_sums(w, P.generators) == [1, 3, 0, 0, 0]
    ab = abelianization(P)
    assert any(ab.project(w)[:ab.group.rank])
    assert has_infinite_order_abelian_certificate(w, P) is Truth.YES


# --------------------------------------------------------- finite groups --

def test_subgroup_closure_examples():
    D3 = FiniteGroup.dihedral(3)
    assert subgroup_closure([D3.identity], D3) == {D3.identity}
    s, sr = D3.parse("s"), D3.mul(D3.parse("s"), D3.parse("r"))
    assert len(subgroup_closure([sr, s], D3)) == 6


@given(st.lists(st.integers(0, 5), max_size=3))
def test_subgroup_closure_in_z6(S):
    G = FiniteGroup.cyclic(6)
    H = subgroup_closure(S, G)
    assert 6 % len(H) == 0
    assert set(S) <= H
    assert subgroup_closure(H, G) == H


@pytest.mark.parametrize("G, count", [(FiniteGroup.cyclic(2), 1), (FiniteGroup.cyclic(3), 2),
                                      (FiniteGroup.dihedral(3), 6),
                                      (FiniteGroup.cyclic(8), 4)])
def test_automorphisms_match_brute_force(G, count):
    auts = automorphisms(G)
    assert len(auts) == count
    assert sorted(auts) == brute_automorphisms(G)
    # closed under composition
    found = {tuple(a) for a in auts}
    for f, g in itertools.product(auts, repeat=2):
        assert tuple(f[g[x]] for x in range(G.order)) in found


def test_automorphism_bound():
    with pytest.raises(GroupTooLarge):
        automorphisms(FiniteGroup.symmetric(4))


def test_dihedral_and_symmetric_orders():
    assert FiniteGroup.dihedral(4).order == 8
    assert parse_group("D_3").order == 6
    assert parse_group("S_3").order == 6 and not parse_group("S_3").is_abelian()


def test_non_associative_table_rejected():
    # a Latin square with identity 0 that is not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError):
        FiniteGroup(table)


def test_bad_table_rejected():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 0], [0, 1]])


# ------------------------------------------------------- abelianization ---

def test_abelianization_examples():
    assert abelianization(GroupPresentation.parse("<a | >")).group == FgAbelianGroup(1)
    klein = GroupPresentation.parse("<a, b | a b a b^-1>")
    assert abelianization(klein).group == FgAbelianGroup(1, [2]) == oracle_abelianization(klein)
    P = GroupPresentation.parse(EXOCTO)
    assert abelianization(P).group.rank >= 1


@settings(max_examples=120, deadline=None)
@given(presentations)
def test_abelianization_matches_sympy(P):
    assert abelianization(P).group == oracle_abelianization(P)


@settings(max_examples=80, deadline=None)
@given(presentations, st.randoms(use_true_random=False), words)
def test_abelianization_ignores_order_and_conjugates(P, rnd, conj):
    rels = list(P.relators)
    rnd.shuffle(rels)
    if rels:
        r = rnd.choice(rels)
        rels.append(reduce_word(tuple(conj) + r + inverse_word(tuple(conj))))
    Q = GroupPresentation(P.generators, tuple(rels))
    assert abelianization(Q).group == abelianization(P).group


# -------------------------------------------------------------- simplify --

def test_simplify_examples():
    assert simplify(GroupPresentation.parse("<a, b | a, b>")).verdict == "TrivialGroup"
    assert simplify(GroupPresentation.parse("<a, b | b>")).verdict == "IsomorphicTo(Z)"
    assert simplify(GroupPresentation.parse("<a | a^3>")).verdict == "IsomorphicTo(Z_3)"
    assert simplify(GroupPresentation.parse("<a, b | >")).verdict == "IsomorphicTo(F_2)"
    assert simplify(GroupPresentation.parse("< | >")).verdict == "TrivialGroup"
    comm = simplify(GroupPresentation.parse("<a, b | a b a^-1 b^-1, a^2, b^2>"))
    assert comm.verdict == "IsomorphicTo(Z_2 x Z_2)"


def test_simplify_rp2_model():
    P = pi1_presentation(models.rp2()).presentation
    s = simplify(P)
    assert s.verdict == "IsomorphicTo(Z_2)"
    assert abelianization(P).group == FgAbelianGroup(0, [2])


def test_simplify_does_not_overclaim():
    # the Klein bottle group is neither cyclic, free nor abelian
    assert simplify(GroupPresentation.parse("<a, b | a b a b^-1>")).verdict == "Unknown"


@settings(max_examples=120, deadline=None)
@given(presentations)
def test_simplify_keeps_abelianization(P):
    s = simplify(P, budget=50)
    assert abelianization(s.presentation).group == abelianization(P).group
    for g in P.generators:
        assert all(h in s.presentation.generators for h, _ in s.images[g])
    if s.kind == "trivial":
        assert abelianization(P).group.is_trivial()


def test_infinite_order_certificate():
    a = (("a", 1),)
    assert has_infinite_order_abelian_certificate(a, GroupPresentation.parse("<a | >")) is Truth.YES
    assert has_infinite_order_abelian_certificate(
        a, GroupPresentation.parse("<a | a^2>")) is Truth.UNKNOWN


def test_word_is_trivial():
    P = GroupPresentation.parse("<a, b | a b a^-1 b^-1>")
    assert word_is_trivial(parse_word("a b a^-1 b^-1", P.generators), P) is Truth.YES
    assert word_is_trivial(parse_word("a", P.generators), P) is Truth.NO
    F = GroupPresentation.parse("<a, b | >")
    assert word_is_trivial(parse_word("a b a^-1 b^-1", F.generators), F) is Truth.NO


def test_finite_realization():
    real = finite_realization(GroupPresentation.parse("<a, b | a^2, b^3, a b a^-1 b^-1>"))
    assert real.group.order == 6
    assert real((("a", 1), ("a", 1))) == real.group.identity
    assert finite_realization(GroupPresentation.parse("<a | >")) is None


# ----------------------------------------------------------- text forms ---

@settings(max_examples=80)
@given(presentations)
def test_presentation_text_round_trip(P):
    assert GroupPresentation.parse(str(P)) == P


def test_parse_errors():
    with pytest.raises(ParseError):
        GroupPresentation.parse("a, b | a")
    with pytest.raises(UnknownGenerator):
        GroupPresentation.parse("<a | b>")
    with pytest.raises(ParseError):
        parse_group("Q_8")


@pytest.mark.parametrize("text", ["Z", "Z_5", "Z^2", "Z x Z_2", "Z^0 x Z_4", "D_4", "S_3",
                                  "<a, b | a b a^-1 b^-1>"])
def test_group_literals_round_trip(text):
    G = parse_group(text)
    assert type(parse_group(group_literal(G))) is type(G)
    if not hasattr(G, "presentation"):
        assert parse_group(group_literal(G)) == G


def test_format_word():
    assert format_word(()) == "1"
    assert format_word((("b", 1), ("b", 1), ("a", -1))) == "b^2 a^-1"


def test_abelian_group_arithmetic():
    A = FgAbelianGroup(1, [2, 4])
    assert A.describe() == "Z x Z_2 x Z_4"
    x = A.parse("(3, 1, 3)")
    assert A.mul(x, A.inv(x)) == A.identity
    assert A.generated_is_everything([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert not A.generated_is_everything([(1, 0, 0), (0, 0, 2)])
    assert FgAbelianGroup(0, [6, 4]).torsion == (2, 12)
    G, to_idx, back = FgAbelianGroup(0, [2, 2]).to_finite()
    assert G.order == 4 and G.is_abelian()
    assert all(back(to_idx(g)) == g for g in FgAbelianGroup(0, [2, 2]).elements())


def test_random_relator_words_evaluate_consistently():
    rng = random.Random(1)
    G = FiniteGroup.dihedral(4)
    for _ in range(50):
        w = tuple((rng.choice("ab"), rng.choice([1, -1])) for _ in range(rng.randint(0, 8)))
        img = {"a": rng.randrange(8), "b": rng.randrange(8)}
        assert G.mul(evaluate(w, img, G), evaluate(inverse_word(w), img, G)) == G.identity
        assert evaluate(reduce_word(w), img, G) == evaluate(w, img, G)
