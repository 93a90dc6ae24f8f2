from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import homology_oracle, nerve_counts
from segalkit.bisimp import classifying_complex, const_embed, diagonal, levelwise_nerve, transpose_embed
from segalkit.fincat import cyclic_group, terminal_category, walking_arrow
from segalkit.simpset import (
    SimpMap,
    SimplicialError,
    check_identities,
    compose_maps,
    constant_monoid,
    discrete,
    disjoint_union,
    empty,
    euler_characteristic,
    fiber_product,
    homology,
    invariant_equiv,
    nerve,
    pi0,
    point,
    standard_simplex,
)
from strategies import categories, corpus_categories


def bz(n: int, d: int = 4):
    return classifying_complex(constant_monoid(cyclic_group(n), d))


def interval(d: int = 3):
    return standard_simplex(1, d)


@st.composite
def simplicial_sets(draw):
    """Nerves of small categories, simplices, and unions of those."""
    kind = draw(st.sampled_from(["nerve", "simplex", "union"]))
    if kind == "nerve":
        return nerve(draw(corpus_categories), 3)
    if kind == "simplex":
        return standard_simplex(draw(st.integers(0, 3)), 3)
    parts = [nerve(draw(corpus_categories), 3), standard_simplex(draw(st.integers(0, 2)), 3)]
    return disjoint_union(parts)


# ---------------------------------------------------------------- nerve


def test_nerve_of_point() -> None:
    x = nerve(terminal_category(), 3)
    assert x.counts() == (1, 1, 1, 1)
    assert all(x.nondegenerate(k) == [] for k in (1, 2, 3))


def test_nerve_of_z2_counts(z2) -> None:
    assert nerve(z2, 3).counts() == (1, 2, 4, 8)


def test_nerve_of_walking_arrow_counts(arrow) -> None:
    assert nerve(arrow, 2).counts() == (2, 3, 4)


@given(categories)
def test_nerve_counts_match_chain_oracle(c) -> None:
    assert list(nerve(c, 3).counts()) == nerve_counts(c, 3)


@given(simplicial_sets())
def test_simplicial_identities(x) -> None:
    assert check_identities(x) == []


@given(simplicial_sets())
def test_degenerate_flags(x) -> None:
    # x is degenerate iff x = s_i d_i x for some i
    for k in range(1, x.trunc + 1):
        expected = {
            j for j in range(len(x.simplices[k])) if any(x.degens[k - 1][x.faces[k][j][i]][i] == j for i in range(k))
        }
        assert set(x.degenerate[k]) == expected


# ---------------------------------------------------------------- disjoint union, pi0


def test_union_of_two_points() -> None:
    assert len(pi0(disjoint_union([point(2), point(2)]))) == 2


def test_union_with_empty_is_unchanged(arrow) -> None:
    x = nerve(arrow, 3)
    u = disjoint_union([x, empty(3)])
    assert u.counts() == x.counts()
    assert homology(u, 2) == homology(x, 2)


def test_union_rejects_mixed_truncations() -> None:
    with pytest.raises(SimplicialError):
        disjoint_union([point(2), point(3)])


def test_union_homology_is_direct_sum() -> None:
    a, b = bz(2), point(4)
    h = homology(disjoint_union([a, b]), 3)
    ha, hb = homology(a, 3), homology(b, 3)
    assert h.betti == tuple(x + y for x, y in zip(ha.betti, hb.betti))
    assert h.torsion == tuple(tuple(sorted(x + y)) for x, y in zip(ha.torsion, hb.torsion))


def test_pi0_examples(arrow) -> None:
    assert len(pi0(discrete(["p", "q"], 1))) == 2
    assert len(pi0(interval())) == 1
    assert len(pi0(nerve(arrow, 2))) == 1


def test_pi0_needs_edges() -> None:
    with pytest.raises(SimplicialError):
        pi0(point(0))


# ---------------------------------------------------------------- homology


def test_homology_of_point() -> None:
    h = homology(point(4), 3)
    assert h.betti == (1, 0, 0, 0) and h.torsion == ((), (), (), ())


def test_homology_of_bz2(z2) -> None:
    h = homology(nerve(z2, 4), 3)
    assert h.betti == (1, 0, 0, 0)
    assert h.torsion == ((), (2,), (), (2,))


def test_homology_of_bz3() -> None:
    h = homology(bz(3, 3), 2)
    assert h.torsion == ((), (3,), ())


def test_homology_of_three_points() -> None:
    assert homology(discrete(["a", "b", "c"], 2), 1).betti[0] == 3


def test_homology_range_is_checked() -> None:
    with pytest.raises(SimplicialError):
        homology(point(2), 2)


@pytest.mark.parametrize("n", [2, 3])
def test_homology_matches_unnormalized_oracle(n) -> None:
    x = bz(n, 4)
    h = homology(x, 3)
    betti, torsion = homology_oracle(x, 3)
    assert list(h.betti) == betti
    assert [list(t) for t in h.torsion] == torsion


@given(simplicial_sets())
def test_homology_matches_oracle_on_generated_sets(x) -> None:
    h = homology(x, 1)
    betti, torsion = homology_oracle(x, 1)
    assert list(h.betti) == betti and [list(t) for t in h.torsion] == torsion


@given(simplicial_sets())
def test_betti0_is_pi0(x) -> None:
    h = homology(x, 1)
    assert h.betti[0] == h.components == len(pi0(x))
    assert h.torsion[0] == ()


@given(simplicial_sets(), st.randoms(use_true_random=False))
def test_homology_invariant_under_relabeling(x, rng) -> None:
    salt = rng.randrange(1000)
    y = x.relabel(lambda k, s: ("r", salt, k, s))
    assert homology(y, 2) == homology(x, 2)


@pytest.mark.parametrize(
    "x",
    [point(4), interval(4), disjoint_union([point(4), interval(4)]), discrete(["a", "b", "c"], 4), standard_simplex(2, 4)],
)
def test_euler_characteristic_matches_betti(x) -> None:
    assert euler_characteristic(x) == homology(x, 3).euler()


# ---------------------------------------------------------------- fiber products


def _to_point(x):
    return SimpMap.from_function(x, point(x.trunc), lambda k, s: point(x.trunc).simplices[k][0])


def test_fiber_product_along_identity(arrow) -> None:
    x = nerve(arrow, 3)
    ident = SimpMap.from_function(x, x, lambda k, s: s)
    pb = fiber_product(ident, ident)
    assert pb.space.counts() == x.counts()


def test_fiber_product_over_point_is_product(arrow, z2) -> None:
    x, y = nerve(arrow, 3), nerve(z2, 3)
    pb = fiber_product(_to_point(x), _to_point(y))
    assert pb.space.counts() == tuple(a * b for a, b in zip(x.counts(), y.counts()))
    assert check_identities(pb.space) == []


def test_fiber_product_rejects_non_simplicial(arrow) -> None:
    x = nerve(arrow, 2)
    bad = SimpMap(x, x, tuple(tuple(0 for _ in level) for level in x.simplices))
    with pytest.raises(SimplicialError):
        fiber_product(bad, bad)


def test_fiber_product_of_composable_arrows(arrow) -> None:
    # vertices of N_1 x_{N_0} N_1 along (d_1, d_0) are composable pairs: 4 for the walking arrow
    one = nerve(arrow, 2)
    n1, n0 = discrete(one.simplices[1], 2), discrete(one.simplices[0], 2)

    def face(i):
        return SimpMap.from_function(n1, n0, lambda k, s: one.simplices[0][one.faces[1][one.index[1][s]][i]])

    assert len(fiber_product(face(1), face(0)).space.simplices[0]) == 4


def _arrow_map(c, x, m):
    """The map Delta[1] -> nerve(c) picking out the morphism m."""
    ends = (c.source[m], c.target[m])
    edge = {(0, 0): c.identities[ends[0]], (0, 1): m, (1, 1): c.identities[ends[1]]}
    t = standard_simplex(1, x.trunc)
    return SimpMap.from_function(
        t, x, lambda k, s: ends[s[0]] if k == 0 else tuple(edge[(s[i], s[i + 1])] for i in range(k))
    )


@given(corpus_categories, corpus_categories, st.data())
def test_fiber_product_universal_property(c, e, data) -> None:
    # a cone over the point from Delta[1], given by one morphism on each side
    x, y = nerve(c, 2), nerve(e, 2)
    pb = fiber_product(_to_point(x), _to_point(y))
    a = _arrow_map(c, x, data.draw(st.sampled_from(c.morphism_ids)))
    b = _arrow_map(e, y, data.draw(st.sampled_from(e.morphism_ids)))
    assert a.is_simplicial() and b.is_simplicial()
    med = SimpMap.from_function(a.source, pb.space, lambda k, s: (a(k, s), b(k, s)))
    assert med.is_simplicial()
    assert compose_maps(pb.left, med) == a and compose_maps(pb.right, med) == b
    # the projections are jointly injective, so the mediating map is unique
    for k in range(pb.space.trunc + 1):
        pairs = list(zip(pb.left.maps[k], pb.right.maps[k]))
        assert len(set(pairs)) == len(pairs)


# ---------------------------------------------------------------- diagonals and classifying complexes


@given(simplicial_sets())
def test_diagonal_of_constant_embedding(x) -> None:
    assert diagonal(const_embed(x, x.trunc)) == x


@given(simplicial_sets())
def test_diagonal_of_transpose_embedding(x) -> None:
    assert diagonal(transpose_embed(x, x.trunc)) == x


def test_diagonal_of_constant_z2_is_nerve(z2) -> None:
    b = diagonal(levelwise_nerve(constant_monoid(cyclic_group(2), 3), 3))
    assert b.counts() == nerve(z2, 3).counts()
    assert invariant_equiv(b, nerve(z2, 3), 2).equivalent


def test_classifying_complex_of_trivial_monoid() -> None:
    assert bz(1, 3).counts() == (1, 1, 1, 1)


def test_classifying_complex_z2_matches_nerve(z2) -> None:
    assert invariant_equiv(nerve(z2, 4), bz(2, 4), 3).equivalent


# ---------------------------------------------------------------- invariant comparison


def test_invariant_equiv_examples(arrow) -> None:
    x = nerve(arrow, 3)
    assert invariant_equiv(x, x, 2).equivalent
    r = invariant_equiv(disjoint_union([point(2), point(2)]), point(2), 1)
    assert not r.equivalent and r.reason.startswith("pi0")


def test_invariant_equiv_distinguishes_bz2_and_bz3() -> None:
    r = invariant_equiv(bz(2, 3), bz(3, 3), 2)
    assert not r.equivalent and "homology" in r.reason


def test_walking_arrow_nerve_is_contractible(arrow) -> None:
    assert homology(nerve(walking_arrow(), 4), 3).is_trivial()


def test_standard_simplex_nondegenerate_counts() -> None:
    # Delta[2] has C(3, k+1) nondegenerate k-simplices
    x = standard_simplex(2, 3)
    assert [len(x.nondegenerate(k)) for k in range(4)] == [3, 3, 1, 0]
