"""Finite groups from presentations, automorphisms and characters."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from hopf32.cyclotomic import I, MINUS_ONE, ONE, CycScalar
from hopf32.groups import (CATALOGUE_IDS, abelian, abelian_character, catalogue, character_exponents,
                           character_from_values, degree_two_irreps)

ORDERS = {"C2": 2, "C2xC2": 4, "C4": 4, "C2xC2xC2": 8, "C2xC4": 8, "C8": 8, "D4": 8, "H": 8}


def _order_profile(G) -> list[int]:
    return sorted(G.element_order(g) for g in range(G.order))


@pytest.mark.parametrize("gid", CATALOGUE_IDS)
def test_group_axioms(gid):
    """[TRIVIAL] identity 0, two-sided inverses, associativity."""
    G = catalogue(gid)
    assert G.order == ORDERS.get(gid, 16)
    n = G.order
    for a in range(n):
        assert G.mul(0, a) == a == G.mul(a, 0)
        assert G.mul(a, G.inv(a)) == 0
    for a, b, c in itertools.product(range(n), repeat=3):
        assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


def test_unknown_group():
    """[TRIVIAL] unknown identifiers raise KeyError."""
    with pytest.raises(KeyError):
        catalogue("Q32")


def test_d4_center_and_centralizer():
    """[PAPER] Z(D4) = {1, r^2}; the centralizer of s is {1, s, r^2, r^2 s}."""
    G = catalogue("D4")
    assert sorted(G.center) == sorted(G.elem(x) for x in ("1", "r^2"))
    assert sorted(G.centralizer(G.elem("s"))) == sorted(G.elem(x) for x in ("1", "s", "r^2", "r^2s"))
    assert sorted(len(c) for c in G.conjugacy_classes) == [1, 1, 2, 2, 2]


# center generators, commutator generators, abelianization invariants
TABLE22 = {
    "B1": (["g1^2"], ["g1^4"], (4, 2)),
    "B2": (["g1"], ["g1^2"], (2, 2, 2)),
    "B3": (["g1^2", "g2^2"], ["g1^2"], (2, 4)),
    "B4": (["t", "r^2"], ["r^2"], (2, 2, 2)),
    "B5": (["g1^2", "g2"], ["g2"], (4, 2)),
    "B6": (["t", "-e"], ["-e"], (2, 2, 2)),
}


@pytest.mark.parametrize("gid", sorted(TABLE22))
def test_nonabelian_16_structure(gid):
    """[PAPER] center, commutator subgroup and abelianization of the six order-16 groups."""
    zg, cg, ab = TABLE22[gid]
    G = catalogue(gid)
    assert not G.is_abelian
    assert sorted(G.center) == sorted(G.subgroup(G.elem(x) for x in zg))
    assert sorted(G.commutator_subgroup) == sorted(G.subgroup(G.elem(x) for x in cg))
    A, proj = G.abelianization()
    assert _order_profile(A) == _order_profile(abelian(ab))
    assert len(set(proj)) == A.order
    # the property used in the order-16 analysis: [G;G] lies in Z(G), with two central elements outside
    assert set(G.commutator_subgroup) <= set(G.center)
    assert len(set(G.center) - set(G.commutator_subgroup)) == 2


def test_quaternion_commutator():
    """[PAPER] [H;H] = {e, -e}."""
    G = catalogue("H")
    assert sorted(G.commutator_subgroup) == sorted([G.elem("e"), G.elem("-e")])


@pytest.mark.parametrize("gid,n", [("C2xC2", 6), ("C4", 2), ("C2xC4", 8), ("C8", 4), ("C2xC2xC2", 168),
                                   ("D4", 8), ("H", 24)])
def test_automorphism_counts(gid, n):
    """[PAPER] |Aut(C2xC2)| = 6, |Aut(C2xC4)| = 8, |Aut(C8)| = 4; others [DERIVED] from standard facts."""
    G = catalogue(gid)
    auts = G.automorphisms
    assert len(auts) == n
    assert all(f.is_homomorphism() and len(set(f.images)) == G.order for f in auts)


@pytest.mark.parametrize("gid", ["C2xC4", "D4", "B1", "B5"])
def test_aut_generators_generate(gid):
    """[DERIVED] closing the generator set under composition recovers Aut(G)."""
    G = catalogue(gid)
    seen = {G.automorphisms[0].compose(G.automorphisms[0].inverse()).images}
    frontier = list(seen)
    gens = G.aut_generators
    while frontier:
        new = []
        for imgs in frontier:
            for f in gens:
                h = tuple(f(x) for x in imgs)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    assert len(seen) == len(G.automorphisms)


@pytest.mark.parametrize("gid,n", [("C2xC2", 4), ("D4", 4), ("H", 4), ("B4", 8), ("B1", 8)])
def test_linear_character_count(gid, n):
    """[TRIVIAL] the number of linear characters is |G_ab|."""
    G = catalogue(gid)
    chars = G.linear_characters
    assert len(chars) == n == G.abelianization()[0].order


def test_d4_characters_trivial_on_center():
    """[PAPER] degree-one characters of D4 are trivial on r^2."""
    G = catalogue("D4")
    r2 = G.elem("r^2")
    assert all(chi(r2) == ONE for chi in G.linear_characters)


def test_b4_characters_with_t_minus_one():
    """[PAPER] exactly four characters of B4 take -1 at t."""
    G = catalogue("B4")
    t = G.elem("t")
    assert sum(chi(t) == MINUS_ONE for chi in G.linear_characters) == 4


@pytest.mark.parametrize("gid", CATALOGUE_IDS)
def test_characters_multiplicative(gid):
    """[TRIVIAL] chi(gh) = chi(g) chi(h) and values are roots of unity."""
    G = catalogue(gid)
    for chi in G.linear_characters:
        for g, h in itertools.product(range(G.order), repeat=2):
            assert chi(G.mul(g, h)) == chi(g) * chi(h)
            assert chi(g).root_exponent() is not None


@given(st.lists(st.integers(0, 7), min_size=3, max_size=3))
def test_abelian_character_roundtrip(exps):
    """[TRIVIAL] exponent vectors in the hat-g basis round-trip, with hat-g_j(g_j) = z^(16/n_j)."""
    G = catalogue("C2xC2xC4")
    exps = [exps[0] % 2, exps[1] % 2, exps[2] % 4]
    chi = abelian_character(G, exps)
    assert list(character_exponents(chi)) == exps
    for j, (g, n) in enumerate(zip(G.generators, (2, 2, 4))):
        assert chi(g) == CycScalar.zeta(16 // n * exps[j])


def test_character_from_values_on_centralizer():
    """[TRIVIAL] a character of the centralizer of s in D4 from its values on s and r^2."""
    G = catalogue("D4")
    s = G.elem("s")
    chi = character_from_values(G, G.centralizer(s), {"s": MINUS_ONE, "r^2": MINUS_ONE})
    assert chi(G.elem("r^2s")) == ONE
    with pytest.raises(ValueError):
        character_from_values(G, G.centralizer(s), {"s": I})


@pytest.mark.parametrize("gid", ["D4", "H"])
def test_degree_two_irreps(gid):
    """[PAPER] the fixed degree-2 representations satisfy the relations and are irreducible."""
    G = catalogue(gid)
    (rho,) = degree_two_irreps(G)
    assert rho.check()
    norm = sum((rho.trace(g) * rho.trace(g).conjugate() for g in range(G.order)), ONE * 0)
    assert norm == G.order  # <chi, chi> = 1


@pytest.mark.parametrize("gid", ["D4", "H", "B1", "C2xC4"])
def test_twisting_preserves_characters(gid):
    """[TRIVIAL] chi o f^-1 is again a character."""
    G = catalogue(gid)
    for f in G.aut_generators:
        for chi in G.linear_characters:
            tw = chi.twisted(f)
            assert all(tw(G.mul(a, b)) == tw(a) * tw(b) for a in range(G.order) for b in range(G.order))
