"""Group-by-group runs: orbit enumeration, pruning and totals."""

from __future__ import annotations

import json
import math

import pytest

from hopf32.classify import _bounded_multisets, _Orbits, emit_tables, render_total, run
from hopf32.groups import CATALOGUE_IDS, catalogue
from hopf32.ydmod import irreducible_modules, iso_key, lower_bound, sum_of, twist

from conftest import cached_run


@pytest.mark.parametrize("gid,rank,n", [("C2xC2", 2, 5), ("C4", 2, 14), ("C2xC2xC2", 2, 6),
                                        ("C8", 2, 26)])
def test_rank_two_orbit_counts(gid, rank, n):
    """[PAPER] number of Aut-classes of rank-2 modules within the lower bound."""
    assert len(cached_run(gid).classes[rank]) == n


def test_c2xc4_orbits():
    """[DERIVED] 38 rank-2 classes over C2xC4; two pairs of reference rows are Aut-equivalent."""
    assert len(cached_run("C2xC4").classes[2]) == 38


@pytest.mark.parametrize("gid", ["C2xC2", "C4", "C2xC4", "D4", "B1"])
def test_orbits_partition(gid):
    """[DERIVED] orbit sizes add up to the number of bounded multisets, and orbit members are twists."""
    R = cached_run(gid)
    G = R.group
    orb = _Orbits(G, R.irreducibles)
    bounds = [lower_bound(M) for M in R.irreducibles]
    for rank, cs in R.classes.items():
        if rank == 1:
            continue
        items = list(_bounded_multisets(bounds, rank, R.budget))
        assert sum(mc.orbit_size for mc in cs) == len(items)
        # every twist of a representative lands in the same class
        for mc in cs[:5]:
            for f in G.automorphisms:
                assert orb.canonical(orb.index(twist(mc.module, f))) == mc.key


def test_orbits_by_brute_force():
    """[DERIVED] canonical keys agree with the orbits of the full automorphism group on C4 rank 2."""
    G = catalogue("C4")
    irreps = irreducible_modules(G)
    orb = _Orbits(G, irreps)
    seen = {}
    for i in range(len(irreps)):
        for j in range(i, len(irreps)):
            V = sum_of(irreps, (i, j))
            orbit = frozenset(iso_key(twist(V, f)) for f in G.automorphisms)
            seen.setdefault(orbit, set()).add(orb.canonical((i, j)))
    assert all(len(v) == 1 for v in seen.values())
    assert len({next(iter(v)) for v in seen.values()}) == len(seen)


def test_pruning_is_safe():
    """[DERIVED] every multiset above the budget really has a Nichols algebra too large (C2xC2, rank 2)."""
    from hopf32.nichols import EXCEEDS, nichols_dimensions
    R = cached_run("C2xC2")
    bounds = [lower_bound(M) for M in R.irreducibles]
    n = len(bounds)
    for i in range(n):
        for j in range(i, n):
            if bounds[i] * bounds[j] > R.budget:
                d = nichols_dimensions(sum_of(R.irreducibles, (i, j)), dim_budget=R.budget).total
                assert d == EXCEEDS or d > R.budget


@pytest.mark.parametrize("gid,total", [("C2", 1), ("C2xC2", 6), ("C4", 12), ("C2xC2xC2", 6),
                                       ("C2xC4", math.inf), ("C8", math.inf), ("H", 3), ("C2^4", 1),
                                       ("C2xC2xC4", 7), ("C4xC4", 4), ("C2xC8", 14), ("C16", 7)])
def test_totals(gid, total):
    """[PAPER] number of pointed Hopf algebras of dimension 32 per group (D4 and B1 differ; see acceptance)."""
    assert cached_run(gid).total == total


def test_engine_totals_for_disputed_groups():
    """[DERIVED] D4 gives 6 and the order-16 nonabelian groups give 12 in total."""
    assert cached_run("D4").total == 6
    assert sum(cached_run(f"B{k}").total for k in range(1, 7)) == 12
    assert [cached_run(f"B{k}").total for k in range(1, 7)] == [3, 4, 2, 1, 1, 1]


def test_group_algebra_only():
    """[TRIVIAL] |G| = 32 leaves only the group algebra; a non-divisor is refused."""
    assert run("C16", total_dim=16).total == 1
    with pytest.raises(ValueError):
        run("C16", total_dim=24)


def test_threaded_run_matches():
    """[TRIVIAL] the worker pool does not change the result."""
    a = run("C8", config={"thread_count": 4})
    b = cached_run("C8")
    assert [mc.dim for mc in a.classes[2]] == [mc.dim for mc in b.classes[2]]
    assert render_total(a.total) == render_total(b.total)


@pytest.mark.parametrize("gid", CATALOGUE_IDS)
def test_emit_json_roundtrip(gid):
    """[TRIVIAL] JSON output is valid, versioned and carries the total."""
    R = cached_run(gid)
    doc = json.loads(emit_tables(R, "json"))
    assert doc["schema"] == 1
    assert doc["total"] == render_total(R.total)
    json.dumps(R.to_json())


def test_emit_markdown_labels():
    """[TRIVIAL] markdown tables show the supplied reference labels."""
    R = cached_run("D4")
    md = emit_tables(R, "md", {R.algebras[0].label: "REF"})
    assert "| REF |" in md and md.startswith("# D4")


def test_render_total():
    """[TRIVIAL] unknown, infinite and finite totals render distinctly."""
    assert render_total(None) == "unknown"
    assert render_total(math.inf) == "infinite"
    assert render_total(6) == 6
