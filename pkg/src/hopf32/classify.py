"""The lifting procedure run group by group.

For a group G and a target dimension n the budget for dim B(V) is n/|G|.
The run enumerates multisets of simple modules whose lower bound fits the
budget, groups them into Aut(G)-orbits, computes the Nichols algebra of one
representative per orbit and classifies the liftings of every module whose
Nichols algebra fills the budget exactly.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .config import DEFAULTS
from .cyclotomic import pretty
from .groups import FinGroup, catalogue
from .lifting import LiftingFamily, UnsupportedLifting, classify_liftings, lifting_problem
from .nichols import EXCEEDS, BraidEquationError, NicholsReport, nichols_dimensions
from .ydmod import (YDModule, describe_rep, diagonal_matrix, irreducible_modules, iso_key,
                    lower_bound, sum_of, summand_key)

SCHEMA_VERSION = 1


@dataclass
class ModuleClass:
    """One Aut(G)-orbit of modules, represented by its minimal index multiset."""

    label: str
    key: tuple[int, ...]
    module: YDModule
    orbit_size: int
    bound: float | int
    report: NicholsReport | None = None
    lifting: LiftingFamily | None = None
    error: str | None = None

    @property
    def rank(self) -> int:
        return len(self.key)

    @property
    def dim(self) -> int | str | None:
        return None if self.report is None else self.report.total

    def summands(self) -> list[tuple[str, str]]:
        G = self.module.group
        return [(G.names[s.g], describe_rep(s.rho)) for s in self.module.summands]

    def to_json(self) -> dict:
        b = diagonal_matrix(self.module)
        out: dict = {
            "label": self.label,
            "summands": [{"h": h, "rho": r} for h, r in self.summands()],
            "orbit_size": self.orbit_size,
            "lower_bound": "infinite" if math.isinf(self.bound) else self.bound,
            "braiding": None if b is None else b.to_json(),
            "nichols": None if self.report is None else self.report.to_json(),
        }
        if self.lifting is not None:
            out["liftings"] = self.lifting.to_json()
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class ClassificationRun:
    group_id: str
    group: FinGroup
    total_dim: int
    budget: int
    irreducibles: list[YDModule]
    module_orbits: list[ModuleClass]
    classes: dict[int, list[ModuleClass]]
    algebras: list[ModuleClass]
    total: int | float | None
    notes: list[str] = field(default_factory=list)

    def class_by_key(self, key: tuple[int, ...]) -> ModuleClass | None:
        for mc in self.module_orbits if len(key) == 1 else self.classes.get(len(key), []):
            if mc.key == key:
                return mc
        return None

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "group": self.group.dump(),
            "total_dim": self.total_dim,
            "budget": self.budget,
            "module_orbits": [m.to_json() for m in self.module_orbits],
            "classes": {str(r): [m.to_json() for m in cs] for r, cs in sorted(self.classes.items())},
            "algebras": [m.label for m in self.algebras],
            "total": render_total(self.total),
            "notes": self.notes,
        }


def render_total(t: int | float | None) -> int | str:
    if t is None:
        return "unknown"
    return "infinite" if math.isinf(t) else int(t)


# ---------------------------------------------------------------------------
# orbits


class _Orbits:
    """Action of Aut(G) on the simple modules, as permutations of their indices."""

    def __init__(self, G: FinGroup, irreps: Sequence[YDModule]):
        self.G = G
        self.keys = {iso_key(M): i for i, M in enumerate(irreps)}
        self.perms: list[tuple[int, ...]] = []
        for f in G.aut_generators:
            perm = []
            for M in irreps:
                s = M.summands[0]
                k = (summand_key(G, f(s.g), s.rho.twisted(f)),)
                perm.append(self.keys[k])
            self.perms.append(tuple(perm))

    def index(self, M: YDModule) -> tuple[int, ...]:
        """Sorted indices of the simple summands of M."""
        return tuple(sorted(self.keys[(summand_key(self.G, s.g, s.rho),)] for s in M.summands))

    def orbits(self, items: Iterable[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
        """(minimal element, orbit size) for the orbits of an Aut-stable set of multisets."""
        items = list(items)
        pos = {m: k for k, m in enumerate(items)}
        parent = list(range(len(items)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for p in self.perms:
            for k, m in enumerate(items):
                img = tuple(sorted(p[i] for i in m))
                a, b = find(k), find(pos[img])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        sizes: dict[int, int] = {}
        for k in range(len(items)):
            r = find(k)
            sizes[r] = sizes.get(r, 0) + 1
        return sorted((items[r], n) for r, n in sizes.items())

    def canonical(self, key: tuple[int, ...]) -> tuple[int, ...]:
        seen = {key}
        todo = [key]
        while todo:
            m = todo.pop()
            for p in self.perms:
                img = tuple(sorted(p[i] for i in m))
                if img not in seen:
                    seen.add(img)
                    todo.append(img)
        return min(seen)


def _bounded_multisets(bounds: Sequence[float | int], size: int, budget: int) -> Iterable[tuple[int, ...]]:
    def rec(start: int, left: int, prod: float) -> Iterable[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for i in range(start, len(bounds)):
            p = prod * bounds[i]
            if p * 2 ** (left - 1) <= budget:
                for rest in rec(i, left - 1, p):
                    yield (i,) + rest
    return rec(0, size, 1)


# ---------------------------------------------------------------------------
# the run


def _nichols(V: YDModule, cfg: dict, budget: int) -> tuple[NicholsReport | None, str | None]:
    try:
        rep = nichols_dimensions(V, degree_cap=int(cfg["degree_cap"]),
                                 dim_budget=max(int(cfg["dim_budget"]), budget + 1))
        return rep, None
    except BraidEquationError as exc:
        return None, str(exc)


def run(group_id: str, total_dim: int = 32, config: dict | None = None) -> ClassificationRun:
    cfg = dict(DEFAULTS)
    cfg.update(config or {})
    G = catalogue(group_id)
    if total_dim % G.order:
        raise ValueError(f"|G| = {G.order} does not divide {total_dim}")
    budget = total_dim // G.order
    notes: list[str] = []
    if budget == 1:
        return ClassificationRun(group_id, G, total_dim, budget, [], [], {}, [], 1,
                                 ["the group algebra is the only pointed Hopf algebra"])

    irreps = irreducible_modules(G)
    orb = _Orbits(G, irreps)
    bounds = [lower_bound(M) for M in irreps]

    def make(key: tuple[int, ...], size: int, prefix: str, k: int) -> ModuleClass:
        V = sum_of(irreps, key)
        return ModuleClass(f"{prefix}{k}", key, V, size, math.prod(bounds[i] for i in key))

    module_orbits = [make(key, n, "M", k + 1)
                     for k, (key, n) in enumerate(orb.orbits((i,) for i in range(len(irreps))))]
    classes: dict[int, list[ModuleClass]] = {}
    rank = 1
    while 2 ** rank <= budget:
        if rank == 1:
            cs = [mc for mc in module_orbits if mc.bound <= budget]
        else:
            found = orb.orbits(_bounded_multisets(bounds, rank, budget))
            cs = [make(key, n, f"R{rank}.", k + 1) for k, (key, n) in enumerate(found)]
        if cs:
            classes[rank] = cs
        rank += 1

    todo = list(module_orbits) + [mc for r, cs in classes.items() if r > 1 for mc in cs]
    threads = int(cfg["thread_count"])
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda mc: _nichols(mc.module, cfg, budget), todo))
    else:
        results = [_nichols(mc.module, cfg, budget) for mc in todo]
    for mc, (rep, err) in zip(todo, results):
        mc.report, mc.error = rep, err
        if err:
            notes.append(f"{mc.label}: {err}")

    algebras = [mc for r in sorted(classes) for mc in classes[r] if mc.dim == budget]
    total: int | float | None = 0
    for mc in algebras:
        try:
            mc.lifting = classify_liftings(lifting_problem(mc.module, mc.label))
        except UnsupportedLifting as exc:
            mc.error = f"liftings not classified: {exc}"
            notes.append(f"{mc.label}: {mc.error}")
            total = None
            continue
        if total is not None:
            total = total + mc.lifting.count
    return ClassificationRun(group_id, G, total_dim, budget, irreps, module_orbits, classes,
                             algebras, total, notes)


# ---------------------------------------------------------------------------
# rendering


def _dim_text(d: int | str | None) -> str:
    if d is None:
        return "?"
    return "> budget" if d == EXCEEDS else str(d)


def _row(mc: ModuleClass, budget: int, ref: str | None) -> dict:
    b = diagonal_matrix(mc.module)
    lift: object = ""
    if mc.lifting is not None:
        lift = render_total(mc.lifting.count)
    elif mc.error and mc.dim == budget:
        lift = "unsupported"
    return {
        "label": mc.label,
        "ref_label": ref,
        "summands": " + ".join(f"M({h}, {r})" for h, r in mc.summands()),
        "braiding": None if b is None else [[pretty(x) for x in row] for row in b.entries],
        "dim": mc.dim,
        "liftings": lift,
    }


def emit_tables(run_: ClassificationRun, fmt: str = "md", labels: dict[str, str] | None = None) -> str:
    """Markdown or JSON tables of a run.  ``labels`` maps engine labels to display labels."""
    import json

    labels = labels or {}
    tables = []
    tables.append({
        "title": f"simple modules / Aut, {run_.group_id}",
        "rows": [_row(mc, run_.budget, labels.get(mc.label)) for mc in run_.module_orbits],
    })
    for r in sorted(run_.classes):
        if r == 1:
            continue
        tables.append({
            "title": f"rank {r}, {run_.group_id}, lower bound <= {run_.budget}",
            "rows": [_row(mc, run_.budget, labels.get(mc.label)) for mc in run_.classes[r]],
        })
    tables.append({
        "title": f"liftings, {run_.group_id}",
        "rows": [_row(mc, run_.budget, labels.get(mc.label)) for mc in run_.algebras],
    })
    if fmt == "json":
        doc = {"schema": SCHEMA_VERSION, "group": run_.group_id, "budget": run_.budget,
               "total": render_total(run_.total), "tables": tables, "notes": run_.notes}
        return json.dumps(doc, indent=2)
    out = [f"# {run_.group_id}: pointed Hopf algebras of dimension {run_.total_dim}", "",
           f"budget for dim B(V): {run_.budget}; total: {render_total(run_.total)}", ""]
    for t in tables:
        out += [f"## {t['title']}", "", "| label | ref | V | (b_ij) | dim B(V) | liftings |",
                "|---|---|---|---|---|---|"]
        for row in t["rows"]:
            b = row["braiding"]
            bs = "; ".join(" ".join(r) for r in b) if b else "-"
            out.append(f"| {row['label']} | {row['ref_label'] or ''} | {row['summands']} | {bs} "
                       f"| {_dim_text(row['dim'])} | {row['liftings']} |")
        out.append("")
    for n in run_.notes:
        out.append(f"- {n}")
    return "\n".join(out).rstrip() + "\n"
