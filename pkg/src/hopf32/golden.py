"""Comparison of engine output with the bundled reference tables.

The data file ``data/golden.json`` holds transcribed rows: each row names
its modules by (degree, character) pairs.  Rows are matched to engine
classes through the canonical Aut-orbit key, so engine labels never need
to agree with the reference labels.  A row may carry an ``inconsistent``
note when the source contradicts itself; a differing engine value is then
reported as annotated instead of as a mismatch.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .classify import ClassificationRun, ModuleClass, _Orbits, render_total, run
from .cyclotomic import parse
from .groups import FinGroup, abelian_character, character_from_values, degree_two_irreps
from .nichols import EXCEEDS, nichols_dimensions
from .ydmod import BraidingMatrix, YDModule, direct_sum, iso_key, simple_module

INFINITE = "infinite"


def load_golden() -> dict:
    with resources.files("hopf32").joinpath("data/golden.json").open(encoding="utf-8") as fh:
        return json.load(fh)


def module_from_spec(G: FinGroup, summands: Sequence[Sequence[object]]) -> YDModule:
    """Build a module from reference pairs (degree, character spec)."""
    mods = []
    for h, chi in summands:
        g = G.elem(str(h))
        if chi == "rho0":
            rho = degree_two_irreps(G)[0]
        elif isinstance(chi, dict):
            rho = character_from_values(G, G.centralizer(g), {k: parse(v) for k, v in chi.items()})
        else:
            rho = abelian_character(G, chi)  # type: ignore[arg-type]
        mods.append(simple_module(G, g, rho))
    return direct_sum(mods)


@dataclass
class Finding:
    status: str          # "pass", "mismatch" or "annotated"
    where: str
    expected: object
    got: object
    note: str = ""

    def line(self) -> str:
        s = f"[{self.status}] {self.where}: expected {self.expected}, got {self.got}"
        return s + (f" ({self.note})" if self.note else "")


@dataclass
class GoldenReport:
    findings: list[Finding] = field(default_factory=list)
    runs: dict[str, ClassificationRun] = field(default_factory=dict)

    @property
    def mismatches(self) -> list[Finding]:
        return [f for f in self.findings if f.status == "mismatch"]

    @property
    def annotated(self) -> list[Finding]:
        return [f for f in self.findings if f.status == "annotated"]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def add(self, where: str, expected: object, got: object, note: str = "", inconsistent: str | None = None) -> bool:
        same = _same(expected, got)
        if same:
            status = "pass"
        elif inconsistent:
            status, note = "annotated", f"source-inconsistent, engine value recorded: {inconsistent}"
        else:
            status = "mismatch"
        self.findings.append(Finding(status, where, expected, got, note))
        return same

    def summary(self) -> str:
        n = len(self.findings)
        return (f"{n} checks: {n - len(self.mismatches) - len(self.annotated)} pass, "
                f"{len(self.annotated)} annotated, {len(self.mismatches)} mismatch")


def _same(expected: object, got: object) -> bool:
    if isinstance(expected, str) and expected.startswith(">="):
        return got == EXCEEDS or (isinstance(got, int) and got >= int(expected[2:]))
    if expected == INFINITE:
        return got in (INFINITE, EXCEEDS) or (isinstance(got, float) and math.isinf(got))
    return expected == got


# ---------------------------------------------------------------------------


def check_table1(rep: GoldenReport, entries: Sequence[dict], config: dict | None = None) -> None:
    cfg = config or {}
    for e in entries:
        B = BraidingMatrix([[parse(x) for x in row] for row in e["matrix"]])
        r = nichols_dimensions(B, degree_cap=int(cfg.get("degree_cap", 20)),
                               dim_budget=int(cfg.get("dim_budget", 33)), with_nilpotency=True)
        where = f"table 1 / {e['name']}"
        note = e.get("inconsistent")
        rep.add(f"{where} / dim", e["dim"], r.total, inconsistent=note)
        rep.add(f"{where} / cartan", e["cartan"], r.cartan is not None)
        for k, v in e["nilpotency"].items():
            rep.add(f"{where} / |{k}|", v, r.nilpotency.get(k))


def _listing(R: ClassificationRun, orb: _Orbits, table: dict) -> list[tuple]:
    """Engine keys of the objects a reference table enumerates."""
    kind = table["kind"]
    exact = table.get("filter") == "dim=budget"
    if kind == "irreducibles":
        return [iso_key(M) for M in R.irreducibles]
    if kind == "module_orbits":
        return [mc.key for mc in R.module_orbits if not exact or mc.dim == R.budget]
    if kind == "orbits":
        cs = R.classes.get(table["rank"], [])
        return [mc.key for mc in cs if not exact or mc.dim == R.budget]
    raise ValueError(f"unknown table kind {kind!r}")


def _engine_class(R: ClassificationRun, orb: _Orbits, V: YDModule) -> ModuleClass | None:
    key = orb.canonical(orb.index(V))
    return R.class_by_key(key)


def reference_labels(R: ClassificationRun, gold: dict | None = None) -> dict[str, str]:
    """Engine label -> reference label(s) for the classes of a run."""
    gold = gold or load_golden()
    entry = gold["groups"].get(R.group_id)
    out: dict[str, list[str]] = {}
    if not entry or not R.irreducibles:
        return {}
    orb = _Orbits(R.group, R.irreducibles)
    for table in entry["tables"]:
        if table["kind"] == "irreducibles":
            continue
        for row in table["rows"]:
            mc = _engine_class(R, orb, module_from_spec(R.group, row["summands"]))
            if mc is not None:
                out.setdefault(mc.label, []).append(row["label"])
    return {k: ", ".join(v) for k, v in out.items()}


def check_group(rep: GoldenReport, R: ClassificationRun, entry: dict) -> None:
    G = R.group
    orb = _Orbits(G, R.irreducibles) if R.irreducibles else None
    lifting_rows: set[str] = set()
    for table in entry.get("tables", []):
        tname = f"{R.group_id} / table {table['table']}"
        listing = _listing(R, orb, table) if orb else []
        rep.add(f"{tname} / rows", len(table["rows"]), len(listing))
        covered: dict[tuple, str] = {}
        for row in table["rows"]:
            where = f"{tname} / {row['label']}"
            V = module_from_spec(G, row["summands"])
            if table["kind"] == "irreducibles":
                key: tuple = iso_key(V)
                mc = _engine_class(R, orb, V) if orb else None
            else:
                mc = _engine_class(R, orb, V) if orb else None
                key = mc.key if mc else ()
            if key in covered:
                rep.add(f"{where} / distinct", "a class of its own", f"same class as {covered[key]}")
            else:
                covered[key] = row["label"]
            if not rep.add(f"{where} / listed", True, key in listing):
                continue
            if mc is None:
                continue
            if "dim" in row:
                rep.add(f"{where} / dim", row["dim"], mc.dim, inconsistent=row.get("inconsistent"))
            if "liftings" in row:
                lifting_rows.add(mc.label)
                got: object = render_total(mc.lifting.count) if mc.lifting else (mc.error or "not an algebra")
                rep.add(f"{where} / liftings", row["liftings"], got, inconsistent=row.get("inconsistent"))
        missing = [k for k in listing if k not in covered]
        if missing:
            rep.add(f"{tname} / coverage", "every engine class listed", f"{len(missing)} unlisted")
    # every algebra the engine finds must appear with a lifting count
    for mc in R.algebras:
        if entry.get("tables"):
            rep.add(f"{R.group_id} / {mc.label} / reference row", True, mc.label in lifting_rows,
                    note=mc.module.describe())
    if "total" in entry:
        rep.add(f"{R.group_id} / total", entry["total"], render_total(R.total))


def check_golden(groups: Sequence[str] | None = None, gold: dict | None = None,
                 config: dict | None = None, table1: bool = True) -> GoldenReport:
    gold = gold or load_golden()
    rep = GoldenReport()
    if table1:
        check_table1(rep, gold.get("table1", []), config)
    ids = list(groups) if groups is not None else list(gold["groups"])
    for gid in ids:
        R = run(gid, config=config)
        rep.runs[gid] = R
        check_group(rep, R, gold["groups"].get(gid, {}))
    th = gold["theorem"]
    for gid, exp in zip(th["groups"], th["totals"]):
        members = gid if isinstance(gid, list) else [gid]
        if not all(m in rep.runs for m in members):
            continue
        tot: float = 0
        for m in members:
            t = rep.runs[m].total
            tot = math.nan if t is None else tot + t
        got = "unknown" if math.isnan(tot) else render_total(tot)
        name = "+".join(members) if len(members) > 1 else members[0]
        rep.add(f"theorem / {name}", exp, got)
    return rep


def theorem_totals(config: dict | None = None) -> list[tuple[str, object, object]]:
    """(group, reference total, engine total) in the order of the main list."""
    gold = load_golden()
    out = []
    for gid, exp in zip(gold["theorem"]["groups"], gold["theorem"]["totals"]):
        members = gid if isinstance(gid, list) else [gid]
        tot: float = 0
        for m in members:
            t = run(m, config=config).total
            tot = math.nan if t is None else tot + t
        out.append(("+".join(members), exp, "unknown" if math.isnan(tot) else render_total(tot)))
    return out
