"""Command line entry point ``hopf32``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .classify import emit_tables, render_total, run
from .config import load_config
from .cyclotomic import parse, pretty
from .golden import check_golden, reference_labels
from .nichols import EXCEEDS, nichols_dimensions
from .ydmod import BraidingMatrix


def parse_matrix(text: str) -> BraidingMatrix:
    """Rows separated by ';', entries by commas or blanks: ``"-1, i; -i, -1"``."""
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip().strip("[]")
        if not chunk:
            continue
        rows.append([parse(t) for t in re.split(r"[,\s]+", chunk) if t])
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError(f"not a square matrix: {text!r}")
    return BraidingMatrix(rows)


def _cmd_classify(args: argparse.Namespace, cfg: dict) -> int:
    R = run(args.group, total_dim=args.dim, config=cfg)
    labels = reference_labels(R) if args.dim == 32 else {}
    sys.stdout.write(emit_tables(R, args.format or cfg["format"], labels))
    return 0


def _cmd_nichols(args: argparse.Namespace, cfg: dict) -> int:
    b = parse_matrix(args.matrix)
    rep = nichols_dimensions(b, degree_cap=cfg["degree_cap"], dim_budget=cfg["dim_budget"],
                             with_nilpotency=True)
    fmt = args.format or cfg["format"]
    if fmt == "json":
        doc = {"matrix": [[pretty(x) for x in r] for r in b.entries], **rep.to_json()}
        print(json.dumps(doc, indent=2))
        return 0
    total = f"> {cfg['dim_budget']} (degree cap {cfg['degree_cap']})" if rep.total == EXCEEDS else rep.total
    print(f"dim B(V): {total}")
    print(f"Hilbert series: {' '.join(map(str, rep.hilbert))}")
    if rep.qls is not None:
        print(f"quantum linear space, product formula: {rep.qls}")
    print(f"Cartan type: {rep.cartan if rep.cartan is not None else 'no'}")
    for k, v in rep.nilpotency.items():
        print(f"|{k}| = {'> cap' if v == EXCEEDS else v}")
    return 0


def _cmd_liftings(args: argparse.Namespace, cfg: dict) -> int:
    R = run(args.group, config=cfg)
    refs = reference_labels(R)
    wanted = args.module
    hits = [mc for mc in R.algebras
            if mc.label == wanted or wanted in refs.get(mc.label, "").split(", ")]
    if not hits:
        known = ", ".join(f"{mc.label} ({refs.get(mc.label, '-')})" for mc in R.algebras) or "none"
        print(f"no algebra labelled {wanted!r} for {args.group}; algebras: {known}", file=sys.stderr)
        return 2
    mc = hits[0]
    if mc.lifting is None:
        print(f"{mc.label}: {mc.error}")
        return 0
    fam = mc.lifting
    fmt = args.format or cfg["format"]
    if fmt == "json":
        print(json.dumps({"label": mc.label, "ref_label": refs.get(mc.label), **fam.to_json()}, indent=2))
        return 0
    print(f"{mc.label} ({refs.get(mc.label, '-')}): {mc.module.describe()}")
    print("relations:")
    for r in fam.relations:
        print(f"  {r}")
    if fam.forced:
        print("forced: " + "; ".join(fam.forced))
    if fam.free:
        print("free parameters: " + ", ".join(fam.free))
    print(f"liftings up to isomorphism: {render_total(fam.count)}")
    if fam.quotient:
        print(f"  parameter space: {fam.quotient}")
    for rep in fam.representatives:
        print("  " + (", ".join(f"{k} = {v}" for k, v in rep.items()) or "all parameters zero"))
    return 0


def _cmd_check(args: argparse.Namespace, cfg: dict) -> int:
    rep = check_golden(groups=args.group or None, config=cfg)
    for f in rep.findings:
        if args.verbose or f.status != "pass":
            print(f.line())
    print(rep.summary())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopf32", description="Pointed Hopf algebras of dimension 32.")
    p.add_argument("--config", help="JSON config file (default $HOPF32_CONFIG or ./hopf32.json)")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("classify", help="run the lifting procedure for one group")
    c.add_argument("--group", required=True)
    c.add_argument("--dim", type=int, default=32, help="target dimension (default 32)")
    c.add_argument("--format", choices=("md", "json"))

    n = sub.add_parser("nichols", help="dimension of the Nichols algebra of a diagonal braiding")
    n.add_argument("--matrix", required=True, help='e.g. "-1, 1; i, -1" (x = xi, z = zeta16)')
    n.add_argument("--format", choices=("md", "json"))

    lf = sub.add_parser("liftings", help="liftings of one module")
    lf.add_argument("--group", required=True)
    lf.add_argument("--module", required=True, help="engine label or reference label")
    lf.add_argument("--format", choices=("md", "json"))

    k = sub.add_parser("check", help="compare every table against the bundled reference data")
    k.add_argument("--group", action="append", help="restrict to a group (repeatable)")
    k.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        print(f"config: {exc}", file=sys.stderr)
        return 2
    handler = {"classify": _cmd_classify, "nichols": _cmd_nichols,
               "liftings": _cmd_liftings, "check": _cmd_check}[args.cmd]
    try:
        return handler(args, cfg)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
