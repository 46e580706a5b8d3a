"""Sparse exact linear algebra over Q(z16).

Vectors are plain dicts mapping hashable, orderable keys to nonzero CycScalar.
Elimination is fraction free: a row is reduced by v <- p*v - f*r and then
divided by its rational content, which keeps the numbers small in practice.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Hashable, Iterable

from .cyclotomic import ONE, CycScalar

Vec = dict


def content_normalize(v: Vec) -> Vec:
    """Scale v by a positive rational so its numerators are coprime integers."""
    if not v:
        return v
    dens = [c.den for c in v.values()]
    L = math.lcm(*dens)
    g = 0
    for c in v.values():
        f = L // c.den
        for a in c.num:
            if a:
                g = math.gcd(g, a * f)
    scale = Fraction(L, g)
    if scale == 1:
        return v
    return {k: c * scale for k, c in v.items()}


def axpy(v: Vec, a: CycScalar, w: Vec) -> Vec:
    """Return v + a*w as a new dict with zero entries dropped."""
    out = dict(v)
    for k, c in w.items():
        t = out.get(k)
        nv = c * a if t is None else t + c * a
        if nv:
            out[k] = nv
        elif t is not None:
            del out[k]
    return out


def scale(v: Vec, a: CycScalar) -> Vec:
    if not a:
        return {}
    return {k: c * a for k, c in v.items()}


class Echelon:
    """Incremental row echelon form; each row's pivot is its largest key."""

    def __init__(self) -> None:
        self.rows: dict[Hashable, Vec] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> Vec:
        v = dict(v)
        while v:
            k = max(v)
            r = self.rows.get(k)
            if r is None:
                return v
            p = r[k]
            f = v[k]
            # v <- p*v - f*r kills the k entry
            if p.is_one():
                v = axpy(v, -f, r)
            else:
                v = axpy(scale(v, p), -f, r)
            v.pop(k, None)
            v = content_normalize(v)
        return v

    def add(self, v: Vec) -> bool:
        """Insert v; return True when it was independent of the rows so far."""
        w = self.reduce(v)
        if not w:
            return False
        k = max(w)
        # make the pivot a positive rational where cheap (roots of unity)
        e = w[k].root_exponent()
        if e is not None and e != 0:
            w = {kk: c.mul_zeta(-e) for kk, c in w.items()}
        self.rows[k] = w
        return True

    def basis(self) -> list[Vec]:
        return [self.rows[k] for k in sorted(self.rows)]


def rank(vectors: Iterable[Vec]) -> int:
    ech = Echelon()
    vs = sorted((v for v in vectors if v), key=len)
    for v in vs:
        ech.add(v)
    return len(ech)


def solve_linear(equations: list[Vec], unknowns: list[Hashable]) -> tuple[dict, list]:
    """Solve a homogeneous-or-affine system.

    Each equation is a dict unknown -> coefficient, with the key ``1`` holding
    the constant term (equation reads sum c_u*u + c_1 = 0).  Returns
    (particular, free) where particular maps pivot unknowns to affine
    expressions in the free unknowns (dicts in the same format), or raises
    ValueError when the system is inconsistent.
    """
    order = {u: i + 1 for i, u in enumerate(unknowns)}
    ech = Echelon()
    # keys: the constant gets index 0 so it is never a pivot unless inconsistent
    for eq in equations:
        v = {}
        for u, c in eq.items():
            if c:
                v[0 if u == 1 else order[u]] = c
        if v:
            ech.add(v)
    if 0 in ech.rows:
        raise ValueError("inconsistent linear system")
    # back substitution to reduced form
    pivots = sorted(ech.rows)
    reduced: dict[int, Vec] = {}
    for k in pivots:
        r = dict(ech.rows[k])
        changed = True
        while changed:
            changed = False
            for kk in list(r):
                if kk != k and kk in reduced:
                    r = axpy(r, -r[kk], reduced[kk])
                    changed = True
                    break
        inv = r[k].inverse()
        reduced[k] = {kk: c * inv for kk, c in r.items()}
    inv_order = {i: u for u, i in order.items()}
    solution = {}
    for k, r in reduced.items():
        expr = {}
        for kk, c in r.items():
            if kk == k:
                continue
            expr[1 if kk == 0 else inv_order[kk]] = -c
        solution[inv_order[k]] = expr
    free = [u for u in unknowns if order[u] not in reduced]
    return solution, free


__all__ = ["Echelon", "rank", "solve_linear", "content_normalize", "axpy", "scale", "ONE"]
