"""Yetter-Drinfeld modules over a finite group algebra.

A module is stored in a homogeneous basis: ``degrees[j]`` is the group
element of basis vector j and ``act[g][j]`` lists the pairs (k, c) with
g . x_j = sum c x_k.  Simple modules M(g, rho) are induced from a
representation rho of the centralizer of g along fixed coset
representatives, so the basis of M(g, rho) is {t_a (x) w_b}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .cyclotomic import ONE, ZERO, CycScalar, nq, pretty, render
from .groups import Character, FinGroup, GroupMap, Representation, degree_two_irreps

Rep = Union[Character, Representation]
Column = tuple[tuple[int, CycScalar], ...]


class BraidingMatrix:
    """The matrix (b_ij) of a diagonal braiding c(x_i (x) x_j) = b_ij x_j (x) x_i."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[object]]):
        rows = tuple(tuple(CycScalar.coerce(x) for x in row) for row in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("braiding matrix must be square")
        for r in rows:
            for x in r:
                if x.root_exponent() is None:
                    raise ValueError(f"braiding entry {render(x)} is not a root of unity")
        self.entries = rows

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> CycScalar:
        return self.entries[ij[0]][ij[1]]

    def exponents(self) -> list[list[int]]:
        return [[x.root_exponent() for x in row] for row in self.entries]  # type: ignore[misc]

    def rho(self) -> BraidingMatrix:
        """Swap the two basis vectors (rank 2) or reverse the basis in general."""
        n = self.dim
        return BraidingMatrix([[self.entries[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)])

    def tau(self) -> BraidingMatrix:
        """The braiding of the inverse: b_ij -> b_ji^-1."""
        n = self.dim
        return BraidingMatrix([[self.entries[j][i].inverse() for j in range(n)] for i in range(n)])

    def permuted(self, perm: Sequence[int]) -> BraidingMatrix:
        return BraidingMatrix([[self.entries[perm[i]][perm[j]] for j in range(self.dim)] for i in range(self.dim)])

    def is_quantum_linear_space(self) -> bool:
        n = self.dim
        return all((self.entries[i][j] * self.entries[j][i]).is_one() for i in range(n) for j in range(n) if i != j)

    def cartan_matrix(self) -> list[list[int]] | None:
        """Generalized Cartan matrix a with b_ij b_ji = b_ii^(a_ij), or None."""
        n = self.dim
        a = [[2] * n for _ in range(n)]
        for i in range(n):
            qi = self.entries[i][i]
            ordi = _root_order(qi)
            if ordi == 1:
                return None
            for j in range(n):
                if i == j:
                    continue
                prod = self.entries[i][j] * self.entries[j][i]
                for m in range(ordi):
                    if qi ** (-m) == prod:
                        a[i][j] = -m
                        break
                else:
                    return None
        for i in range(n):
            for j in range(n):
                if (a[i][j] == 0) != (a[j][i] == 0):
                    return None
        return a

    def is_cartan_type(self) -> bool:
        return self.cartan_matrix() is not None

    def lower_bound(self) -> float | int:
        """prod N(b_ii): the dimension of the associated quantum linear space."""
        out: float | int = 1
        for i in range(self.dim):
            out *= nq(self.entries[i][i])
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BraidingMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "BraidingMatrix(" + str([[pretty(x) for x in r] for r in self.entries]) + ")"

    def to_json(self) -> list[list[str]]:
        return [[render(x) for x in row] for row in self.entries]


def _root_order(q: CycScalar) -> int:
    e = q.root_exponent()
    return 16 // math.gcd(e, 16)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Summand:
    """Bookkeeping for one simple summand M(g, rho) of a module."""

    g: int
    rho: Rep
    offset: int
    dim: int


class YDModule:
    def __init__(self, group: FinGroup, degrees: Sequence[int], act: list[list[Column]],
                 summands: Sequence[Summand] = ()):
        self.group = group
        self.degrees = tuple(degrees)
        self.act = act
        self.summands = tuple(summands)

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def rank(self) -> int:
        return len(self.summands)

    def apply(self, g: int, j: int) -> Column:
        return self.act[g][j]

    def check(self) -> bool:
        """Module axioms plus the Yetter-Drinfeld compatibility on degrees."""
        G = self.group
        n = self.dim
        for j in range(n):
            if self.act[0][j] != ((j, ONE),):
                return False
        for g in range(G.order):
            for j in range(n):
                for k, _ in self.act[g][j]:
                    if self.degrees[k] != G.conj(g, self.degrees[j]):
                        return False
        for g in G.generators:
            for h in range(G.order):
                gh = G.mul(g, h)
                for j in range(n):
                    lhs = _apply_vec(self, g, dict(self.act[h][j]))
                    if lhs != dict(self.act[gh][j]):
                        return False
        return True

    def __repr__(self) -> str:
        return f"YDModule({self.group.name}, dim={self.dim}, rank={self.rank})"

    def describe(self) -> str:
        G = self.group
        parts = []
        for s in self.summands:
            parts.append(f"M({G.names[s.g]}, {describe_rep(s.rho)})")
        return " + ".join(parts) if parts else "0"


def _apply_vec(V: YDModule, g: int, vec: dict[int, CycScalar]) -> dict[int, CycScalar]:
    out: dict[int, CycScalar] = {}
    for j, c in vec.items():
        for k, a in V.act[g][j]:
            v = out.get(k, ZERO) + c * a
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def describe_rep(rho: Rep) -> str:
    G = rho.group
    if isinstance(rho, Character):
        gens = G.small_generating_set(rho.support)
        return "chi(" + ", ".join(f"{G.names[g]}={pretty(rho(g))}" for g in gens) + ")"
    gens = G.small_generating_set(rho.support)
    def mat(g: int) -> str:
        return "[" + "; ".join(" ".join(pretty(x) for x in r) for r in rho.matrix(g)) + "]"
    return "rho(" + ", ".join(f"{G.names[g]}={mat(g)}" for g in gens) + ")"


# ---------------------------------------------------------------------------
# construction


def coset_representatives(G: FinGroup, sub: Sequence[int]) -> list[int]:
    """Left coset representatives t with G = union t*sub, starting with the identity."""
    S = set(sub)
    reps: list[int] = []
    covered: set[int] = set()
    for t in range(G.order):
        if t in covered:
            continue
        reps.append(t)
        covered.update(G.mul(t, s) for s in S)
    return reps


def simple_module(G: FinGroup, g: int | str, rho: Rep) -> YDModule:
    """M(g, rho) = k G (x)_{k G^g} W induced from a representation of the centralizer."""
    g = G.elem(g)
    C = G.centralizer(g)
    if tuple(sorted(rho.support)) != C:
        raise ValueError("rho must be a representation of the centralizer of g")
    reps = coset_representatives(G, C)
    d = rho.degree
    pos = {}
    for a, t in enumerate(reps):
        for s in C:
            pos[G.mul(t, s)] = (a, s)
    degrees = [G.conj(t, g) for t in reps for _ in range(d)]
    act: list[list[Column]] = []
    for h in range(G.order):
        cols: list[Column] = []
        for a, t in enumerate(reps):
            c, s = pos[G.mul(h, t)]
            m = rho.matrix(s)
            for b in range(d):
                cols.append(tuple((c * d + k, m[k][b]) for k in range(d) if m[k][b]))
        act.append(cols)
    return YDModule(G, degrees, act, (Summand(g, rho, 0, len(degrees)),))


def direct_sum(modules: Iterable[YDModule]) -> YDModule:
    mods = list(modules)
    if not mods:
        raise ValueError("empty direct sum")
    G = mods[0].group
    degrees: list[int] = []
    act: list[list[Column]] = [[] for _ in range(G.order)]
    summands: list[Summand] = []
    off = 0
    for M in mods:
        if M.group is not G:
            raise ValueError("summands over different groups")
        degrees += M.degrees
        for h in range(G.order):
            act[h] += [tuple((k + off, c) for k, c in col) for col in M.act[h]]
        summands += [Summand(s.g, s.rho, s.offset + off, s.dim) for s in M.summands]
        off += M.dim
    return YDModule(G, degrees, act, summands)


def from_pairs(G: FinGroup, pairs: Sequence[tuple[int | str, Character]]) -> YDModule:
    """Direct sum of one-dimensional modules M(h, chi) over an abelian group."""
    return direct_sum(simple_module(G, h, chi) for h, chi in pairs)


def twist(V: YDModule, f: GroupMap) -> YDModule:
    """V^f: same space, degrees f(deg) and action h . m = f^-1(h) . m."""
    finv = f.inverse()
    G = V.group
    act = [V.act[finv(h)] for h in range(G.order)]
    summands = [Summand(f(s.g), s.rho.twisted(f), s.offset, s.dim) for s in V.summands]
    return YDModule(G, [f(d) for d in V.degrees], act, summands)


# ---------------------------------------------------------------------------
# isomorphism classes


def summand_key(G: FinGroup, g: int, rho: Rep) -> tuple:
    """Iso invariant of M(g, rho): class index of g and the character of rho
    transported to the centralizer of the class representative."""
    cls = G.class_of[g]
    rep = G.conjugacy_classes[cls][0]
    x = next(x for x in range(G.order) if G.conj(x, g) == rep)
    r = rho.transported(x)
    sig = tuple(r.trace(s).sort_key() for s in r.support)
    return (cls, rho.degree, sig)


def iso_key(V: YDModule) -> tuple:
    return tuple(sorted(summand_key(V.group, s.g, s.rho) for s in V.summands))


def isomorphic(V: YDModule, W: YDModule) -> bool:
    return V.group is W.group and iso_key(V) == iso_key(W)


# ---------------------------------------------------------------------------
# braidings


def full_braiding(V: YDModule) -> list[list[CycScalar]]:
    """Dense matrix of c on V (x) V in the basis x_i (x) x_j (index i*n + j)."""
    n = V.dim
    M = [[ZERO] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            for k, c in V.act[V.degrees[i]][j]:
                M[k * n + i][i * n + j] = c
    return M


def diagonal_matrix(V: YDModule) -> BraidingMatrix | None:
    """The braiding matrix in the constructed basis when that basis is diagonal.

    For modules over abelian groups this is (chi_j(h_i)).  For an induced module
    of a character over an index-two centralizer the induced basis {x, t.x} is
    diagonal, and so is any basis of M(g, rho) with g central.  Direct sums that
    mix noncommuting degrees may fail to be diagonal; then None is returned.
    """
    n = V.dim
    rows = []
    for i in range(n):
        g = V.degrees[i]
        row = []
        for j in range(n):
            col = V.act[g][j]
            if len(col) != 1 or col[0][0] != j:
                return None
            row.append(col[0][1])
        rows.append(row)
    return BraidingMatrix(rows)


def lower_bound(V: YDModule) -> float | int:
    """A lower bound for dim B(V), multiplicative over summands.

    A diagonal summand contributes the dimension of its quantum linear space;
    a nondiagonal summand of dimension d >= 2 contributes d + 2, since B(V)
    then holds 1, V and a nonzero top degree beyond V.
    """
    out: float | int = 1
    for s in V.summands:
        sub = _summand_module(V, s)
        b = diagonal_matrix(sub)
        if b is not None:
            out *= b.lower_bound()
        else:
            out *= s.dim + 2
    return out


def _summand_module(V: YDModule, s: Summand) -> YDModule:
    G = V.group
    idx = range(s.offset, s.offset + s.dim)
    act = [[tuple((k - s.offset, c) for k, c in V.act[h][j]) for j in idx] for h in range(G.order)]
    return YDModule(G, [V.degrees[j] for j in idx], act, (Summand(s.g, s.rho, 0, s.dim),))


def summand_modules(V: YDModule) -> list[YDModule]:
    return [_summand_module(V, s) for s in V.summands]


# ---------------------------------------------------------------------------
# irreducibles


def irreducible_modules(G: FinGroup, finite_only: bool = True) -> list[YDModule]:
    """Simple modules M(g, rho), one per iso class, sorted by canonical key.

    For each class representative g every linear character of the centralizer
    is used; when g is central in D4 or the quaternions the tabulated degree-2
    representation is added as well.  With ``finite_only`` the modules whose
    diagonal entry rho(g) equals 1 (infinite Nichols algebra) are dropped.
    """
    out = []
    for cls in G.conjugacy_classes:
        g = cls[0]
        C = G.centralizer(g)
        reps: list[Rep] = list(G.subgroup_characters(C))
        if len(C) == G.order and G.name in ("D4", "H"):
            reps += degree_two_irreps(G)
        for rho in reps:
            M = simple_module(G, g, rho)
            if finite_only:
                b = diagonal_matrix(M)
                if b is not None and math.isinf(b.lower_bound()):
                    continue
            out.append(M)
    out.sort(key=iso_key)
    return out


def module_key_order(mods: Sequence[YDModule]) -> dict[tuple, int]:
    return {iso_key(M): i for i, M in enumerate(mods)}


def sum_of(irreps: Sequence[YDModule], idx: Sequence[int]) -> YDModule:
    return direct_sum(irreps[i] for i in idx)


def multisets(n_items: int, size: int) -> Iterable[tuple[int, ...]]:
    return itertools.combinations_with_replacement(range(n_items), size)
