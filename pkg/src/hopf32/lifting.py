"""Liftings of B(V) # kG by rewriting with deformation parameters.

A lifting problem has generators a_1..a_n (a basis of V), the group G
acting on them by monomial matrices, and relation templates whose right
sides are lambda * (t - 1) for the group-like t of the left side's degree:

  power relations        a_i^N_i                = l * (h_i^N_i - 1)
  braided commutators    a_j a_i  (j > i)        -> b_ji a_i a_j - b_ji l (h_i h_j - 1)

The rank-two braidings with b_11 = b_22 = -1 that are not quantum linear
spaces add the letter z = a_1 a_2 - b_12 a_2 a_1 and its PBW rules.

Monomials are kept as g * word.  Overlaps between left sides and the
compatibility of each rule with every group element are resolved
symbolically; the coefficients of the resulting residues are polynomials in
the parameters and must vanish for the deformation to keep its dimension.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import ONE, ZERO, CycScalar, nq, pretty
from .groups import FinGroup
from .linalg import solve_linear
from .ydmod import YDModule, diagonal_matrix, summand_key

Word = tuple[int, ...]
Mono = tuple[int, ...]          # sorted parameter indices; () is the constant monomial
Poly = dict                     # Mono -> CycScalar
Expr = dict                     # (g, Word) -> Poly


class UnsupportedLifting(ValueError):
    """The configuration lies outside the rewriting templates or the counting rules."""


class NonTerminating(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# polynomials in the parameters


def _padd(p: Poly, q: Poly, s: CycScalar = ONE) -> Poly:
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, ZERO) + c * s
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(sorted(m1 + m2))
            v = out.get(m, ZERO) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _pscale(p: Poly, s: CycScalar) -> Poly:
    if not s:
        return {}
    return {m: c * s for m, c in p.items()}


def _const(c: CycScalar) -> Poly:
    return {(): c} if c else {}


def _peval(p: Poly, values: dict[int, CycScalar]) -> CycScalar:
    out = ZERO
    for m, c in p.items():
        t = c
        for k in m:
            t = t * values.get(k, ZERO)
        out = out + t
    return out


def _eadd(e: Expr, key, p: Poly) -> None:
    cur = e.get(key)
    nv = p if cur is None else _padd(cur, p)
    if nv:
        e[key] = nv
    else:
        e.pop(key, None)


# ---------------------------------------------------------------------------
# the problem


@dataclass
class Relation:
    kind: str                 # "power", "commutator", "pbw"
    lhs: Word
    base: list[tuple[int, Word, CycScalar]]   # rhs terms without deformation: (g, word, scalar)
    target: int               # group-like t of the left side's degree
    letters: tuple[int, ...]  # generators involved (with multiplicity), for weights
    param: int | None = None  # parameter index when the deformation is not forced to 0
    label: str = ""


@dataclass
class Param:
    name: str
    relation: int
    target: int
    letters: tuple[int, ...]
    kind: str


class LiftingProblem:
    def __init__(self, V: YDModule, name: str = ""):
        b = diagonal_matrix(V)
        if b is None:
            raise UnsupportedLifting("the braiding is not diagonal in the constructed basis")
        G = V.group
        self.group: FinGroup = G
        self.module = V
        self.name = name
        self.b = b
        n = V.dim
        self.ngens = n
        self.N = [nq(b[i, i]) for i in range(n)]
        if any(math.isinf(x) for x in self.N):
            raise UnsupportedLifting("a diagonal entry equals 1")
        # monomial action on the generators
        self.act: list[list[tuple[int, CycScalar]]] = []
        for g in range(G.order):
            row = []
            for j in range(n):
                col = V.act[g][j]
                if len(col) != 1:
                    raise UnsupportedLifting("the group does not act by monomial matrices")
                row.append(col[0])
            self.act.append(row)
        self.degrees = list(V.degrees)
        self.letter_names = [f"a{i + 1}" for i in range(n)]
        self.relations: list[Relation] = []
        if b.is_quantum_linear_space():
            self.kind = "qls"
            self._qls_relations()
        elif n == 2 and b[0, 0] == -ONE and b[1, 1] == -ONE:
            self.kind = "rank2"
            self._rank2_relations()
        else:
            raise UnsupportedLifting("no relation template for this braiding")
        self.params: list[Param] = []
        for k, r in enumerate(self.relations):
            if r.kind != "pbw" and r.target != 0:
                r.param = len(self.params)
                self.params.append(Param(f"l{len(self.params) + 1}", k, r.target, r.letters, r.kind))
        self._rules_by_first: dict[int, list[int]] = {}
        for k, r in enumerate(self.relations):
            self._rules_by_first.setdefault(r.lhs[0], []).append(k)

    # -- templates -------------------------------------------------------
    def _qls_relations(self) -> None:
        G, b = self.group, self.b
        n = self.ngens
        for i in range(n):
            Ni = int(self.N[i])
            t = G.power(self.degrees[i], Ni)
            self.relations.append(Relation("power", (i,) * Ni, [], t, (i,) * Ni,
                                           label=f"a{i + 1}^{Ni}"))
        for i, j in itertools.combinations(range(n), 2):
            bji = b[j, i]
            t = G.mul(self.degrees[i], self.degrees[j])
            # a_i a_j - b_ij a_j a_i = l (h_i h_j - 1)  <=>  a_j a_i = b_ji a_i a_j - b_ji l (...)
            self.relations.append(Relation("commutator", (j, i), [(0, (i, j), bji)], t, (i, j),
                                           label=f"a{i + 1}a{j + 1} - ({pretty(b[i, j])})a{j + 1}a{i + 1}"))

    def _rank2_relations(self) -> None:
        G, b = self.group, self.b
        if not G.is_abelian:
            raise UnsupportedLifting("rank-two PBW templates are implemented for abelian groups only")
        h1, h2 = self.degrees
        if G.power(h1, 2) != 0 or G.power(h2, 2) != 0:
            raise UnsupportedLifting("deformed squares of a non-quantum-linear rank-two braiding")
        b12, b21 = b[0, 1], b[1, 0]
        q = b[0, 0] * b12 * b21 * b[1, 1]
        Nz = nq(q)
        if math.isinf(Nz):
            raise UnsupportedLifting("infinite PBW height for z")
        Nz = int(Nz)
        z = 2
        self.letter_names.append("z")
        self.degrees.append(G.mul(h1, h2))
        for g in range(G.order):
            (k1, s1), (k2, s2) = self.act[g][0], self.act[g][1]
            if (k1, k2) != (0, 1):
                raise UnsupportedLifting("the action permutes the generators")
            self.act[g].append((z, s1 * s2))
        bi = b12.inverse()
        hz = self.degrees[z]
        self.relations += [
            Relation("power", (0, 0), [], 0, (0, 0), label="a1^2"),
            Relation("power", (1, 1), [], 0, (1, 1), label="a2^2"),
            Relation("pbw", (1, 0), [(0, (0, 1), bi), (0, (z,), -bi)], 0, (0, 1), label="a2a1"),
            Relation("pbw", (z, 0), [(0, (0, z), -bi)], 0, (0, 0, 1), label="z a1"),
            Relation("pbw", (z, 1), [(0, (1, z), -b12)], 0, (0, 1, 1), label="z a2"),
            Relation("power", (z,) * Nz, [], G.power(hz, Nz), (0, 1) * Nz, label=f"z^{Nz}"),
        ]
        self.N_z = Nz

    # -- rewriting -------------------------------------------------------
    def rhs(self, r: Relation) -> Expr:
        e: Expr = {}
        for g, w, s in r.base:
            _eadd(e, (g, w), _const(s))
        if r.param is not None:
            p = r.param
            # + l (t - 1); commutators carry the extra factor b_ji from the rewrite direction
            s = ONE
            if r.kind == "commutator":
                s = -r.base[0][2]
            _eadd(e, (r.target, ()), {(p,): s})
            _eadd(e, (0, ()), {(p,): -s})
        return e

    def act_word(self, g: int, w: Word) -> tuple[CycScalar, Word]:
        s = ONE
        out = []
        for x in w:
            k, c = self.act[g][x]
            s = s * c
            out.append(k)
        return s, tuple(out)

    def find_redex(self, w: Word) -> tuple[int, int] | None:
        for pos, x in enumerate(w):
            for k in self._rules_by_first.get(x, ()):
                L = self.relations[k].lhs
                if w[pos:pos + len(L)] == L:
                    return pos, k
        return None

    def apply_rule(self, g: int, w: Word, pos: int, k: int, coef: Poly) -> Expr:
        r = self.relations[k]
        u, v = w[:pos], w[pos + len(r.lhs):]
        out: Expr = {}
        G = self.group
        for (h, rw), p in self.rhs(r).items():
            if h == 0:
                _eadd(out, (g, u + rw + v), _pmul(coef, p))
            else:
                s, u2 = self.act_word(G.inv(h), u)
                _eadd(out, (G.mul(g, h), u2 + rw + v), _pscale(_pmul(coef, p), s))
        return out

    def normal_form(self, e: Expr, max_steps: int = 200000) -> Expr:
        pending: Expr = {}
        for k, p in e.items():
            _eadd(pending, k, p)
        out: Expr = {}
        steps = 0
        while pending:
            (g, w), p = pending.popitem()
            red = self.find_redex(w)
            if red is None:
                _eadd(out, (g, w), p)
                continue
            steps += 1
            if steps > max_steps:
                raise NonTerminating("reduction did not terminate; the monomial order is broken")
            for key, q in self.apply_rule(g, w, red[0], red[1], p).items():
                _eadd(pending, key, q)
        return out

    # -- ambiguities -----------------------------------------------------
    def ambiguities(self) -> Iterable[tuple[str, Expr, Expr]]:
        """Pairs of one-step reductions of the same element."""
        rels = self.relations
        one: Poly = {(): ONE}
        for k1, r1 in enumerate(rels):
            L1 = r1.lhs
            for k2, r2 in enumerate(rels):
                L2 = r2.lhs
                # overlaps: a proper suffix of L1 equals a proper prefix of L2
                for ov in range(1, min(len(L1), len(L2))):
                    if L1[-ov:] == L2[:ov]:
                        W = L1 + L2[ov:]
                        yield (f"{r1.label}|{r2.label}", self.apply_rule(0, W, 0, k1, one),
                               self.apply_rule(0, W, len(L1) - ov, k2, one))
                # inclusions
                if k1 != k2 and len(L2) < len(L1):
                    for p in range(len(L1) - len(L2) + 1):
                        if L1[p:p + len(L2)] == L2:
                            yield (f"{r1.label}>{r2.label}", self.apply_rule(0, L1, 0, k1, one),
                                   self.apply_rule(0, L1, p, k2, one))
        G = self.group
        for k, r in enumerate(rels):
            for g in range(1, G.order):
                # (lhs) * g  =  g * (g^-1 . lhs)
                gi = G.inv(g)
                a: Expr = {}
                for (h, w), p in self.rhs(r).items():
                    s, w2 = self.act_word(gi, w)
                    _eadd(a, (G.mul(h, g), w2), _pscale(p, s))
                s, w2 = self.act_word(gi, r.lhs)
                yield (f"{r.label}*{G.names[g]}", a, {(g, w2): {(): s}})

    def residues(self) -> list[tuple[str, Expr]]:
        out = []
        for label, a, b in self.ambiguities():
            na = self.normal_form(a)
            nb = self.normal_form(b)
            diff = dict(na)
            for key, p in nb.items():
                _eadd(diff, key, _pscale(p, -ONE))
            if diff:
                out.append((label, diff))
        return out

    def normal_word_count(self, cap: int = 4096) -> int:
        """Number of words avoiding every left side (finite for these templates)."""
        n = len(self.letter_names)
        lhs = [r.lhs for r in self.relations]
        count = 1
        layer: list[Word] = [()]
        while layer:
            nxt = []
            for w in layer:
                for x in range(n):
                    u = w + (x,)
                    if any(u[-len(L):] == L for L in lhs if len(L) <= len(u)):
                        continue
                    nxt.append(u)
            count += len(nxt)
            if count > cap:
                raise NonTerminating("infinitely many normal words")
            layer = nxt
        return count

    # -- reporting helpers ----------------------------------------------
    def param_names(self) -> list[str]:
        return [p.name for p in self.params]

    def render_relation(self, k: int, values: dict[int, CycScalar] | None = None) -> str:
        r = self.relations[k]
        G = self.group
        lhs = _render_word(r.lhs, self.letter_names)
        if r.kind == "commutator":
            i, j = r.letters
            lhs = f"{self.letter_names[i]}{self.letter_names[j]} - ({pretty(self.b[i, j])}){self.letter_names[j]}{self.letter_names[i]}"
        if r.kind == "pbw":
            rhs = " + ".join(f"({pretty(s)}){_render_word(w, self.letter_names)}" for _, w, s in r.base)
            return f"{lhs} = {rhs}"
        if r.param is None:
            return f"{lhs} = 0"
        tname = G.names[r.target]
        if values is None:
            return f"{lhs} = {self.params[r.param].name}({tname} - 1)"
        v = values.get(r.param, ZERO)
        if not v:
            return f"{lhs} = 0"
        coef = "" if v.is_one() else f"({pretty(v)})"
        return f"{lhs} = {coef}({tname} - 1)"


def _render_word(w: Word, names: Sequence[str]) -> str:
    out = []
    for x, grp in itertools.groupby(w):
        k = len(list(grp))
        out.append(names[x] if k == 1 else f"{names[x]}^{k}")
    return "".join(out) or "1"


# ---------------------------------------------------------------------------
# operations


def primitive_targets(P: LiftingProblem) -> list[dict]:
    """Per template relation: target group-like, whether lambda is forced to 0,
    and whether the target coincides with a generator degree."""
    G = P.group
    out = []
    for r in P.relations:
        if r.kind == "pbw":
            continue
        collide = [P.letter_names[i] for i in range(P.ngens) if P.degrees[i] == r.target]
        out.append({
            "relation": r.label,
            "target": G.names[r.target],
            "forced_zero": r.target == 0,
            "collision": collide,
            "param": None if r.param is None else P.params[r.param].name,
        })
    return out


def chi_constraints(P: LiftingProblem) -> set[str]:
    """Parameters forced to 0 because G scales the left side by a nontrivial character."""
    G = P.group
    forced = set()
    for r in P.relations:
        if r.param is None:
            continue
        for g in range(G.order):
            s, w = P.act_word(g, r.lhs)
            if w != r.lhs:
                raise UnsupportedLifting("chi_constraints needs a diagonal action")
            if not s.is_one():
                forced.add(P.params[r.param].name)
                break
    return forced


@dataclass
class DiamondResult:
    equations: list[Poly]                    # each must vanish
    solution: dict[int, dict] | None = None  # pivot -> {free param or "const": coefficient}
    free: list[int] = field(default_factory=list)
    consistent: bool | None = None
    normal_forms: int | None = None
    expected: int | None = None

    def forced_zero(self) -> set[int]:
        return {p for p, e in (self.solution or {}).items() if not e}


def diamond_check(P: LiftingProblem, values: dict[int | str, object] | None = None) -> DiamondResult:
    """Symbolic (values None): the linear constraints on the parameters.
    Concrete: whether every residue vanishes and the normal-form count is |G| dim B(V)."""
    res = P.residues()
    eqs: list[Poly] = []
    for _, diff in res:
        eqs.extend(diff.values())
    G = P.group
    expected = G.order * _pbw_dim(P)
    if values is not None:
        vals = {}
        for k, v in values.items():
            idx = k if isinstance(k, int) else P.param_names().index(k)
            vals[idx] = CycScalar.coerce(v)
        ok = all(not _peval(p, vals) for p in eqs)
        count = G.order * P.normal_word_count()
        return DiamondResult(eqs, consistent=ok and count == expected, normal_forms=count, expected=expected)
    linear = [p for p in eqs if all(len(m) <= 1 for m in p)]
    nonlinear = [p for p in eqs if any(len(m) > 1 for m in p)]
    # tag the unknowns so that parameter indices never collide with the constant key 1
    unknowns = [("l", k) for k in range(len(P.params))]
    sysm = [{(1 if not m else ("l", m[0])): c for m, c in p.items()} for p in linear]
    try:
        tagged, tfree = solve_linear(sysm, unknowns)
    except ValueError:
        return DiamondResult(eqs, consistent=False, expected=expected)
    solution = {piv[1]: {("const" if u == 1 else u[1]): c for u, c in expr.items()} for piv, expr in tagged.items()}
    free = [u[1] for u in tfree]
    for p in nonlinear:
        if _subst(p, solution):
            raise UnsupportedLifting("nonlinear constraint survives the linear ones")
    return DiamondResult(eqs, solution=solution, free=free, consistent=True,
                         normal_forms=G.order * P.normal_word_count(), expected=expected)


def _subst(p: Poly, solution: dict[int, dict]) -> Poly:
    out: Poly = {}
    for m, c in p.items():
        term: Poly = {(): c}
        for k in m:
            if k in solution:
                f: Poly = {}
                for u, a in solution[k].items():
                    f = _padd(f, {() if u == "const" else (u,): a})
            else:
                f = {(k,): ONE}
            term = _pmul(term, f)
        out = _padd(out, term)
    return out


def _pbw_dim(P: LiftingProblem) -> int:
    if P.kind == "qls":
        return int(math.prod(P.N))
    return 4 * P.N_z


# ---------------------------------------------------------------------------
# counting isomorphism classes


@dataclass
class LiftingFamily:
    module: str
    relations: list[str]
    forced: list[str]
    free: list[str]
    symmetry: list[str]
    count: int | float
    representatives: list[dict[str, str]]
    quotient: str | None = None

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "relations": self.relations,
            "forced": self.forced,
            "free": self.free,
            "symmetry": self.symmetry,
            "count": "infinite" if math.isinf(self.count) else self.count,
            "representatives": self.representatives,
            "quotient": self.quotient,
        }


def _int_rank(rows: list[tuple[int, ...]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def _blocks(P: LiftingProblem) -> tuple[list[int], list[tuple], list[int], list[int]]:
    """Generator -> block index, block keys, block multiplicities, block summand dims."""
    V = P.module
    G = V.group
    keys: list[tuple] = []
    mult: list[int] = []
    dims: list[int] = []
    gen_block = [0] * P.ngens
    for s in V.summands:
        key = summand_key(G, s.g, s.rho)
        if key in keys:
            bidx = keys.index(key)
            mult[bidx] += 1
        else:
            bidx = len(keys)
            keys.append(key)
            mult.append(1)
            dims.append(s.dim)
        for j in range(s.offset, s.offset + s.dim):
            gen_block[j] = bidx
    return gen_block, keys, mult, dims


def _stabilizer_block_perms(P: LiftingProblem, keys: list[tuple]) -> list[tuple[int, ...]]:
    from .ydmod import twist
    V = P.module
    G = V.group
    perms = set()
    if len(keys) < 2:
        return []
    for f in G.automorphisms:
        if f.is_identity():
            continue
        W = twist(V, f)
        tk = [summand_key(G, s.g, s.rho) for s in W.summands]
        if sorted(tk) != sorted(summand_key(G, s.g, s.rho) for s in V.summands):
            continue
        # block of original summand -> block of its image
        perm = {}
        for s, k in zip(V.summands, tk):
            perm[keys.index(summand_key(G, s.g, s.rho))] = keys.index(k)
        p = tuple(perm[b] for b in range(len(keys)))
        if any(p[b] != b for b in range(len(keys))):
            perms.add(p)
    return sorted(perms)


def classify_liftings(P: LiftingProblem) -> LiftingFamily:
    D = diamond_check(P)
    if not D.consistent:
        raise UnsupportedLifting("the undeformed relations are not confluent")
    sol = D.solution or {}
    names = P.param_names()
    gen_block, keys, mult, dims = _blocks(P)
    nb = len(keys)

    def weight(p: int) -> tuple[int, ...]:
        w = [0] * nb
        for x in P.params[p].letters:
            w[gen_block[x]] += 1
        return tuple(w)

    # homogeneity of the solved constraints
    for piv, expr in sol.items():
        for u in expr:
            if u == "const" or weight(u) != weight(piv):
                raise UnsupportedLifting("constraints mix parameters of different weights")

    forced = [f"{names[p]} = 0" for p in sorted(D.forced_zero())]
    for piv, expr in sorted(sol.items()):
        if expr:
            rhs = " + ".join(f"({pretty(c)}){names[u]}" for u, c in expr.items())
            forced.append(f"{names[piv]} = {rhs}")

    nonzero = [p for p in range(len(P.params)) if p not in sol or sol[p]]

    # pieces: sym(B) or tensor(B, C) for quadratic relations, singleton pieces otherwise
    def piece(p: int) -> tuple:
        prm = P.params[p]
        blocks = sorted({gen_block[x] for x in prm.letters})
        if len(prm.letters) == 2 and prm.kind in ("power", "commutator"):
            return ("sym", blocks[0]) if len(blocks) == 1 else ("tensor", blocks[0], blocks[1])
        return ("other", p)

    def is_gl_block(B: int) -> bool:
        return mult[B] >= 2

    for B in range(nb):
        if mult[B] >= 2 and dims[B] >= 2:
            raise UnsupportedLifting("repeated summands of dimension > 1")

    gl_pieces: dict[tuple, list[int]] = {}
    torus: list[int] = []
    for p in nonzero:
        pc = piece(p)
        if pc[0] in ("sym", "tensor") and any(is_gl_block(B) for B in pc[1:]):
            gl_pieces.setdefault(pc, []).append(p)
        else:
            torus.append(p)

    # GL pieces must be unconstrained and isolated
    gl_info: dict[tuple, int] = {}
    for pc, ps in gl_pieces.items():
        all_in_piece = [q for q in range(len(P.params)) if piece(q) == pc]
        if any(q in sol for q in all_in_piece):
            raise UnsupportedLifting("a block piece is only partially constrained")
        blocks = set(pc[1:])
        for q in nonzero:
            if piece(q) != pc and blocks & {gen_block[x] for x in P.params[q].letters}:
                raise UnsupportedLifting("a block of repeated summands meets two nonzero pieces")
        if pc[0] == "sym":
            gl_info[pc] = mult[pc[1]] + 1
        else:
            gl_info[pc] = min(mult[pc[1]], mult[pc[2]]) + 1

    torus_free = [p for p in torus if p not in sol]
    gl_keys = sorted(gl_info)

    # discrete symmetries from automorphisms stabilizing V
    perms = _stabilizer_block_perms(P, keys)
    symmetry = ["GL on blocks of repeated summands" if gl_keys else "",
                "rescaling of each summand" if torus_free else ""]
    symmetry = [s for s in symmetry if s]

    def map_param(p: int, perm: tuple[int, ...]) -> int | None:
        prm = P.params[p]
        gb = [perm[gen_block[x]] for x in prm.letters]
        # singleton 1-dim blocks: generator of block gb
        if any(dims[B] != 1 or mult[B] != 1 for B in gb):
            return None
        gens = tuple(sorted(gen_block.index(B) for B in gb))
        for q, prm2 in enumerate(P.params):
            if prm2.kind == prm.kind and tuple(sorted(prm2.letters)) == gens:
                return q
        return None

    def map_piece(pc: tuple, perm: tuple[int, ...]) -> tuple:
        if pc[0] == "sym":
            return ("sym", perm[pc[1]])
        a, b = sorted((perm[pc[1]], perm[pc[2]]))
        return ("tensor", a, b)

    usable_perms = []
    for perm in perms:
        ok = True
        img = {}
        for p in torus_free:
            q = map_param(p, perm)
            if q is None or q not in torus_free:
                ok = False
                break
            img[p] = q
        if ok and all(map_piece(pc, perm) in gl_info for pc in gl_keys):
            usable_perms.append((perm, img))
        elif ok is False and torus_free:
            raise UnsupportedLifting("an automorphism permutes constrained parameters")
    if usable_perms:
        symmetry.append(f"{len(usable_perms)} automorphism(s) permuting summands")

    # patterns: rank per GL piece, support among torus coordinates
    patterns = []
    infinite = False
    for ranks in itertools.product(*[range(gl_info[pc]) for pc in gl_keys]):
        for r in range(len(torus_free) + 1):
            for S in itertools.combinations(torus_free, r):
                if S and _int_rank([weight(p) for p in S]) < len(S):
                    infinite = True
                patterns.append((ranks, frozenset(S)))

    # orbits under the discrete symmetries
    index = {pat: k for k, pat in enumerate(patterns)}
    parent = list(range(len(patterns)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm, img in usable_perms:
        for pat in patterns:
            ranks, S = pat
            r2 = dict(zip(gl_keys, ranks))
            # the image pattern gives piece f(pc) the rank that pc had
            inv = {map_piece(k, perm): r2[k] for k in gl_keys}
            new_ranks = tuple(inv[pc] for pc in gl_keys)
            img_pat = (new_ranks, frozenset(img[p] for p in S))
            a, b = find(index[pat]), find(index[img_pat])
            if a != b:
                parent[max(a, b)] = min(a, b)

    relations = [P.render_relation(k) for k in range(len(P.relations))]
    free_names = [names[p] for p in D.free]
    if infinite:
        wdesc = ", ".join(f"{names[p]}:{weight(p)}" for p in torus_free)
        return LiftingFamily(P.name, relations, forced, free_names, symmetry, math.inf, [],
                             quotient=f"free parameters modulo rescaling with weights {wdesc}")

    reps_idx = sorted({find(k) for k in range(len(patterns))})
    representatives = []
    for k in reps_idx:
        ranks, S = patterns[k]
        vals: dict[int, CycScalar] = {p: ONE for p in S}
        for pc, rk in zip(gl_keys, ranks):
            vals.update(_gl_representative(P, pc, rk, gen_block))
        for piv, expr in sol.items():
            v = ZERO
            for u, c in expr.items():
                v = v + c * vals.get(u, ZERO)
            if v:
                vals[piv] = v
        check = diamond_check(P, vals)
        if not check.consistent:
            raise UnsupportedLifting("a representative fails the concrete diamond check")
        representatives.append({names[p]: pretty(v) for p, v in sorted(vals.items())})
    return LiftingFamily(P.name, relations, forced, free_names, symmetry, len(representatives), representatives)


def _gl_representative(P: LiftingProblem, pc: tuple, rk: int, gen_block: list[int]) -> dict[int, CycScalar]:
    """A canonical rank-rk form: a diagonal quadratic form or a partial identity matrix."""
    out: dict[int, CycScalar] = {}
    if pc[0] == "sym":
        gens = [x for x in range(P.ngens) if gen_block[x] == pc[1]][:rk]
        for p, prm in enumerate(P.params):
            if prm.kind == "power" and len(prm.letters) == 2 and prm.letters[0] in gens:
                out[p] = ONE
        return out
    g1 = [x for x in range(P.ngens) if gen_block[x] == pc[1]]
    g2 = [x for x in range(P.ngens) if gen_block[x] == pc[2]]
    pairs = {tuple(sorted((g1[k], g2[k]))) for k in range(rk)}
    for p, prm in enumerate(P.params):
        if prm.kind == "commutator" and tuple(sorted(prm.letters)) in pairs:
            out[p] = ONE
    return out


def lifting_problem(V: YDModule, name: str = "") -> LiftingProblem:
    return LiftingProblem(V, name)
