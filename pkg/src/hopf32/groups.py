"""Finite groups of order at most 16 as multiplication tables.

Every catalogue group is built from a finite presentation: a small
Todd-Coxeter coset enumeration over the trivial subgroup produces the
regular action, and elements are then named by their first normal form
``g1^a g2^b ...`` in colexicographic exponent order.  All later queries
(conjugacy, centralizers, characters, automorphisms) are exhaustive
searches over these tables, which is instantaneous at this size.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .cyclotomic import ORDER, CycScalar

# ---------------------------------------------------------------------------
# coset enumeration


class _CosetTable:
    """Hasselgrove-Leech-Trotter enumeration with coincidence handling."""

    def __init__(self, ngens: int, relators: list[list[int]], limit: int = 4096):
        self.ncols = 2 * ngens
        self.rels = relators
        self.limit = limit
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]

    @staticmethod
    def inv(x: int) -> int:
        return x ^ 1

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if len(self.table) >= self.limit:
            raise RuntimeError("coset enumeration exceeded its limit; presentation too large")
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(n)
        self.table[c][x] = n
        self.table[n][self.inv(x)] = c

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        lo, hi = min(k, l), max(k, l)
        self.parent[hi] = lo
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                if self.table[f][self.inv(x)] == e:
                    self.table[f][self.inv(x)] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][self.inv(x)] is not None:
                    self._merge(e1, self.table[f1][self.inv(x)], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][self.inv(x)] = e1

    def scan_and_fill(self, c: int, word: list[int]) -> None:
        t = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and t[f][word[i]] is not None:
                f = t[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and t[b][self.inv(word[j])] is not None:
                b = t[b][self.inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][word[i]] = b
                t[b][self.inv(word[i])] = f
                return
            self.define(f, word[i])

    def run(self) -> list[list[int]]:
        c = 0
        while c < len(self.table):
            for rel in self.rels:
                if not self.alive(c):
                    break
                self.scan_and_fill(c, rel)
            if self.alive(c):
                for x in range(self.ncols):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1
        live = [k for k in range(len(self.table)) if self.alive(k)]
        index = {k: n for n, k in enumerate(live)}
        return [[index[self.rep(self.table[k][x])] for x in range(self.ncols)] for k in live]


# ---------------------------------------------------------------------------
# the group type

_TOKEN = re.compile(r"([A-Za-z]\w*?)(?:\^(-?\d+))?(?=[A-Za-z]|$)")


class FinGroup:
    """A finite group given by its multiplication table (identity at index 0)."""

    def __init__(self, name: str, table: list[list[int]], names: list[str],
                 generators: list[int], gen_names: list[str], aliases: dict[str, str] | None = None):
        self.name = name
        self.table = table
        self.names = names
        self.generators = generators
        self.gen_names = gen_names
        self.order = len(table)
        self._index = {n: k for k, n in enumerate(names)}
        for alias, target in (aliases or {}).items():
            self._index[alias] = self._index[target]
        self.inverse = [row.index(0) for row in table]

    def __repr__(self) -> str:
        return f"FinGroup({self.name!r}, order={self.order})"

    # -- element access -------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        r = 0
        for _ in range(k):
            r = self.table[r][a]
        return r

    def conj(self, h: int, g: int) -> int:
        """h g h^-1."""
        return self.table[self.table[h][g]][self.inverse[h]]

    def prod(self, elems: Iterable[int]) -> int:
        r = 0
        for e in elems:
            r = self.table[r][e]
        return r

    def elem(self, spec: str | int) -> int:
        """Element index from a name such as 'g1^2g2', 'r^2s', '-e' or an index."""
        if isinstance(spec, int):
            return spec
        s = spec.replace(" ", "").replace("σ", "s").replace("*", "")
        if s in self._index:
            return self._index[s]
        gens = {n: g for n, g in zip(self.gen_names, self.generators)}
        pos, out = 0, 0
        # longest-match over generator names
        names = sorted(gens, key=len, reverse=True)
        while pos < len(s):
            for n in names:
                if s.startswith(n, pos):
                    pos += len(n)
                    k = 1
                    m = re.match(r"\^(-?\d+)", s[pos:])
                    if m:
                        k = int(m.group(1))
                        pos += m.end()
                    out = self.table[out][self.power(gens[n], k)]
                    break
            else:
                raise KeyError(f"cannot parse element {spec!r} in {self.name}")
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    # -- structure ------------------------------------------------------
    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def conjugacy_classes(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for g in range(self.order):
            if g in seen:
                continue
            cls = tuple(sorted({self.conj(h, g) for h in range(self.order)}))
            seen.update(cls)
            out.append(cls)
        return out

    @cached_property
    def class_of(self) -> list[int]:
        idx = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes):
            for g in cls:
                idx[g] = k
        return idx

    def centralizer(self, g: int) -> tuple[int, ...]:
        t = self.table
        return tuple(h for h in range(self.order) if t[h][g] == t[g][h])

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.order) if len(self.conjugacy_classes[self.class_of[g]]) == 1)

    def subgroup(self, gens: Iterable[int]) -> tuple[int, ...]:
        elems = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in elems:
                        elems.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(elems))

    @cached_property
    def commutator_subgroup(self) -> tuple[int, ...]:
        t, inv = self.table, self.inverse
        comms = {t[t[t[a][b]][inv[a]]][inv[b]] for a in range(self.order) for b in range(self.order)}
        return self.subgroup(comms)

    def small_generating_set(self, elems: Sequence[int]) -> list[int]:
        """Greedy generating set of the subgroup with the given elements."""
        target = set(elems)
        gens: list[int] = []
        cur = {0}
        for g in sorted(target, key=lambda x: (-self.element_order(x), x)):
            if g not in cur:
                gens.append(g)
                cur = set(self.subgroup(gens))
            if cur == target:
                break
        return gens

    @cached_property
    def words(self) -> list[tuple[int, ...]]:
        """A shortest word in the generator indices (positions in self.generators) for each element."""
        w: list[tuple[int, ...] | None] = [None] * self.order
        w[0] = ()
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for k, g in enumerate(self.generators):
                    y = self.table[x][g]
                    if w[y] is None:
                        w[y] = w[x] + (k,)
                        nxt.append(y)
            frontier = nxt
        return w  # type: ignore[return-value]

    def abelianization(self) -> tuple[FinGroup, list[int]]:
        """Quotient by the commutator subgroup and the projection (element -> coset index)."""
        K = set(self.commutator_subgroup)
        cosets: list[frozenset[int]] = []
        proj = [-1] * self.order
        for g in range(self.order):
            if proj[g] >= 0:
                continue
            c = frozenset(self.table[g][k] for k in K)
            for x in c:
                proj[x] = len(cosets)
            cosets.append(c)
        reps = [min(c) for c in cosets]
        table = [[proj[self.table[a][b]] for b in reps] for a in reps]
        names = [self.names[r] for r in reps]
        gens = sorted({proj[g] for g in self.generators} - {0})
        Q = FinGroup(f"{self.name}_ab", table, names, gens, [names[g] for g in gens])
        return Q, proj

    def dump(self) -> dict:
        return {
            "id": self.name,
            "order": self.order,
            "names": list(self.names),
            "generators": list(self.generators),
            "center": list(self.center),
            "commutator_subgroup": list(self.commutator_subgroup),
        }

    # -- characters and automorphisms -----------------------------------
    def subgroup_characters(self, elems: Sequence[int]) -> list[Character]:
        """All linear characters of the subgroup with the given elements."""
        elems = tuple(sorted(elems))
        gens = self.small_generating_set(elems)
        choices = []
        for g in gens:
            n = self.element_order(g)
            choices.append([e for e in range(ORDER) if (e * n) % ORDER == 0])
        out = []
        for assign in itertools.product(*choices):
            vals = _extend_hom(self, gens, assign, elems)
            if vals is not None:
                out.append(Character(self, elems, vals))
        out.sort(key=lambda c: c.sort_key())
        return out

    @cached_property
    def linear_characters(self) -> list[Character]:
        return self.subgroup_characters(tuple(range(self.order)))

    @cached_property
    def automorphisms(self) -> list[GroupMap]:
        return _automorphisms(self)

    @cached_property
    def aut_generators(self) -> list[GroupMap]:
        """A small generating set of Aut(G), found greedily."""
        auts = self.automorphisms
        gens: list[GroupMap] = []
        closure = {auts[0].images}
        for f in auts:
            if f.images in closure:
                continue
            gens.append(f)
            closure = _closure([g.images for g in gens])
            if len(closure) == len(auts):
                break
        return gens


def _closure(perms: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    ident = tuple(range(len(perms[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for q in perms:
                r = tuple(q[i] for i in p)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def _extend_hom(G: FinGroup, gens: list[int], exps: Sequence[int], elems: Sequence[int]) -> dict[int, int] | None:
    """Extend generator values (as exponents of z16) to a homomorphism on the subgroup, or None."""
    vals = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, e in zip(gens, exps):
                y = G.table[x][g]
                v = (vals[x] + e) % ORDER
                if y in vals:
                    if vals[y] != v:
                        return None
                else:
                    vals[y] = v
                    nxt.append(y)
        frontier = nxt
    if set(vals) != set(elems):
        return None
    for a in elems:
        for b in elems:
            if vals[G.table[a][b]] != (vals[a] + vals[b]) % ORDER:
                return None
    return vals


def _automorphisms(G: FinGroup) -> list[GroupMap]:
    gens = G.generators
    orders = [G.element_order(g) for g in gens]
    by_order: dict[int, list[int]] = {}
    for x in range(G.order):
        by_order.setdefault(G.element_order(x), []).append(x)
    center = set(G.center)
    out = []

    def extend(images: list[int]) -> dict[int, int] | None:
        # build the map along BFS words; check well-definedness on the generated subgroup
        k = len(images)
        f = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g, im in zip(gens[:k], images):
                    y = G.table[x][g]
                    v = G.table[f[x]][im]
                    if y in f:
                        if f[y] != v:
                            return None
                    else:
                        f[y] = v
                        nxt.append(y)
            frontier = nxt
        if len(set(f.values())) != len(f):
            return None
        return f

    def search(images: list[int]) -> None:
        k = len(images)
        if k == len(gens):
            f = extend(images)
            if f is None or len(f) != G.order:
                return
            t = G.table
            if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(G.order) for b in G.generators):
                out.append(GroupMap(G, G, tuple(f[x] for x in range(G.order))))
            return
        for cand in by_order[orders[k]]:
            # central generators must go to central elements
            if (gens[k] in center) != (cand in center):
                continue
            if extend(images + [cand]) is None:
                continue
            search(images + [cand])

    search([])
    out.sort(key=lambda f: (not f.is_identity(), f.images))
    return out


# ---------------------------------------------------------------------------
# characters, representations, maps


class Character:
    """A linear character of a subgroup, with values stored as exponents of z16."""

    __slots__ = ("group", "support", "exps", "degree")

    def __init__(self, group: FinGroup, support: Sequence[int], exps: dict[int, int]):
        self.group = group
        self.support = tuple(sorted(support))
        self.exps = {g: exps[g] % ORDER for g in self.support}
        self.degree = 1

    def __call__(self, g: int) -> CycScalar:
        return CycScalar.zeta(self.exps[g])

    def exponent(self, g: int) -> int:
        return self.exps[g]

    def matrix(self, g: int) -> list[list[CycScalar]]:
        return [[self(g)]]

    def trace(self, g: int) -> CycScalar:
        return self(g)

    def is_trivial(self) -> bool:
        return not any(self.exps.values())

    def __mul__(self, other: Character) -> Character:
        if self.support != other.support:
            raise ValueError("characters on different subgroups")
        return Character(self.group, self.support, {g: self.exps[g] + other.exps[g] for g in self.support})

    def __pow__(self, k: int) -> Character:
        return Character(self.group, self.support, {g: k * e for g, e in self.exps.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Character) and self.support == other.support and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.support, tuple(self.exps[g] for g in self.support)))

    def sort_key(self) -> tuple:
        return tuple(self.exps[g] for g in self.support)

    def twisted(self, f: GroupMap) -> Character:
        """rho o f^-1, a character of f(support)."""
        finv = f.inverse()
        new_support = tuple(f(g) for g in self.support)
        return Character(self.group, new_support, {g: self.exps[finv(g)] for g in new_support})

    def transported(self, x: int) -> Character:
        """The character s -> chi(x^-1 s x) of the conjugate subgroup x S x^-1."""
        G = self.group
        new_support = tuple(G.conj(x, s) for s in self.support)
        xi = G.inv(x)
        return Character(G, new_support, {s: self.exps[G.conj(xi, s)] for s in new_support})

    def restrict(self, elems: Sequence[int]) -> Character:
        return Character(self.group, elems, {g: self.exps[g] for g in elems})

    def __repr__(self) -> str:
        G = self.group
        vals = ", ".join(f"{G.names[g]}:{self.exps[g]}" for g in self.support)
        return f"Character({{{vals}}})"


class Representation:
    """A matrix representation of a subgroup over Q(z16)."""

    def __init__(self, group: FinGroup, support: Sequence[int], mats: dict[int, list[list[CycScalar]]]):
        self.group = group
        self.support = tuple(sorted(support))
        self.mats = {g: mats[g] for g in self.support}
        self.degree = len(next(iter(self.mats.values())))

    def matrix(self, g: int) -> list[list[CycScalar]]:
        return self.mats[g]

    def trace(self, g: int) -> CycScalar:
        m = self.mats[g]
        return sum((m[i][i] for i in range(self.degree)), CycScalar())

    def twisted(self, f: GroupMap) -> Representation:
        finv = f.inverse()
        new_support = tuple(f(g) for g in self.support)
        return Representation(self.group, new_support, {g: self.mats[finv(g)] for g in new_support})

    def transported(self, x: int) -> Representation:
        G = self.group
        xi = G.inv(x)
        new_support = tuple(G.conj(x, s) for s in self.support)
        return Representation(G, new_support, {s: self.mats[G.conj(xi, s)] for s in new_support})

    def check(self) -> bool:
        G = self.group
        S = set(self.support)
        for a in self.support:
            for b in self.support:
                ab = G.mul(a, b)
                if ab not in S or matmul(self.mats[a], self.mats[b]) != self.mats[ab]:
                    return False
        return True

    @classmethod
    def from_generators(cls, G: FinGroup, gen_mats: dict[int, list[list[CycScalar]]]) -> Representation:
        """Extend generator matrices to the whole group along BFS words, validating consistency."""
        d = len(next(iter(gen_mats.values())))
        ident = [[CycScalar.from_rational(int(i == j)) for j in range(d)] for i in range(d)]
        mats = {0: ident}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for g, m in gen_mats.items():
                    y = G.mul(x, g)
                    v = matmul(mats[x], m)
                    if y in mats:
                        if mats[y] != v:
                            raise ValueError("generator matrices violate the group relations")
                    else:
                        mats[y] = v
                        nxt.append(y)
            frontier = nxt
        rep = cls(G, tuple(range(G.order)), mats)
        if len(mats) != G.order or not rep.check():
            raise ValueError("generator matrices do not define a representation")
        return rep


def matmul(a: list[list[CycScalar]], b: list[list[CycScalar]]) -> list[list[CycScalar]]:
    n, m, p = len(a), len(b), len(b[0])
    zero = CycScalar()
    return [[sum((a[i][k] * b[k][j] for k in range(m) if a[i][k] and b[k][j]), zero) for j in range(p)]
            for i in range(n)]


@dataclass(frozen=True)
class GroupMap:
    domain: FinGroup = field(compare=False, hash=False)
    codomain: FinGroup = field(compare=False, hash=False)
    images: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.images[g]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def compose(self, other: GroupMap) -> GroupMap:
        """self o other."""
        return GroupMap(other.domain, self.codomain, tuple(self.images[x] for x in other.images))

    def inverse(self) -> GroupMap:
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return GroupMap(self.codomain, self.domain, tuple(inv))

    def is_homomorphism(self) -> bool:
        D, C = self.domain, self.codomain
        return all(self.images[D.mul(a, b)] == C.mul(self.images[a], self.images[b])
                   for a in range(D.order) for b in range(D.order))

    def describe(self) -> str:
        D = self.domain
        return ", ".join(f"{n}->{self.codomain.names[self.images[g]]}" for n, g in zip(D.gen_names, D.generators))


# ---------------------------------------------------------------------------
# construction from presentations


def _relator(word: str, gen_names: list[str]) -> list[int]:
    """Parse 'g2 g1 g2 g1^3', '[g1,g2]' or 'i^2 j^-2' into coset-table columns."""
    cols: list[int] = []
    for tok in word.split():
        m = re.fullmatch(r"\[(\w+),(\w+)\]", tok)
        if m:
            a = gen_names.index(m.group(1))
            b = gen_names.index(m.group(2))
            cols += [2 * a, 2 * b, 2 * a + 1, 2 * b + 1]
            continue
        m = re.fullmatch(r"(\w+?)(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(f"bad relator token {tok!r}")
        g = gen_names.index(m.group(1))
        k = int(m.group(2) or 1)
        cols += [2 * g + (k < 0)] * abs(k)
    return cols


def from_presentation(name: str, gen_names: list[str], relators: list[str],
                      aliases: dict[str, str] | None = None) -> FinGroup:
    rels = [_relator(r, gen_names) for r in relators]
    ct = _CosetTable(len(gen_names), rels).run()
    n = len(ct)
    # right regular action: coset c * generator k = ct[c][2k]
    gens_cols = [2 * k for k in range(len(gen_names))]

    def apply(c: int, word: tuple[int, ...]) -> int:
        for col in word:
            c = ct[c][col]
        return c

    # name every element by its first normal form g1^a1 ... gk^ak (colex order)
    gen_elems = [ct[0][col] for col in gens_cols]
    gen_orders = []
    for col in gens_cols:
        k, c = 1, ct[0][col]
        while c != 0:
            c = ct[c][col]
            k += 1
        gen_orders.append(k)
    found: dict[int, tuple[int, ...]] = {}
    for exps in sorted(itertools.product(*[range(o) for o in gen_orders]), key=lambda e: tuple(reversed(e))):
        word = tuple(col for col, e in zip(gens_cols, exps) for _ in range(e))
        c = apply(0, word)
        if c not in found:
            found[c] = exps
    if len(found) != n:
        raise ValueError(f"normal forms do not cover {name}")
    order = sorted(range(n), key=lambda c: tuple(reversed(found[c])))
    pos = {c: i for i, c in enumerate(order)}
    words = {c: tuple(col for col, e in zip(gens_cols, found[c]) for _ in range(e)) for c in range(n)}
    table = [[pos[apply(a, words[b])] for b in order] for a in order]

    def nf_name(exps: tuple[int, ...]) -> str:
        parts = []
        for gname, e in zip(gen_names, exps):
            if e == 1:
                parts.append(gname)
            elif e > 1:
                parts.append(f"{gname}^{e}")
        return "".join(parts) or "1"

    names = [nf_name(found[c]) for c in order]
    # aliases map a normal-form spelling to a preferred display name
    display = dict(aliases or {})
    shown = [display.get(nm, nm) for nm in names]
    G = FinGroup(name, table, shown, [pos[g] for g in gen_elems], list(gen_names),
                 aliases={nf: disp for nf, disp in display.items() if nf != disp})
    G._index.setdefault("e", 0)
    G._index.setdefault("1", 0)
    return G


def abelian(orders: Sequence[int], name: str | None = None) -> FinGroup:
    k = len(orders)
    gen_names = ["g"] if k == 1 else [f"g{i + 1}" for i in range(k)]
    rels = [f"{g}^{n}" for g, n in zip(gen_names, orders)]
    rels += [f"[{a},{b}]" for a, b in itertools.combinations(gen_names, 2)]
    G = from_presentation(name or "x".join(f"C{n}" for n in orders), gen_names, rels)
    G.cyclic_orders = tuple(orders)  # type: ignore[attr-defined]
    return G


def cyclic(n: int) -> FinGroup:
    return abelian([n], f"C{n}")


_QUAT_NAMES = {"1": "e", "i^2": "-e", "i^3": "-i", "ij": "k", "i^2j": "-j", "i^3j": "-k"}


def _quat_names_with_t() -> dict[str, str]:
    out = dict(_QUAT_NAMES)
    for nf, disp in _QUAT_NAMES.items():
        if nf == "1":
            continue
        out[nf + "t"] = disp + "t"
    return out


_PRESENTATIONS: dict[str, tuple[list[str], list[str], dict[str, str] | None]] = {
    "D4": (["r", "s"], ["r^4", "s^2", "s r s r"], None),
    "H": (["i", "j"], ["i^4", "i^2 j^-2", "j^-1 i j i"], _QUAT_NAMES),
    "B1": (["g1", "g2"], ["g1^8", "g2^2", "g2 g1 g2 g1^3"], None),
    "B2": (["g1", "g2", "g3"], ["g1^4", "g2^2", "g3^2", "[g1,g2]", "[g1,g3]", "[g3,g2] g1^2"], None),
    "B3": (["g1", "g2"], ["g1^4", "g2^4", "g2 g1 g2^3 g1"], None),
    "B4": (["r", "s", "t"], ["r^4", "s^2", "s r s r", "t^2", "[r,t]", "[s,t]"], None),
    "B5": (["g1", "g2", "g3"], ["g1^4", "g2^2", "g3^2", "[g1,g2]", "[g3,g2]", "[g1,g3] g2"], None),
    "B6": (["i", "j", "t"], ["i^4", "i^2 j^-2", "j^-1 i j i", "t^2", "[i,t]", "[j,t]"], _quat_names_with_t()),
}

_ABELIAN = {
    "C2": (2,), "C2xC2": (2, 2), "C4": (4,), "C2xC2xC2": (2, 2, 2), "C2xC4": (2, 4), "C8": (8,),
    "C2^4": (2, 2, 2, 2), "C2xC2xC4": (2, 2, 4), "C4xC4": (4, 4), "C2xC8": (2, 8), "C16": (16,),
}

CATALOGUE_IDS = ("C2", "C2xC2", "C4", "C2xC2xC2", "C2xC4", "C8", "D4", "H",
                 "C2^4", "C2xC2xC4", "C4xC4", "C2xC8", "C16", "B1", "B2", "B3", "B4", "B5", "B6")

_CACHE: dict[str, FinGroup] = {}


def catalogue(name: str) -> FinGroup:
    """Catalogue group by identifier; built once and cached."""
    if name in _CACHE:
        return _CACHE[name]
    if name in _ABELIAN:
        G = abelian(_ABELIAN[name], name)
    elif name in _PRESENTATIONS:
        gens, rels, aliases = _PRESENTATIONS[name]
        G = from_presentation(name, gens, rels, aliases)
    else:
        m = re.fullmatch(r"C(\d+)", name)
        if not m:
            raise KeyError(f"unknown group {name!r}; expected one of {', '.join(CATALOGUE_IDS)}")
        G = cyclic(int(m.group(1)))
    _CACHE[name] = G
    return G


# ---------------------------------------------------------------------------
# functional interface


def conjugacy_classes(G: FinGroup) -> list[tuple[int, ...]]:
    return G.conjugacy_classes


def centralizer(G: FinGroup, g: int | str) -> tuple[int, ...]:
    return G.centralizer(G.elem(g))


def center(G: FinGroup) -> tuple[int, ...]:
    return G.center


def commutator_subgroup(G: FinGroup) -> tuple[int, ...]:
    return G.commutator_subgroup


def abelianization(G: FinGroup) -> tuple[FinGroup, list[int]]:
    return G.abelianization()


def linear_characters(G: FinGroup) -> list[Character]:
    return G.linear_characters


def automorphisms(G: FinGroup) -> list[GroupMap]:
    return G.automorphisms


def abelian_character(G: FinGroup, exps: Sequence[int]) -> Character:
    """The character prod_j hat{g}_j^{e_j} of a catalogue abelian group.

    hat{g}_j takes the value alpha_j on g_j and 1 on the other generators,
    where alpha_j = z^(16/n_j) is the standard primitive n_j-th root of unity.
    """
    orders = getattr(G, "cyclic_orders", None)
    if orders is None:
        raise ValueError(f"{G.name} is not a catalogue abelian group")
    gexps = [(e * (ORDER // n)) % ORDER for e, n in zip(exps, orders)]
    vals = _extend_hom(G, G.generators, gexps, tuple(range(G.order)))
    if vals is None:
        raise ValueError("inconsistent character exponents")
    return Character(G, tuple(range(G.order)), vals)


def character_exponents(chi: Character) -> tuple[int, ...]:
    """Inverse of abelian_character: exponent vector of chi in the hat{g}_j basis."""
    G = chi.group
    orders = G.cyclic_orders  # type: ignore[attr-defined]
    return tuple(chi.exps[g] // (ORDER // n) for g, n in zip(G.generators, orders))


def character_from_values(G: FinGroup, support: Sequence[int], gen_values: dict[int | str, CycScalar]) -> Character:
    """A character of the subgroup `support` from its values on generating elements."""
    gens = [G.elem(g) for g in gen_values]
    exps = []
    for v in gen_values.values():
        e = CycScalar.coerce(v).root_exponent()
        if e is None:
            raise ValueError(f"character value {v} is not a root of unity")
        exps.append(e)
    vals = _extend_hom(G, gens, exps, tuple(sorted(support)))
    if vals is None:
        raise ValueError("values do not define a character of the subgroup")
    return Character(G, support, vals)


def degree_two_irreps(G: FinGroup) -> list[Representation]:
    """The fixed degree-2 irreducible representations used for D4 and the quaternions."""
    Z = CycScalar.from_rational
    I = CycScalar.zeta(4)
    if G.name == "D4":
        mats = {G.elem("r"): [[Z(0), Z(-1)], [Z(1), Z(0)]], G.elem("s"): [[Z(0), Z(1)], [Z(1), Z(0)]]}
    elif G.name == "H":
        mats = {G.elem("i"): [[Z(0), Z(-1)], [Z(1), Z(0)]], G.elem("j"): [[I, Z(0)], [Z(0), -I]]}
    else:
        raise ValueError(f"no degree-2 irreducible representation is tabulated for {G.name}")
    return [Representation.from_generators(G, mats)]
