"""Nichols algebras inside the quantum shuffle algebra.

Elements of T(V) are dicts mapping words (tuples of basis indices) to
CycScalar coefficients.  Every braiding handled here has the form
c(x_a (x) x_b) = T_a(x_b) (x) x_a for linear maps T_a, which covers
Yetter-Drinfeld modules in a homogeneous basis (T_a is the action of the
degree of x_a) as well as diagonal braidings (T_a scales x_b by b_ab).
B(V) is grown degree by degree as the subalgebra generated by V:
the degree n+1 part is spanned by the products b * x_i with b in degree n.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

from .cyclotomic import ONE, ZERO, CycScalar, nq
from .linalg import Echelon, axpy, rank
from .ydmod import BraidingMatrix, YDModule, diagonal_matrix

Word = tuple[int, ...]
ShuffleElement = dict  # Word -> CycScalar

EXCEEDS = "exceeds"


class BraidEquationError(ValueError):
    pass


class Braiding:
    """A braiding c(x_a (x) x_b) = T_a(x_b) (x) x_a on a finite basis."""

    def __init__(self, dim: int, ops: Sequence[Sequence[Sequence[tuple[int, CycScalar]]]],
                 exps: Sequence[Sequence[int]] | None = None):
        self.dim = dim
        self.ops = [[tuple(col) for col in op] for op in ops]
        self.exps = [list(r) for r in exps] if exps is not None else None

    @classmethod
    def from_matrix(cls, b: BraidingMatrix) -> Braiding:
        n = b.dim
        ops = [[((j, b[i, j]),) for j in range(n)] for i in range(n)]
        return cls(n, ops, b.exponents())

    @classmethod
    def from_module(cls, V: YDModule) -> Braiding:
        b = diagonal_matrix(V)
        if b is not None:
            return cls.from_matrix(b)
        ops = [V.act[V.degrees[i]] for i in range(V.dim)]
        return cls(V.dim, ops)

    @classmethod
    def of(cls, obj: Union[Braiding, BraidingMatrix, YDModule, Sequence]) -> Braiding:
        if isinstance(obj, Braiding):
            return obj
        if isinstance(obj, YDModule):
            return cls.from_module(obj)
        if not isinstance(obj, BraidingMatrix):
            obj = BraidingMatrix(obj)
        return cls.from_matrix(obj)

    @property
    def is_diagonal(self) -> bool:
        return self.exps is not None

    def matrix(self) -> BraidingMatrix | None:
        if self.exps is None:
            return None
        return BraidingMatrix([[CycScalar.zeta(e) for e in row] for row in self.exps])

    # -- c on V (x) V ----------------------------------------------------
    def c_pair(self, a: int, b: int) -> list[tuple[Word, CycScalar]]:
        return [((k, a), coef) for k, coef in self.ops[a][b]]

    def apply_c(self, vec: ShuffleElement, pos: int) -> ShuffleElement:
        """Apply c at tensor positions (pos, pos+1) of a homogeneous element."""
        out: ShuffleElement = {}
        for w, coef in vec.items():
            a, b = w[pos], w[pos + 1]
            for k, t in self.ops[a][b]:
                key = w[:pos] + (k, a) + w[pos + 2:]
                _acc(out, key, coef * t)
        return out

    def check_braid_equation(self) -> bool:
        n = self.dim
        for w in itertools.product(range(n), repeat=3):
            v = {w: ONE}
            lhs = self.apply_c(self.apply_c(self.apply_c(v, 0), 1), 0)
            rhs = self.apply_c(self.apply_c(self.apply_c(v, 1), 0), 1)
            if lhs != rhs:
                return False
        return True

    def transform(self, a: int, w: Word) -> list[tuple[Word, CycScalar]]:
        """T_a applied letterwise to the word w."""
        if self.exps is not None:
            e = sum(self.exps[a][x] for x in w)
            return [(w, CycScalar.zeta(e))]
        terms: list[tuple[Word, CycScalar]] = [((), ONE)]
        for x in w:
            nxt = []
            for pre, c in terms:
                for k, t in self.ops[a][x]:
                    nxt.append((pre + (k,), c * t))
            terms = nxt
        return terms

    def inverse(self) -> Braiding:
        """The diagonal braiding of c^-1 read as a braiding on the same space: b_ij -> b_ji^-1."""
        if self.exps is None:
            raise ValueError("inverse braiding is only available for diagonal braidings")
        n = self.dim
        return Braiding.from_matrix(BraidingMatrix([[CycScalar.zeta(-self.exps[j][i]) for j in range(n)]
                                                     for i in range(n)]))


def _acc(out: dict, key, val: CycScalar) -> None:
    t = out.get(key)
    if t is None:
        if val:
            out[key] = val
        return
    s = t + val
    if s:
        out[key] = s
    else:
        del out[key]


# ---------------------------------------------------------------------------
# shuffle algebra


def letter(i: int) -> ShuffleElement:
    return {(i,): ONE}


def mul_letter(c: Braiding, u: ShuffleElement, x: int) -> ShuffleElement:
    """u * x in the quantum shuffle algebra: x is inserted at every position,
    braided leftwards past the letters it overtakes."""
    out: ShuffleElement = {}
    if c.exps is not None:
        col = [row[x] for row in c.exps]
        for w, coef in u.items():
            _acc(out, w + (x,), coef)
            e = 0
            for k in range(len(w) - 1, -1, -1):
                e += col[w[k]]
                _acc(out, w[:k] + (x,) + w[k:], coef.mul_zeta(e))
        return out
    for w, coef in u.items():
        _acc(out, w + (x,), coef)
        cur = {x: ONE}
        for k in range(len(w) - 1, -1, -1):
            nxt: dict[int, CycScalar] = {}
            for l, a in cur.items():
                for m, t in c.ops[w[k]][l]:
                    _acc(nxt, m, a * t)
            cur = nxt
            for l, a in cur.items():
                _acc(out, w[:k] + (l,) + w[k:], coef * a)
    return out


class _Shuffler:
    def __init__(self, c: Braiding):
        self.c = c
        self.memo: dict[tuple[Word, Word], dict] = {}

    def words(self, u: Word, v: Word) -> dict:
        if not u:
            return {v: ONE}
        if not v:
            return {u: ONE}
        key = (u, v)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out: dict = {}
        last = v[-1]
        for w, a in self.words(u, v[:-1]).items():
            _acc(out, w + (last,), a)
        tail = u[-1]
        for v2, t in self.c.transform(tail, v):
            for w, a in self.words(u[:-1], v2).items():
                _acc(out, w + (tail,), a * t)
        self.memo[key] = out
        return out


def shuffle_product(u: ShuffleElement, v: ShuffleElement, c: Braiding | BraidingMatrix | YDModule) -> ShuffleElement:
    """The braided shuffle product u * v."""
    c = Braiding.of(c)
    sh = _Shuffler(c)
    out: ShuffleElement = {}
    for wu, a in u.items():
        for wv, b in v.items():
            ab = a * b
            for w, t in sh.words(wu, wv).items():
                _acc(out, w, ab * t)
    return out


def derivation(z: ShuffleElement, i: int) -> ShuffleElement:
    """d_i: keep the words ending in x_i and drop that last letter."""
    out: ShuffleElement = {}
    for w, a in z.items():
        if w and w[-1] == i:
            out[w[:-1]] = a
    return out


def act(c: Braiding, i: int, z: ShuffleElement) -> ShuffleElement:
    """T_i applied to an element (the action of the degree of x_i)."""
    out: ShuffleElement = {}
    for w, a in z.items():
        for w2, t in c.transform(i, w):
            _acc(out, w2, a * t)
    return out


def adjoint(i: int, y: ShuffleElement, c: Braiding | BraidingMatrix | YDModule) -> ShuffleElement:
    """Ad_{x_i}(y) = x_i y - (T_i y) x_i."""
    c = Braiding.of(c)
    left = shuffle_product(letter(i), y, c)
    right = shuffle_product(act(c, i, y), letter(i), c)
    return axpy(left, -ONE, right)


def nilpotency_order(c: Braiding | BraidingMatrix | YDModule, w: ShuffleElement, cap: int = 64) -> int | str:
    """Least k with w^k = 0, or EXCEEDS when w^cap is still nonzero."""
    c = Braiding.of(c)
    if not w:
        return 1
    p = dict(w)
    k = 1
    while p:
        if k >= cap:
            return EXCEEDS
        p = shuffle_product(p, w, c)
        k += 1
    return k


# ---------------------------------------------------------------------------
# subalgebra growth


@dataclass
class NicholsReport:
    hilbert: list[int]
    total: int | str
    top_degree: int | None = None
    nilpotency: dict[str, int | str] = field(default_factory=dict)
    qls: int | None = None
    cartan: list[list[int]] | None = None

    @property
    def exceeded(self) -> bool:
        return self.total == EXCEEDS

    def to_json(self) -> dict:
        return {"hilbert": self.hilbert, "total": self.total, "top_degree": self.top_degree,
                "nilpotency": self.nilpotency, "qls": self.qls, "cartan": self.cartan}


def grow(c: Braiding, degree_cap: int = 20, dim_budget: int = 33) -> tuple[list[int], list[list[ShuffleElement]], bool]:
    """Degree-by-degree bases of B(V); returns (hilbert, bases, exceeded)."""
    basis: list[ShuffleElement] = [{(): ONE}]
    hilbert = [1]
    bases = [basis]
    total = 1
    deg = 0
    while True:
        deg += 1
        ech = Echelon()
        for b in basis:
            for x in range(c.dim):
                ech.add(mul_letter(c, b, x))
        if not len(ech):
            return hilbert, bases, False
        basis = ech.basis()
        hilbert.append(len(basis))
        bases.append(basis)
        total += len(basis)
        if total > dim_budget or deg >= degree_cap:
            return hilbert, bases, True


def nichols_dimensions(V: Braiding | BraidingMatrix | YDModule | Sequence, degree_cap: int = 20,
                       dim_budget: int = 33, with_nilpotency: bool = False) -> NicholsReport:
    c = Braiding.of(V)
    if not c.check_braid_equation():
        raise BraidEquationError("c does not satisfy the braid equation")
    hilbert, _, exceeded = grow(c, degree_cap, dim_budget)
    b = c.matrix()
    rep = NicholsReport(hilbert=hilbert, total=EXCEEDS if exceeded else sum(hilbert),
                        top_degree=None if exceeded else len(hilbert) - 1)
    if b is not None:
        rep.qls = qls_check(b)
        rep.cartan = cartan_type(b)
    if with_nilpotency:
        rep.nilpotency = standard_nilpotency(c)
    return rep


def standard_nilpotency(c: Braiding, cap: int = 33) -> dict[str, int | str]:
    """Nilpotency orders of the letters and, in rank 2, of Ad_x(y) and Ad_y(x)."""
    out: dict[str, int | str] = {}
    names = ["x", "y", "z"] if c.dim <= 3 else [f"x{i + 1}" for i in range(c.dim)]
    for i in range(c.dim):
        out[names[i]] = nilpotency_order(c, letter(i), cap)
    if c.dim == 2:
        for i, j, nm in ((0, 1, "Ad_x(y)"), (1, 0, "Ad_y(x)")):
            z = adjoint(i, letter(j), c)
            out[nm] = nilpotency_order(c, z, cap) if z else 0
    return out


def qls_check(b: BraidingMatrix | Sequence) -> int | None:
    if not isinstance(b, BraidingMatrix):
        b = BraidingMatrix(b)
    if not b.is_quantum_linear_space():
        return None
    n = b.lower_bound()
    return None if math.isinf(n) else int(n)


def cartan_type(b: BraidingMatrix | Sequence) -> list[list[int]] | None:
    if not isinstance(b, BraidingMatrix):
        b = BraidingMatrix(b)
    return b.cartan_matrix()


def in_span(basis: list[ShuffleElement], z: ShuffleElement) -> bool:
    ech = Echelon()
    for v in basis:
        ech.add(v)
    return not ech.reduce(z)


# ---------------------------------------------------------------------------
# the symmetrizer oracle


class _Symmetrizer:
    """S_n = (S_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1)."""

    def __init__(self, c: Braiding):
        self.c = c
        self.memo: dict[Word, dict] = {}

    def __call__(self, w: Word) -> dict:
        if len(w) <= 1:
            return {w: ONE}
        hit = self.memo.get(w)
        if hit is not None:
            return hit
        out: dict = {}
        n = len(w)
        for k in range(n):
            a = w[k]
            # move w_k to the end; the letters it passes are acted on by T_a
            for tail, t in self.c.transform(a, w[k + 1:]):
                for u, s in self(w[:k] + tail).items():
                    _acc(out, u + (a,), s * t)
        self.memo[w] = out
        return out


def symmetrizer_rank(V: Braiding | BraidingMatrix | YDModule | Sequence, n: int) -> int:
    """Rank of the degree-n Woronowicz symmetrizer on V^(x)n."""
    c = Braiding.of(V)
    if n == 0:
        return 1
    S = _Symmetrizer(c)
    cols = [S(w) for w in itertools.product(range(c.dim), repeat=n)]
    return rank(cols)


def _reduced_word(perm: Sequence[int]) -> list[int]:
    """Adjacent transpositions s_k (swapping k, k+1), applied left to right, sorting
    the identity arrangement into perm (bubble sort)."""
    arr = list(range(len(perm)))
    target = list(perm)
    word = []
    for i in range(len(arr)):
        j = arr.index(target[i], i)
        while j > i:
            word.append(j - 1)
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            j -= 1
    return word


def symmetrizer_bruteforce(c: Braiding, n: int) -> dict[Word, dict]:
    """Sum over all permutations of the braided lifts along reduced words (n small)."""
    out_cols: dict[Word, dict] = {}
    words = list(itertools.product(range(c.dim), repeat=n))
    perms = list(itertools.permutations(range(n)))
    lifts = [_reduced_word(p) for p in perms]
    for w in words:
        col: dict = {}
        for red in lifts:
            v = {w: ONE}
            for k in reversed(red):
                v = c.apply_c(v, k)
            for key, val in v.items():
                _acc(col, key, val)
        out_cols[w] = col
    return out_cols


def symmetrizer_columns(c: Braiding, n: int) -> dict[Word, dict]:
    S = _Symmetrizer(c)
    return {w: S(w) for w in itertools.product(range(c.dim), repeat=n)}


def taft_rank(q: CycScalar, n: int) -> int:
    """Rank of the degree-n symmetrizer of a one-dimensional space with c = q."""
    from .cyclotomic import q_factorial
    return 0 if not q_factorial(n, q) else 1


def is_palindromic(h: Sequence[int]) -> bool:
    return list(h) == list(reversed(h))


__all__ = [
    "Braiding", "BraidEquationError", "NicholsReport", "EXCEEDS", "shuffle_product", "mul_letter",
    "derivation", "adjoint", "nilpotency_order", "nichols_dimensions", "symmetrizer_rank", "qls_check",
    "cartan_type", "letter", "grow", "in_span", "standard_nilpotency", "symmetrizer_bruteforce",
    "symmetrizer_columns", "is_palindromic",
]
