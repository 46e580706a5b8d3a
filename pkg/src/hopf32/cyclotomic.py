"""Exact arithmetic in the cyclotomic field Q(z), z a primitive 16th root of unity.

Elements are stored on the power basis 1, z, ..., z^7 (with z^8 = -1) as a
tuple of integer numerators over one positive common denominator.  Every
root of unity that shows up in the classification (i = z^4, xi = z^2, a
square root of xi = z) lives here, so nothing is ever approximated.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Union

DEG = 8
ORDER = 16  # z has multiplicative order 16

Number = Union["CycScalar", int, Fraction]


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-a for a in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [a // g for a in num]
        den //= g
    if not any(num):
        return (0,) * DEG, 1
    return tuple(num), den


class CycScalar:
    """An element of Q(z16), immutable and hashable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Iterable[int] = (0,) * DEG, den: int = 1, *, _raw: bool = False):
        if _raw:
            self.num = num  # type: ignore[assignment]
            self.den = den
        else:
            lst = [int(a) for a in num]
            if len(lst) != DEG:
                raise ValueError(f"expected {DEG} coefficients, got {len(lst)}")
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            self.num, self.den = _normalize(lst, int(den))
        self._hash = None

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_rational(cls, r: int | Fraction) -> CycScalar:
        r = Fraction(r)
        num = [0] * DEG
        num[0] = r.numerator
        return cls(num, r.denominator)

    @classmethod
    def zeta(cls, k: int = 1) -> CycScalar:
        """z^k for any integer k."""
        k %= ORDER
        num = [0] * DEG
        if k < DEG:
            num[k] = 1
        else:
            num[k - DEG] = -1
        return cls(tuple(num), 1, _raw=True)

    @classmethod
    def from_fractions(cls, coeffs: Iterable[Fraction | int]) -> CycScalar:
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return cls([int(f * den) for f in fr], den)

    @staticmethod
    def coerce(x: Number) -> CycScalar:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycScalar")

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self.num)

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other: Number) -> CycScalar:
        o = other if isinstance(other, CycScalar) else CycScalar.coerce(other)
        if self.den == o.den:
            return CycScalar([a + b for a, b in zip(self.num, o.num)], self.den)
        d1, d2 = self.den, o.den
        return CycScalar([a * d2 + b * d1 for a, b in zip(self.num, o.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(tuple(-a for a in self.num), self.den, _raw=True)

    def __sub__(self, other: Number) -> CycScalar:
        o = other if isinstance(other, CycScalar) else CycScalar.coerce(other)
        return self + (-o)

    def __rsub__(self, other: Number) -> CycScalar:
        return CycScalar.coerce(other) - self

    def __mul__(self, other: Number) -> CycScalar:
        if not isinstance(other, CycScalar):
            if isinstance(other, (int, Fraction)):
                f = Fraction(other)
                return CycScalar([a * f.numerator for a in self.num], self.den * f.denominator)
            return NotImplemented
        res = [0] * DEG
        for i, a in enumerate(self.num):
            if not a:
                continue
            for j, b in enumerate(other.num):
                if not b:
                    continue
                k = i + j
                if k < DEG:
                    res[k] += a * b
                else:
                    res[k - DEG] -= a * b
        return CycScalar(res, self.den * other.den)

    __rmul__ = __mul__

    def mul_zeta(self, e: int) -> CycScalar:
        """Multiply by z^e; a signed rotation of the coefficient vector."""
        e %= ORDER
        if e == 0:
            return self
        sign = 1
        if e >= DEG:
            e -= DEG
            sign = -1
        n = self.num
        if sign == 1:
            out = tuple(-a for a in n[DEG - e:]) + n[:DEG - e]
        else:
            out = n[DEG - e:] + tuple(-a for a in n[:DEG - e])
        return CycScalar(out, self.den, _raw=True)

    def galois(self, k: int) -> CycScalar:
        """Apply the automorphism z -> z^k (k odd)."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(z16) need odd k")
        res = [0] * DEG
        for j, a in enumerate(self.num):
            if not a:
                continue
            e = (j * k) % ORDER
            if e < DEG:
                res[e] += a
            else:
                res[e - DEG] -= a
        return CycScalar(res, self.den)

    def conjugate(self) -> CycScalar:
        return self.galois(-1 % ORDER)

    def norm(self) -> Fraction:
        """Field norm to Q: the product of all eight conjugates."""
        p = self
        for k in (3, 5, 7, 9, 11, 13, 15):
            p = p * self.galois(k)
        return p.rational()

    def inverse(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(z16)")
        if self.is_rational():
            return CycScalar.from_rational(1 / self.rational())
        # roots of unity invert by rotation
        e = self.root_exponent()
        if e is not None:
            return CycScalar.zeta(-e)
        others = CycScalar.from_rational(1)
        for k in (3, 5, 7, 9, 11, 13, 15):
            others = others * self.galois(k)
        n = (self * others).rational()
        return others * (1 / n)

    def __truediv__(self, other: Number) -> CycScalar:
        return self * CycScalar.coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> CycScalar:
        return CycScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CycScalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- roots of unity -------------------------------------------------
    def root_exponent(self) -> int | None:
        """Return e with self == z^e (0 <= e < 16), or None."""
        if self.den != 1:
            return None
        nz = [(j, a) for j, a in enumerate(self.num) if a]
        if len(nz) != 1:
            return None
        j, a = nz[0]
        if a == 1:
            return j
        if a == -1:
            return j + DEG
        return None

    # -- comparisons ----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycScalar):
            return self.den == other.den and self.num == other.num
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def sort_key(self) -> tuple:
        return (self.num, self.den)

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"CycScalar({render(self)!r})"


ZERO = CycScalar()
ONE = CycScalar.from_rational(1)
MINUS_ONE = CycScalar.from_rational(-1)
ZETA = CycScalar.zeta(1)
I = CycScalar.zeta(4)
XI = CycScalar.zeta(2)
SQRT_XI = ZETA


def root_order(q: Number) -> int | None:
    """Multiplicative order of q if q is a root of unity, else None."""
    e = CycScalar.coerce(q).root_exponent()
    if e is None:
        return None
    return ORDER // math.gcd(e, ORDER)


def nq(q: Number) -> float | int:
    """Smallest N >= 1 with (N)_q = 0; infinity when q = 1 or q is not a root of unity."""
    n = root_order(q)
    if n is None or n == 1:
        return math.inf
    return n


def q_int(n: int, q: Number) -> CycScalar:
    q = CycScalar.coerce(q)
    total, p = ZERO, ONE
    for _ in range(n):
        total = total + p
        p = p * q
    return total


def q_factorial(n: int, q: Number) -> CycScalar:
    out = ONE
    for k in range(1, n + 1):
        out = out * q_int(k, q)
    return out


def q_binomial(n: int, k: int, q: Number) -> CycScalar:
    """Gaussian binomial via the Pascal rule, so it is well defined at roots of unity."""
    if k < 0 or k > n:
        return ZERO
    q = CycScalar.coerce(q)
    row = [ONE]
    for m in range(1, n + 1):
        new = [ONE] * (m + 1)
        for j in range(1, m):
            new[j] = row[j - 1] + (q ** j) * row[j]
        row = new
    return row[k]


# ---------------------------------------------------------------------------
# text format

def render(x: CycScalar) -> str:
    """Canonical text: 'c0 + c1*z + ... + c7*z^7', zero terms skipped, rationals as p/q."""
    terms = []
    for j, c in enumerate(x.coefficients()):
        if not c:
            continue
        cs = str(c)
        if j == 0:
            terms.append(cs)
        elif j == 1:
            terms.append(f"{cs}*z")
        else:
            terms.append(f"{cs}*z^{j}")
    return " + ".join(terms) if terms else "0"


_ROOT_NAMES = {0: "1", 8: "-1", 4: "i", 12: "-i", 2: "x", 6: "x^3", 10: "x^5", 14: "x^7"}


def pretty(x: CycScalar) -> str:
    """Short display form: roots of unity as 1, -1, i, -i, x^k (x = z^2) or z^k."""
    e = x.root_exponent()
    if e is None:
        return render(x)
    return _ROOT_NAMES.get(e, f"z^{e}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([zxi])|(\*\*|[-+*/^()]))")


class _Parser:
    # small recursive-descent parser: sums, products, quotients, powers, unary minus
    def __init__(self, text: str):
        self.toks: list[tuple[str, str]] = []
        pos = 0
        text = text.replace("ζ", "z").replace("ξ", "x").replace("−", "-")
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            if m.group(1):
                self.toks.append(("num", m.group(1)))
            elif m.group(2):
                self.toks.append(("sym", m.group(2)))
            else:
                op = m.group(3)
                self.toks.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise ValueError("unexpected end of expression")
        self.i += 1
        return t

    def parse(self) -> CycScalar:
        v = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input near token {self.peek()[1]!r}")
        return v

    def expr(self) -> CycScalar:
        v = self.term()
        while (t := self.peek()) and t[0] == "op" and t[1] in "+-":
            self.take()
            w = self.term()
            v = v + w if t[1] == "+" else v - w
        return v

    def term(self) -> CycScalar:
        v = self.unary()
        while (t := self.peek()) and t[0] == "op" and t[1] in "*/":
            self.take()
            w = self.unary()
            v = v * w if t[1] == "*" else v / w
        return v

    def unary(self) -> CycScalar:
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self) -> CycScalar:
        v = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            if (s := self.peek()) and s == ("op", "-"):
                self.take()
                sign = -1
            k = self.take()
            if k[0] != "num":
                raise ValueError("exponent must be an integer literal")
            v = v ** (sign * int(k[1]))
        return v

    def atom(self) -> CycScalar:
        kind, val = self.take()
        if kind == "num":
            return CycScalar.from_rational(int(val))
        if kind == "sym":
            return {"z": ZETA, "x": XI, "i": I}[val]
        if val == "(":
            v = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return v
        raise ValueError(f"unexpected token {val!r}")


def parse(text: str) -> CycScalar:
    """Parse the canonical format and friendlier shorthands ('-1', 'i', 'x^3', 'z^5', '1/2*z')."""
    return _Parser(text).parse()
