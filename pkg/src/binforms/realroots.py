"""Exact univariate real-root machinery over the rationals.

Dense rational polynomials, Sturm chains, root counting and isolation,
rational interval arithmetic, and real algebraic numbers given by a
squarefree integer defining polynomial plus an isolating interval.
All answers are exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Optional, Union

from .errors import ZeroPolynomialError

Rat = Fraction
Scalar = Union[Fraction, "RealAlgebraic"]

# Incomplete factorizations beyond this many trial divisions only cost us
# the rational-root shortcut, never correctness.
_TRIAL_DIVISION_CAP = 4096


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class UniPoly:
    """Univariate polynomial with exact rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "UniPoly":
        return UniPoly([c])

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly()

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: "RatInterval") -> "RatInterval":
        acc = RatInterval.point(Fraction(0))
        for c in reversed(self.coeffs):
            acc = acc * iv + RatInterval.point(c)
        return acc

    def divmod(self, other: "UniPoly"):
        """Exact rational division with remainder."""
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        dlead = other.leading
        dd = other.degree
        while len(r) - 1 >= dd and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dd:
                break
            k = len(r) - 1 - dd
            f = r[-1] / dlead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
            r.pop()
        return UniPoly(q), UniPoly(r)

    def rem(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise ZeroPolynomialError("division was not exact")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return UniPoly([c / lead for c in self.coeffs])

    def primitive_int(self) -> "UniPoly":
        """Scale to integer coefficients with content 1, preserving sign."""
        if self.is_zero:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        return UniPoly([v // g for v in ints])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over the rationals (1 for coprime, 0 only if both zero)."""
        a, b = self, other
        while not b.is_zero:
            r = a.rem(b)
            a, b = b, (r.primitive_int() if not r.is_zero else UniPoly())
        if a.is_zero:
            return a
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no squarefree part")
        if self.degree <= 0:
            return UniPoly([1])
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.primitive_int()
        return self.exact_div(g).primitive_int()

    def multiplicity_profile(self):
        """Yun decomposition: list of (squarefree factor, multiplicity)."""
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial")
        f = self.monic()
        if f.degree <= 0:
            return []
        d = f.gcd(f.derivative())
        if d.degree == 0:
            return [(f, 1)]
        out = []
        b = f.exact_div(d)
        c = f.derivative().exact_div(d)
        z = c - b.derivative()
        i = 1
        while b.degree > 0:
            a = b.gcd(z) if not z.is_zero else b.monic()
            if a.degree > 0:
                out.append((a, i))
            b = b.exact_div(a)
            if b.degree == 0:
                break
            c = z.exact_div(a)
            z = c - b.derivative()
            i += 1
        return out

    def reversed_poly(self) -> "UniPoly":
        """t**deg * f(1/t); drops roots at zero."""
        return UniPoly(list(reversed(self.coeffs)))

    def sturm_chain(self):
        """Sturm chain of the squarefree part, content-stripped each step."""
        f = self.squarefree_part()
        chain = [f, f.derivative().primitive_int()]
        while not chain[-1].is_zero and chain[-1].degree > 0:
            r = chain[-2].rem(chain[-1])
            if r.is_zero:
                break
            chain.append((-r).primitive_int())
        return [g for g in chain if not g.is_zero]

    def count_real_roots(
        self, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None
    ) -> int:
        """Distinct real roots on the whole line or the closed interval [lo, hi]."""
        if self.is_zero:
            raise ZeroPolynomialError("root counting needs a nonzero polynomial")
        f = self.squarefree_part()
        if f.degree <= 0:
            return 0
        extra = 0
        if lo is not None and f(lo) == 0:
            f = f.exact_div(UniPoly([-lo, 1])).primitive_int()
            extra += 1
        if hi is not None and not f.is_zero and f.degree > 0 and f(hi) == 0:
            f = f.exact_div(UniPoly([-hi, 1])).primitive_int()
            extra += 1
        if f.degree <= 0:
            return extra
        chain = f.sturm_chain()
        return extra + _variations(chain, lo, False) - _variations(chain, hi, True)


def _variations(chain, point: Optional[Fraction], at_plus_infinity: bool) -> int:
    signs = []
    for g in chain:
        if point is None:
            s = 1 if g.leading > 0 else -1
            if not at_plus_infinity and g.degree % 2 == 1:
                s = -s
        else:
            v = g(point)
            s = 0 if v == 0 else (1 if v > 0 else -1)
        if s != 0:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def sign_variations(values) -> int:
    """Sign changes in a sequence of rationals, zeros dropped."""
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _bounded_divisors(n: int):
    """Positive divisors of |n|; may be incomplete past the trial cap."""
    n = abs(n)
    if n == 0:
        return [1]
    small, large = [], []
    d, steps = 1, 0
    while d * d <= n and steps < _TRIAL_DIVISION_CAP:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
        steps += 1
    return small + large[::-1]


def rational_roots(f: UniPoly):
    """All rational roots of f (complete for coefficients of moderate size)."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    g = f.primitive_int()
    roots = []
    if g.coeffs[0] == 0:
        roots.append(Fraction(0))
        k = 0
        cs = list(g.coeffs)
        while cs and cs[0] == 0:
            cs.pop(0)
            k += 1
        g = UniPoly(cs)
    if g.degree <= 0:
        return sorted(roots)
    c0 = int(g.coeffs[0])
    cn = int(g.leading)
    for p in _bounded_divisors(c0):
        for q in _bounded_divisors(cn):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and g(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def deflate_rational_roots(f: UniPoly):
    """Split f into (rational roots of the squarefree part, cofactor with no rational roots)."""
    g = f.squarefree_part()
    roots = rational_roots(g)
    for r in roots:
        g = g.exact_div(UniPoly([-r, 1]))
    return roots, g.primitive_int()


@dataclass(frozen=True)
class RatInterval:
    """Closed interval with rational endpoints."""

    lo: Fraction
    hi: Fraction

    @staticmethod
    def point(q: Fraction) -> "RatInterval":
        q = _rat(q)
        return RatInterval(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return self + (-other)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        prods = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(prods), max(prods))

    def pow_int(self, n: int) -> "RatInterval":
        out = RatInterval.point(Fraction(1))
        for _ in range(n):
            out = out * self
        return out

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi

    def sign(self) -> Optional[int]:
        """Definite sign of every point, or None if the interval spans zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None


@dataclass(frozen=True, eq=False)
class RealAlgebraic:
    """Real algebraic number: squarefree integer polynomial with exactly one
    root in the open interval (lo, hi); the endpoints are not roots.

    Values are immutable; refinement returns a new value.  Comparisons with
    rationals and other algebraic numbers are exact and always terminate.
    """

    defining: UniPoly
    lo: Fraction
    hi: Fraction

    __hash__ = None  # semantic equality is not structural; unhashable on purpose

    @staticmethod
    def isolate(f: UniPoly):
        """Isolating intervals, one per distinct real root, sorted ascending."""
        if f.is_zero:
            raise ZeroPolynomialError("cannot isolate roots of the zero polynomial")
        g = f.squarefree_part()
        if g.degree <= 0:
            return []
        bound = Fraction(1) + max(abs(c) for c in g.coeffs) / abs(g.leading)
        chain = g.sturm_chain()

        def var(x):
            return _variations(chain, x, False)

        out = []

        def split(a, b, count):
            if count == 0:
                return
            if count == 1:
                out.append(RealAlgebraic(g, a, b))
                return
            mid = (a + b) / 2
            if g(mid) == 0:
                delta = (b - a) / 4
                while (
                    g(mid - delta) == 0
                    or g(mid + delta) == 0
                    or var(mid - delta) - var(mid + delta) != 1
                ):
                    delta /= 2
                out.append(RealAlgebraic(g, mid - delta, mid + delta))
                split(a, mid - delta, var(a) - var(mid - delta))
                split(mid + delta, b, var(mid + delta) - var(b))
            else:
                split(a, mid, var(a) - var(mid))
                split(mid, b, var(mid) - var(b))

        split(-bound, bound, var(-bound) - var(bound))
        return sorted(out, key=lambda r: r.lo)

    # -- refinement -------------------------------------------------------

    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refined(self, steps: int = 1) -> "RealAlgebraic":
        cur = self
        for _ in range(steps):
            mid = (cur.lo + cur.hi) / 2
            if cur.defining(mid) == 0:
                w = (cur.hi - cur.lo) / 8
                cur = RealAlgebraic(cur.defining, mid - w, mid + w)
                continue
            if _sgn(cur.defining(cur.lo)) * _sgn(cur.defining(mid)) < 0:
                cur = RealAlgebraic(cur.defining, cur.lo, mid)
            else:
                cur = RealAlgebraic(cur.defining, mid, cur.hi)
        return cur

    def refined_below(self, width: Fraction) -> "RealAlgebraic":
        cur = self
        while cur.width >= width:
            cur = cur.refined()
        return cur

    # -- exact predicates --------------------------------------------------

    def sign(self) -> int:
        return self.sign_of_poly(UniPoly([0, 1]))

    def sign_of_poly(self, g: UniPoly) -> int:
        """Exact sign of g at this number (gcd fallback decides the zero case)."""
        if g.is_zero:
            return 0
        d = self.defining.gcd(g)
        if d.degree > 0 and d.count_real_roots(self.lo, self.hi) > 0:
            return 0
        cur = self
        while True:
            s = g.eval_interval(cur.interval()).sign()
            if s is not None and s != 0:
                return s
            cur = cur.refined()

    def equals_rational(self, q: Fraction) -> bool:
        return self.lo < q < self.hi and self.defining(q) == 0

    def cmp_rational(self, q: Fraction) -> int:
        if self.equals_rational(q):
            return 0
        cur = self
        while cur.lo < q < cur.hi:
            cur = cur.refined()
        return -1 if cur.hi <= q else 1

    def cmp(self, other: Scalar) -> int:
        if isinstance(other, (int, Fraction)):
            return self.cmp_rational(_rat(other))
        g = self.defining.gcd(other.defining)
        jlo, jhi = max(self.lo, other.lo), min(self.hi, other.hi)
        if jlo < jhi and g.degree > 0 and g.count_real_roots(jlo, jhi) > 0:
            return 0
        a, b = self, other
        while not (a.hi <= b.lo or b.hi <= a.lo):
            a, b = a.refined(), b.refined()
        return -1 if a.hi <= b.lo else 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.equals_rational(_rat(other))
        if isinstance(other, RealAlgebraic):
            return self.cmp(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    # -- arithmetic kept to what stays cheaply exact -----------------------

    def __neg__(self) -> "RealAlgebraic":
        mirrored = UniPoly(
            [(-1) ** i * c for i, c in enumerate(self.defining.coeffs)]
        ).primitive_int()
        return RealAlgebraic(mirrored, -self.hi, -self.lo)

    def reciprocal(self) -> "RealAlgebraic":
        if self.equals_rational(Fraction(0)):
            raise ZeroDivisionError("reciprocal of zero")
        cur = self
        while cur.lo <= 0 <= cur.hi:
            cur = cur.refined()
        rev = cur.defining.reversed_poly().primitive_int()
        return RealAlgebraic(rev, 1 / cur.hi, 1 / cur.lo)

    def scaled(self, q: Fraction) -> "RealAlgebraic":
        """The number q*x for a nonzero rational q."""
        q = _rat(q)
        if q == 0:
            raise ZeroDivisionError("scaling an algebraic number by zero")
        scaled = UniPoly(
            [c / q**i for i, c in enumerate(self.defining.coeffs)]
        ).primitive_int()
        lo, hi = self.lo * q, self.hi * q
        if q < 0:
            lo, hi = hi, lo
        return RealAlgebraic(scaled, lo, hi)

    def __repr__(self):
        mid = (self.lo + self.hi) / 2
        return f"RealAlgebraic(~{float(mid):.6g}, deg {self.defining.degree})"


def _sgn(v: Fraction) -> int:
    return 0 if v == 0 else (1 if v > 0 else -1)


def sign_at(g: UniPoly, x: Scalar) -> int:
    """Exact sign of g(x) for rational or real algebraic x."""
    if isinstance(x, (int, Fraction)):
        return _sgn(g(_rat(x)))
    return x.sign_of_poly(g)


def scalar_sign(x: Scalar) -> int:
    if isinstance(x, (int, Fraction)):
        return _sgn(_rat(x))
    return x.sign()


def scalar_cmp(a: Scalar, b: Scalar) -> int:
    """Total order on mixed rational / algebraic values."""
    if isinstance(a, RealAlgebraic):
        return a.cmp(b)
    if isinstance(b, RealAlgebraic):
        return -b.cmp(a)
    a, b = _rat(a), _rat(b)
    return _sgn(a - b)


def scalar_eq(a: Scalar, b: Scalar) -> bool:
    return scalar_cmp(a, b) == 0


def scalar_interval(x: Scalar) -> RatInterval:
    if isinstance(x, (int, Fraction)):
        return RatInterval.point(_rat(x))
    return x.interval()


def scalar_neg(x: Scalar) -> Scalar:
    if isinstance(x, (int, Fraction)):
        return -_rat(x)
    return -x


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The rational with smallest denominator (then numerator) in (a, b)."""
    a, b = _rat(a), _rat(b)
    if a >= b:
        raise ValueError("need a < b")
    if a < 0 < b:
        return Fraction(0)
    if b <= 0:
        return -simplest_between(-b, -a)
    fa = a.numerator // a.denominator
    if fa + 1 < b:
        return Fraction(fa + 1)
    if a == fa:
        c = b - fa
        n = (1 / c).numerator // (1 / c).denominator + 1
        return fa + Fraction(1, n)
    inner = simplest_between(1 / (b - fa), 1 / (a - fa))
    return fa + 1 / inner


def squarefree_part(f: UniPoly) -> UniPoly:
    """Primitive integer polynomial with the same roots as f, all simple."""
    return f.squarefree_part()


def count_real_roots(
    f: UniPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None
) -> int:
    return f.count_real_roots(lo, hi)


def isolate_roots(f: UniPoly):
    return RealAlgebraic.isolate(f)
