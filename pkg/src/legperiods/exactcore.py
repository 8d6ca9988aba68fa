"""Exact arithmetic substrate: rationals, polynomials, truncated series.

Everything in this module is exact.  Scalars are python ints and
fractions.Fraction (ints embed as the obvious subring); polynomial and series
coefficients may live in any commutative ring that supports +, -, *, == 0,
and multiplication by Fraction scalars.  The quadratic extension and rational
function field types below close the tower needed elsewhere in the package:

    Fraction  ->  QuadExt(Fraction)          e.g. adjoining sqrt(2), sqrt(17)
    Fraction  ->  RatFun(Fraction)           the field QQ(t)
    RatFun    ->  QuadExt(RatFun)            e.g. QQ(t)(sqrt(17))

TruncatedSeries carries an optional exponent offset so objects like
x**(1/2) * (power series) can be represented; only offsets 0 and 1/2 appear
in the public API, the offset is bookkeeping metadata and not a Puiseux
engine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Q = Fraction


def qz(x) -> Fraction:
    """Coerce an int, string like '3/5', or Fraction to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def central_binomial(n: int) -> int:
    return math.comb(2 * n, n)


def pochhammer(a, n: int):
    """Rising factorial a (a+1) ... (a+n-1); exact for Fraction input."""
    out = Fraction(1) if isinstance(a, Fraction) else 1
    for k in range(n):
        out = out * (a + k)
    return out


def _is_zero(c) -> bool:
    return c == 0


def _inv(c):
    """Exact multiplicative inverse; keeps int inputs inside QQ."""
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


# ---------------------------------------------------------------------------
# dense univariate polynomials over a generic coefficient ring


class UniPoly:
    """Dense univariate polynomial; coeffs[k] multiplies var**k."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var: str, coeffs: Sequence):
        self.var = var
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    @classmethod
    def const(cls, var: str, c) -> "UniPoly":
        return cls(var, [c])

    @classmethod
    def gen(cls, var: str) -> "UniPoly":
        return cls(var, [0, 1])

    @classmethod
    def from_pairs(cls, var: str, pairs: Iterable[tuple]) -> "UniPoly":
        d = {}
        for k, c in pairs:
            d[k] = d.get(k, 0) + c
        n = max(d) if d else -1
        return cls(var, [d.get(k, 0) for k in range(n + 1)])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other: "UniPoly"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch {self.var!r} vs {other.var!r}")

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        # comparison against a scalar constant
        if not self.coeffs:
            return _is_zero(other)
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash((self.var, tuple(self.coeffs)))

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly.const(self.var, other)
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.var, [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if _is_zero(other):
                return UniPoly(self.var, [])
            return UniPoly(self.var, [c * other for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly(self.var, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.var, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = UniPoly.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "UniPoly"):
        """Euclidean division; coefficient ring must be a field."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree()
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return UniPoly(self.var, []), self
        inv_lead = _inv(other.leading())
        quot = [0] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if _is_zero(c):
                continue
            q = c * inv_lead
            quot[k - db] = q
            for j in range(db + 1):
                rem[k - db + j] = rem[k - db + j] - q * other.coeffs[j]
        return UniPoly(self.var, quot), UniPoly(self.var, rem[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly(self.var, [k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def compose(self, inner):
        """Substitute inner (a polynomial or any ring element) for the variable."""
        out = 0
        for c in reversed(self.coeffs):
            out = out * inner + c
        if isinstance(out, UniPoly) or not isinstance(inner, UniPoly):
            return out
        return UniPoly.const(inner.var, out)

    def map_coeffs(self, fn: Callable, var: str | None = None) -> "UniPoly":
        return UniPoly(var or self.var, [fn(c) for c in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        inv = _inv(self.leading())
        return UniPoly(self.var, [c * inv for c in self.coeffs])

    def content_int(self):
        """gcd of numerators / lcm of denominators for Fraction/int coeffs."""
        num = 0
        den = 1
        for c in self.coeffs:
            f = qz(c)
            num = math.gcd(num, abs(f.numerator))
            den = den * f.denominator // math.gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive(self) -> "UniPoly":
        if self.is_zero():
            return self
        c = self.content_int()
        if self.leading() < 0:
            c = -c
        return UniPoly(self.var, [qz(a) / c for a in self.coeffs])

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"({c})*{self.var}")
            else:
                parts.append(f"({c})*{self.var}^{k}")
        return " + ".join(parts)


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over a coefficient field."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def poly_resultant(f: UniPoly, g: UniPoly):
    """Resultant over a coefficient field, via the Euclidean chain."""
    if f.is_zero() or g.is_zero():
        return 0
    res = 1
    a, b = f, g
    while b.degree() > 0:
        r = a % b
        if r.is_zero():
            return 0
        if (a.degree() * b.degree()) % 2 == 1:
            res = -res
        res = res * b.leading() ** (a.degree() - r.degree())
        a, b = b, r
    return res * b.leading() ** a.degree()


def squarefree_part(f: UniPoly) -> UniPoly:
    return f.exact_div(poly_gcd(f, f.derivative())) if f.degree() > 0 else f


def lagrange_interpolate(var: str, points: Sequence[tuple]) -> UniPoly:
    """Exact Lagrange interpolation through (x, y) pairs over a field."""
    xs = [p[0] for p in points]
    out = UniPoly(var, [])
    for i, (xi, yi) in enumerate(points):
        num = UniPoly.const(var, 1)
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * UniPoly(var, [-xj, 1])
            den = den * (xi - xj)
        out = out + num * (yi / den)
    return out


# ---------------------------------------------------------------------------
# sparse bivariate polynomials


class BiPoly:
    """Sparse bivariate polynomial: terms maps (i, j) -> coefficient."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, str], terms: dict | None = None):
        self.vars = vars
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not _is_zero(c):
                    self.terms[k] = c

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0, 0): c})

    @classmethod
    def gen(cls, vars, which: int):
        key = (1, 0) if which == 0 else (0, 1)
        return cls(vars, {key: 1})

    def _check(self, other):
        if self.vars != other.vars:
            raise ValueError("variable mismatch")

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if not self.terms:
            return _is_zero(other)
        return self.terms == {(0, 0): other}

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(self.vars, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def mul(self, other, trunc: int | None = None) -> "BiPoly":
        """Product, optionally dropping terms of total degree > trunc."""
        if not isinstance(other, BiPoly):
            return BiPoly(self.vars, {k: c * other for k, c in self.terms.items()})
        self._check(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if trunc is not None and i + j > trunc:
                    continue
                key = (i, j)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(self.vars, out)

    def __mul__(self, other):
        return self.mul(other)

    __rmul__ = __mul__

    def pow_trunc(self, n: int, trunc: int) -> "BiPoly":
        out = BiPoly.const(self.vars, 1)
        for _ in range(n):
            out = out.mul(self, trunc)
        return out

    def truncate_total(self, trunc: int) -> "BiPoly":
        return BiPoly(self.vars, {k: c for k, c in self.terms.items() if k[0] + k[1] <= trunc})

    def derivative(self, which: int) -> "BiPoly":
        """Partial derivative with respect to vars[which]."""
        out = {}
        for (i, j), c in self.terms.items():
            if which == 0 and i > 0:
                out[(i - 1, j)] = i * c
            elif which == 1 and j > 0:
                out[(i, j - 1)] = j * c
        return BiPoly(self.vars, out)

    def filter_degree(self, which: int, bound: int) -> "BiPoly":
        """Keep only terms whose degree in vars[which] is <= bound."""
        return BiPoly(self.vars, {k: c for k, c in self.terms.items() if k[which] <= bound})

    def evaluate(self, x, y):
        out = 0
        for (i, j), c in self.terms.items():
            out = out + c * x**i * y**j
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        u, v = self.vars
        return " + ".join(
            f"({c})*{u}^{i}*{v}^{j}" for (i, j), c in sorted(self.terms.items())
        )


# ---------------------------------------------------------------------------
# truncated power series


class TruncatedSeries:
    """Truncated power series sum_k coeffs[k] * var**(k + offset).

    Coefficients with index >= len(coeffs) are unknown (truncated away), not
    zero.  offset is a Fraction; offsets 0 and 1/2 are the supported surface,
    other values only appear transiently inside operator application.
    """

    __slots__ = ("var", "coeffs", "offset")

    def __init__(self, var: str, coeffs: Sequence, offset=Fraction(0)):
        self.var = var
        self.coeffs = list(coeffs)
        self.offset = qz(offset)

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "TruncatedSeries":
        cs = [p.coeff(k) for k in range(order)]
        return cls(p.var, cs)

    @classmethod
    def one(cls, var: str, order: int) -> "TruncatedSeries":
        return cls(var, [1] + [0] * (order - 1))

    @classmethod
    def gen(cls, var: str, order: int) -> "TruncatedSeries":
        cs = [0] * order
        if order > 1:
            cs[1] = 1
        return cls(var, cs)

    def order(self) -> int:
        """Number of known coefficients (relative truncation order)."""
        return len(self.coeffs)

    def coeff(self, exponent) -> object:
        """Coefficient of var**exponent; exponent is absolute (offset included)."""
        k = qz(exponent) - self.offset
        if k.denominator != 1:
            return 0
        k = int(k)
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        if k < 0:
            return 0
        raise IndexError(f"coefficient of exponent {exponent} is beyond truncation")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self, other
        if a.var != b.var:
            return False
        d = b.offset - a.offset
        if d.denominator != 1:
            return all(_is_zero(c) for c in a.coeffs) and all(_is_zero(c) for c in b.coeffs)
        # compare on the common known range
        lo = min(a.offset, b.offset)
        hi = min(a.offset + len(a.coeffs), b.offset + len(b.coeffs))
        k = lo
        while k < hi:
            if not a.coeff(k) == b.coeff(k):
                return False
            k += 1
        # anything known to one but below the other's offset must be zero
        return True

    def _aligned(self, other):
        if self.var != other.var:
            raise ValueError("variable mismatch")
        d = other.offset - self.offset
        if d.denominator != 1:
            raise ValueError("offsets differ by a non-integer")
        off = min(self.offset, other.offset)
        hi = min(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        n = hi - off
        if n.denominator != 1:
            raise AssertionError
        n = int(n)

        def lift(s):
            pad = int(s.offset - off)
            cs = [0] * pad + s.coeffs
            return cs[:n] + [0] * (n - len(cs)) if len(cs) < n else cs[:n]

        return off, lift(self), lift(other)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.var, [other] + [0] * (len(self.coeffs) - 1))
        off, a, b = self._aligned(other)
        return TruncatedSeries(self.var, [x + y for x, y in zip(a, b)], off)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, [-c for c in self.coeffs], self.offset)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries(self.var, [other] + [0] * (len(self.coeffs) - 1))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            if _is_zero(other):
                return TruncatedSeries(self.var, [0] * len(self.coeffs), self.offset)
            return TruncatedSeries(self.var, [c * other for c in self.coeffs], self.offset)
        if self.var != other.var:
            raise ValueError("variable mismatch")
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if _is_zero(a):
                continue
            for j in range(min(len(other.coeffs), n - i)):
                out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedSeries(self.var, out, self.offset + other.offset)

    __rmul__ = __mul__

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.var, self.coeffs[:order], self.offset)

    def shift(self, m) -> "TruncatedSeries":
        """Multiply by var**m."""
        return TruncatedSeries(self.var, self.coeffs, self.offset + qz(m))

    def derivative(self) -> "TruncatedSeries":
        cs = [(k + self.offset) * c for k, c in enumerate(self.coeffs)]
        if self.offset == 0:
            return TruncatedSeries(self.var, cs[1:], Fraction(0))
        return TruncatedSeries(self.var, cs, self.offset - 1)

    def pow_frac(self, p) -> "TruncatedSeries":
        """Raise to a Fraction power; requires offset 0 and constant term 1."""
        p = qz(p)
        if self.offset != 0:
            raise ValueError("pow_frac needs offset 0")
        if not self.coeffs or not self.coeffs[0] == 1:
            raise ValueError("pow_frac needs constant term 1")
        n = len(self.coeffs)
        out = [0] * n
        out[0] = 1
        for m in range(1, n):
            acc = 0
            for k in range(1, m + 1):
                g = self.coeffs[k]
                if _is_zero(g):
                    continue
                acc = acc + (((p + 1) * k - m) * Fraction(1, m)) * g * out[m - k]
            out[m] = acc
        return TruncatedSeries(self.var, out, Fraction(0))

    def sqrt(self) -> "TruncatedSeries":
        return self.pow_frac(Fraction(1, 2))

    def inverse(self) -> "TruncatedSeries":
        if self.offset != 0:
            raise ValueError("inverse needs offset 0")
        if not self.coeffs or _is_zero(self.coeffs[0]):
            raise ValueError("inverse needs a unit constant term")
        c0 = self.coeffs[0]
        if c0 == 1:
            return self.pow_frac(Fraction(-1))
        inv0 = _inv(c0)
        unit = TruncatedSeries(self.var, [c * inv0 for c in self.coeffs])
        return unit.pow_frac(Fraction(-1)) * inv0

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute inner (offset 0, zero constant term) for the variable."""
        if self.offset != 0:
            raise ValueError("compose needs offset 0 on the outer series")
        if inner.offset != 0 or (inner.coeffs and not _is_zero(inner.coeffs[0])):
            raise ValueError("inner series must have zero constant term")
        n = min(len(self.coeffs), len(inner.coeffs))
        out = TruncatedSeries(inner.var, [0] * n)
        for c in reversed(self.coeffs[:n]):
            out = out * inner
            out = out + c
            out = out.truncate(n)
        return out

    def hadamard(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficientwise product; both series must have offset 0."""
        if self.offset != 0 or other.offset != 0:
            raise ValueError("hadamard needs offset 0")
        if self.var != other.var:
            raise ValueError("variable mismatch")
        n = min(len(self.coeffs), len(other.coeffs))
        return TruncatedSeries(self.var, [self.coeffs[k] * other.coeffs[k] for k in range(n)])

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def __repr__(self):
        shown = []
        for k, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            shown.append(f"({c})*{self.var}^{k + self.offset}")
            if len(shown) >= 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"{body} + O({self.var}^{len(self.coeffs) + self.offset})"


def geometric_series(var: str, ratio, order: int) -> TruncatedSeries:
    """1/(1 - ratio*var) as a truncated series, ratio a scalar."""
    cs = [1]
    for _ in range(order - 1):
        cs.append(cs[-1] * ratio)
    return TruncatedSeries(var, cs)


def hyp2f1_series(a, b, c, var: str, order: int) -> TruncatedSeries:
    """Gauss hypergeometric series sum_n (a)_n (b)_n / ((c)_n n!) var**n."""
    a, b, c = qz(a), qz(b), qz(c)
    cs = [Fraction(1)]
    for n in range(order - 1):
        cs.append(cs[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return TruncatedSeries(var, cs)


# ---------------------------------------------------------------------------
# Legendre polynomials


def legendre_polys(nmax: int, var: str = "y") -> list[UniPoly]:
    """P_0 .. P_nmax via the three-term recurrence, exact over QQ."""
    out = [UniPoly.const(var, Fraction(1))]
    if nmax >= 1:
        out.append(UniPoly(var, [Fraction(0), Fraction(1)]))
    y = UniPoly.gen(var)
    for n in range(1, nmax):
        nxt = (y * out[n]) * Fraction(2 * n + 1, n + 1) - out[n - 1] * Fraction(n, n + 1)
        out.append(nxt)
    return out[: nmax + 1]


def legendre_poly(n: int, var: str = "y") -> UniPoly:
    return legendre_polys(n, var)[n]


def legendre_values(nmax: int, y0) -> list:
    """P_0(y0) .. P_nmax(y0) exactly, for a scalar argument."""
    vals = [Fraction(1) if isinstance(y0, (int, Fraction)) else 1]
    if nmax >= 1:
        vals.append(y0 * vals[0])
    for n in range(1, nmax):
        vals.append((y0 * vals[n] * (2 * n + 1) - n * vals[n - 1]) / (n + 1))
    return vals[: nmax + 1]


# ---------------------------------------------------------------------------
# quadratic extensions


class QuadExt:
    """Element a + b*alpha of a quadratic extension with alpha**2 = r + s*alpha.

    r and s live in the base field (Fraction, or RatFun for parametrized
    fields).  The Galois conjugate sends alpha to s - alpha.
    """

    __slots__ = ("a", "b", "r", "s")

    def __init__(self, a, b, r, s=0):
        self.a = a
        self.b = b
        self.r = r
        self.s = s

    @classmethod
    def make(cls, r, s=0):
        """Return the generator alpha with alpha**2 = r + s*alpha."""
        return cls(0, 1, r, s)

    def _coerce(self, x):
        if isinstance(x, QuadExt):
            if x.r != self.r or x.s != self.s:
                raise ValueError("mixing different quadratic extensions")
            return x
        return QuadExt(x, 0, self.r, self.s)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if other.r != self.r or other.s != self.s:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        return self.b == 0 and self.a == other

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash(("quadext", self.a, self.b, self.r, self.s))

    def __add__(self, other):
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self.r, self.s)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.r, self.s)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QuadExt):
            return QuadExt(self.a * other, self.b * other, self.r, self.s)
        o = self._coerce(other)
        bb = self.b * o.b
        return QuadExt(
            self.a * o.a + bb * self.r,
            self.a * o.b + self.b * o.a + bb * self.s,
            self.r,
            self.s,
        )

    __rmul__ = __mul__

    def conj(self) -> "QuadExt":
        return QuadExt(self.a + self.b * self.s, -self.b, self.r, self.s)

    def norm(self):
        return self.a * self.a + self.a * self.b * self.s - self.b * self.b * self.r

    def trace(self):
        return 2 * self.a + self.b * self.s

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if _is_zero(n):
            raise ZeroDivisionError("element has zero norm")
        c = self.conj()
        inv = 1 / n if not isinstance(n, int) else Fraction(1, n)
        return QuadExt(c.a * inv, c.b * inv, self.r, self.s)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * self._coerce(other).inverse()
        inv = 1 / other if not isinstance(other, int) else Fraction(1, other)
        return self * inv

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadExt(1, 0, self.r, self.s)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_rational(self) -> bool:
        return _is_zero(self.b)

    def rational_part(self):
        return self.a

    def __repr__(self):
        return f"({self.a} + {self.b}*a | a^2={self.r}{f'+{self.s}*a' if not _is_zero(self.s) else ''})"


def quad_sqrt(r) -> QuadExt:
    """The generator sqrt(r) of QQ(sqrt(r)) (or base(sqrt(r)))."""
    return QuadExt.make(r, 0)


def quad_to_mp(x, sqrt_val):
    """Map a QuadExt (with s = 0) to a number, sending alpha to sqrt_val."""
    if isinstance(x, QuadExt):
        return x.a + x.b * sqrt_val if not isinstance(x.a, Fraction) else sqrt_val * x.b + x.a
    return x


# ---------------------------------------------------------------------------
# univariate rational function fields


class RatFun:
    """Rational function num/den over a coefficient field, gcd reduced.

    The denominator is kept monic, so representation is canonical and
    __eq__/__hash__ are structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, reduce: bool = True):
        if den is None:
            den = UniPoly.const(num.var, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree() > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        if num.is_zero():
            den = UniPoly.const(num.var, 1)
        lead = den.leading()
        if not lead == 1:
            inv = _inv(lead)
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, var: str, c) -> "RatFun":
        return cls(UniPoly.const(var, c))

    @classmethod
    def gen(cls, var: str) -> "RatFun":
        return cls(UniPoly.gen(var))

    @property
    def var(self):
        return self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def as_poly(self) -> UniPoly:
        if not self.is_poly():
            raise ValueError("not a polynomial")
        return self.num

    def _coerce(self, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, UniPoly):
            return RatFun(x)
        return RatFun.const(self.var, x)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, UniPoly):
            return self.is_poly() and self.num == other
        return self.is_poly() and self.num == other

    def __hash__(self):
        if self.is_poly() and self.num.degree() <= 0:
            return hash(self.num.coeff(0))
        return hash(("ratfun", tuple(self.num.coeffs), tuple(self.den.coeffs)))

    def __add__(self, other):
        o = self._coerce(other)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        out = RatFun.const(self.var, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "RatFun":
        return RatFun(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        if _is_zero(dv):
            raise ZeroDivisionError("pole at evaluation point")
        nv = self.num.evaluate(x)
        if isinstance(nv, int) and isinstance(dv, (int, Fraction)):
            return Fraction(nv, dv) if isinstance(dv, int) else nv / dv
        return nv / dv

    def compose(self, inner) -> "RatFun":
        """Substitute a RatFun/UniPoly for the variable."""
        inner = self._coerce(inner) if not isinstance(inner, RatFun) else inner
        n = self.num.degree()
        d = self.den.degree()
        m = max(n, d)
        num_h = RatFun.const(inner.var, 0)
        den_h = RatFun.const(inner.var, 0)
        # homogenized Horner against a common power of inner's denominator
        innum = RatFun(inner.num)
        inden = RatFun(inner.den)
        pw = [RatFun.const(inner.var, 1)]
        for _ in range(m):
            pw.append(pw[-1] * inden)
        for k in range(m + 1):
            cn = self.num.coeff(k)
            cd = self.den.coeff(k)
            if not _is_zero(cn):
                num_h = num_h + pw[m - k] * innum**k * cn
            if not _is_zero(cd):
                den_h = den_h + pw[m - k] * innum**k * cd
        return num_h / den_h

    def map_coeffs(self, fn: Callable) -> "RatFun":
        return RatFun(self.num.map_coeffs(fn), self.den.map_coeffs(fn))

    def __repr__(self):
        if self.is_poly():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def ratfun_series(f: RatFun, order: int, at=0) -> TruncatedSeries:
    """Series expansion of f at a point where the denominator is nonzero."""
    if _is_zero(at):
        num, den = f.num, f.den
    else:
        shift = UniPoly(f.var, [at, 1])
        num = f.num.compose(shift)
        den = f.den.compose(shift)
    if _is_zero(den.coeff(0)):
        raise ZeroDivisionError("expansion at a pole")
    ns = TruncatedSeries.from_poly(num, order)
    ds = TruncatedSeries.from_poly(den, order)
    return ns * ds.inverse()


# ---------------------------------------------------------------------------
# exact linear algebra over a field


def gaussian_solve(rows: Sequence[Sequence], rhs: Sequence):
    """Solve A x = b over an exact field; returns None when inconsistent.

    rows may be rectangular (overdetermined systems are checked against every
    equation).  Free variables, if any, are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if not _is_zero(aug[i][c])), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = _inv(aug[r][c])
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and not _is_zero(aug[i][c]):
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not _is_zero(aug[i][n]):
            return None
    x = [0] * n
    for i, c in enumerate(piv_cols):
        x[c] = aug[i][n]
    return x


def gaussian_nullspace(rows: Sequence[Sequence]) -> list[list]:
    """Basis of the right null space of a matrix over an exact field."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if not _is_zero(a[i][c])), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = _inv(a[r][c])
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and not _is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    basis = []
    free = [c for c in range(n) if c not in piv_cols]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, c in enumerate(piv_cols):
            v[c] = -a[i][fc]
        basis.append(v)
    return basis


def mat_identity(n: int) -> list[list]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for p in range(k):
                acc = acc + a[i][p] * b[p][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list:
    out = []
    for row in a:
        acc = 0
        for c, x in zip(row, v):
            acc = acc + c * x
        out.append(acc)
    return out


def mat_transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def mat_trace(a: Sequence[Sequence]):
    acc = 0
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def mat_inverse(a: Sequence[Sequence]) -> list[list]:
    """Exact inverse over a field; raises when the matrix is singular."""
    n = len(a)
    cols = []
    for j in range(n):
        e = [1 if i == j else 0 for i in range(n)]
        x = gaussian_solve(a, e)
        if x is None:
            raise ZeroDivisionError("singular matrix")
        cols.append(x)
    inv = mat_transpose(cols)
    # gaussian_solve zero-fills free variables, so confirm it really inverts
    if not _mat_eq_identity(mat_mul(a, inv)):
        raise ZeroDivisionError("singular matrix")
    return inv


def _mat_eq_identity(m: Sequence[Sequence]) -> bool:
    n = len(m)
    for i in range(n):
        for j in range(n):
            if i == j:
                if not _is_zero(m[i][j] - 1):
                    return False
            elif not _is_zero(m[i][j]):
                return False
    return True
