"""P-recursive sequences, differential operators, and Frobenius expansions.

Recurrences are unrolled exactly over whatever coefficient ring their
polynomial coefficients live in.  Differential operators carry rational
function coefficients plus at most one adjoined square root, tracked as a
formal symbol whose square is a known rational function.  Frobenius series
at a regular singular point are produced for the non-logarithmic exponents
only; a flag records when a logarithmic partner was suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactcore import (
    Q,
    qz,
    RatFun,
    TruncatedSeries,
    UniPoly,
    _inv,
    _is_zero,
    gaussian_solve,
    poly_gcd,
)


class SingularIndexError(ValueError):
    """Raised when a recurrence or Frobenius step needs to divide by zero."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"leading coefficient vanishes at index {index}")


# ---------------------------------------------------------------------------
# P-recursive sequences


class PRecurrence:
    """Linear recurrence sum_j coeffs[j](n) * a_{n+1-j} = 0 for n >= 0.

    coeffs[j] is a polynomial in the index variable; its values may live in
    any exact ring (integers, rationals, polynomials in a parameter).  Terms
    whose sequence index would be negative are dropped, so a recurrence of
    order r needs only a_0 to start.
    """

    def __init__(self, coeffs: list[UniPoly], initial: list):
        if not coeffs or coeffs[0].is_zero():
            raise ValueError("recurrence needs a nonzero leading coefficient")
        self.coeffs = list(coeffs)
        self.initial = list(initial)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def unroll(self, n_max: int) -> list:
        """Exact values a_0 .. a_{n_max}."""
        vals = list(self.initial)
        if len(vals) > n_max + 1:
            return vals[: n_max + 1]
        for n in range(len(vals) - 1, n_max):
            lead = self.coeffs[0].evaluate(n)
            if _is_zero(lead):
                raise SingularIndexError(n)
            acc = None
            for j in range(1, len(self.coeffs)):
                idx = n + 1 - j
                if idx < 0:
                    continue
                term = self.coeffs[j].evaluate(n) * vals[idx]
                acc = term if acc is None else acc + term
            if acc is None:
                vals.append(0 * vals[0])
            else:
                vals.append((-acc) * _inv(lead))
        return vals


# ---------------------------------------------------------------------------
# differential operators


def _as_ratfun(var: str, c) -> RatFun:
    if isinstance(c, RatFun):
        return c
    if isinstance(c, UniPoly):
        return RatFun(c)
    return RatFun.const(var, c)


def _pair(var: str, c) -> tuple[RatFun, RatFun]:
    if isinstance(c, tuple):
        return (_as_ratfun(var, c[0]), _as_ratfun(var, c[1]))
    return (_as_ratfun(var, c), RatFun.const(var, 0))


class DiffOperator:
    """sum_i (p_i + q_i s) d^i/dx^i with s^2 equal to a fixed radicand.

    Coefficients are rational functions of the operator variable over an
    exact scalar field.  Operators without an adjoined root keep every q_i
    zero and radicand None.
    """

    def __init__(self, var: str, coeffs: list, radicand: RatFun | None = None):
        self.var = var
        pairs = [_pair(var, c) for c in coeffs]
        while pairs and pairs[-1][0].is_zero() and pairs[-1][1].is_zero():
            pairs.pop()
        if not pairs:
            raise ValueError("zero operator")
        self.pairs = pairs
        self.radicand = None if radicand is None else _as_ratfun(var, radicand)
        if self.radicand is not None and all(q.is_zero() for _, q in pairs):
            self.radicand = None

    @property
    def order(self) -> int:
        return len(self.pairs) - 1

    def has_radical(self) -> bool:
        return self.radicand is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return (
            self.var == other.var
            and self.pairs == other.pairs
            and self.radicand == other.radicand
        )

    def __repr__(self):
        body = ", ".join(
            f"D^{i}: {p!r}" + ("" if q.is_zero() else f" + ({q!r})*s")
            for i, (p, q) in enumerate(self.pairs)
        )
        rad = "" if self.radicand is None else f" with s^2 = {self.radicand!r}"
        return f"DiffOperator[{self.var}]({body}){rad}"

    # -- coefficient plumbing ------------------------------------------------

    def scaled(self, factor) -> "DiffOperator":
        f = _as_ratfun(self.var, factor)
        return DiffOperator(
            self.var, [(p * f, q * f) for p, q in self.pairs], self.radicand
        )

    def cleared(self) -> "DiffOperator":
        """Equivalent operator with polynomial coefficients."""
        den = UniPoly.const(self.var, 1)
        for p, q in self.pairs:
            for part in (p, q):
                g = poly_gcd(den, part.den)
                den = den * part.den.exact_div(g)
        return self.scaled(RatFun(den))

    def poly_pairs(self) -> list[tuple[UniPoly, UniPoly]]:
        c = self.cleared()
        return [(p.as_poly(), q.as_poly()) for p, q in c.pairs]

    def resolve_radical(self, root: RatFun, sign: int = 1) -> "DiffOperator":
        """Collapse the formal root to an explicit rational function."""
        if self.radicand is None:
            return self
        root = _as_ratfun(self.var, root)
        if root * root != self.radicand:
            raise ValueError("supplied root does not square to the radicand")
        rho = root if sign >= 0 else -root
        return DiffOperator(
            self.var, [p + q * rho for p, q in self.pairs], None
        )

    def normalized(self) -> "DiffOperator":
        """Divide through by the top coefficient; canonical up to nothing."""
        p, q = self.pairs[-1]
        if q.is_zero():
            inv_p, inv_q = 1 / p, RatFun.const(self.var, 0)
        else:
            if self.radicand is None:
                raise ValueError("radical coefficient without a radicand")
            nrm = p * p - q * q * self.radicand
            inv_p, inv_q = p / nrm, -q / nrm
        out = []
        for a, b in self.pairs:
            out.append((a * inv_p + b * inv_q * self.radicand, a * inv_q + b * inv_p)
                       if self.radicand is not None else (a * inv_p, b * inv_p))
        return DiffOperator(self.var, out, self.radicand)

    def equals_up_to_factor(self, other: "DiffOperator") -> bool:
        if self.order != other.order or self.var != other.var:
            return False
        a, b = self.normalized(), other.normalized()
        return a.pairs == b.pairs and a.radicand == b.radicand

    # -- action on series ----------------------------------------------------

    def coefficient_series(self, order: int, s_series: TruncatedSeries | None = None):
        """Series expansions at 0 of the polynomial (cleared) coefficients."""
        pairs = self.poly_pairs()
        need_s = any(not q.is_zero() for _, q in pairs)
        if need_s and s_series is None:
            s_series = self.radical_series(order)
        out = []
        for p, q in pairs:
            a = TruncatedSeries.from_poly(p, order)
            if not q.is_zero():
                a = a + TruncatedSeries.from_poly(q, order) * s_series
            out.append(a)
        return out

    def radical_series(self, order: int, sqrt0=None) -> TruncatedSeries:
        """Expansion of s at 0; needs the radicand's value at 0 to be a square.

        sqrt0, when given, must square to radicand(0) and fixes the branch.
        """
        if self.radicand is None:
            raise ValueError("operator has no radical")
        num, den = self.radicand.num, self.radicand.den
        if _is_zero(den.coeff(0)):
            raise ZeroDivisionError("radicand has a pole at 0")
        r0 = num.coeff(0) * _inv(den.coeff(0))
        if sqrt0 is None:
            fr = qz(r0) if isinstance(r0, (int, Fraction)) else None
            if fr is None:
                raise ValueError("radicand value at 0 needs an explicit square root")
            pn, pd = _int_sqrt(fr.numerator), _int_sqrt(fr.denominator)
            if pn is None or pd is None:
                raise ValueError(f"radicand(0) = {fr} is not a rational square")
            sqrt0 = Q(pn, pd)
        if not _is_zero(sqrt0 * sqrt0 - r0):
            raise ValueError("sqrt0 does not square to radicand(0)")
        ns = TruncatedSeries.from_poly(num, order)
        ds = TruncatedSeries.from_poly(den, order)
        unit = ns * ds.inverse() * _inv(r0)
        return unit.sqrt() * sqrt0

    def apply(
        self, f: TruncatedSeries, s_series: TruncatedSeries | None = None
    ) -> TruncatedSeries:
        """L(f) for the denominator-cleared form of L; exact in exact rings."""
        if f.order() <= self.order:
            raise ValueError("series order must exceed the operator order")
        coeffs = self.coefficient_series(f.order(), s_series)
        out = None
        df = f
        for i, a in enumerate(coeffs):
            if i > 0:
                df = df.derivative()
            term = a * df
            out = term if out is None else out + term
        return out

    # -- transformations -----------------------------------------------------

    def substitute(self, m: RatFun) -> "DiffOperator":
        """Operator annihilating f(m(x)) for every solution f of self."""
        m = _as_ratfun(self.var, m)
        dm = m.derivative()
        if dm.is_zero():
            raise ValueError("substitution map must be nonconstant")
        zero = RatFun.const(self.var, 0)
        chains: list[list[RatFun]] = [[RatFun.const(self.var, 1)]]
        for _ in range(self.order):
            prev = chains[-1]
            nxt = [zero] * (len(prev) + 1)
            for j, b in enumerate(prev):
                nxt[j] = nxt[j] + b.derivative()
                nxt[j + 1] = nxt[j + 1] + b
            chains.append([c / dm for c in nxt])
        n = self.order + 1
        acc_p = [zero] * n
        acc_q = [zero] * n
        for i, (p, q) in enumerate(self.pairs):
            cp = p.compose(m)
            cq = q.compose(m)
            for j, b in enumerate(chains[i]):
                acc_p[j] = acc_p[j] + cp * b
                acc_q[j] = acc_q[j] + cq * b
        rad = None if self.radicand is None else self.radicand.compose(m)
        return DiffOperator(self.var, list(zip(acc_p, acc_q)), rad)

    def substitute_reciprocal(self, kappa) -> "DiffOperator":
        """Operator annihilating f(kappa/x) for every solution f of self.

        Unlike substitute, this keeps polynomial coefficient rings
        polynomial: kappa must be a scalar and the only divisions are by it.
        Radical coefficients are not supported here.
        """
        if self.radicand is not None:
            raise ValueError("reciprocal substitution with a radical is unsupported")
        pairs = self.poly_pairs()
        polys = [p for p, _ in pairs]
        var = self.var
        x2 = UniPoly(var, [0, 0, 1])
        neg_inv_k = -_inv(kappa)
        chains: list[list[UniPoly]] = [[UniPoly.const(var, 1)]]
        for _ in range(self.order):
            prev = chains[-1]
            nxt = [UniPoly(var, [])] * (len(prev) + 1)
            for j, b in enumerate(prev):
                nxt[j] = nxt[j] + b.derivative()
                nxt[j + 1] = nxt[j + 1] + b
            chains.append([x2 * c * neg_inv_k for c in nxt])
        deg = max(p.degree() for p in polys if not p.is_zero())
        n = self.order + 1
        acc = [UniPoly(var, []) for _ in range(n)]
        for i, p in enumerate(polys):
            if p.is_zero():
                continue
            # x**deg * p(kappa/x), a polynomial again
            flipped = UniPoly(
                var,
                [p.coeff(deg - m) * qz(kappa) ** (deg - m) for m in range(deg + 1)],
            )
            for j, b in enumerate(chains[i]):
                acc[j] = acc[j] + flipped * b
        return DiffOperator(var, [RatFun(a) for a in acc])

    def gauge(self, lam: RatFun) -> "DiffOperator":
        """Operator for f / F where lam is the logarithmic derivative of F."""
        lam = _as_ratfun(self.var, lam)
        zero = RatFun.const(self.var, 0)
        powers: list[list[RatFun]] = [[RatFun.const(self.var, 1)]]
        for _ in range(self.order):
            prev = powers[-1]
            nxt = [zero] * (len(prev) + 1)
            for j, b in enumerate(prev):
                nxt[j] = nxt[j] + b.derivative() + lam * b
                nxt[j + 1] = nxt[j + 1] + b
            powers.append(nxt)
        n = self.order + 1
        acc_p = [zero] * n
        acc_q = [zero] * n
        for i, (p, q) in enumerate(self.pairs):
            for j, b in enumerate(powers[i]):
                acc_p[j] = acc_p[j] + p * b
                acc_q[j] = acc_q[j] + q * b
        return DiffOperator(self.var, list(zip(acc_p, acc_q)), self.radicand)


def _int_sqrt(n: int):
    if n < 0:
        return None
    r = int(n**0.5)
    for c in (r - 1, r, r + 1):
        if c >= 0 and c * c == n:
            return c
    return None


# ---------------------------------------------------------------------------
# Frobenius solutions


@dataclass
class FrobeniusSolution:
    exponent: Fraction
    series: TruncatedSeries
    unique: bool
    log_partner: bool


def _falling(mu, i: int):
    out = 1
    for k in range(i):
        out = out * (mu - k)
    return out


def frobenius_solve(
    L: DiffOperator,
    order: int,
    exponents=None,
    s_series: TruncatedSeries | None = None,
    scalar_division=True,
) -> list[FrobeniusSolution]:
    """Non-logarithmic Frobenius solutions of L at the origin.

    exponents may list the local exponents to use; otherwise they are found
    as rational roots of the indicial polynomial (degree <= 2 supported).
    With scalar_division=True every division along the recursion must be by
    a scalar, which keeps polynomial coefficient rings polynomial.
    """
    margin = L.order + 2
    coeff_series = L.coefficient_series(order + margin, s_series)
    terms: dict[int, list[tuple[int, object]]] = {}
    sigma = None
    for i, a in enumerate(coeff_series):
        for j, c in enumerate(a.coeffs):
            if _is_zero(c):
                continue
            d = j - i
            if sigma is None or d < sigma:
                sigma = d
            terms.setdefault(d, []).append((i, c))
    if sigma is None:
        raise ValueError("zero operator")

    def phi(k: int, mu):
        row = terms.get(sigma + k)
        if not row:
            return 0
        acc = None
        for i, c in row:
            t = c * _falling(mu, i)
            acc = t if acc is None else acc + t
        return acc

    if exponents is None:
        exponents = _indicial_roots(terms[sigma], L.order)
    sols = []
    seen = set()
    for e in exponents:
        e = qz(e)
        if e in seen:
            continue
        seen.add(e)
        if not _is_zero(phi(0, e)):
            raise ValueError(f"{e} is not a root of the indicial polynomial")
        double = _is_zero(_phi_prime_at(terms[sigma], e))
        cs: list = [1]
        log_partner = double
        ok = True
        for n in range(1, order):
            lead = phi(0, e + n)
            acc = None
            for m_ in range(n):
                pk = phi(n - m_, e + m_)
                if _is_zero(pk):
                    continue
                t = cs[m_] * pk
                acc = t if acc is None else acc + t
            if _is_zero(lead):
                # resonance with a vanishing right-hand side is resolvable;
                # otherwise this exponent carries a logarithm and is skipped
                if acc is None or _is_zero(acc):
                    cs.append(0)
                    continue
                ok = False
                break
            if acc is None:
                cs.append(0)
                continue
            if scalar_division:
                cs.append((-acc) * _inv(_as_scalar(lead)))
            else:
                cs.append((-acc) * _inv(lead))
        if not ok:
            continue
        ser = TruncatedSeries(L.var, cs, offset=e)
        sols.append(FrobeniusSolution(e, ser, double, log_partner))
    return sols


def _as_scalar(x):
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, UniPoly):
        if x.degree() <= 0:
            return x.coeff(0) if x.coeffs else 0
        raise ValueError("nonscalar division needed; pass scalar_division=False")
    if isinstance(x, RatFun):
        if x.num.degree() <= 0 and x.den.degree() <= 0:
            return x.evaluate(0)
        raise ValueError("nonscalar division needed; pass scalar_division=False")
    return x


def _phi_prime_at(row, e):
    acc = None
    for i, c in row:
        base = _falling(e, i)
        bump = None
        for k in range(i):
            prod = 1
            for kk in range(i):
                if kk != k:
                    prod = prod * (e - kk)
            bump = prod if bump is None else bump + prod
        d = bump if bump is not None else 0
        t = c * d
        acc = t if acc is None else acc + t
    return 0 if acc is None else acc


def _indicial_roots(row, max_order: int) -> list[Fraction]:
    coeffs = [Fraction(0)] * (max_order + 1)
    for i, c in row:
        if isinstance(c, UniPoly):
            c = _as_scalar(c)
        if isinstance(c, RatFun):
            c = _as_scalar(c)
        if not isinstance(c, (int, Fraction)):
            raise ValueError("indicial roots over this ring need explicit exponents")
        ci = qz(c)
        for k, fc in enumerate(_falling_coeffs(i)):
            coeffs[k] += ci * fc
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-coeffs[0] / coeffs[1]]
    if deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        rn, rd = _int_sqrt(disc.numerator), _int_sqrt(disc.denominator)
        if rn is None or rd is None:
            return []
        r = Q(rn, rd)
        return [(-b + r) / (2 * a), (-b - r) / (2 * a)]
    raise ValueError("indicial degree above 2 needs explicit exponents")


def _falling_coeffs(i: int) -> list[Fraction]:
    out = [Fraction(1)]
    for k in range(i):
        shifted = [Fraction(0)] + out
        out = [shifted[j] - k * (out[j] if j < len(out) else 0) for j in range(len(shifted))]
    return out


# ---------------------------------------------------------------------------
# symmetric product membership


def symprod_membership(f: TruncatedSeries, basis_a, basis_b, margin: int = 10):
    """Express f in the span of pairwise products of two solution bases.

    Returns (True, coefficients) when the linear system over every exponent
    known to all series is consistent; (False, None) otherwise.  The margin
    guards against truncations too short to separate rank from artifacts.
    """
    products = []
    for g in basis_a:
        for h in basis_b:
            products.append(g * h)
    k = len(products)
    length = min([f.order()] + [p.order() for p in products])
    if length < k + margin:
        raise ValueError("truncation too short to separate rank from artifacts")
    family = products + [f]
    exps = sorted({s.offset + n for s in family for n in range(length)})

    def known(s, e):
        d = e - s.offset
        return d.denominator != 1 or d < s.order()

    def coeff_of(s, e):
        d = e - s.offset
        if d.denominator != 1 or d < 0:
            return 0
        return s.coeffs[int(d)]

    exps = [e for e in exps if all(known(s, e) for s in family)]
    rows = [[coeff_of(p, e) for p in products] for e in exps]
    rhs = [coeff_of(f, e) for e in exps]
    if len(rows) < k + margin:
        raise ValueError("truncation too short to separate rank from artifacts")
    sol = gaussian_solve(rows, rhs)
    if sol is None:
        return False, None
    return True, sol
