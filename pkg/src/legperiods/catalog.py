"""Catalog of the exact objects under test.

This module stores, in exact arithmetic, the differential operators
annihilating the period integrals, the integer monodromy data of the genus-2
fibration, the real-multiplication structure, the 2x2 tuples seeding the
braid-orbit searches, and the polynomial data behind the algebraic square
root of the coefficient generating function.  Factories specialize symbolic
parameters to Fraction or quadratic-extension values so downstream modules
can work over a field.

Homology coordinates are always (first A-cycle, first B-cycle, second
A-cycle, second B-cycle), matrices act on column vectors, and the
intersection pairing of column vectors is x . y = x^T J y with J =
INTERSECTION_FORM.
"""

from __future__ import annotations

from fractions import Fraction as F

from .exactcore import (
    QuadExt,
    RatFun,
    UniPoly,
    mat_inverse,
    mat_mul,
    qz,
)
from .holonomic import DiffOperator, PRecurrence


# ---------------------------------------------------------------------------
# scalar constructors for the quadratic extensions in play


def q2(a, b=0) -> QuadExt:
    """a + b sqrt(2)."""
    return QuadExt(qz(a), qz(b), F(2), F(0))


def q17(a, b=0) -> QuadExt:
    """a + b sqrt(17)."""
    return QuadExt(qz(a), qz(b), F(17), F(0))


def golden(a, b=0) -> QuadExt:
    """a + b g where g = 2 cos(2 pi / 5) satisfies g**2 = 1 - g."""
    return QuadExt(qz(a), qz(b), F(1), F(-1))


def galois(mat):
    """Entrywise Galois conjugate of a matrix over a quadratic extension."""
    return tuple(tuple(e.conj() if isinstance(e, QuadExt) else e for e in row) for row in mat)


def _tt(m):
    return tuple(tuple(r) for r in m)


# ---------------------------------------------------------------------------
# homology of the invariant genus-2 fibre and its monodromy


INTERSECTION_FORM = (
    (0, 1, 0, 0),
    (-1, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 0, -1, 0),
)

CYCLE_A1 = (1, 0, 0, 0)
CYCLE_B1 = (0, 1, 0, 0)
CYCLE_A2 = (0, 0, 1, 0)
CYCLE_B2 = (0, 0, 0, 1)

# cycles contracted at the four singular fibres, in homology coordinates
VANISHING_CYCLES = (
    (0, -1, -1, 0),
    (-1, 1, 1, -1),
    (1, 1, 1, 1),
    (0, 1, 1, 0),
)


def intersect(x, y) -> int:
    """Intersection number of two cycles in homology coordinates."""
    acc = 0
    J = INTERSECTION_FORM
    for i in range(4):
        for j in range(4):
            acc += x[i] * J[i][j] * y[j]
    return acc


def transvection(delta):
    """Matrix of gamma -> gamma - (delta . gamma) delta on column vectors."""
    n = len(delta)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            ej = [1 if k == j else 0 for k in range(n)]
            row.append((1 if i == j else 0) - delta[i] * intersect(delta, ej))
        out.append(tuple(row))
    return tuple(out)


# Dehn-twist matrices about the four vanishing cycles (the fourth equals the
# first since the cycles differ only by sign) and about the two A-cycles
TWIST_VANISHING_1 = ((1, 0, 0, 0), (1, 1, 0, -1), (1, 0, 1, -1), (0, 0, 0, 1))
TWIST_VANISHING_2 = ((0, -1, 1, 1), (1, 2, -1, -1), (1, 1, 0, -1), (-1, -1, 1, 2))
TWIST_VANISHING_3 = ((2, -1, 1, -1), (1, 0, 1, -1), (1, -1, 2, -1), (1, -1, 1, 0))
TWIST_FIRST_A = ((1, -1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
TWIST_SECOND_A = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, -1), (0, 0, 0, 1))

# local monodromy around the four singular fibres of the base slice,
# indexed in the loop order whose composite is the identity
MONODROMY_TUPLE = (
    ((0, -1, 1, 1), (2, 2, -1, -2), (2, 1, 0, -2), (-1, -1, 1, 2)),
    ((1, -1, 0, 0), (0, 1, 0, 0), (0, 0, 1, -2), (0, 0, 0, 1)),
    ((2, -1, 1, -1), (2, 0, 1, -2), (2, -1, 2, -2), (1, -1, 1, 0)),
    ((-1, 0, 0, 0), (-2, -1, 0, 0), (0, 0, -1, 0), (0, 0, -1, -1)),
)

# endomorphism squaring to 2: multiplication by sqrt(2) on homology
REAL_MULTIPLICATION = ((0, 0, 1, 0), (0, 0, 0, 2), (2, 0, 0, 0), (0, 1, 0, 0))

# change of basis splitting the 4-dim representation into two conjugate halves
SPLITTING_BASIS = (
    (q2(0), q2(0, F(1, 2)), q2(0), q2(0, F(-1, 2))),
    (q2(0, 1), q2(0), q2(0, -1), q2(0)),
    (q2(0), q2(1), q2(0), q2(1)),
    (q2(1), q2(0), q2(1), q2(0)),
)

# projected 2x2 monodromy over Z[sqrt(2)] (Galois twins act on the other half)
SPLIT_MONODROMY_TUPLE = (
    ((q2(2, -1), q2(1, F(-1, 2))), (q2(-2, 1), q2(0, 1))),
    ((q2(1), q2(0)), (q2(-2), q2(1))),
    ((q2(0, -1), q2(1, F(1, 2))), (q2(-2, -1), q2(2, 1))),
    ((q2(-1), q2(-1)), (q2(0), q2(-1))),
)


# ---------------------------------------------------------------------------
# braid-orbit seed tuples and density targets


BRAID_SEED_SQRT2 = (
    ((q2(1), q2(1)), (q2(0), q2(1))),
    ((q2(1), q2(0)), (q2(-2, 1), q2(1))),
    ((q2(1), q2(0)), (q2(-2, -1), q2(1))),
    ((q2(1), q2(-1)), (q2(4), q2(-3))),
)

BRAID_SEED_GOLDEN = (
    ((golden(1), golden(1)), (golden(0), golden(1))),
    ((golden(1), golden(0)), (golden(-2, 1), golden(1))),
    ((golden(1), golden(0)), (golden(-2, -1), golden(1))),
    ((golden(1), golden(-1)), (golden(4), golden(-3))),
)

_H1 = ((q17(1), q17(1)), (q17(0), q17(1)))
_H2 = ((q17(1), q17(0)), (q17(F(-7, 2), F(-1, 2)), q17(1)))
_H3 = (
    (q17(F(-3, 2), F(-1, 2)), q17(F(9, 8), F(1, 8))),
    (q17(F(-13, 2), F(-3, 2)), q17(F(7, 2), F(1, 2))),
)
_H4 = _tt(mat_inverse(mat_mul(mat_mul(_H1, _H2), _H3)))

BRAID_SEED_HEUN = (_H1, _H2, _H3, _H4)

# translation matrices generating dense subgroups together with the
# unipotent elements already inside the projected monodromy
DENSITY_TARGET_UPPER = ((q2(1), q2(0, 2)), (q2(0), q2(1)))
DENSITY_TARGET_LOWER = ((q2(1), q2(0)), (q2(0, 4), q2(1)))


# ---------------------------------------------------------------------------
# differential operators annihilating the generating function


def _p(var, *coeffs) -> UniPoly:
    return UniPoly(var, [qz(c) for c in coeffs])


def z_side_operator(y0, sign: int = 1) -> DiffOperator:
    """Second-order annihilator in the counting variable at fixed argument y0.

    The zeroth coefficient carries the adjoined root s with
    s**2 = 2(1-4z)((1+4z)**2 - 16 z y0**2); sign selects the branch pairing.
    """
    y0 = qz(y0)
    y2 = y0 * y0
    z = UniPoly.gen("z")
    c1 = _p("z", 1, 4)
    disc = c1 * c1 - _p("z", 0, 16 * y2)
    a2 = z * _p("z", 1, -4) * c1 * c1 * disc
    a1 = (_p("z", 0, -24 * y2, 64 * y2, 384 * y2) + _p("z", 1, 0, -32) * c1 * c1) * c1
    a0p = _p("z", -y2, 4 * y2, 80 * y2, 64 * y2) - _p("z", 0, 3) * c1 * c1 * c1
    a0q = _p("z", sign * y0, -8 * sign * y0)
    radicand = _p("z", 2, -8) * disc
    return DiffOperator("z", [(RatFun(a0p), RatFun(a0q)), RatFun(a1), RatFun(a2)], RatFun(radicand))


def y_side_operator(z0, sign: int = 1) -> DiffOperator:
    """Second-order annihilator in the argument variable at fixed weight z0."""
    z0 = qz(z0)
    y = UniPoly.gen("y")
    c1 = 1 + 4 * z0
    B = _p("y", -4 * z0 - 1, 0, 2)
    K = _p("y", c1 * c1, 0, -16 * z0)
    a2 = 2 * _p("y", 1, 0, -1) * B * B * K
    a1 = 4 * y * B * (_p("y", 0, 0, 0, 0, 32 * z0) - c1 * _p("y", -4 * z0 * (3 + 4 * z0), 0, 1 + 28 * z0))
    a0p = (
        16 * z0 * _p("y", 0, 0, 0, 0, -14 * z0 - 3, 0, 2)
        + c1 * (1 + 32 * z0 + 80 * z0 * z0) * _p("y", 0, 0, 1)
        - UniPoly.const("y", c1 * c1 * (1 + 4 * z0 + 8 * z0 * z0))
    )
    a0q = sign * y * (2 * (1 + 8 * z0) * _p("y", 0, 0, 1) - UniPoly.const("y", 4 * c1 * (1 - z0)))
    radicand = 2 * (1 - 4 * z0) * K
    return DiffOperator("y", [(RatFun(a0p), RatFun(a0q)), RatFun(a1), RatFun(a2)], RatFun(radicand))


def x_side_operator(t0) -> DiffOperator:
    """Second-order annihilator on the rationalized parameter slice t = t0.

    The companion solution family comes from the same factory at -t0.
    t0 may be a Fraction or a quadratic-extension element.
    """
    t = t0
    one = t - t + 1 if isinstance(t, QuadExt) else F(1)
    b = (t + one) * (t - one) ** 3
    c2 = t**4 + 2 * t * t - one
    x = UniPoly.gen("x")
    quad = UniPoly("x", [(t * t - one) ** 4, 2 * c2, one])
    lin = UniPoly("x", [b, one])
    inv_x = RatFun(UniPoly.const("x", one), x)
    a1 = inv_x - RatFun(UniPoly.const("x", one), lin) + RatFun(UniPoly("x", [2 * c2, 2 * one]), quad)
    a0num = UniPoly(
        "x",
        [
            (4 * t**4 - 8 * t**3 + 12 * t * t + 4 * t - 5 * one) * b,
            8 * t**4 - 16 * t**3 - 4 * t * t + 20 * t - 9 * one,
            4 * one,
        ],
    )
    a0 = RatFun(a0num, 16 * x * quad * lin)
    return DiffOperator("x", [a0, a1, RatFun(UniPoly.const("x", one))])


def rationalizing_parameter_square(u0) -> F:
    """t**2 on the slice u = u0 of the rationalization u = 1/(1-2t**2)."""
    u0 = qz(u0)
    return (u0 - 1) / (2 * u0)


def pf_operator(u0, sign: int = 1) -> DiffOperator:
    """Period annihilator at weight u0: the t-slice operator moved by
    x -> -x/(4 u0**2), with t = sign * sqrt((u0-1)/(2 u0)) adjoined."""
    u0 = qz(u0)
    t = QuadExt(F(0), F(sign), rationalizing_parameter_square(u0), F(0))
    L = x_side_operator(t)
    scale = F(-1, 4) / (u0 * u0)
    m = RatFun(UniPoly("x", [t - t, scale * (t / t)]))
    return L.substitute(m)


def pullback_map(t0) -> RatFun:
    """x -> 1/(64 x) - (t+1)(t-1)**3, as a rational map."""
    t0 = qz(t0)
    b = (t0 + 1) * (t0 - 1) ** 3
    return RatFun(_p("x", 1, -64 * b), _p("x", 0, 64))


def pullback_operator(t0) -> DiffOperator:
    """The t-slice operator pulled back along pullback_map; its solution at
    the origin is sqrt(x) times the series unrolled by
    squared_coeff_recurrence."""
    return x_side_operator(qz(t0)).substitute(pullback_map(t0))


def first_order_sqrt_factor() -> DiffOperator:
    """d/dx - 1/(2x), annihilating sqrt(x)."""
    return DiffOperator("x", [RatFun(UniPoly.const("x", F(-1, 2)), UniPoly.gen("x")), 1])


def quartic_prefactor_logderiv(t0) -> RatFun:
    """Logarithmic derivative of the quartic-root prefactor
    (x (x+a) / (x+b))**(1/4) with a = (t-1)(t+1)**3, b = (t+1)(t-1)**3."""
    t0 = qz(t0)
    a = (t0 - 1) * (t0 + 1) ** 3
    b = (t0 + 1) * (t0 - 1) ** 3
    x = UniPoly.gen("x")
    quarter = RatFun(UniPoly.const("x", F(1, 4)))
    return quarter * (
        RatFun(UniPoly.const("x", F(1)), x)
        + RatFun(UniPoly.const("x", F(1)), x + UniPoly.const("x", a))
        - RatFun(UniPoly.const("x", F(1)), x + UniPoly.const("x", b))
    )


def _u(*coeffs) -> UniPoly:
    return UniPoly("u", [qz(c) for c in coeffs])


def degree_five_operator(u0=None) -> DiffOperator:
    """Second-order operator with a degree-5 pullback structure, in cleared
    polynomial form; symbolic in its parameter when u0 is None."""
    if u0 is None:
        u = UniPoly.gen("u")
        one = UniPoly.const("u", F(1))
    elif isinstance(u0, UniPoly):
        u = u0
        one = UniPoly.const(u0.var, F(1))
    else:
        u = qz(u0)
        one = F(1)
    p3 = UniPoly("x", [16 * u * u, 8 * u * (u + one), u * u + 6 * u + one, one])
    a2 = 100 * UniPoly.gen("x") * p3
    a1 = 100 * UniPoly("x", [-16 * u * u, 0 * one, u * u + 6 * u + one, 2 * one])
    a0 = UniPoly("x", [-40 * u * (u + 3 * one), -((u + 3 * one) ** 2), 25 * one])
    return DiffOperator("x", [RatFun(a0), RatFun(a1), RatFun(a2)])


def heun_operator() -> DiffOperator:
    """The Heun operator whose 2x2 tuple seeds the infinite braid orbit."""
    # den = t (t-1) (256 t + 895 - 217 sqrt(17))
    den = UniPoly("t", [q17(0), q17(-895, 217), q17(639, -217), q17(256)])
    a1num = UniPoly("t", [q17(-895, 217), q17(1276, -434), q17(768)])
    a0num = UniPoly("t", [q17(180, -60), q17(240)])
    one = UniPoly.const("t", q17(1))
    return DiffOperator("t", [RatFun(a0num, den), RatFun(a1num, den), RatFun(one)])


def flat_structure_operator() -> DiffOperator:
    """Second-order operator satisfied by the normalized flat-length integral."""
    t = UniPoly.gen("t")
    d1 = _p("t", -1, 1) * _p("t", -1, 0, 4) * _p("t", -1, 0, 2)
    a1 = RatFun(2 * _p("t", -1, 6, 0, -16, 8), d1)
    a0 = RatFun(_p("t", -1, -6, 15, -4, 2), _p("t", -1, 1) * d1)
    return DiffOperator("t", [a0, a1, 1])


# ---------------------------------------------------------------------------
# recurrences for the integral series coefficients


def _t(*coeffs) -> UniPoly:
    return UniPoly("t", [qz(c) for c in coeffs])


def squared_coeff_recurrence(t0=None) -> PRecurrence:
    """Fourth-order recurrence for the coefficient polynomials of the
    square-root-normalized solution; symbolic over QQ[t] when t0 is None."""
    t = UniPoly.gen("t") if t0 is None else qz(t0)
    one = UniPoly.const("t", F(1)) if t0 is None else F(1)
    A = t**4 - 6 * t**3 - 4 * t * t + 6 * t - one
    B = 4 * t**4 - 24 * t**3 - 12 * t * t + 20 * t - 3 * one
    C = t * (t - one) ** 3 * (t + one)
    D = t * t + 2 * t - one
    E = -2 * t * t - 6 * t + 3 * one
    G = t * t * (t - one) ** 6 * (t + one) ** 2
    c0 = UniPoly("n", [1, 2, 1])
    c1 = UniPoly("n", [-4 * B, -64 * A, -64 * A])
    c2 = UniPoly("n", [-2048 * C * E, 0 * one, -16384 * C * D])
    c3 = UniPoly("n", [-786432 * G, -1048576 * G, 1048576 * G])
    return PRecurrence([c0, c1, c2, c3], [one])


def degree_five_coeff_recurrence(u0=None) -> PRecurrence:
    """Fourth-order recurrence for the series coefficients attached to the
    degree-5 operator; symbolic over QQ[u] when u0 is None."""
    u = UniPoly.gen("u") if u0 is None else qz(u0)
    one = UniPoly.const("u", F(1)) if u0 is None else F(1)
    u2 = u * u
    w = 5 * u - 3 * one
    c0 = UniPoly("n", [1, 2, 1])
    c1 = UniPoly("n", [30 * u2 - 10 * one, 125 * u2 - 40 * one, 125 * u2 - 40 * one])
    c2 = UniPoly("n", [100 * w * (one - 3 * u), 0 * one, 100 * w * (10 * u - 4 * one)])
    c3 = UniPoly("n", [-1500 * w * w, -2000 * w * w, 2000 * w * w])
    return PRecurrence([c0, c1, c2, c3], [one])


# ---------------------------------------------------------------------------
# the algebraic square root of the generating function


def _spec(poly_x: UniPoly, t0) -> UniPoly:
    return poly_x.map_coeffs(lambda c: c.evaluate(qz(t0)) if isinstance(c, UniPoly) else qz(c))


def sqrt_core_polys(t0=None) -> dict:
    """The polynomials S, A of the closed square-root form, the spurious
    factor divided out of the degree-8 relation, and their variable names.

    Over QQ[t][x] when t0 is None, over QQ[x] otherwise.
    """
    t = UniPoly.gen("t")
    one = UniPoly.const("t", F(1))
    S1 = UniPoly("x", [one, -16 * (t + one) * (t - one) ** 3])
    S2 = UniPoly("x", [one, 64 * (t**3 + t * t - t), -1024 * (t**3 + t * t) * (t - one) ** 3])
    S = S1 * S2
    A = UniPoly(
        "x",
        [
            one,
            128 * (2 * t - one) ** 2,
            -2048 * (t - one) ** 3 * (2 * t - one) * (2 * t * t + 5 * t - one),
            131072 * t * (t - one) ** 6 * (2 * t * t + 2 * t - one),
            -2097152 * (t**3 + t * t) * (t - one) ** 9,
        ],
    )
    # the spurious factor equals the first (linear) factor of S; at its root
    # A takes the value 1, which is what makes the chain relation divisible
    divisor = UniPoly("x", [one, -16 * (t + one) * (t - one) ** 3])
    out = {"S": S, "A": A, "divisor": divisor}
    if t0 is not None:
        out = {k: _spec(v, t0) for k, v in out.items()}
    return out


def sqrt_param_pieces(t0=None) -> dict:
    """Numerators and denominators (in the auxiliary variable v) of the
    rational parametrization of the square root: x = x(t, v) and the square
    Z2 = Z(t, v)**2.  Over QQ[t][v] when t0 is None, over QQ[v] otherwise."""
    t = UniPoly.gen("t")
    one = UniPoly.const("t", F(1))
    W = UniPoly("v", [(t + one) * (t - one) ** 2 * (t * t - t), 0 * one, -2 * (t + one) * (t - one) ** 2, 0 * one, t])
    x_num = UniPoly("v", [t * t, 0 * one, -one])
    x_den = UniPoly.const("v", 16 * t) * W
    lin_shift = UniPoly("v", [t - one, one])
    lin_root = UniPoly("v", [-t, one])
    z2_num = lin_shift * lin_shift * W * W * lin_root
    quart = UniPoly("v", [(t * t - one) ** 2, 0 * one, -2 * t * t, 0 * one, one])
    lin_den = UniPoly("v", [t * t - one, t])
    z2_den = UniPoly("v", [0 * one, 0 * one, one]) * quart * quart * lin_den * UniPoly.const("v", 2 * t)
    out = {"x_num": x_num, "x_den": x_den, "z2_num": z2_num, "z2_den": z2_den}
    if t0 is not None:
        out = {k: _spec(v_, t0) for k, v_ in out.items()}
    return out


# ---------------------------------------------------------------------------
# hyperelliptic data


def period_sextic(u, x) -> UniPoly:
    """Sextic under the square root of the period integrals, as a polynomial
    in the integration variable; u and x may come from any commutative ring."""
    one = u - u + 1 if not isinstance(u, (int, F)) else F(1)
    v = UniPoly("v", [0 * one, one])
    f1 = UniPoly("v", [one, -one])
    f2 = UniPoly("v", [one, -u * u])
    f3 = UniPoly("v", [one, u])
    f4 = UniPoly("v", [one, -u])
    bracket = f1 * f2 * f3 * f3 + UniPoly.const("v", x) * v * f4 * f4
    return v * f1 * bracket


def branch_curve_sextic(t, x) -> UniPoly:
    """Sextic of the v-parametrized form of the periods at slice t."""
    one = t - t + 1 if not isinstance(t, (int, F)) else F(1)
    W = UniPoly("v", [(t + one) * (t - one) ** 2 * (t * t - t), 0 * one, -2 * (t + one) * (t - one) ** 2, 0 * one, t])
    l1 = UniPoly("v", [t, one])
    l2 = UniPoly("v", [t - one / t, one])
    core = UniPoly("v", [-t * t, 0 * one, one]) + UniPoly.const("v", 64 * t * x) * W
    return l1 * l2 * core


def flat_structure_pieces(t) -> dict:
    """Quintic radicand, numerator, and integration limits of the normalized
    flat-length integral at parameter t (the (2/pi)(t-1)^(3/2) prefactor is
    applied by the caller)."""
    one = t - t + 1 if not isinstance(t, (int, F)) else F(1)
    l1 = UniPoly("v", [t, one])
    l2 = UniPoly("v", [t * t - one, t])
    l3 = UniPoly("v", [one - t, one])
    l4 = UniPoly("v", [t - one, one])
    q = UniPoly("v", [2 * t**3 - 3 * t * t + one, 0 * one, one - 2 * t])
    return {
        "radicand": l1 * l2 * l3 * l4 * q,
        "numerator": l4,
        "lower": -t,
        "upper": one / t - t,
    }


BASE_SLICE_U = F(1, 2)
BASE_FIBRE_X = F(1)


def base_fibre_roots() -> tuple:
    """The six branch points of the reference fibre, ascending on the real
    line, as elements of QQ(sqrt(17))."""
    return (
        q17(-3, -1),
        q17(F(3, 2), F(-1, 2)),
        q17(0),
        q17(1),
        q17(-3, 1),
        q17(F(3, 2), F(1, 2)),
    )


def singular_fibre_positions(u0) -> list:
    """Positions of the four singular fibres on the slice u = u0 < 1, each as
    (real part, imag part squared, imag sign); None marks the fibre at
    infinity."""
    u0 = qz(u0)
    re = u0 * u0 - 6 * u0 + 1
    imsq = 16 * (1 - u0) ** 2 * u0
    return [(re, imsq, 1), (F(0), F(0), 0), (re, imsq, -1), None]


def humbert_defect(a1, a2, a3, a4):
    """Vanishes exactly when the cross-ratio normalized branch points carry
    the discriminant-8 relation; inputs from any commutative ring."""
    lhs = 4 * a1 * a2 * a3 * a4 * ((a1 + a3) * (a2 + a4) - 2 * a1 * a3 - 2 * a2 * a4) ** 2
    rhs = (a2 - a4) ** 2 * (a1 - a3) ** 2 * (a1 * a3 + a2 * a4) ** 2
    return lhs - rhs
