"""Finite specializations of the first three transformations."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..qkernel import dfun, qpoch as qp, qprod as P
from .base import IdentityEntry, register, values
from .dsl import nonzero

F0 = Fraction(0)


def phi_exact(upper, lower, q, z, n):
    """Terminating r phi r-1 summed over k = 0..n."""
    out = F0
    for k in range(n + 1):
        out += P(upper, q, k) / (P(lower, q, k) * qp(q, q, k)) * z ** k
    return out


# --- a square of the first transformation ---------------------------------

def _squared(pt, n):
    x = [pt[f"x{i}"] for i in range(1, 5)]
    sq = [pt.sigma(f"q{i}") for i in range(1, 5)]
    q = [s * s for s in sq]
    K0 = x[0] * x[1] * x[2] * x[3]
    L0 = sq[0] * sq[1] * sq[2] * sq[3]

    def gam(k):
        P_ = lambda i, j: (sq[i] * sq[j]) ** k
        x1, x2, x3, x4 = x
        return ((x1 * x2 * P_(0, 1) - x3 * x4 * P_(2, 3))
                * (x1 * x3 * P_(0, 2) - x2 * x4 * P_(1, 3))
                * (x1 * x4 * P_(0, 3) - x2 * x3 * P_(1, 2)))

    lhs = F0
    for k in range(n):
        pr1 = pr2 = t = Fraction(1)
        for i in range(4):
            pr1 *= 1 - K0 / x[i] ** 2 * (L0 / q[i]) ** k
            pr2 *= 1 - x[i] ** 2 * q[i] ** k
            t *= qp(x[i] ** 2, q[i], k) / qp(K0 / x[i] ** 2, L0 / q[i], k + 1)
        lhs += gam(k) * (pr1 + pr2) * (K0 * L0 ** k - 1) / (K0 * L0 ** k) * t * t
    t = Fraction(1)
    for i in range(4):
        t *= qp(x[i] ** 2, q[i], n) / qp(K0 / x[i] ** 2, L0 / q[i], n)
    return lhs, t * t - 1


register(IdentityEntry(
    "c3.1", "finite", "squared form obtained with p_i = q_i",
    symbols=tuple(f"x{i}" for i in range(1, 5)), half_bases=tuple(f"q{i}" for i in range(1, 5)),
    sides=_squared,
))


# --- the bibasic family ---------------------------------------------------

_ABCDE = "a b c d e"
_XYZWU = "x y z w u"


def chi0(a, b, c, d, e):
    return (a * (1 - b * c / a) * (1 - c * d / a) * (1 - c * e / a) * (1 - b * c * d * e / a)
            / (c * (1 - b * c * d / a) * (1 - b * c * e / a) * (1 - c * d * e / a) * (1 - a / c)))


def chi1(x, y, z, w, u):
    return (x * (1 - y * z / x) * (1 - z * w / x) * (1 - z * u / x) * (1 - y * z * w * u / x)
            / (z * (1 - y) * (1 - w) * (1 - u) * (1 - y * z * z * w * u / x ** 2)))


def _plists(a, b, c, d, e, p):
    pn = [b, d, e, b * c * c * d * e / a ** 2]
    pd1 = [a * p / c, b * c * e * p / a, b * c * d * p / a, c * d * e * p / a]
    pd0 = [a / c, b * c * e / a, b * c * d / a, c * d * e / a]
    return pn, pd0, pd1


def _qlists(x, y, z, w, u, q):
    qn = [y * q, w * q, u * q, y * z * z * w * u * q / x ** 2]
    qd = [x * q / z, z * w * u * q / x, y * z * u * q / x, y * z * w * q / x]
    return qn, qd


def _rogers(pt, n):
    a, b, c, d, e = values(pt, _ABCDE)
    x, y, z, w, u = values(pt, _XYZWU)
    p, q = pt["p"], pt["q"]
    pn, pd0, pd1 = _plists(a, b, c, d, e, p)
    qn, qd = _qlists(x, y, z, w, u, q)
    E, Y = b * c * d * e / a, y * z * w * u / x
    lhs = F0
    for k in range(n):
        lhs += ((1 - E * p ** (2 * k)) * p ** k / (1 - E) * P(pn, p, k) / P(pd1, p, k)
                * P(qn, q, k) / P(qd, q, k))
    lhs *= chi0(a, b, c, d, e)
    s = F0
    for k in range(1, n + 1):
        s += ((1 - Y * q ** (2 * k)) * q ** k / (1 - Y)
              * P([y, w, u, y * z * z * w * u / x ** 2], q, k) / P(qd, q, k)
              * P(pn, p, k) / P(pd0, p, k))
    rhs = P(pn, p, n) / P(pd0, p, n) * P(qn, q, n) / P(qd, q, n) - 1 - chi1(x, y, z, w, u) * s
    return lhs, rhs


_PQ = ("p", "q")
_NZ_ACXZ = (nonzero("a"), nonzero("c"), nonzero("x"), nonzero("z"))

register(IdentityEntry(
    "c3.2-rogerspsi65", "finite", "bibasic transformation with coefficients a_0, a_1",
    symbols=tuple((_ABCDE + " " + _XYZWU).split()), half_bases=_PQ, sides=_rogers,
    constraints=_NZ_ACXZ,
))


def _ex25(pt, n):
    y, w, u = values(pt, "y w u")
    q = pt["q"]
    A = y * w * u
    den = [q, w * u * q, y * u * q, y * w * q]
    lhs = F0
    for k in range(n + 1):
        lhs += (1 - A * q ** (2 * k)) / (1 - A) * P([y, w, u, A], q, k) / P(den, q, k) * q ** k
    return lhs, P([y * q, w * q, u * q, A * q], q, n) / P(den, q, n)


register(IdentityEntry(
    "ex3.3-gr-ex2.5", "finite", "terminating very-well-poised sum",
    symbols=("y", "w", "u"), half_bases=("q",), sides=_ex25,
))


def _imp34(pt, n):
    a, b, c, d, e = values(pt, _ABCDE)
    y, z, u = values(pt, "y z u")
    p, q = pt["p"], pt["q"]
    pn, pd0, pd1 = _plists(a, b, c, d, e, p)
    E = b * c * d * e / a
    lhs = F0
    for k in range(n):
        lhs += ((1 - E * p ** (2 * k)) / (1 - E) * P(pn, p, k) / P(pd1, p, k)
                * P([y * q, u * q], q, k) / P([z * u * q, y * z * q], q, k) * (p * z) ** k)
    lhs *= chi0(a, b, c, d, e)
    rhs = (P(pn, p, n) / P(pd0, p, n) * P([y * q, u * q], q, n) / P([z * u * q, y * z * q], q, n)
           * z ** n - (1 - y * z) * (1 - u * z) / (z * (1 - y) * (1 - u)))
    s = F0
    for k in range(n + 1):
        s += ((1 - y * z * u * q ** (2 * k)) / (1 - y * z * u) * P([y, u], q, k)
              / P([z * u * q, y * z * q], q, k) * P(pn, p, k) / P(pd0, p, k) * z ** k)
    rhs += (1 - z) * (1 - y * z * u) / (z * (1 - y) * (1 - u)) * s
    return lhs, rhs


register(IdentityEntry(
    "eq-important-3.4", "finite", "w = x, x -> 0 limit of the bibasic transformation",
    symbols=("a", "b", "c", "d", "e", "y", "z", "u"), half_bases=_PQ, sides=_imp34,
    constraints=(nonzero("a"), nonzero("c"), nonzero("z")),
))


def _imp37(pt, n):
    a, b, c, d = values(pt, "a b c d")
    x, y, z, w, u = values(pt, _XYZWU)
    p, q = pt["p"], pt["q"]
    qn, qd = _qlists(x, y, z, w, u, q)
    Y = y * z * w * u / x
    pre = a * (1 - b * c / a) * (1 - c * d / a) / (c * (1 - b * c * d / a) * (1 - a / c))
    lhs = F0
    for k in range(n):
        lhs += (P([b, d], p, k) / P([a * p / c, b * c * d * p / a], p, k) * p ** k
                * P(qn, q, k) / P(qd, q, k))
    lhs *= pre
    rhs = P([b, d], p, n) / P([a / c, b * c * d / a], p, n) * P(qn, q, n) / P(qd, q, n) - 1
    s = F0
    for k in range(1, n + 1):
        s += ((1 - Y * q ** (2 * k)) * q ** k / (1 - Y)
              * P([y, w, u, y * z * z * w * u / x ** 2], q, k) / P(qd, q, k)
              * P([b, d], p, k) / P([a / c, b * c * d / a], p, k))
    return lhs, rhs - chi1(x, y, z, w, u) * s


register(IdentityEntry(
    "eq-important-3.7", "finite", "e = 0 case of the bibasic transformation",
    symbols=("a", "b", "c", "d") + tuple(_XYZWU.split()), half_bases=_PQ, sides=_imp37,
    constraints=_NZ_ACXZ,
))


def _binf(pt, n):
    a, c, d = values(pt, "a c d")
    x, y, z, w, u = values(pt, _XYZWU)
    p, q = pt["p"], pt["q"]
    qn, qd = _qlists(x, y, z, w, u, q)
    Y = y * z * w * u / x
    lhs = F0
    for k in range(n):
        lhs += qp(d, p, k) / qp(a * p / c, p, k) * (a / (c * d)) ** k * P(qn, q, k) / P(qd, q, k)
    lhs *= a * (1 - c * d / a) / (c * d * (1 - a / c))
    rhs = (qp(d, p, n) / qp(a / c, p, n) * (a / (c * d)) ** n * P(qn, q, n) / P(qd, q, n)
           - (1 - x / z) * (1 - y * w * z / x) * (1 - y * z * u / x) * (1 - w * z * u / x)
           / ((1 - y) * (1 - w) * (1 - u) * (1 - y * z * z * w * u / x ** 2)))
    s = F0
    for k in range(n + 1):
        s += ((1 - Y * q ** (2 * k)) / (1 - Y) * P([y, w, u, y * z * z * w * u / x ** 2], q, k)
              / P(qd, q, k) * qp(d, p, k) / qp(a / c, p, k) * (a * q / (c * d)) ** k)
    return lhs, rhs - chi1(x, y, z, w, u) * s


register(IdentityEntry(
    "eq-b-infinity-finite", "finite", "b -> infinity, e = 0 finite form behind the a/cd series",
    symbols=("a", "c", "d") + tuple(_XYZWU.split()), half_bases=_PQ, sides=_binf,
    constraints=_NZ_ACXZ + (nonzero("d"),),
))


# --- the second transformation ---------------------------------------------

def tau(a, b, c, q, n):
    """tau(n) with its half-integer powers combined into q^(-n(n-1)/2)."""
    return (-a) ** n * q ** (-(n * (n - 1)) // 2) / ((q - a * b) * (q - a * c)) ** n


def _zzzz(pt, n):
    a, b, c, d = values(pt, "a b c d")
    q = pt["q"]
    q2, q3 = q * q, q ** 3
    C0 = (1 - a / d) * (q - a * d) * (1 - a * b * c) / (a * (1 - a * b * c * q / d) * (1 - a * b * c * d))
    lhs = F0
    for k in range(n):
        lhs += ((1 - a * b * c * q ** (3 * k + 1)) / (1 - a) * q ** k * tau(a, b, c, q, k)
                * P([d, q / d], q, k) * P([b * c * q, a * a * b * c], q2, k)
                / (P([a * b * c * q3 / d, a * b * c * d * q2], q2, k) * qp(a * q, q, k))
                * qp(a * b * c * q, q, k) * P([a * c * q, a * b * q], q2, k)
                / (qp(a * b * c * q2, q3, k) * qp(a, q, k)))
    lhs *= C0
    rhs = (tau(a, b, c, q, n) * (1 - q ** (n + 1) / a) * P([d, q / d], q, n)
           * P([b * c * q, a * a * b * c], q2, n)
           / (P([a * b * c * q / d, a * b * c * d], q2, n) * qp(a, q, n))
           * qp(a * b * c, q, n) * P([a * c * q, a * b * q], q2, n)
           / (qp(a * b * c * q2, q3, n) * qp(a, q, n)) - (1 - q / a))
    for k in range(1, n + 1):
        rhs -= ((1 - q ** (2 * k)) * (1 - a * a * b * c * q ** (2 * k - 2)) * (1 - b * q ** k)
                * (1 - c * q ** k) / ((1 - a * b * c / q) * (1 - a * c / q) * (1 - a * b / q))
                * tau(a, b, c, q, k) * P([d, q / d], q, k) * P([b * c * q, a * a * b * c], q2, k)
                / (P([a * b * c * q / d, a * b * c * d], q2, k) * qp(a, q, k))
                * qp(a * b * c / q, q, k) * P([a * c / q, a * b / q], q2, k)
                / (qp(a * b * c * q2, q3, k) * qp(a, q, k)))
    return lhs, rhs


register(IdentityEntry(
    "t3.4-zzzz", "finite", "second-transformation instance with C_0 and tau",
    symbols=("a", "b", "c", "d"), half_bases=("q",), sides=_zzzz,
    constraints=(nonzero("a"), nonzero("d")),
))


def zzzz_bc0(a, d, q, n):
    """The b = c = 0 case, written out."""
    lhs = F0
    for k in range(n):
        lhs += P([d, q / d], q, k) / P([a, a * q], q, k) * (-a) ** k * q ** (-(k * (k + 1)) // 2)
    lhs *= (1 - a / d) * (q - a * d) / (a * (1 - a))
    rhs = (P([d, q / d], q, n) / qp(a, q, n) ** 2 * (-a) ** n * q ** (-(n * (n - 1)) // 2 - 2 * n)
           * (1 - q ** (n + 1) / a) - (1 - q / a))
    for k in range(1, n + 1):
        rhs -= (P([d, q / d], q, k) / qp(a, q, k) ** 2 * (1 - q ** (2 * k)) * (-a) ** k
                * q ** (-(k * (k + 3)) // 2))
    return lhs, rhs


register(IdentityEntry(
    "eq-xinrong-333", "finite", "b = c = 0 case of the tau identity",
    symbols=("a", "d"), half_bases=("q",), sides=lambda pt, n: zzzz_bc0(pt["a"], pt["d"], pt["q"], n),
    constraints=(nonzero("a"), nonzero("d")),
))


def T444(q, k):
    return (-1) ** k * q ** (-k * (k - 1)) * (qp(q, q * q, k) / qp(q * q, q * q, k)) ** 2


def _x444(pt, n):
    q = pt["q"]
    lhs = F0
    for k in range(n):
        lhs += T444(q, k) * (1 - q) / (1 - q ** (2 * k + 2))
    rhs = T444(q, n) * (q ** (-2 * n) - 1) / (1 - q)
    for k in range(1, n + 1):
        rhs -= T444(q, k) * (q ** (-2 * k) - q ** (2 * k)) / (1 - q)
    return lhs, rhs


register(IdentityEntry(
    "eq-xinrong-444", "finite", "one-parameter identity with T(k)",
    symbols=(), half_bases=("q",), sides=_x444,
))


def binomial_sides(n: int):
    lhs = sum((Fraction((-16) ** (n - k) * comb(2 * k, k) ** 2, k + 1) for k in range(n)), F0)
    rhs = 4 * n * comb(2 * n, n) ** 2 - 8 * sum(
        (-16) ** (n - k) * comb(2 * k, k) ** 2 * k for k in range(1, n + 1))
    return lhs, Fraction(rhs)


def binomial_identity_residual(n: int) -> Fraction:
    """Exact residual of the central-binomial identity; n >= 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs, rhs = binomial_sides(n)
    return lhs - rhs


register(IdentityEntry(
    "binom888", "finite", "central binomial identity from the q -> -1 limit",
    symbols=(), half_bases=(), sides=lambda pt, n: binomial_sides(n), n_min=1,
))


def _type2(pt, n):
    a, b, c = values(pt, "a b c")
    q = pt["q"]
    q3, q4 = q ** 3, q ** 4
    g = a * b / (1 - a * b * b)
    lhs = F0
    for k in range(n + 1):
        lhs += ((1 - a * b * q ** (2 * k)) * (1 - a * q ** (4 * k)) / ((1 - a * b) * (1 - a * q ** k))
                * (g * q) ** k * q ** (-(k * (k - 1)) // 2)
                * qp(b, q, k) * qp(q / b, q, 2 * k) / (qp(a * q3, q4, k) * qp(a * q * q, q, k))
                * qp(1 / (a * b), q, k) * P([c, a * a * b / c], q3, k)
                / (P([a * q / c, c * q / (a * b)], q, k) * qp(q3, q3, k)))
    rhs = (P([q * a, q / (a * b)], q, n) * P([q3 * c, q3 * a * a * b / c], q3, n)
           / (P([q3, q3 * a * a * b], q3, n) * P([q * a / c, q * c / (a * b)], q, n))
           * qp(b, q, n + 1) * qp(q / b, q, 2 * n + 2) * qp(q3 * a * a * b, q3, n + 1)
           / (qp(a * q3, q4, n + 1) * P([a * q, a * q * q], q, n + 1))
           * g ** (n + 1) * q ** (-(n * (n + 1)) // 2))
    for k in range(n + 1):
        rhs -= ((1 - a * q ** (3 * k + 3) / b) * (1 - a * b * q ** (2 * k + 1))
                * (1 - a * b * q ** (2 * k + 2)) * (1 - q ** k / (a * b))
                / ((1 - a * q * q) * (1 - a * q3) * (1 - a * q ** (k + 1)))
                * g ** (k + 1) * q ** (-(k * (k + 1)) // 2)
                * qp(b, q, k) * qp(q / b, q, 2 * k) / (qp(a * q ** 7, q4, k) * qp(q3, q3, k))
                * qp(q / (a * b), q, k) * P([c * q3, a * a * b * q3 / c], q3, k)
                / P([a * q3, a * q / c, c * q / (a * b)], q, k))
    return lhs, rhs


register(IdentityEntry(
    "eq-type-II-concrete", "finite", "cubic-base instance of the second transformation",
    symbols=("a", "b", "c"), half_bases=("q",), sides=_type2,
    constraints=(nonzero("a"), nonzero("b"), nonzero("c")),
))


# --- the third transformation ----------------------------------------------

def _third(pt, n):
    a, b, c, d, e = values(pt, _ABCDE)
    x, y, z, w, u = values(pt, _XYZWU)
    p, q = pt["p"], pt["q"]
    qn = [y * q, w * q, u * q, y * z * z * w * u * q / x ** 2]
    qd1 = [q * u * w * z / x, q * u * y * z / x, q * w * y * z / x, q * x / z]
    pn, pd0, _ = _plists(a, b, c, d, e, p)
    pd1 = [c * d * e * p / a, b * c * e * p / a, b * c * d * p / a, a * p / c]
    pd0 = [c * d * e / a, b * c * e / a, b * c * d / a, a / c]
    E, Y = b * c * d * e / a, q * q * u * w * y * z / x
    m = q ** (-1 - n)
    s = F0
    for k in range(n + 1):
        s += ((1 - E * p ** (2 * k)) / (1 - E) * p ** k * P(pn, p, k) / P(pd1, p, k)
              * P([x * m / (u * w * z), x * m / (u * y * z), x * m / (w * y * z), z * m / x], q, k)
              / P([m / y, m / w, m / u, m * x * x / (u * w * y * z * z)], q, k))
    lhs = P(qn, q, n + 1) / P(qd1, q, n + 1) * (
        1 + a / c * dfun([b * c / a, c * d / a, c * e / a, E]) / dfun(pd0) * s)
    r = p ** (-n)
    s = F0
    for k in range(n + 1):
        s += ((1 - q ** (2 * k) * Y) / (1 - Y) * q ** k * P(qn, q, k)
              / P([q * q * u * w * z / x, q * q * u * y * z / x, q * q * w * y * z / x, q * q * x / z], q, k)
              * P([a * r / (c * d * e), a * r / (b * c * e), a * r / (b * c * d), c * r / a], p, k)
              / P([r / b, r / d, r / e, a * a * r / (b * c * c * d * e)], p, k))
    rhs = P(pn, p, n + 1) / P(pd0, p, n + 1) * (
        1 + x * q / z * dfun([y * z / x, z * u / x, z * w / x, Y]) / dfun(qd1) * s)
    return lhs, rhs


register(IdentityEntry(
    "t3.5-thirdadded", "finite", "bibasic instance of the third transformation",
    symbols=tuple((_ABCDE + " " + _XYZWU).split()), half_bases=_PQ, sides=_third,
    constraints=_NZ_ACXZ,
    note="the D(bc/a, cd/, ce/a, bcde/a) factor is read as D(bc/a, cd/a, ce/a, bcde/a)",
))


def bibasic_sides(a, b, c, d, e, p, n):
    pn = [b, d, e, b * c * c * d * e / a ** 2]
    E = b * c * d * e / a
    lhs = F0
    for k in range(n + 1):
        lhs += ((1 - E * p ** (2 * k)) / (1 - E) * P(pn, p, k)
                / P([a * p / c, c * d * e * p / a, b * c * e * p / a, b * c * d * p / a], p, k) * p ** k)
    rhs = ((1 - c / a) * (1 - c * d * e / a) * (1 - b * c * e / a) * (1 - b * c * d / a)
           / ((1 - b * c / a) * (1 - c * d / a) * (1 - c * e / a) * (1 - E))
           * (1 - P(pn, p, n + 1) / P([a / c, c * d * e / a, b * c * e / a, b * c * d / a], p, n + 1)))
    return lhs, rhs


register(IdentityEntry(
    "eq-bibasic", "finite", "bibasic summation (x = zw case of the third-transformation instance)",
    symbols=tuple(_ABCDE.split()), half_bases=("p",),
    sides=lambda pt, n: bibasic_sides(*values(pt, _ABCDE), pt["p"], n),
    constraints=(nonzero("a"), nonzero("c")),
))


def _succeed(pt, n):
    """Both 10phi9 series in standard notation with bde = m^2 and ywuq = l^2."""
    b, d, m, y, w, l = values(pt, "b d m y w l")
    q = pt["q"]
    e = m * m / (b * d)
    u = l * l / (y * w * q)
    A = b * d * e
    N = q ** (-n)
    lhs = phi_exact(
        [A, q * m, -q * m, b, d, e, q ** (-2 - n) / (u * w), q ** (-2 - n) / (u * y),
         q ** (-2 - n) / (w * y), N],
        [m, -m, d * e * q, b * e * q, b * d * q, q ** (-1 - n) / y, q ** (-1 - n) / w,
         q ** (-1 - n) / u, q ** (-3 - n) / (u * w * y)],
        q, q, n)
    pre = (P([b * q, d * q, e * q, A * q, u * w * q ** 3, u * y * q ** 3, w * y * q ** 3], q, n)
           / P([d * e * q, b * e * q, b * d * q, y * q * q, w * q * q, u * q * q, y * w * u * q ** 4], q, n))
    rhs = pre * phi_exact(
        [y * w * u * q ** 3, q * q * l, -q * q * l, y * q, w * q, u * q, N / (d * e), N / (b * e),
         N / (b * d), N],
        [q * l, -q * l, q ** 3 * u * w, q ** 3 * u * y, q ** 3 * w * y, N / b, N / d, N / e, N / A],
        q, q, n)
    return lhs, rhs


register(IdentityEntry(
    "eq-succeed-10phi9", "finite", "terminating 10phi9 transformation",
    symbols=("b", "d", "m", "y", "w", "l"), half_bases=("q",), sides=_succeed,
    note="parameterized by roots: e = m^2/(bd), u = l^2/(ywq)",
))


def succeed_raw(b, d, e, y, w, u, q, n):
    """The same transformation as raw sums, free of square roots."""
    A, Bq = b * d * e, y * w * u * q ** 3
    lhs = F0
    for k in range(n + 1):
        lhs += ((1 - A * q ** (2 * k)) / (1 - A) * q ** k * P([b, d, e, A], q, k)
                / P([d * e * q, b * e * q, b * d * q, q], q, k)
                * P([q ** (-2 - n) / (u * w), q ** (-2 - n) / (u * y), q ** (-2 - n) / (w * y), q ** (-n)], q, k)
                / P([q ** (-1 - n) / y, q ** (-1 - n) / w, q ** (-1 - n) / u, q ** (-3 - n) / (u * w * y)], q, k))
    pre = (P([b * q, d * q, e * q, A * q, u * w * q ** 3, u * y * q ** 3, w * y * q ** 3], q, n)
           / P([d * e * q, b * e * q, b * d * q, y * q * q, w * q * q, u * q * q, y * w * u * q ** 4], q, n))
    s = F0
    for k in range(n + 1):
        s += ((1 - Bq * q ** (2 * k)) / (1 - Bq) * q ** k * P([y * q, w * q, u * q, Bq], q, k)
              / P([q ** 3 * u * w, q ** 3 * u * y, q ** 3 * w * y, q], q, k)
              * P([q ** (-n) / (d * e), q ** (-n) / (b * e), q ** (-n) / (b * d), q ** (-n)], q, k)
              / P([q ** (-n) / b, q ** (-n) / d, q ** (-n) / e, q ** (-n) / A], q, k))
    return lhs, pre * s


register(IdentityEntry(
    "eq-succeed-raw", "finite", "the 10phi9 transformation as raw very-well-poised sums",
    symbols=("b", "d", "e", "y", "w", "u"), half_bases=("q",),
    sides=lambda pt, n: succeed_raw(*values(pt, "b d e y w u"), pt["q"], n),
))
