"""Corollaries of the general multibasic transformation at fixed exponents.

Every entry samples one half-base t with q = t^4 so that the quarter-integer
exponents used here become integer powers of t.
"""

from __future__ import annotations

from fractions import Fraction

from ..qkernel import dfun as D, qpoch
from ..transforms import _power
from .base import IdentityEntry, register, values
from .dsl import nonzero

F0 = Fraction(0)
H = Fraction(1, 2)
DEN = 2


def base_of(pt):
    t = pt.sigma("t")
    return lambda e: _power(t, DEN, e)


def prodq(pairs, k):
    out = Fraction(1)
    for a, b in pairs:
        out *= qpoch(a, b, k)
    return out


def c42_sides(r, s, Q, a, b, c, d, e, x, y, z, w, u, n):
    q, R2, S2 = Q(1), Q(2 * r), Q(2 * s)
    pn = lambda m: prodq([(b * q, R2), (d * q, R2), (e * q, R2), (b * c * c * d * e * q / a ** 2, R2)], m)
    pd = lambda m: prodq([(c * d * e * q / a, R2), (b * c * e * q / a, R2), (b * c * d * q / a, R2), (a * q / c, R2)], m)
    qn = lambda m: prodq([(y * q, S2), (w * q, S2), (u * q, S2), (y * z * z * w * u * q / x ** 2, S2)], m)
    qd = lambda m: prodq([(z * w * u * q / x, S2), (y * z * u * q / x, S2), (y * z * w * q / x, S2), (x * q / z, S2)], m)
    E, Y = b * c * d * e / a, y * z * w * u / x
    lhs = F0
    for k in range(n):
        lhs += ((1 - E * Q(4 * r * k + 2 - 4 * r)) / (1 - E * Q(2 - 4 * r))
                * pn(k - 1) / pd(k) * qn(k) / qd(k) * Q(2 * r * k + 1 - 2 * r))
    lhs *= a / c * D([c * e / a, b * c / a, c * d / a, E * Q(2 - 4 * r)])
    h = Q(2 * r - 1)
    rhs = (pn(n - 1) / pd(n - 1) * qn(n) / qd(n)
           - (h - c * d * e / a) * (h - b * c * e / a) * (h - b * c * d / a) * (h - a / c)
           / ((h - b) * (h - d) * (h - e) * (h - b * c * c * d * e / a ** 2)))
    acc = F0
    for k in range(n):
        acc += ((1 - Y * Q(4 * s * k + 2)) / (1 - Y * q * q) * qn(k) / qd(k + 1) * pn(k) / pd(k)
                * Q(2 * s * k + 1))
    return lhs, rhs - x / z * D([y * z / x, z * u / x, z * w / x, Y * q * q]) * acc


C42 = (H, Fraction(3, 2))
register(IdentityEntry(
    "c4.2-(1,1)-type", "finite", "(1,1)-type transformation with degree 2m",
    symbols=tuple("abcdexyzwu"), half_bases=("t",),
    sides=lambda pt, n: c42_sides(*C42, base_of(pt), *values(pt, "a b c d e x y z w u"), n),
    constraints=(nonzero("a"), nonzero("c"), nonzero("x"), nonzero("z")),
    note="r = 1/2, s = 3/2, q = t^4",
))


def _boundary(Q, r1, r2, b, d, e, t1):
    q = Q(1)
    return ((Q(2 * r2) - d * e * t1 * q) * (Q(2 * r2) - b * e * t1 * q) * (Q(2 * r1) - b * d * t1 * q)
            * (Q(2 * r1) - q / t1)
            / ((Q(2 * r1) - b * q) * (Q(2 * r1) - d * q) * (Q(2 * r2) - e * q) * (Q(2 * r2) - b * d * e * t1 * t1 * q)))


def _left22(Q, r1, r2, b, d, e, t1):
    q = Q(1)
    pn = lambda m: prodq([(b * q, Q(2 * r1)), (d * q, Q(2 * r1)), (e * q, Q(2 * r2)), (b * d * e * t1 * t1 * q, Q(2 * r2))], m)
    pd = lambda m: prodq([(d * e * t1 * q, Q(2 * r2)), (b * e * t1 * q, Q(2 * r2)), (b * d * t1 * q, Q(2 * r1)), (q / t1, Q(2 * r1))], m)
    return pn, pd


def c43_sides(r1, r2, s1, s2, Q, b, d, e, t1, y, w, u, t2, n):
    q = Q(1)
    C0 = (1 - b * t1) * (1 - d * t1) / t1
    D0 = (1 - y * t2) * (1 - w * t2) / t2
    pn, pd = _left22(Q, r1, r2, b, d, e, t1)
    qn = lambda m: prodq([(y * q, Q(2 * s1)), (w * q, Q(2 * s1)), (u * q, Q(2 * s2)), (y * w * u * t2 * t2 * q, Q(2 * s2))], m)
    qd = lambda m: prodq([(w * u * t2 * q, Q(2 * s2)), (y * u * t2 * q, Q(2 * s2)), (y * w * t2 * q, Q(2 * s1)), (q / t2, Q(2 * s1))], m)
    lhs = F0
    for k in range(n):
        lhs += ((1 - e * t1 * Q(2 * (r2 - r1) * (k - 1))) * (1 - b * d * e * t1 * Q(2 * (r1 + r2) * (k - 1) + 2))
                * Q(2 * r1 * (k - 1) + 1) * pn(k - 1) / pd(k) * qn(k) / qd(k))
    rhs = pn(n - 1) / pd(n - 1) * qn(n) / qd(n) - _boundary(Q, r1, r2, b, d, e, t1)
    acc = F0
    for k in range(n):
        acc += ((1 - u * t2 * Q(2 * (s2 - s1) * k)) * (1 - y * w * u * t2 * Q(2 * (s1 + s2) * k + 2))
                * Q(2 * s1 * k + 1) * qn(k) / qd(k + 1) * pn(k) / pd(k))
    return C0 * lhs, rhs - D0 * acc


def c44_sides(r1, r2, s1, s2, Q, b, d, e, t1, y, w, u, t2, n):
    q = Q(1)
    C0 = (1 - b * t1) * (1 - d * t1) / t1
    pn, pd = _left22(Q, r1, r2, b, d, e, t1)
    qn = lambda m: prodq([(y * q, Q(2 * s1)), (w * q, Q(2 * s2)), (u * q, Q(2 * s2)), (y * w * u * t2 * t2 * q, Q(2 * s2))], m)
    qd = lambda m: prodq([(w * u * t2 * q, Q(3 * s2 - s1)), (y * u * t2 * q, Q(s1 + s2)), (y * w * t2 * q, Q(s1 + s2)), (q / t2, Q(s1 + s2))], m)
    lhs = F0
    for k in range(n):
        lhs += (D([e * t1 * Q(2 * (r2 - r1) * (k - 1)), b * d * e * t1 * Q(2 * (r1 + r2) * (k - 1) + 2)])
                * Q(2 * r1 * (k - 1) + 1) * pn(k - 1) / pd(k) * qn(k) / qd(k))
    rhs = pn(n - 1) / pd(n - 1) * qn(n) / qd(n) - _boundary(Q, r1, r2, b, d, e, t1)
    acc = F0
    for k in range(n):
        acc += (D([y * t2 * Q((s1 - s2) * k), u * t2 * Q((s2 - s1) * k), w * t2 * Q((s2 - s1) * k),
                   y * w * u * t2 * Q((s1 + 3 * s2) * k + 2)])
                * Q((s1 + s2) * k + 1) * qn(k) / qd(k + 1) * pn(k) / pd(k))
    return C0 * lhs, rhs - acc / t2


def c45_sides(r1, r2, s1, s2, s3, Q, b, d, e, t1, y, w, u, t2, n):
    q = Q(1)
    C0 = (1 - b * t1) * (1 - d * t1) / t1
    pn, pd = _left22(Q, r1, r2, b, d, e, t1)
    qn = lambda m: prodq([(y * q, Q(2 * s1)), (w * q, Q(2 * s2)), (u * q, Q(2 * s2)), (y * w * u * t2 * t2 * q, Q(2 * s3))], m)
    qd = lambda m: prodq([(w * u * t2 * q, Q(2 * s2 + s3 - s1)), (y * u * t2 * q, Q(s1 + s3)), (y * w * t2 * q, Q(s1 + s3)), (q / t2, Q(s1 + 2 * s2 - s3))], m)
    lhs = F0
    for k in range(n):
        lhs += (D([e * t1 * Q(2 * (r2 - r1) * (k - 1)), b * d * e * t1 * Q(2 * (r1 + r2) * (k - 1) + 2)])
                * Q(2 * r1 * (k - 1) + 1) * pn(k - 1) / pd(k) * qn(k) / qd(k))
    rhs = pn(n - 1) / pd(n - 1) * qn(n) / qd(n) - _boundary(Q, r1, r2, b, d, e, t1)
    acc = F0
    for k in range(n):
        acc += (D([y * t2 * Q((s1 + s3 - 2 * s2) * k), u * t2 * Q((s3 - s1) * k), w * t2 * Q((s3 - s1) * k),
                   y * w * u * t2 * Q((s1 + 2 * s2 + s3) * k + 2)])
                * Q((s1 + 2 * s2 - s3) * k + 1) * qn(k) / qd(k + 1) * pn(k) / pd(k))
    return C0 * lhs, rhs - acc / t2


def c46_sides(r1, r2, r3, s1, s2, s3, Q, b, d, e, t1, y, w, u, t2, n):
    q = Q(1)
    rr, ss = 2 * r1 + r2 + r3, 2 * s1 + s2 + s3
    pn = lambda m: prodq([(b * q, Q(2 * r1)), (d * q, Q(2 * r1)), (e * q, Q(2 * r2)), (b * d * e * t1 * t1 * q, Q(2 * r3))], m)
    pd = lambda m: prodq([(d * e * q * t1, Q(rr - 2 * r1)), (b * e * q * t1, Q(rr - 2 * r1)), (b * d * q * t1, Q(rr - 2 * r2)), (q / t1, Q(rr - 2 * r3))], m)
    qn = lambda m: prodq([(y * q, Q(2 * s1)), (w * q, Q(2 * s1)), (u * q, Q(2 * s2)), (y * t2 * t2 * w * u * q, Q(2 * s3))], m)
    qd = lambda m: prodq([(w * u * q * t2, Q(ss - 2 * s1)), (y * u * q * t2, Q(ss - 2 * s1)), (y * w * q * t2, Q(ss - 2 * s2)), (q / t2, Q(ss - 2 * s3))], m)
    lhs = F0
    for k in range(n):
        lhs += (D([e * t1 * Q((r2 + r3 - 2 * r1) * (k - 1)), b * t1 * Q((r3 - r2) * (k - 1)),
                   d * t1 * Q((r3 - r2) * (k - 1)), b * d * e * t1 * Q(rr * (k - 1) + 2)])
                * Q((rr - 2 * r3) * (k - 1) + 1) * pn(k - 1) / pd(k) * qn(k) / qd(k))
    am = ((Q(rr - 2 * r1) - d * e * q * t1) * (Q(rr - 2 * r1) - b * e * q * t1)
          * (Q(rr - 2 * r2) - b * d * q * t1) * (Q(rr - 2 * r3) - q / t1)
          / ((Q(2 * r1) - b * q) * (Q(2 * r1) - d * q) * (Q(2 * r2) - e * q) * (Q(2 * r3) - b * t1 * t1 * d * e * q)))
    rhs = pn(n - 1) / pd(n - 1) * qn(n) / qd(n) - am
    acc = F0
    for k in range(n):
        acc += (D([y * t2 * Q((s3 - s2) * k), u * t2 * Q((s2 + s3 - 2 * s1) * k), w * t2 * Q((s3 - s2) * k),
                   y * w * u * t2 * Q(ss * k + 2)])
                * Q((ss - 2 * s3) * k + 1) * qn(k) / qd(k + 1) * pn(k) / pd(k))
    return lhs / t1, rhs - acc / t2


_T = "b d e t1 y w u t2"
_TS = tuple(_T.split())
_NZ_T = (nonzero("t1"), nonzero("t2"))

C43 = (H, Fraction(1), H, Fraction(1))
C44 = (H, Fraction(2), H, Fraction(3, 2))
C45 = (H, Fraction(3, 2), H, Fraction(1), Fraction(3, 2))
C46 = (Fraction(1), Fraction(3, 2), Fraction(5, 2)) * 2

for _id, _anchor, _fn, _exps, _note in (
    ("c4.3-(2,2)-type", "(2,2)-type transformation with degree 2m", c43_sides, C43,
     "(r1,r2,s1,s2) = (1/2,1,1/2,1); the boundary numerator carries the factor q in each term"),
    ("c4.4-(2,2)-type-b", "second (2,2)-type transformation", c44_sides, C44,
     "(r1,r2,s1,s2) = (1/2,2,1/2,3/2)"),
    ("c4.5-(2,3)-type", "(2,3)-type transformation with degree 2m", c45_sides, C45,
     "r = (1/2,3/2), s = (1/2,1,3/2)"),
    ("c4.6-(3,3)-type", "(3,3)-type transformation with degree 2m", c46_sides, C46,
     "r = s = (1,3/2,5/2); the left sum carries the q-side quotient and the (q/t2) factor has length k+1"),
):
    register(IdentityEntry(
        _id, "finite", _anchor, symbols=_TS, half_bases=("t",),
        sides=(lambda fn, ex: lambda pt, n: fn(*ex, base_of(pt), *values(pt, _T), n))(_fn, _exps),
        constraints=_NZ_T, note=_note + "; q = t^4",
    ))
