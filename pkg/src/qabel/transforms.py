"""Exact residuals of the four master transformations.

Each identity has a ``*_sides`` function returning (lhs, rhs) and a
``*_residual`` wrapper. The two sides are assembled by separate loops that
share only the qkernel primitives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .exact_arith import ParamPoint, PoleSignal, as_rational, div, pow_int
from .qkernel import QuadrupleSpec, dfun, gamma_k, kl_constants, qpoch, qpoch_recip


class GammaZero(PoleSignal):
    """Some Gamma_j vanished in a denominator of the second transformation."""


def _four(v, what):
    t = tuple(as_rational(x) for x in v)
    if len(t) != 4:
        raise ValueError(f"{what} needs four entries")
    if any(x == 0 for x in t):
        raise ValueError(f"{what} entries must be nonzero")
    return t


@dataclass(frozen=True)
class MasterParams:
    """a_i and x_i given directly (squared internally); bases as half-bases."""

    a: tuple
    sigma_p: tuple
    x: tuple
    sigma_q: tuple

    def __post_init__(self):
        for name in ("a", "sigma_p", "x", "sigma_q"):
            object.__setattr__(self, name, _four(getattr(self, name), name))

    @classmethod
    def from_point(cls, pt: ParamPoint) -> "MasterParams":
        return cls(
            tuple(pt.values[f"a{i}"] for i in range(1, 5)),
            tuple(pt.sigma(f"p{i}") for i in range(1, 5)),
            tuple(pt.values[f"x{i}"] for i in range(1, 5)),
            tuple(pt.sigma(f"q{i}") for i in range(1, 5)),
        )

    def to_point(self) -> ParamPoint:
        vals = {f"a{i+1}": v for i, v in enumerate(self.a)}
        vals.update({f"x{i+1}": v for i, v in enumerate(self.x)})
        halves = {f"p{i+1}": v for i, v in enumerate(self.sigma_p)}
        halves.update({f"q{i+1}": v for i, v in enumerate(self.sigma_q)})
        return ParamPoint(vals, halves)


MASTER_SYMBOLS = tuple(f"a{i}" for i in range(1, 5)) + tuple(f"x{i}" for i in range(1, 5))
MASTER_HALF_BASES = tuple(f"p{i}" for i in range(1, 5)) + tuple(f"q{i}" for i in range(1, 5))


class Side:
    """One half of the master data: parameters v_i, bases b_i and the K/L pair."""

    def __init__(self, v, sigma):
        self.spec = QuadrupleSpec(v, sigma)
        self.K, self.L = kl_constants(self.spec)
        self.sq = tuple(x * x for x in v)
        self.base = self.spec.bases
        self.dual = tuple(self.K / s for s in self.sq)
        self.dual_base = tuple(self.L / b for b in self.base)
        self.num = lru_cache(maxsize=None)(self._num)
        self.den = lru_cache(maxsize=None)(self._den)
        self.den_recip = lru_cache(maxsize=None)(self._den_recip)
        self.gamma = lru_cache(maxsize=None)(lambda k: gamma_k(self.spec, k))

    def _num(self, k):
        out = Fraction(1)
        for s, b in zip(self.sq, self.base):
            out *= qpoch(s, b, k)
        return out

    def _den(self, k):
        out = Fraction(1)
        for s, b in zip(self.dual, self.dual_base):
            out *= qpoch(s, b, k)
        return out

    def _den_recip(self, k):
        out = Fraction(1)
        for s, b in zip(self.dual, self.dual_base):
            out *= qpoch_recip(s, b, k)
        return out

    def ratio(self, k_num, k_den):
        """prod (v_i^2;b_i)_{k_num} / (K/v_i^2;L/b_i)_{k_den}."""
        return self.num(k_num) * self.den_recip(k_den)

    def KL(self, k):
        return self.K * pow_int(self.L, k)

    def boundary(self):
        """prod (L/b_i - K/v_i^2)/(b_i - v_i^2), the value of the A-sequence at -1."""
        out = Fraction(1)
        for s, b, ds, db in zip(self.sq, self.base, self.dual, self.dual_base):
            out *= div(db - ds, b - s)
        return out


def _sides(params: MasterParams):
    return Side(params.a, params.sigma_p), Side(params.x, params.sigma_q)


# --- sequences of the first transformation ---------------------------------

def seq_A(params: MasterParams):
    A, _ = _sides(params)
    return lambda k: A.ratio(k, k)


def seq_B(params: MasterParams):
    _, B = _sides(params)
    return lambda k: B.ratio(k, k)


def diffak_closed(params: MasterParams, k: int) -> Fraction:
    A, _ = _sides(params)
    KL = A.KL(k - 1)
    return A.gamma(k - 1) * div(KL - 1, KL) * A.ratio(k - 1, k)


def diffbk_closed(params: MasterParams, k: int) -> Fraction:
    _, B = _sides(params)
    KL = B.KL(k)
    return B.gamma(k) * div(1 - KL, KL) * B.ratio(k, k + 1)


def _gamma_prod(B: Side, m: int) -> Fraction:
    out = Fraction(1)
    for j in range(m):
        g = B.gamma(j)
        if g == 0:
            raise GammaZero(f"Gamma_{j} vanishes")
        out *= B.KL(j) / g
    return out


def seq_BB(params: MasterParams):
    """B-sequence of the second transformation."""
    _, B = _sides(params)

    def term(k):
        return (-1) ** k * div(_gamma_prod(B, k) * B.num(k), qpoch(B.K, B.L, k))

    return term


def diffbbk_closed(params: MasterParams, k: int) -> Fraction:
    _, B = _sides(params)
    KL = B.KL(k)
    prod = Fraction(1)
    for s, b in zip(B.sq, B.base):
        prod *= KL - s * pow_int(b, k)
    head = (-1) ** k * div(_gamma_prod(B, k + 1), KL * KL * qpoch(B.K, B.L, k + 1))
    return head * prod * B.num(k)


# --- first transformation ----------------------------------------------------

def thm1_sides(params: MasterParams, n: int):
    A, B = _sides(params)
    lhs = Fraction(0)
    for k in range(n):
        KL = A.KL(k - 1)
        lhs += A.gamma(k - 1) * div(KL - 1, KL) * A.ratio(k - 1, k) * B.ratio(k, k)
    rhs = A.ratio(n - 1, n - 1) * B.ratio(n, n) - A.boundary()
    for k in range(n):
        KL0 = B.KL(k)
        rhs += B.gamma(k) * div(1 - KL0, KL0) * B.ratio(k, k + 1) * A.ratio(k, k)
    return lhs, rhs


def thm1_residual(params: MasterParams, n: int) -> Fraction:
    lhs, rhs = thm1_sides(params, n)
    return lhs - rhs


# --- second transformation ---------------------------------------------------

def thm2_sides(params: MasterParams, n: int):
    A, B = _sides(params)
    lhs = Fraction(0)
    for k in range(n):
        KL = A.KL(k - 1)
        t = (-1) ** k * A.gamma(k - 1) * div(KL - 1, KL) * _gamma_prod(B, k)
        lhs += div(t, qpoch(B.K, B.L, k)) * A.ratio(k - 1, k) * B.num(k)
    rhs = (-1) ** n * div(_gamma_prod(B, n), qpoch(B.K, B.L, n))
    rhs *= A.ratio(n - 1, n - 1) * B.num(n)
    rhs -= A.boundary()
    for k in range(n):
        t = (-1) ** k * div(_gamma_prod(B, k + 1), qpoch(B.K, B.L, k + 1))
        KL0 = B.KL(k)
        for s, b in zip(B.sq, B.base):
            t *= 1 - div(KL0, s * pow_int(b, k))
        rhs += t * A.ratio(k, k) * B.num(k)
    return lhs, rhs


def thm2_residual(params: MasterParams, n: int) -> Fraction:
    lhs, rhs = thm2_sides(params, n)
    return lhs - rhs


# --- third transformation ----------------------------------------------------

def thm3_sides(params: MasterParams, n: int):
    """The printed form, with its -1 + sum bracketing on both sides."""
    A, B = _sides(params)
    inner = Fraction(-1)
    for k in range(1, n + 1):
        KL = A.KL(k - 1)
        t = A.gamma(k - 1) * div(1 - KL, KL) * A.ratio(k - 1, k)
        for s, b, ds, db in zip(B.sq, B.base, B.dual, B.dual_base):
            t *= div(qpoch(pow_int(db, -n) / ds, db, k), qpoch(pow_int(b, -n) / s, b, k))
        inner += t
    lhs = B.ratio(n + 1, n + 1) * inner
    inner = Fraction(-1)
    for k in range(n + 1):
        KL0 = B.KL(k)
        t = B.gamma(k) * div(1 - KL0, KL0) * B.ratio(k, k + 1)
        for s, b, ds, db in zip(A.sq, A.base, A.dual, A.dual_base):
            t *= div(qpoch(pow_int(db, 1 - n) / ds, db, k), qpoch(pow_int(b, 1 - n) / s, b, k))
        inner += t
    rhs = A.ratio(n, n) * inner
    return lhs, rhs


def thm3_residual(params: MasterParams, n: int) -> Fraction:
    lhs, rhs = thm3_sides(params, n)
    return lhs - rhs


def thm3_derivation_sides(params: MasterParams, n: int):
    """The exchange-lemma form before the reflection step."""
    A, B = _sides(params)
    lhs = Fraction(0)
    for k in range(1, n + 1):
        lhs += diffak_closed(params, k) * B.ratio(n + 1 - k, n + 1 - k)
    for k in range(n + 1):
        lhs += diffbk_closed(params, k) * A.ratio(n - k, n - k)
    return lhs, A.ratio(n, n) - B.ratio(n + 1, n + 1)


def thm3_derivation_residual(params: MasterParams, n: int) -> Fraction:
    lhs, rhs = thm3_derivation_sides(params, n)
    return lhs - rhs


# --- general multibasic transformation ---------------------------------------

EXPONENT_SCALARS = ("a", "b", "c", "d", "e", "x", "y", "z", "w", "u")


@dataclass(frozen=True)
class ExponentParams:
    """Exponents r_i, s_i and half-bases t_p, t_q with p = t_p^(2d), q = t_q^(2d).

    d is the least common denominator of all r_i and s_i, so every power of p
    or q occurring in the identity is an integer power of t_p or t_q.
    """

    r: tuple
    s: tuple
    t_p: Fraction
    t_q: Fraction
    scalars: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        r = tuple(as_rational(v) for v in self.r)
        s = tuple(as_rational(v) for v in self.s)
        if len(r) != 4 or len(s) != 4 or any(v < 0 for v in r + s):
            raise ValueError("need four nonnegative r_i and four nonnegative s_i")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t_p", as_rational(self.t_p))
        object.__setattr__(self, "t_q", as_rational(self.t_q))
        sc = {k: as_rational(v) for k, v in self.scalars.items()}
        missing = set(EXPONENT_SCALARS) - set(sc)
        if missing:
            raise ValueError(f"missing scalars {sorted(missing)}")
        object.__setattr__(self, "scalars", MappingProxyType(sc))
        if self.t_p == 0 or self.t_q == 0:
            raise ValueError("half-bases must be nonzero")

    @property
    def d(self) -> int:
        return math.lcm(*(v.denominator for v in self.r + self.s))

    def p(self, e) -> Fraction:
        return _power(self.t_p, self.d, e)

    def q(self, e) -> Fraction:
        return _power(self.t_q, self.d, e)


def _power(t, d, e) -> Fraction:
    m = Fraction(e) * 2 * d
    if m.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/(2d)")
    return pow_int(t, int(m))


class _Corner:
    """Numerator and denominator products on one base of the general transformation."""

    def __init__(self, power, nums, num_exps, dens, den_exps):
        self.terms_num = [(a, power(e)) for a, e in zip(nums, num_exps)]
        self.terms_den = [(a, power(e)) for a, e in zip(dens, den_exps)]
        self.num = lru_cache(maxsize=None)(self._num)
        self.den = lru_cache(maxsize=None)(self._den)

    def _num(self, k):
        out = Fraction(1)
        for a, b in self.terms_num:
            out *= qpoch(a, b, k)
        return out

    def _den(self, k):
        out = Fraction(1)
        for a, b in self.terms_den:
            out *= qpoch(a, b, k)
        return out

    def ratio(self, kn, kd):
        return div(self.num(kn), self.den(kd))


def _thm41_corners(params: ExponentParams):
    v = params.scalars
    a, b, c, d, e = (v[k] for k in "abcde")
    x, y, z, w, u = (v[k] for k in "xyzwu")
    r, s = params.r, params.s
    R, S = sum(r), sum(s)
    P, Q = params.p, params.q
    p, q = P(1), Q(1)
    left = _Corner(
        P,
        [b * p, d * p, e * p, b * c * c * d * e * p / (a * a)],
        [2 * ri for ri in r],
        [c * d * e * p / a, b * c * e * p / a, b * c * d * p / a, a * p / c],
        [R - 2 * ri for ri in r],
    )
    right = _Corner(
        Q,
        [y * q, w * q, u * q, y * z * z * w * u * q / (x * x)],
        [2 * si for si in s],
        [z * w * u * q / x, y * z * u * q / x, y * z * w * q / x, x * q / z],
        [S - 2 * si for si in s],
    )
    return left, right


def thm41_boundary(params: ExponentParams):
    """(closed form of A_{-1}, A_{-1} evaluated from the sequence)."""
    left, _ = _thm41_corners(params)
    closed = Fraction(1)
    for (na, nb), (da, db) in zip(left.terms_num, left.terms_den):
        closed *= div(db - da, nb - na)
    return closed, left.ratio(-1, -1)


def thm41_sides(params: ExponentParams, n: int):
    v = params.scalars
    a, b, c, d, e = (v[k] for k in "abcde")
    x, y, z, w, u = (v[k] for k in "xyzwu")
    r1, r2, r3, r4 = params.r
    s1, s2, s3, s4 = params.s
    R, S = r1 + r2 + r3 + r4, s1 + s2 + s3 + s4
    P, Q = params.p, params.q
    left, right = _thm41_corners(params)
    lhs = Fraction(0)
    for k in range(n):
        m = k - 1
        D = dfun([
            c * e / a * P((r3 + r4 - r1 - r2) * m),
            b * c / a * P((r1 + r4 - r2 - r3) * m),
            c * d / a * P((r2 + r4 - r1 - r3) * m),
            b * c * d * e / a * P(R * m + 2),
        ])
        lhs += D * P((R - 2 * r4) * m + 1) * left.ratio(m, k) * right.ratio(k, k)
    lhs *= div(a, c)
    closed, _ = thm41_boundary(params)
    rhs = left.ratio(n - 1, n - 1) * right.ratio(n, n) - closed
    acc = Fraction(0)
    for k in range(n):
        D = dfun([
            y * z / x * Q((s1 + s4 - s2 - s3) * k),
            z * u / x * Q((s3 + s4 - s1 - s2) * k),
            z * w / x * Q((s2 + s4 - s1 - s3) * k),
            y * z * w * u / x * Q(S * k + 2),
        ])
        acc += D * Q((S - 2 * s4) * k + 1) * right.ratio(k, k + 1) * left.ratio(k, k)
    rhs -= div(x, z) * acc
    return lhs, rhs


def thm41_residual(params: ExponentParams, n: int) -> Fraction:
    lhs, rhs = thm41_sides(params, n)
    return lhs - rhs
