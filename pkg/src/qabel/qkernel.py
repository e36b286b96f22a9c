"""q-shifted factorials, the D product, the Gamma_k factor and the K/L constants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .exact_arith import PoleSignal, as_rational, pow_int


def qpoch(a, q, n: int) -> Fraction:
    """(a;q)_n for any integer n; negative n uses the reflection rule."""
    a, q = Fraction(a), Fraction(q)
    out = Fraction(1)
    if n >= 0:
        t = a
        for _ in range(n):
            out *= 1 - t
            t *= q
        return out
    qinv = 1 / q if q != 0 else None
    if qinv is None:
        raise PoleSignal("pole: base 0 with negative length")
    t = a * qinv
    for _ in range(-n):
        f = 1 - t
        if f == 0:
            raise PoleSignal("pole in negative-length q-shifted factorial")
        out /= f
        t *= qinv
    return out


def qpoch_recip(a, q, n: int) -> Fraction:
    """1/(a;q)_n; for negative n this is a plain product and never a pole."""
    if n >= 0:
        v = qpoch(a, q, n)
        if v == 0:
            raise PoleSignal("zero q-shifted factorial in a denominator")
        return 1 / v
    a, q = Fraction(a), Fraction(q)
    if q == 0:
        raise PoleSignal("pole: base 0 with negative length")
    out, t = Fraction(1), a / q
    for _ in range(-n):
        out *= 1 - t
        t /= q
    return out


def qprod(args: Iterable, q, n: int) -> Fraction:
    """(a_1,...,a_m;q)_n."""
    out = Fraction(1)
    for a in args:
        out *= qpoch(a, q, n)
    return out


@dataclass(frozen=True)
class PochFactor:
    argument: Fraction
    base: Fraction
    length: int


def qpoch_multi(factors: Iterable[PochFactor]) -> Fraction:
    out = Fraction(1)
    for f in factors:
        out *= qpoch(f.argument, f.base, f.length)
    return out


def dfun(args: Iterable) -> Fraction:
    """D(x_1,...,x_m) = prod (1 - x_i)."""
    out = Fraction(1)
    for x in args:
        out *= 1 - x
    return out


@dataclass(frozen=True)
class QuadrupleSpec:
    """Four parameters x_i with bases q_i = sigma_i**2."""

    x: tuple
    sigma: tuple

    def __post_init__(self):
        x = tuple(as_rational(v) for v in self.x)
        s = tuple(as_rational(v) for v in self.sigma)
        if len(x) != 4 or len(s) != 4:
            raise ValueError("a quadruple needs four parameters and four half-bases")
        if any(v == 0 for v in x + s):
            raise ValueError("quadruple entries must be nonzero")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "sigma", s)

    @property
    def bases(self) -> tuple:
        return tuple(s * s for s in self.sigma)

    def swapped(self, i: int, j: int) -> "QuadrupleSpec":
        x, s = list(self.x), list(self.sigma)
        x[i], x[j] = x[j], x[i]
        s[i], s[j] = s[j], s[i]
        return QuadrupleSpec(tuple(x), tuple(s))


def gamma_k(spec: QuadrupleSpec, k: int) -> Fraction:
    x, s = spec.x, spec.sigma

    def pair(i, j):
        return x[i] * x[j] * pow_int(s[i] * s[j], k)

    return (
        (pair(0, 1) - pair(2, 3))
        * (pair(0, 2) - pair(1, 3))
        * (pair(0, 3) - pair(1, 2))
    )


def kl_constants(spec: QuadrupleSpec) -> tuple[Fraction, Fraction]:
    """K = x_1x_2x_3x_4 and L = sigma_1...sigma_4 (positive square-root branch)."""
    K = spec.x[0] * spec.x[1] * spec.x[2] * spec.x[3]
    L = spec.sigma[0] * spec.sigma[1] * spec.sigma[2] * spec.sigma[3]
    return K, L


def four_term_residual(b, c, x, z) -> Fraction:
    """D(cx,x/c,bz,z/b) - D(bx,x/b,cz,z/c) - (z/c) D(bc,c/b,xz,x/z)."""
    b, c, x, z = map(Fraction, (b, c, x, z))
    return (
        dfun([c * x, x / c, b * z, z / b])
        - dfun([b * x, x / b, c * z, z / c])
        - z / c * dfun([b * c, c / b, x * z, x / z])
    )


def four_term_variant_residual(b, c, x, z) -> Fraction:
    """Same identity with the bc-term moved to the left."""
    b, c, x, z = map(Fraction, (b, c, x, z))
    lhs = dfun([c * x, x / c, b * z, z / b]) - z / c * dfun([b * c, c / b, x * z, x / z])
    return lhs - dfun([b * x, x / b, c * z, z / c])


def theta_terms(q, eps: float = 1e-12) -> int:
    """Default truncation so the neglected factors are below eps."""
    return math.ceil(math.log(eps) / math.log(abs(float(q)))) + 8


def theta_trunc(x, q, terms: int, prec_bits: int = 128):
    """Truncated theta(x;q) = (x;q)_inf (q/x;q)_inf in binary floating point."""
    if terms < 1:
        raise ValueError("terms must be at least 1")
    with mpmath.workprec(prec_bits):
        x, q = mpmath.mpmathify(x), mpmath.mpmathify(q)
        if abs(q) >= 1:
            raise ValueError("theta_trunc needs |q| < 1")
        if x == 0:
            raise ValueError("theta_trunc needs x != 0")
        out = mpmath.mpf(1)
        qk = mpmath.mpf(1)
        for _ in range(terms):
            out *= (1 - x * qk) * (1 - q / x * qk)
            qk *= q
        return +out


def weierstrass_residual(b, c, x, z, q, terms: int = 64, prec_bits: int = 128):
    """Theta-function analogue of the four-term identity, by truncated products."""
    with mpmath.workprec(prec_bits):
        b, c, x, z = (mpmath.mpmathify(v) for v in (b, c, x, z))

        def th(*args):
            out = mpmath.mpf(1)
            for a in args:
                out *= theta_trunc(a, q, terms, prec_bits)
            return out

        return +(
            th(c * x, x / c, b * z, z / b)
            - th(b * x, x / b, c * z, z / c)
            - z / c * th(b * c, c / b, x * z, x / z)
        )
