"""The master transformations, their proof steps and the algebraic lemmas."""

from __future__ import annotations

from fractions import Fraction

from .. import transforms as T
from ..abel import Sequence, abel_sbp_sides, delta, nabla
from ..qkernel import dfun, qpoch
from .base import IdentityEntry, register, values
from .dsl import nonzero

_M = dict(symbols=T.MASTER_SYMBOLS, half_bases=T.MASTER_HALF_BASES)


def _master(fn):
    return lambda pt, n: fn(T.MasterParams.from_point(pt), n)


register(IdentityEntry(
    "thm1", "finite", "first transformation (Abel summation with four-term factor)",
    sides=_master(T.thm1_sides), **_M,
))
register(IdentityEntry(
    "thm2", "finite", "second transformation (Gamma-product weights)",
    sides=_master(T.thm2_sides), **_M,
))
register(IdentityEntry(
    "thm3", "finite", "third transformation, printed -1 + sum bracketing",
    sides=_master(T.thm3_sides), **_M,
))
register(IdentityEntry(
    "thm3-exchange-form", "finite", "third transformation before reflection (exchange lemma form)",
    sides=_master(T.thm3_derivation_sides), **_M,
))


def _closed_diff(which):
    def sides(pt, k):
        p = T.MasterParams.from_point(pt)
        if which == "diffak":
            return T.diffak_closed(p, k), delta(T.seq_A(p), k)
        if which == "diffbk":
            return T.diffbk_closed(p, k), nabla(T.seq_B(p), k)
        return T.diffbbk_closed(p, k), nabla(T.seq_BB(p), k)

    return sides


for _which, _anchor in (
    ("diffak", "closed form of Delta A_k"),
    ("diffbk", "closed form of nabla B_k"),
    ("diffbbk", "closed form of nabla B_k for the second transformation"),
):
    register(IdentityEntry(f"eq-{_which}", "finite", _anchor, sides=_closed_diff(_which), **_M))


def _abel(pt, n):
    p = T.MasterParams.from_point(pt)
    return abel_sbp_sides(Sequence(T.seq_A(p)), Sequence(T.seq_B(p)), n)


register(IdentityEntry(
    "l1.1-abel", "finite", "summation by parts on the A_k, B_k of the first transformation",
    sides=_abel, **_M,
))


def _exchange(pt, n):
    p = T.MasterParams.from_point(pt)
    alpha = Sequence(lambda k: T.diffak_closed(p, k))
    beta = Sequence(lambda k: T.diffbk_closed(p, k))

    def side(f, g):
        return sum((f(k) * sum((g(i) for i in range(n - k + 1)), Fraction(0))
                    for k in range(n + 1)), Fraction(0))

    return side(alpha, beta), side(beta, alpha)


register(IdentityEntry(
    "eq-alpha-beta-exchange", "finite", "exchange of double sums, with alpha/beta from the proof",
    sides=_exchange, **_M,
))


def _thm41(r, s):
    def sides(pt, n):
        sc = {k: pt[k] for k in T.EXPONENT_SCALARS}
        params = T.ExponentParams(r, s, pt.sigma("tp"), pt.sigma("tq"), sc)
        return T.thm41_sides(params, n)

    return sides


H = Fraction(1, 2)
THM41_PATTERN = ((H, H, Fraction(1), Fraction(1)), (H, Fraction(1), Fraction(1), Fraction(1)))

register(IdentityEntry(
    "thm41", "finite", "general multibasic transformation with exponents r_i, s_i",
    symbols=T.EXPONENT_SCALARS, half_bases=("tp", "tq"),
    sides=_thm41(*THM41_PATTERN),
    constraints=(nonzero("a"), nonzero("c"), nonzero("x"), nonzero("z")),
    note="exponents r=(1/2,1/2,1,1), s=(1/2,1,1,1); p=tp^4, q=tq^4",
))


def _thm41_boundary(pt, n):
    sc = {k: pt[k] for k in T.EXPONENT_SCALARS}
    params = T.ExponentParams(*THM41_PATTERN, pt.sigma("tp"), pt.sigma("tq"), sc)
    return T.thm41_boundary(params)


register(IdentityEntry(
    "eq-a-minus-1", "finite", "closed boundary value A_{-1} of the general transformation",
    symbols=T.EXPONENT_SCALARS, half_bases=("tp", "tq"), sides=_thm41_boundary,
    note="same exponents as thm41; n is ignored",
))


def _four_term(pt, n):
    b, c, x, z = values(pt, "b c x z")
    lhs = dfun([c * x, x / c, b * z, z / b]) - dfun([b * x, x / b, c * z, z / c])
    return lhs, z / c * dfun([b * c, c / b, x * z, x / z])


def _four_term_variant(pt, n):
    b, c, x, z = values(pt, "b c x z")
    lhs = dfun([c * x, x / c, b * z, z / b]) - z / c * dfun([b * c, c / b, x * z, x / z])
    return lhs, dfun([b * x, x / b, c * z, z / c])


_BCXZ = dict(symbols=("b", "c", "x", "z"), half_bases=())
register(IdentityEntry("l1.2-four-term", "finite", "four-term D identity",
                       sides=_four_term, note="n is ignored", **_BCXZ))
register(IdentityEntry("l1.2-four-term-variant", "finite", "four-term D identity, rearranged",
                       sides=_four_term_variant, note="n is ignored", **_BCXZ))


def _reflection(pt, n):
    """sum_k w^k (a;q)_{n-k} against the reflected closed forms, k = 0..n+2."""
    a, q, w = values(pt, "a q w")
    lhs = rhs = Fraction(0)
    base = qpoch(a, q, n)
    for k in range(n + 3):
        lhs += w ** k * qpoch(a, q, n - k)
        refl = base / qpoch(q ** (1 - n) / a, q, k) * (-q / a) ** k
        rhs += w ** k * refl * q ** (k * (k - 1) // 2 - n * k)
    return lhs, rhs


register(IdentityEntry(
    "eq-vvvv-reflection", "finite", "(a;q)_{n-k} by reflection, including k > n",
    symbols=("a", "w"), half_bases=("q",), sides=_reflection,
    note="a generic weight w combines the k = 0..n+2 instances into one residual",
))
