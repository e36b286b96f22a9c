"""Recurrences for the quadratic, cubic, quartic and quintic sums."""

from __future__ import annotations

from fractions import Fraction

from ..qkernel import dfun as D, qpoch as qp, qprod as P
from .base import RecurrenceEntry, register, values
from .dsl import nonzero

F0 = Fraction(0)


# --- quadratic: F_n(aq^2) = C(a) F_{n+1}(a) + B_n(a) -----------------------

def quad_F(a, b, c, d, q, n):
    q2 = q * q
    out = F0
    for k in range(n):
        out += ((1 - a * b * c * q ** (3 * k - 1)) * P([a * b * c / q, d, q / d], q, k)
                * P([a * c / q, a * b / q, b * c * q], q2, k)
                / (P([q2, a * b * c * q / d, a * b * c * d], q2, k) * P([a / q, b * q, c * q], q, k)) * q ** k)
    return out


def quad_C(a, b, c, d, q):
    return ((1 - a / q) * (1 - a) * (1 - a * b * c * q / d) * (1 - a * b * c * d)
            / ((1 - a * b * c) * (1 - a * b * c / q) * (1 - a / d) * (1 - a * d / q)))


def quad_B(a, b, c, d, q, n):
    q2 = q * q
    return (a * (1 - q ** (n + 1) / a) * (1 - a * q ** n)
            / ((1 - q ** (2 * n)) * (1 - a * b * c) * (1 - a / d) * (q - a * d))
            * P([a * b * c, d, q / d], q, n) / P([q2, a * b * c * q ** 3 / d, a * b * c * d * q2], q2, n - 1)
            * P([a * c * q, a * b * q, b * c * q], q2, n) / P([a * q, b * q, c * q], q, n))


def quad_prod_closed(a, b, c, d, q, k, qpoch=qp):
    """Closed form of prod_{i=0}^{k} 1/C(aq^(2i)); qpoch may be exact or float."""
    q2 = q * q
    return (qpoch(a * b * c / q, q, 2 * k + 2) * qpoch(a / d, q2, k + 1) * qpoch(a * d / q, q2, k + 1)
            / (qpoch(a / q, q, 2 * k + 2) * qpoch(a * b * c * q / d, q2, k + 1) * qpoch(a * b * c * d, q2, k + 1)))


def _prod_check(pt, k):
    a, b, c, d = values(pt, "a b c d")
    q = pt["q"]
    direct = Fraction(1)
    for i in range(k + 1):
        direct /= quad_C(a * q ** (2 * i), b, c, d, q)
    return direct - quad_prod_closed(a, b, c, d, q, k)


def _quad(pt, n):
    a, b, c, d = values(pt, "a b c d")
    q = pt["q"]
    return (quad_F(a * q * q, b, c, d, q, n),
            quad_C(a, b, c, d, q) * quad_F(a, b, c, d, q, n + 1) + quad_B(a, b, c, d, q, n))


_ABCD = ("a", "b", "c", "d")
register(RecurrenceEntry(
    "t3.2-quad-recurrence", "recurrence", "F_n(aq^2) = C(a) F_{n+1}(a) + B_n(a)",
    symbols=_ABCD, half_bases=("q",), sides=_quad, n_min=1,
    constraints=(nonzero("d"),),
    state="F_n",
    coefficients={
        "C": lambda pt, n: quad_C(*values(pt, "a b c d"), pt["q"]),
        "B_n": lambda pt, n: quad_B(*values(pt, "a b c d"), pt["q"], n),
    },
    checks={"prod_1/C": _prod_check},
))


# --- cubic -------------------------------------------------------------------

def cubic_G(a, b, c, q, n):
    q3 = q ** 3
    out = F0
    for k in range(n):
        out += ((a * q ** (4 * k) - 1) * q ** k / (1 - a) * P([a, b], q, k)
                / P([a * q / c, c * q / (a * b)], q, k) * P([c, a * a * b / c], q3, k)
                / P([q3, q3 * a / b], q3, k) * qp(q / b, q, 2 * k) / qp(a * b, q, 2 * k))
    return out


def _cubic(pt, n):
    a, b, c = values(pt, "a b c")
    q = pt["q"]
    q3 = q ** 3
    rhs = ((1 - a * b * b) * qp(a * q, q, 3) / (qp(a * b, q, 3) * (1 - q3 * a / b))
           * cubic_G(a * q3, b, c * q3, q, n))
    rhs += (a * b / ((1 - a) * (1 - a * b)) * P([a, b], q, n) / P([q * a / c, q * c / (a * b)], q, n - 1)
            * P([q3 * c, q3 * a * a * b / c], q3, n - 1) / P([q3, q3 * a * a * b], q3, n - 1)
            * qp(q / b, q, 2 * n) / qp(q * a * b, q, 2 * n) * qp(q3 * a * a * b, q3, n) / qp(q3 * a / b, q3, n))
    return cubic_G(a, b, c, q, n), rhs


register(RecurrenceEntry(
    "cubic-recurrence", "recurrence", "G_n(a,c) in terms of G_n(aq^3, cq^3)",
    symbols=("a", "b", "c"), half_bases=("q",), sides=_cubic, n_min=1,
    constraints=(nonzero("a"), nonzero("b"), nonzero("c")), state="G_n(a,c)",
))


# --- quartic -----------------------------------------------------------------

def quartic_G(a, b, q, n):
    q2, q3, q4 = q * q, q ** 3, q ** 4
    out = F0
    for k in range(n):
        out += ((1 - a * a * b * b * q ** (5 * k - 2)) * P([a, b], q, k) * qp(a * a * b * b / q2, q4, k)
                / (P([a * b * b * q2, a * a * b * q2], q4, k) * qp(q, q, k))
                * P([a * b * q, a * b / q, a * b], q3, k) / P([a * b * q, a * b, a * b / q], q2, k) * q ** k)
    return out


def _quartic(pt, n):
    a, b = values(pt, "a b")
    q = pt["q"]
    q2, q3, q4 = q * q, q ** 3, q ** 4
    rhs = (quartic_G(a * q4, b * q4, q, n - 3) * a * b * (1 - a * b / q) * q4 * P([a * q, b * q], q, 3)
           * qp(-a * b / q, q2, 4) / ((1 - a * b * q ** 7) * P([a * b * b * q2, a * a * b * q2], q4, 3)))
    rhs += (P([a * q, b * q], q, n - 1) * qp(a * b * q2, q4, n - 1) * qp(a * a * b * b / q2, q4, n)
            / (P([a * b * b * q2, a * a * b * q2], q4, n - 1) * P([a * b * q, q], q, n - 1))
            * qp(a * b * q, q, n) * P([a * b / q2, a * b / q, a * b], q3, n)
            / (qp(a * b / q2, q4, n) * P([a * b * q, a * b, a * b / q], q2, n)))
    return quartic_G(a, b, q, n), rhs


register(RecurrenceEntry(
    "quartic-recurrence", "recurrence", "G_n(a,b) in terms of G_{n-3}(aq^4, bq^4)",
    symbols=("a", "b"), half_bases=("q",), sides=_quartic, n_min=3,
    constraints=(nonzero("a"), nonzero("b")), state="G_n(a,b)",
))


# --- quintic -----------------------------------------------------------------

def quintic_G(a, c, q, n):
    q5 = q ** 5
    out = F0
    for k in range(n + 1):
        out += ((1 - a ** 3 * q ** (6 * k - 1)) * qp(a * a * c, q5, k) * qp(a ** 3 / c, q5, k)
                / (qp(c, q, k) * qp(a / c, q, k)) * qp(q * a, q, 2 * k) * qp(a / q, q, 2 * k)
                / qp(q * a * a, q, 4 * k) * q ** k)
    return out


def _quintic(pt, n):
    a, c = values(pt, "a c")
    q = pt["q"]
    q5 = q ** 5
    rhs = (quintic_G(q * a, q ** 3 * c, q, n) * D([q * a, a, a / q, a * a * c])
           / D([1 / a, c, q * c, q * q * c]) * qp(q * c / a, q, 2) / qp(q * a * a, q, 2)
           + D([a * c, a * a, a * a / q, q * c / a]) / D([a, c, c * q]))
    rhs += (D([q ** (3 + 3 * n) * a * c, q * a, 1 / a, a / q, a * a * c, a ** 3 / c])
            / D([c, 1 / (q * c), q * q * c, q * a * a, q * q * a * a])
            * qp(q5 * a * a * c, q5, n) * qp(q5 * a ** 3 / c, q5, n) / (qp(q ** 3 * c, q, n) * qp(a / c, q, n))
            * qp(q * a, q, 2 * n) * qp(q * q * a, q, 2 * n) / qp(q ** 3 * a * a, q, 4 * n))
    return quintic_G(a, c, q, n), rhs


register(RecurrenceEntry(
    "c4.6-quintic", "recurrence", "quintic transformation: G_n(a,c) via G_n(qa, q^3c)",
    symbols=("a", "c"), half_bases=("q",), sides=_quintic,
    constraints=(nonzero("a"), nonzero("c")), state="G_n(a,c)",
))
