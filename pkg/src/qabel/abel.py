"""Difference operators, summation by parts and the exchange lemma."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .exact_arith import ParamPoint


class Sequence:
    """A memoized integer-indexed sequence; index -1 is allowed."""

    def __init__(self, term: Callable[[int], Fraction]):
        self._term = term
        self._memo: dict[int, Fraction] = {}

    @classmethod
    def of(cls, values) -> "Sequence":
        """Finite sequence from a list whose first entry is the term at index -1."""
        vals = [Fraction(v) for v in values]
        return cls(lambda k: vals[k + 1])

    def __call__(self, k: int) -> Fraction:
        if k not in self._memo:
            self._memo[k] = Fraction(self._term(k))
        return self._memo[k]


def _seq(s) -> Sequence:
    return s if isinstance(s, Sequence) else Sequence(s)


def delta(s, k: int) -> Fraction:
    s = _seq(s)
    return s(k) - s(k - 1)


def nabla(s, k: int) -> Fraction:
    s = _seq(s)
    return s(k) - s(k + 1)


def abel_sbp_sides(A, B, n: int):
    A, B = _seq(A), _seq(B)
    lhs = sum((B(k) * delta(A, k) for k in range(n)), Fraction(0))
    rhs = A(n - 1) * B(n) - A(-1) * B(0)
    rhs += sum((A(k) * nabla(B, k) for k in range(n)), Fraction(0))
    return lhs, rhs


def abel_sbp_residual(A, B, n: int) -> Fraction:
    lhs, rhs = abel_sbp_sides(A, B, n)
    return lhs - rhs


def exchange_residual(alpha, beta, n: int) -> Fraction:
    alpha, beta = _seq(alpha), _seq(beta)

    def side(f, g):
        return sum(
            (f(k) * sum((g(i) for i in range(n - k + 1)), Fraction(0)) for k in range(n + 1)),
            Fraction(0),
        )

    return side(alpha, beta) - side(beta, alpha)


CLOSED_FORMS = ("diffak", "diffbk", "diffbbk")


def closed_diff_residual(which: str, point: ParamPoint, k: int) -> Fraction:
    """Closed-form difference minus the directly computed one."""
    from . import transforms as T

    params = T.MasterParams.from_point(point)
    if which == "diffak":
        return T.diffak_closed(params, k) - delta(T.seq_A(params), k)
    if which == "diffbk":
        return T.diffbk_closed(params, k) - nabla(T.seq_B(params), k)
    if which == "diffbbk":
        return T.diffbbk_closed(params, k) - nabla(T.seq_BB(params), k)
    raise ValueError(f"unknown closed form {which!r}; expected one of {CLOSED_FORMS}")
