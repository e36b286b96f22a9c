"""Floating-point infinite series and products with geometric tail bounds.

A series is described by its first term and the factor structure of its term
ratio, so the ratio at index k is computed from the parameters directly
instead of by dividing successive terms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .exact_arith import PoleSignal


class Diverged(ArithmeticError):
    """The ratio test does not establish convergence."""


class MaxTermsExceeded(ArithmeticError):
    """The tail bound did not reach the target within max_terms."""


@dataclass(frozen=True)
class NumericPolicy:
    target_eps: float = 1e-12
    max_terms: int = 4000
    precision_bits: int = 128
    kappa: float = 10.0

    def __post_init__(self):
        if not self.target_eps > 0:
            raise ValueError("target_eps must be positive")
        if self.max_terms < 16:
            raise ValueError("max_terms must be at least 16")
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be at least 64")

    @property
    def tolerance(self) -> float:
        return self.target_eps * self.kappa


@dataclass
class HyperTerm:
    """t_k = const * z^k * base^(c2*k^2 + c1*k) * prod (a;b)_{m k} / prod (a;b)_{m k}.

    ``num``/``den`` hold (a, b, m) triples for (a;b)_{m k}. ``linear`` and
    ``inv_linear`` hold (A, b, s) for the factors (1 - A b^(s k))/(1 - A) in
    the numerator or denominator; they are rewritten as Pochhammer quotients.
    """

    z: object = 1
    num: list = field(default_factory=list)
    den: list = field(default_factory=list)
    linear: list = field(default_factory=list)
    inv_linear: list = field(default_factory=list)
    quad: tuple | None = None  # (base, c2, c1)
    const: object = 1

    def __post_init__(self):
        self.num, self.den = list(self.num), list(self.den)
        for A, b, s in self.linear:
            bs = b ** s
            self.num.append((A * bs, bs, 1))
            self.den.append((A, bs, 1))
        for A, b, s in self.inv_linear:
            bs = b ** s
            self.num.append((A, bs, 1))
            self.den.append((A * bs, bs, 1))
        self.linear, self.inv_linear = [], []

    def first(self):
        return mpmath.mpmathify(self.const)

    def ratio(self, k: int):
        r = mpmath.mpmathify(self.z)
        for a, b, m in self.num:
            for j in range(m):
                r *= 1 - a * b ** (m * k + j)
        for a, b, m in self.den:
            for j in range(m):
                f = 1 - a * b ** (m * k + j)
                if f == 0:
                    raise ZeroDivisionError("lower parameter hits a pole")
                r /= f
        if self.quad:
            base, c2, c1 = self.quad
            r *= base ** int(c2 * (2 * k + 1) + c1)
        return r

    def majorant(self, N: int):
        """Upper bound for |ratio(k)| over all k >= N, or None when none is available."""
        if any(abs(b) >= 1 for _, b, _ in self.num + self.den):
            return None
        r = abs(mpmath.mpmathify(self.z))
        for a, b, m in self.num:
            for j in range(m):
                r *= 1 + abs(a) * abs(b) ** (m * N + j)
        for a, b, m in self.den:
            for j in range(m):
                g = abs(a) * abs(b) ** (m * N + j)
                if g >= 1:
                    return None
                r /= 1 - g
        if self.quad:
            base, c2, c1 = self.quad
            if abs(base) >= 1 or c2 < 0 or (c2 == 0 and c1 < 0):
                return None
            r *= abs(base) ** int(c2 * (2 * N + 1) + c1)
        return r

    def limit_ratio(self):
        r = abs(mpmath.mpmathify(self.z))
        if self.quad:
            base, c2, c1 = self.quad
            if c2 != 0:
                return mpmath.mpf(0) if (c2 > 0) == (abs(base) < 1) else mpmath.inf
            r *= abs(base) ** c1
        return r


@dataclass
class SeriesValue:
    value: object
    tail_bound: object
    terms: int
    oversum_change: object = None
    rounding: object = 0

    @property
    def sound(self) -> bool:
        # ``rounding`` bounds the floating summation error of both partial sums;
        # the difference is exact when change and bound are close, at any precision
        return self.oversum_change is None or self.oversum_change - self.tail_bound <= self.rounding


def _partial(term: HyperTerm, upto: int):
    """Sum of t_0..t_upto, the last term t_upto, and the sum of |t_k|."""
    t = term.first()
    s, mass = t, abs(t)
    for k in range(upto):
        t *= term.ratio(k)
        s += t
        mass += abs(t)
    return s, t, mass


def sum_hyper(term: HyperTerm, policy: NumericPolicy, check: bool = True) -> SeriesValue:
    if term.limit_ratio() >= 1:
        raise Diverged("term ratio does not tend below 1")
    eps = mpmath.mpf(policy.target_eps)
    t = term.first()
    s = t
    k = 0
    while True:
        if t == 0:
            bound = mpmath.mpf(0)
            break
        rho = term.majorant(k)
        if rho is not None and rho < 1:
            bound = abs(t) * rho / (1 - rho)
            if bound < eps:
                break
        if k >= policy.max_terms:
            raise MaxTermsExceeded(f"tail bound above {policy.target_eps} after {k} terms")
        t *= term.ratio(k)
        s += t
        k += 1
    out = SeriesValue(s, bound, k + 1)
    if check:
        upto = 4 * (k + 1)
        more, _, mass = _partial(term, upto)
        out.oversum_change = abs(more - s)
        out.rounding = 2 * (upto + 1) * mpmath.mp.eps * mass
    return out


@dataclass(frozen=True)
class PhiSeries:
    """r phi_{r-1}(upper; lower; base, argument)."""

    upper: tuple
    lower: tuple
    base: object
    argument: object

    def __post_init__(self):
        if not abs(self.base) < 1:
            raise ValueError("phi series needs |base| < 1")

    def to_term(self) -> HyperTerm:
        q = self.base
        return HyperTerm(
            z=self.argument,
            num=[(a, q, 1) for a in self.upper],
            den=[(b, q, 1) for b in self.lower] + [(q, q, 1)],
        )


def phi_eval(s: PhiSeries, policy: NumericPolicy = NumericPolicy(), check: bool = True):
    """(value, tail_bound) of the truncated phi series."""
    if s.argument == 0:
        return mpmath.mpf(1), mpmath.mpf(0)
    with mpmath.workprec(policy.precision_bits):
        r = sum_hyper(s.to_term(), policy, check)
        if check and not r.sound:
            raise ArithmeticError("tail bound failed the oversummation check")
        return +r.value, +r.tail_bound


def qpoch_inf(a, q):
    """(a;q)_infinity to working precision."""
    if not abs(q) < 1:
        raise ValueError("infinite product needs |q| < 1")
    out = mpmath.mpf(1)
    t = mpmath.mpmathify(a)
    tiny = mpmath.mpf(2) ** (-mpmath.mp.prec - 8)
    while abs(t) > tiny:
        out *= 1 - t
        t *= q
    return out


def qpoch_f(a, q, n: int):
    out = mpmath.mpf(1)
    t = mpmath.mpmathify(a)
    for _ in range(n):
        out *= 1 - t
        t *= q
    return out


class Evaluator:
    """Evaluates series for one identity and records each series' tail data."""

    def __init__(self, policy: NumericPolicy):
        self.policy = policy
        self.series: list[SeriesValue] = []

    def sum(self, term: HyperTerm):
        r = sum_hyper(term, self.policy)
        self.series.append(r)
        return r.value

    def phi(self, upper, lower, base, argument):
        return self.sum(PhiSeries(tuple(upper), tuple(lower), base, argument).to_term())

    @staticmethod
    def inf(*args, q):
        out = mpmath.mpf(1)
        for a in args:
            out *= qpoch_inf(a, q)
        return out

    @property
    def tail_total(self):
        return sum((s.tail_bound for s in self.series), mpmath.mpf(0))

    @property
    def sound(self) -> bool:
        return all(s.sound for s in self.series)


@dataclass
class InfiniteResult:
    id: str
    residual: float
    tolerance: float
    tail_total: float
    tail_sound: bool
    series_terms: list

    @property
    def passed(self) -> bool:
        return self.residual < self.tolerance and self.tail_sound


def to_floats(point, prec_bits: int):
    with mpmath.workprec(prec_bits):
        return {k: mpmath.mpf(v.numerator) / v.denominator for k, v in point.scope().items()}


def infinite_residual(id: str, point, policy: NumericPolicy = NumericPolicy()) -> InfiniteResult:
    """|LHS - RHS| of an infinite catalog entry at a point (a ParamPoint or a float map)."""
    from .catalog import get

    entry = get(id)
    if entry.kind != "infinite":
        raise ValueError(f"{id} is not an infinite identity")
    if hasattr(point, "scope"):
        entry.check(point)
    with mpmath.workprec(policy.precision_bits):
        env = to_floats(point, policy.precision_bits) if hasattr(point, "scope") else dict(point)
        ev = Evaluator(policy)
        try:
            lhs, rhs = entry.sides(env, ev)
        except ZeroDivisionError as exc:
            raise PoleSignal(str(exc)) from None
        res = abs(lhs - rhs)
        return InfiniteResult(
            id,
            float(res),
            policy.tolerance,
            float(ev.tail_total),
            ev.sound,
            [s.terms for s in ev.series],
        )


def iterate_solution_residual(point, policy: NumericPolicy = NumericPolicy(), iterations: int = 1):
    """F_inf(a q^(2(n+1))) directly versus its n-fold iterated recurrence.

    Returns (residual, product_form_gap) where the second entry compares the
    product of 1/C(a q^(2i)) with its closed Pochhammer form in floats.
    """
    from .catalog import infinite as I, recurrences as R

    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    with mpmath.workprec(policy.precision_bits):
        env = to_floats(point, policy.precision_bits) if hasattr(point, "scope") else dict(point)
        a, b, c, d, q = (env[s] for s in "abcdq")
        if not abs(q) < 1:
            raise ValueError("needs |q| < 1")
        n = iterations
        C = lambda aa: R.quad_C(aa, b, c, d, q)
        B = lambda aa: I.quad_B_inf(aa, b, c, d, q)
        cs = [C(a * q ** (2 * i)) for i in range(n + 1)]
        # the truncation error of F(a) is multiplied by prod C, so sum tighter
        amp = mpmath.mpf(1)
        for v in cs:
            amp *= abs(v)
        inner = NumericPolicy(policy.target_eps / (2 * (1 + amp)), policy.max_terms, policy.precision_bits, policy.kappa)
        ev = Evaluator(inner)
        F = lambda aa: I.quad_F_inf(aa, b, c, d, q, ev)
        direct = F(a * q ** (2 * (n + 1)))
        iterated = F(a)
        for v in cs:
            iterated *= v
        for k in range(n + 1):
            t = B(a * q ** (2 * k))
            for v in cs[k + 1:]:
                t *= v
            iterated += t
        prod = mpmath.mpf(1)
        for i in range(n + 1):
            prod /= C(a * q ** (2 * i))
        closed = R.quad_prod_closed(a, b, c, d, q, n, qpoch_f)
        return float(abs(direct - iterated)), float(abs(prod - closed))
