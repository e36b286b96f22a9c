"""Infinite series identities, evaluated in floats with bounded tails.

Each ``sides(env, ev)`` receives a float map and an Evaluator; every series
goes through ``ev.sum`` so its truncation bound is recorded. Multiplicative
prefactors are folded into the term constant so the recorded bound covers
the scaled series.
"""

from __future__ import annotations

from fractions import Fraction

from ..numeric import HyperTerm
from .base import IdentityEntry, register
from .dsl import abs_lt, neq, nonzero

HALF = Fraction(1, 2)


def _entry(id, anchor, symbols, half_bases, sides, constraints=(), note=""):
    return register(IdentityEntry(
        id, "infinite", anchor, tuple(symbols.split()), tuple(half_bases.split()), sides,
        constraints=tuple(constraints), magnitude=HALF, note=note,
    ))


def _on(q, *params):
    return [(a, q, 1) for a in params]


def phi_term(upper, lower, q, z, const=1):
    return HyperTerm(z=z, num=_on(q, *upper), den=_on(q, *lower, q), const=const)


# --- WP-Bailey-type bibasic transformation -----------------------------------

def _magic(env, ev):
    a, b, c, d, e, p, y, z, u, q = (env[s] for s in "a b c d e p y z u q".split())
    a0 = (a * (1 - b * c / a) * (1 - c * d / a) * (1 - c * e / a) * (1 - b * c * d * e / a)
          / (c * (1 - b * c * d / a) * (1 - b * c * e / a) * (1 - c * d * e / a) * (1 - a / c)))
    pn = _on(p, b, d, e, b * c * c * d * e / a ** 2)
    lhs = ev.sum(HyperTerm(
        z=p * z, const=a0, linear=[(b * c * d * e / a, p, 2)],
        num=pn + _on(q, y * q, u * q),
        den=_on(p, a * p / c, b * c * e * p / a, b * c * d * p / a, c * d * e * p / a) + _on(q, z * u * q, y * z * q),
    ))
    rhs = -(u * z - 1) * (y * z - 1) / (z * (u - 1) * (y - 1)) + ev.sum(HyperTerm(
        z=z, const=(1 - z) * (1 - y * z * u) / (z * (1 - y) * (1 - u)),
        linear=[(y * z * u, q, 2)],
        num=pn + _on(q, y, u),
        den=_on(p, a / c, b * c * e / a, b * c * d / a, c * d * e / a) + _on(q, z * u * q, y * z * q),
    ))
    return lhs, rhs


_entry("eq-magic", "bibasic expansion of a very-well-poised-type series in (p, q)",
       "a b c d e y z u", "p q", _magic,
       [nonzero("a"), nonzero("c"), nonzero("z"), abs_lt("z", 1)])


# --- phi-series identities ---------------------------------------------------

def _phis2(env, ev):
    b, d, m, y, z, s, q = (env[k] for k in "b d m y z s q".split())
    e, u = m * m / (b * d), s * s / (y * z)
    lhs = ev.sum(phi_term(
        [b * d * e, q * m, -q * m, b, d, e, y * q, u * q],
        [m, -m, b * e * q, b * d * q, d * e * q, z * u * q, y * z * q], q, q * z))
    rhs = ev.sum(phi_term(
        [b * d * e * q, q * q * s, -q * q * s, b * q, d * q, e * q, y * q, u * q],
        [q * s, -q * s, b * e * q, b * d * q, d * e * q, z * u * q * q, y * z * q * q], q, z,
        const=(1 - z) * (1 - y * z * u * q * q) / ((1 - z * u * q) * (1 - y * z * q))))
    return lhs, rhs


_entry("eq-phiseries-2", "8phi7 with argument qz against 8phi7 with argument z; e = m^2/(bd), u = s^2/(yz)",
       "b d m y z s", "q", _phis2,
       [nonzero("b"), nonzero("d"), nonzero("m"), nonzero("y"), nonzero("z"), nonzero("s"), abs_lt("z", 1)],
       note="parametrized by m = sqrt(bde) and s = sqrt(yzu)")


def _e139(env, ev):
    a, c, d, p, x, y, z, w, u, q = (env[k] for k in "a c d p x y z w u q".split())
    a1 = (x * (1 - y * z / x) * (1 - z * w / x) * (1 - z * u / x) * (1 - y * z * w * u / x)
          / (z * (1 - y) * (1 - w) * (1 - u) * (1 - y * z * z * w * u / x ** 2)))
    qd = _on(q, x * q / z, z * w * u * q / x, y * z * u * q / x, y * z * w * q / x)
    lhs = ev.sum(HyperTerm(
        z=a / (c * d), const=a * (1 - c * d / a) / (c * d * (1 - a / c)),
        num=_on(p, d) + _on(q, y * q, w * q, u * q, y * z * z * w * u * q / x ** 2),
        den=_on(p, a * p / c) + qd,
    ))
    rhs = (-(1 - x / z) * (1 - y * w * z / x) * (1 - y * z * u / x) * (1 - w * z * u / x)
           / ((1 - y) * (1 - w) * (1 - u) * (1 - y * z * z * w * u / x ** 2)))
    rhs += ev.sum(HyperTerm(
        z=a * q / (c * d), const=-a1, linear=[(y * z * w * u / x, q, 2)],
        num=_on(p, d) + _on(q, y, w, u, y * z * z * w * u / x ** 2),
        den=_on(p, a / c) + qd,
    ))
    return lhs, rhs


_entry("eq-1.39", "bibasic sum with argument a/(cd) in terms of one with argument aq/(cd)",
       "a c d x y z w u", "p q", _e139,
       [nonzero("a"), nonzero("c"), nonzero("d"), nonzero("x"), nonzero("z"), abs_lt("a/(c*d)", 1)])


def _p1new(env, ev):
    a, c, d, y, w, l, q = (env[k] for k in "a c d y w l q".split())
    u = l * l / (y * w)
    lhs = ev.sum(phi_term(
        [y * q, w * q, u * q, y * w * u * q, d], [w * u * q, y * u * q, y * w * q, a * q / c], q, a / (c * d)))
    rhs = ev.sum(phi_term(
        [y * w * u, q * l, -q * l, y, w, u, d], [l, -l, y * u * q, w * u * q, y * w * q, a / c], q, a * q / (c * d),
        const=(1 - a / c) / (1 - a / (c * d))))
    return lhs, rhs


_entry("eq-phiseries-1-new", "5phi4 with argument a/(cd) as a 7phi6; u = l^2/(yw)",
       "a c d y w l", "q", _p1new,
       [nonzero("c"), nonzero("d"), nonzero("y"), nonzero("w"), nonzero("l"), abs_lt("a/(c*d)", 1)],
       note="parametrized by l = sqrt(ywu)")


# --- quadratic-base sums and their limits ----------------------------------

def quad_term(a, b, c, d, q, const=1):
    q2 = q * q
    return HyperTerm(
        z=q, const=const * (1 - a * b * c / q), linear=[(a * b * c / q, q, 3)],
        num=_on(q, a * b * c / q, d, q / d) + _on(q2, a * c / q, a * b / q, b * c * q),
        den=_on(q2, q2, a * b * c * q / d, a * b * c * d) + _on(q, a / q, b * q, c * q),
    )


def quad_F_inf(a, b, c, d, q, ev, const=1):
    """Limit of the quadratic sum F_n(a) as n grows."""
    return ev.sum(quad_term(a, b, c, d, q, const))


def quad_B_inf(a, b, c, d, q):
    """Limit of the inhomogeneous term B_n(a) of the quadratic recurrence."""
    inf = lambda *xs, base: _inf(xs, base)
    q2 = q * q
    return (a / ((1 - a / d) * (q - a * d))
            * inf(a * b * c * q, d, q / d, base=q) / inf(q2, a * b * c * q ** 3 / d, a * b * c * d * q2, base=q2)
            * inf(a * c * q, a * b * q, b * c * q, base=q2) / inf(a * q, b * q, c * q, base=q))


def _inf(xs, q):
    from ..numeric import Evaluator
    return Evaluator.inf(*xs, q=q)


def _gnew(env, ev):
    a, b, c, d, q = (env[k] for k in "a b c d q".split())
    q2 = q * q
    inf = ev.inf
    lhs = quad_F_inf(a, b, c, d, q, ev)
    common = inf(a * b * c / q, q=q) / (inf(a / q, q=q) * inf(a * b * c * q / d, a * b * c * d, q=q2))
    p0 = common * inf(a / d, a * d / q, q=q2)
    p1 = (a * common * inf(d, q / d, q=q) / inf(q2, q=q2) * inf(a * c * q, a * b * q, b * c * q, q=q2)
          / inf(b * q, c * q, q=q))
    rhs = quad_F_inf(0, b, c, d, q, ev, const=p0) + ev.sum(HyperTerm(
        z=q2, const=-p1 / q, num=_on(q2, a / d, a * d / q), den=_on(q2, a * c * q, a * b * q)))
    return lhs, rhs


_entry("t3.2-solution-gasperid-new", "F_inf(a) through F_inf(0) and a 2phi1-type series in base q^2",
       "a b c d", "q", _gnew, [nonzero("d")])


def _g222(env, ev):
    a, b, d, q = (env[k] for k in "a b d q".split())
    q2 = q * q
    inf = ev.inf
    lhs = ev.sum(HyperTerm(z=q, num=_on(q, d, q / d) + _on(q2, a * b / q), den=_on(q2, q2) + _on(q, a / q, b * q)))
    rhs = ev.sum(HyperTerm(
        z=q, const=inf(a / d, a * d / q, q=q2) / inf(a / q, q=q),
        num=_on(q, d, q / d), den=_on(q2, q2) + _on(q, b * q)))
    rhs += ev.sum(HyperTerm(
        z=q2, const=-a * inf(d, q / d, q=q) / inf(q2, q=q2) * inf(a * b * q, q=q2) / inf(a / q, b * q, q=q) / q,
        num=_on(q2, a / d, a * d / q), den=_on(q2, a * b * q)))
    return lhs, rhs


_entry("eq-gasperid-222", "c = 0 case of the quadratic limit", "a b d", "q", _g222, [nonzero("d")])


def _g333(env, ev):
    a, d, q = (env[k] for k in "a d q".split())
    q2 = q * q
    inf = ev.inf
    lhs = ev.sum(HyperTerm(z=q, num=_on(q, d, q / d), den=_on(q2, q2) + _on(q, a / q)))
    rhs = ev.sum(HyperTerm(
        z=q, const=inf(a / d, a * d / q, q=q2) / inf(a / q, q=q), num=_on(q, d, q / d), den=_on(q2, q2)))
    rhs += ev.sum(HyperTerm(
        z=q2, const=-a * inf(d, q / d, q=q) / (inf(q2, q=q2) * inf(a / q, q=q)) / q,
        num=_on(q2, a / d, a * d / q)))
    return lhs, rhs


_entry("eq-gasperid-333", "b = c = 0 case of the quadratic limit", "a d", "q", _g333, [nonzero("d")])


# --- cubic and quartic-type limits --------------------------------------------

def cubic_term(a, b, c, q, const=1):
    q3 = q ** 3
    return HyperTerm(
        z=q, const=-const, linear=[(a, q, 4)],
        num=_on(q, a, b) + _on(q3, c, a * a * b / c) + [(q / b, q, 2)],
        den=_on(q, a * q / c, c * q / (a * b)) + _on(q3, q3, q3 * a / b) + [(a * b, q, 2)],
    )


def _wangxu(env, ev):
    a, b, c, q = (env[k] for k in "a b c q".split())
    q3 = q ** 3
    inf = ev.inf
    lhs = ev.sum(cubic_term(a, b, c, q))
    coef = (1 - a * b * b) * (1 - q * a) * (1 - q * q * a) * (1 - q3 * a) / (
        (1 - q3 * a / b) * (1 - a * b) * (1 - a * b * q) * (1 - a * b * q * q))
    rhs = ev.sum(cubic_term(q3 * a, b, q3 * c, q, const=coef))
    rhs += (a * b * inf(a * q, b, q / b, q=q) / inf(a * q / c, c * q / (a * b), a * b, q=q)
            * inf(q3 * c, q3 * a * a * b / c, q=q3) / inf(q3, a * q3 / b, q=q3))
    return lhs, rhs


_entry("eq-wang-xu-cubic", "cubic sum at (a, c) against (q^3 a, q^3 c) plus an infinite product",
       "a b c", "q", _wangxu, [nonzero("b"), nonzero("c"), neq("a*b", "1")])


def _e347(env, ev):
    a, b, q = (env[k] for k in "a b q".split())
    g = a * a * b * b / (1 - a * b * b)
    q3, q4 = q ** 3, q ** 4
    lhs = ev.sum(HyperTerm(
        z=g, quad=(q, HALF, -HALF), linear=[(a * b, q, 2), (a, q, 4)], inv_linear=[(a, q, 1)],
        num=_on(q, b, 1 / (a * b)) + [(q / b, q, 2)],
        den=[(a * q3, q4, 1), (a * q * q, q, 1), (q3, q3, 1)],
    ))
    c0 = (-g / (a * b) * (1 - a * q3 / b) * (1 - a * b * q) * (1 - a * b * q * q) * (1 - 1 / (a * b))
          / ((1 - a * q * q) * (1 - a * q3) * (1 - a * q)))
    rhs = ev.sum(HyperTerm(
        z=g, const=c0, quad=(q, HALF, HALF),
        linear=[(a * q3 / b, q, 3), (a * b * q, q, 2), (a * b * q * q, q, 2), (1 / (a * b), q, 1)],
        inv_linear=[(a * q, q, 1)],
        num=_on(q, b, q / (a * b)) + [(q / b, q, 2)],
        den=[(a * q ** 7, q4, 1), (q3, q3, 1), (a * q3, q, 1)],
    ))
    return lhs, rhs


_entry("eq-3.47", "quadratically damped sum expanded with a unit shift in k", "a b", "q", _e347,
       [nonzero("a"), nonzero("b"), neq("a*b", "1"), neq("a*b*b", "1")])


# --- theta functions ---------------------------------------------------------

def _weierstrass(env, ev):
    b, c, x, z, q = (env[k] for k in "b c x z q".split())
    th = lambda *xs: ev.inf(*xs, *(q / t for t in xs), q=q)
    return (th(c * x, x / c, b * z, z / b) - th(b * x, x / b, c * z, z / c),
            z / c * th(b * c, c / b, x * z, x / z))


_entry("l1.2-weierstrass", "three-term theta function relation", "b c x z", "q", _weierstrass,
       [nonzero("b"), nonzero("c"), nonzero("x"), nonzero("z")])
