"""Specialization links from derived entries back to their parents.

A chain samples its own symbols (often square roots, so that every parameter
of the parent stays rational), lifts the sample to an entry point and a
parent point, and compares the two instances. The contracted residual is
``(pL - pR) - scale * (eL - eR)``. Chains with a ``relate`` map also require
each parent side to equal the value predicted from the entry's sides, which
is what makes the check sensitive to the substitution itself.
"""

from __future__ import annotations

from fractions import Fraction

from .. import transforms as T
from ..exact_arith import ParamPoint, PoleSignal
from ..qkernel import dfun
from .base import CHAINS, REGISTRY, Chain, register_chain
from .dsl import nonzero
from .multibasic import C42, C43, C44, C45, C46

ONE = Fraction(1)


def chain_for(id: str) -> Chain | None:
    return CHAINS.get(id)


def _parent_sides(chain: Chain, ppt, n):
    if chain.parent_eval is not None:
        try:
            return chain.parent_eval(ppt, n)
        except ZeroDivisionError as exc:
            raise PoleSignal(str(exc)) from None
    return REGISTRY[chain.parent].exact_sides(ppt, n)


def verify_specialization(id: str, point: ParamPoint, n: int) -> Fraction:
    """Exact residual of the entry-to-parent chain at a point over the chain's symbols."""
    chain = CHAINS.get(id)
    if chain is None:
        raise ValueError(f"{id} has no parent")
    entry = REGISTRY[id]
    try:
        ept, ppt = chain.lift(point)
        s = chain.scale(point, n)
    except ZeroDivisionError as exc:
        raise PoleSignal(str(exc)) from None
    eL, eR = entry.exact_sides(ept, n)
    pL, pR = _parent_sides(chain, ppt, chain.parent_n(n))
    out = (pL - pR) - s * (eL - eR)
    if chain.relate is not None:
        try:
            xL, xR = chain.relate(point, n, eL, eR)
        except ZeroDivisionError as exc:
            raise PoleSignal(str(exc)) from None
        out += abs(pL - xL) + abs(pR - xR)
    return Fraction(out)


def _scaled(fn):
    """relate map for parent sides equal to fn(point, n) times the entry's sides."""
    def relate(pt, n, eL, eR):
        m = fn(pt, n)
        return m * eL, m * eR
    return relate


def _pt(values=None, halves=None):
    return ParamPoint(values or {}, halves or {})


def _master_point(a, sp, x, sq):
    return T.MasterParams(tuple(a), tuple(sp), tuple(x), tuple(sq)).to_point()


# --- first/third transformation with the bibasic substitution ---------------

_ROOTS = ("a", "c", "A1", "A2", "A3", "x", "z", "B1", "B2", "B3")


def _bibasic_lift(pt):
    """b = A1^2/p, d = A2^2/p, e = A3^2/p and y, w, u likewise from B1..B3 over q."""
    a, c, x, z = pt["a"], pt["c"], pt["x"], pt["z"]
    A = [pt[f"A{i}"] for i in (1, 2, 3)]
    B = [pt[f"B{i}"] for i in (1, 2, 3)]
    sp, sq = pt.sigma("p"), pt.sigma("q")
    p, q = sp * sp, sq * sq
    vals = dict(a=a, c=c, x=x, z=z, b=A[0] ** 2 / p, d=A[1] ** 2 / p, e=A[2] ** 2 / p,
                y=B[0] ** 2 / q, w=B[1] ** 2 / q, u=B[2] ** 2 / q)
    master = _master_point(
        A + [c * A[0] * A[1] * A[2] / (a * p)], [sp] * 4,
        B + [z * B[0] * B[1] * B[2] / (x * q)], [sq] * 4,
    )
    return vals, master


def _rogers_lift(pt):
    vals, master = _bibasic_lift(pt)
    return _pt(vals, {"p": pt.sigma("p"), "q": pt.sigma("q")}), master


def _bibasic_multiplier(pt):
    """(1-a/c)(1-bcd/a)(1-bce/a)(1-cde/a) / ((1-b)(1-d)(1-e)(1-bc^2de/a^2))."""
    v, _ = _bibasic_lift(pt)
    a, b, c, d, e = (v[k] for k in "abcde")
    return ((1 - a / c) * (1 - b * c * d / a) * (1 - b * c * e / a) * (1 - c * d * e / a)
            / ((1 - b) * (1 - d) * (1 - e) * (1 - b * c * c * d * e / a ** 2)))


_NZ_BIB = (nonzero("a"), nonzero("c"), nonzero("x"), nonzero("z"))

register_chain(Chain(
    "c3.2-rogerspsi65", "thm1", _ROOTS, ("p", "q"), _rogers_lift,
    "p_i = p, (a_i^2) = (bp, dp, ep, bc^2dep/a^2); q_i = q, (x_i^2) = (yq, wq, uq, yz^2wuq/x^2)",
    scale=lambda pt, n: _bibasic_multiplier(pt),
    relate=_scaled(lambda pt, n: _bibasic_multiplier(pt)),
    constraints=_NZ_BIB,
))

register_chain(Chain(
    "t3.5-thirdadded", "thm3", _ROOTS, ("p", "q"), _rogers_lift,
    "same substitution as the bibasic instance of the first transformation",
    scale=lambda pt, n: -_bibasic_multiplier(pt),
    relate=_scaled(lambda pt, n: -_bibasic_multiplier(pt)),
    constraints=_NZ_BIB,
))


# --- reductions of the bibasic instance --------------------------------------

def _ex25_lift(pt):
    b, c, d, e, y, z, w, u = (pt[k] for k in "b c d e y z w u".split())
    halves = {"p": pt.sigma("p"), "q": pt.sigma("q")}
    parent = dict(a=b * c, b=b, c=c, d=d, e=e, x=z, y=y, z=z, w=w, u=u)
    return _pt(dict(y=y, w=w, u=u), {"q": halves["q"]}), _pt(parent, halves)


register_chain(Chain(
    "ex3.3-gr-ex2.5", "c3.2-rogerspsi65", tuple("bcdeyzwu"), ("p", "q"), _ex25_lift,
    "a = bc, x = z",
    relate=lambda pt, n, eL, eR: (Fraction(0), eR - eL),
))


def _imp37_lift(pt):
    vals = {k: pt[k] for k in "a b c d x y z w u".split()}
    halves = {"p": pt.sigma("p"), "q": pt.sigma("q")}
    return _pt(vals, halves), _pt(dict(vals, e=Fraction(0)), halves)


register_chain(Chain(
    "eq-important-3.7", "c3.2-rogerspsi65", tuple("abcdxyzwu"), ("p", "q"), _imp37_lift,
    "e = 0", relate=_scaled(lambda pt, n: ONE),
))


def _gasper_lift(pt):
    vals = {k: pt[k] for k in "abcde"}
    zw = {"z": pt["z"], "w": pt["w"], "x": pt["z"] * pt["w"], "y": pt["y"], "u": pt["u"]}
    return _pt(vals, {"p": pt.sigma("p")}), _pt(dict(vals, **zw), {"p": pt.sigma("p"), "q": pt.sigma("q")})


def _gasper_relate(pt, n, eL, eR):
    """Both sides of the parent collapse to (q-prefactor) (1 + a/c D(..)/D(..) * bibasic side)."""
    a, b, c, d, e = (pt[k] for k in "abcde")
    y, z, w, u = (pt[k] for k in "yzwu")
    x, q = z * w, pt["q"]
    from ..qkernel import qprod
    pre = qprod([y * q, w * q, u * q, y * z * z * w * u * q / x ** 2], q, n + 1) / qprod(
        [q * u * w * z / x, q * u * y * z / x, q * w * y * z / x, q * x / z], q, n + 1)
    E = b * c * d * e / a
    f = a / c * dfun([b * c / a, c * d / a, c * e / a, E]) / dfun(
        [c * d * e / a, b * c * e / a, b * c * d / a, a / c])
    return pre * (1 + f * eL), pre * (1 + f * eR)


register_chain(Chain(
    "eq-bibasic", "t3.5-thirdadded", tuple("abcdeyzwu"), ("p", "q"), _gasper_lift,
    "x = zw", relate=_gasper_relate,
))


# --- second-transformation instances ---------------------------------------

def _zzzz_lift(pt):
    """a = al^2, b = be^2/(q^3 ga^2), c = ga^2, d = de^2/q (roots keep every a_i, x_i rational)."""
    al, be, ga, de = (pt[k] for k in ("al", "be", "ga", "de"))
    s = pt.sigma("q")
    q = s * s
    entry = _pt(dict(a=al * al, b=be * be / (s ** 6 * ga * ga), c=ga * ga, d=de * de / q), {"q": s})
    master = _master_point(
        [de, s ** 3 / de, be, al * al * be / s], [s, s, q, q],
        [al * be / s ** 3, q / al, al * ga * s, al * be / (q * ga)], [s, s, q, q],
    )
    return entry, master


def _zzzz_multiplier(pt, n):
    ept, _ = _zzzz_lift(pt)
    a, b, c, d = (ept[k] for k in "abcd")
    q = ept["q"]
    return ((1 - d) * (1 - q / d) * (1 - a * a * b * c) * (1 - b * c * q)
            / ((1 - a) * (1 - a * b * c * q / d) * (1 - a * b * c * d)))


register_chain(Chain(
    "t3.4-zzzz", "thm2", ("al", "be", "ga", "de"), ("q",), _zzzz_lift,
    "p = (q, q, q^2, q^2), (a_i^2) = (dq, q^2/d, bcq^3, a^2bcq^2); "
    "q = (q, q, q^2, q^2), (x_i^2) = (abc, q^2/a, acq, abq)",
    scale=lambda pt, n: 1 / _zzzz_multiplier(pt, n),
    relate=_scaled(lambda pt, n: 1 / _zzzz_multiplier(pt, n)),
))


def _type2_lift(pt):
    """a = al^2/q, b = be^2, c = ga^2/q^3."""
    al, be, ga = (pt[k] for k in ("al", "be", "ga"))
    s = pt.sigma("q")
    q = s * s
    entry = _pt(dict(a=al * al / q, b=be * be, c=ga * ga / q ** 3), {"q": s})
    master = _master_point(
        [al, q / (al * be), ga, al * al * be * q * q / ga], [s, s, s ** 3, s ** 3],
        [be, s / be, q / be, al * al * be * s], [s, q, q, s ** 3],
    )
    return entry, master


register_chain(Chain(
    "eq-type-II-concrete", "thm2", ("al", "be", "ga"), ("q",), _type2_lift,
    "p = (q, q, q^3, q^3), (a_i^2) = (aq, q/ab, cq^3, a^2bq^3/c); "
    "q = (q, q^2, q^2, q^3), (x_i^2) = (b, q/b, q^2/b, a^2bq^3); parent at n + 1",
    parent_n=lambda n: n + 1, relate=_scaled(lambda pt, n: ONE),
))


def _x333_lift(pt):
    vals = {"a": pt["a"], "d": pt["d"]}
    halves = {"q": pt.sigma("q")}
    return _pt(vals, halves), _pt(dict(vals, b=Fraction(0), c=Fraction(0)), halves)


register_chain(Chain(
    "eq-xinrong-333", "t3.4-zzzz", ("a", "d"), ("q",), _x333_lift, "b = c = 0",
    relate=_scaled(lambda pt, n: ONE), constraints=(nonzero("a"), nonzero("d")),
))


def _x444_lift(pt):
    s = pt.sigma("q")
    q = s * s
    return _pt({}, {"q": s}), _pt({"a": q * q, "d": q}, {"q": q})


register_chain(Chain(
    "eq-xinrong-444", "eq-xinrong-333", (), ("q",), _x444_lift, "q -> q^2, then a = q^2, d = q",
    scale=lambda pt, n: 1 - pt["q"], relate=_scaled(lambda pt, n: 1 - pt["q"]),
))


# --- the 10phi9 transformation ------------------------------------------------

def _succeed_lift(pt):
    b, d, m, y, w, l = (pt[k] for k in "b d m y w l".split())
    s = pt.sigma("q")
    q = s * s
    raw = dict(b=b, d=d, e=m * m / (b * d), y=y, w=w, u=l * l / (y * w * q))
    return _pt({k: pt[k] for k in "b d m y w l".split()}, {"q": s}), _pt(raw, {"q": s})


register_chain(Chain(
    "eq-succeed-10phi9", "eq-succeed-raw", tuple("bdmywl"), ("q",), _succeed_lift,
    "e = m^2/(bd), u = l^2/(ywq)", relate=_scaled(lambda pt, n: ONE),
    constraints=(nonzero("b"), nonzero("d"), nonzero("y"), nonzero("w")),
))


# --- the third transformation in its two forms --------------------------------

def _same_master(pt):
    return pt, pt


register_chain(Chain(
    "thm3-exchange-form", "thm3", T.MASTER_SYMBOLS, T.MASTER_HALF_BASES, _same_master,
    "identical parameters; reflection of the shifted Pochhammer quotients",
    scale=lambda pt, n: -ONE,
))


# --- exponent patterns of the general multibasic transformation ------------

def _thm41_eval(r, s):
    def ev(ppt, n):
        sc = {k: ppt[k] for k in T.EXPONENT_SCALARS}
        return T.thm41_sides(T.ExponentParams(r, s, ppt.sigma("tp"), ppt.sigma("tq"), sc), n)
    return ev


def _c42_lift(pt):
    vals = {k: pt[k] for k in T.EXPONENT_SCALARS}
    t = pt.sigma("t")
    return _pt(vals, {"t": t}), _pt(vals, {"tp": t, "tq": t})


_c42 = Chain(
    "c4.2-(1,1)-type", "thm41", T.EXPONENT_SCALARS, ("t",), _c42_lift,
    "r_i = 1/2, s_i = 3/2, p = q", relate=_scaled(lambda pt, n: ONE),
    parent_eval=_thm41_eval((C42[0],) * 4, (C42[1],) * 4),
    constraints=(nonzero("a"), nonzero("c"), nonzero("x"), nonzero("z")),
)
register_chain(_c42)


def _c4x_lift(pt):
    """c = a t1 and z = x t2; a and x are free and must cancel."""
    ent = {k: pt[k] for k in "b d e t1 y w u t2".split()}
    t = pt.sigma("t")
    a, x = pt["a"], pt["x"]
    scal = dict(a=a, b=ent["b"], c=a * ent["t1"], d=ent["d"], e=ent["e"],
                x=x, y=ent["y"], z=x * ent["t2"], w=ent["w"], u=ent["u"])
    return _pt(ent, {"t": t}), _pt(scal, {"tp": t, "tq": t})


for _id, _r, _s in (
    ("c4.3-(2,2)-type", (C43[0], C43[0], C43[1], C43[1]), (C43[2], C43[2], C43[3], C43[3])),
    ("c4.4-(2,2)-type-b", (C44[0], C44[0], C44[1], C44[1]), (C44[2], C44[3], C44[3], C44[3])),
    ("c4.5-(2,3)-type", (C45[0], C45[0], C45[1], C45[1]), (C45[2], C45[3], C45[3], C45[4])),
    ("c4.6-(3,3)-type", (C46[0], C46[0], C46[1], C46[2]), (C46[3], C46[3], C46[4], C46[5])),
):
    _ch = Chain(
        _id, "thm41", ("a", "x") + tuple("b d e t1 y w u t2".split()), ("t",), _c4x_lift,
        f"r = {tuple(map(str, _r))}, s = {tuple(map(str, _s))}, c = a t1, z = x t2, p = q",
        relate=_scaled(lambda pt, n: ONE), parent_eval=_thm41_eval(_r, _s),
        constraints=(nonzero("a"), nonzero("x"), nonzero("t1"), nonzero("t2")),
    )
    register_chain(_ch)


# --- the squared form ----------------------------------------------------------

def _c31_lift(pt):
    x = [pt[f"x{i}"] for i in range(1, 5)]
    sq = [pt.sigma(f"q{i}") for i in range(1, 5)]
    entry = _pt({f"x{i+1}": v for i, v in enumerate(x)}, {f"q{i+1}": s for i, s in enumerate(sq)})
    return entry, _master_point([xi * si for xi, si in zip(x, sq)], sq, x, sq)


def _c31_scale(pt, n):
    x = [pt[f"x{i}"] for i in range(1, 5)]
    K0 = x[0] * x[1] * x[2] * x[3]
    out = ONE
    for xi in x:
        out *= (1 - K0 / xi ** 2) / (1 - xi ** 2)
    return out


register_chain(Chain(
    "c3.1", "thm1", tuple(f"x{i}" for i in range(1, 5)), tuple(f"q{i}" for i in range(1, 5)), _c31_lift,
    "p_i = q_i, a_i = x_i q_i^(1/2)", scale=_c31_scale,
))
