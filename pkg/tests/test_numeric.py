from fractions import Fraction as F

import mpmath
import pytest

from qabel import catalog as C
from qabel.catalog import recurrences as R
from qabel.exact_arith import ParamPoint
from qabel.numeric import (Diverged, Evaluator, HyperTerm, MaxTermsExceeded, NumericPolicy, PhiSeries,
                           infinite_residual, iterate_solution_residual, phi_eval, qpoch_inf, sum_hyper,
                           to_floats)
from qabel.qkernel import qpoch


def test_phi_zero_argument():
    assert phi_eval(PhiSeries((0.0,), (), 0.5, 0.0)) == (1, 0)


def test_geometric():
    value, bound = phi_eval(PhiSeries((0.5,), (), 0.5, 0.5))
    assert abs(value - 2) < 1e-12 and bound < 1e-12


def test_q_binomial_theorem():
    # 1phi0(a;;q,z) = (az;q)_inf / (z;q)_inf
    a, q, z = mpmath.mpf("0.3"), mpmath.mpf("0.4"), mpmath.mpf("-0.35")
    value, _ = phi_eval(PhiSeries((a,), (), q, z))
    assert abs(value - qpoch_inf(a * z, q) / qpoch_inf(z, q)) < 1e-12


def test_qpoch_inf_against_partial_products():
    exact = qpoch(F(1, 3), F(1, 2), 200)
    with mpmath.workprec(128):
        approx = qpoch_inf(mpmath.mpf(1) / 3, mpmath.mpf("0.5"))
        assert abs(approx - mpmath.mpf(exact.numerator) / exact.denominator) < 1e-35


def test_divergence_detected():
    with pytest.raises(Diverged):
        phi_eval(PhiSeries((0.5,), (), 0.5, 1.5))


def test_max_terms():
    policy = NumericPolicy(target_eps=1e-30, max_terms=16)
    with pytest.raises(MaxTermsExceeded):
        phi_eval(PhiSeries((0.5,), (), 0.5, 0.99), policy)


def test_policy_validation():
    with pytest.raises(ValueError):
        NumericPolicy(target_eps=0)
    with pytest.raises(ValueError):
        NumericPolicy(max_terms=3)
    with pytest.raises(ValueError):
        NumericPolicy(precision_bits=32)
    with pytest.raises(ValueError):
        PhiSeries((), (), 1.0, 0.5)


def test_oversum_check_reports():
    with mpmath.workprec(128):
        r = sum_hyper(PhiSeries((0.2, 0.3), (0.6,), 0.5, 0.7).to_term(), NumericPolicy())
    assert r.sound and 0 < r.oversum_change <= 2 * r.tail_bound


def test_wrong_tail_bound_is_unsound():
    """A bound shrunk below the true tail fails the oversummation check."""
    with mpmath.workprec(128):
        r = sum_hyper(PhiSeries((0.5,), (), 0.5, 0.9).to_term(), NumericPolicy())
    r.tail_bound /= 1000
    assert not r.sound


def test_magic_at_small_point():
    vals = dict(a=F(1, 3), b=F(1, 5), c=F(-1, 4), d=F(2, 7), e=F(1, 6), y=F(1, 3), z=F(1, 4), u=F(-1, 5))
    pt = ParamPoint(vals, {"p": F(1, 3), "q": F(1, 3)})  # half-bases 1/3, so p = q = 1/9
    r = infinite_residual("eq-magic", pt, NumericPolicy())
    assert r.residual < 1e-10 and r.tail_sound
    # bases exactly 1/3 through a float map
    env = {k: float(v) for k, v in vals.items()} | {"p": 1 / 3, "q": 1 / 3}
    assert infinite_residual("eq-magic", env, NumericPolicy()).residual < 1e-10


def test_gasper_solution_at_q_third():
    env = {"a": 0.25, "b": -0.4, "c": 0.3, "d": 0.45, "q": 1 / 3}
    r = infinite_residual("t3.2-solution-gasperid-new", env, NumericPolicy(precision_bits=192))
    assert r.residual < 1e-8 and r.tail_sound and r.tail_total < 1e-10


def test_not_infinite():
    with pytest.raises(ValueError, match="not an infinite identity"):
        infinite_residual("thm1", {}, NumericPolicy())


def test_finite_partial_sums_approach_infinite_identity():
    vals = dict(a=F(1, 3), b=F(1, 5), c=F(-1, 4), d=F(2, 7), e=F(1, 6), y=F(1, 3), z=F(1, 4), u=F(-1, 5))
    pt = ParamPoint(vals, {"p": F(1, 2), "q": F(-2, 3)})
    L, R_ = C.get("eq-important-3.4").exact_sides(pt, 40)
    with mpmath.workprec(128):
        l, r = C.get("eq-magic").sides(to_floats(pt, 128), Evaluator(NumericPolicy()))
    assert abs(float(L) - float(l)) < 1e-8 and abs(float(R_) - float(r)) < 1e-8


SOLUTION_POINT, _, _ = C.admissible_point(
    C.get("t3.2-solution-gasperid-new"), 17,
    probe=lambda pt: iterate_solution_residual(pt, NumericPolicy(), 6))


@pytest.mark.parametrize("iterations,limit", [(1, 1e-10), (5, 1e-9)])
def test_iterated_recurrence(iterations, limit):
    residual, gap = iterate_solution_residual(SOLUTION_POINT, NumericPolicy(), iterations)
    assert residual < limit and gap < 1e-12


def test_product_form_exact_and_float():
    a, b, c, d, q = F(1, 4), F(-2, 5), F(1, 3), F(2, 5), F(1, 5)
    prod = F(1)
    for i in range(7):
        prod /= R.quad_C(a * q ** (2 * i), b, c, d, q)
    assert prod == R.quad_prod_closed(a, b, c, d, q, 6, qpoch)
    _, gap = iterate_solution_residual(SOLUTION_POINT, NumericPolicy(), 6)
    assert gap < 1e-12


def test_iterations_validated():
    with pytest.raises(ValueError):
        iterate_solution_residual(SOLUTION_POINT, NumericPolicy(), 0)


def test_majorant_none_for_growing_quadratic():
    t = HyperTerm(z=0.5, quad=(0.5, -1, 0))
    assert t.majorant(3) is None
