from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qabel.abel import abel_sbp_residual, exchange_residual
from qabel.exact_arith import SampleSpec, pow_int, sample_point
from qabel.qkernel import dfun, four_term_residual, qpoch, qpoch_recip

nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=20).filter(lambda x: x != 0)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=20)


@given(nonzero, nonzero, nonzero, nonzero)
def test_four_term(b, c, x, z):
    assert four_term_residual(b, c, x, z) == 0


@given(rationals, nonzero.filter(lambda q: abs(q) != 1), st.integers(-4, 6), st.integers(-4, 6))
def test_qpoch_split(a, q, m, n):
    try:
        whole = qpoch(a, q, m + n)
        parts = qpoch(a, q, m) * qpoch(a * pow_int(q, m), q, n)
    except ArithmeticError:
        return
    assert whole == parts


@given(rationals, nonzero, st.integers(-5, 5))
def test_qpoch_recip(a, q, n):
    try:
        r = qpoch_recip(a, q, n)
    except ArithmeticError:
        return
    if r != 0:
        assert r * qpoch(a, q, n) == 1


@given(st.lists(rationals, max_size=6))
def test_dfun_is_product(xs):
    out = Fraction(1)
    for x in xs:
        out *= 1 - x
    assert dfun(xs) == out


@given(st.data(), st.integers(0, 12))
def test_summation_by_parts(data, n):
    A = data.draw(st.lists(rationals, min_size=n + 2, max_size=n + 2))
    B = data.draw(st.lists(rationals, min_size=n + 2, max_size=n + 2))
    assert abel_sbp_residual(lambda k: A[k + 1], lambda k: B[k + 1], n) == 0


@given(st.data(), st.integers(0, 10))
def test_exchange(data, n):
    a = data.draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    b = data.draw(st.lists(rationals, min_size=n + 1, max_size=n + 1))
    assert exchange_residual(lambda k: a[k], lambda k: b[k], n) == 0


@settings(max_examples=50)
@given(st.integers(2, 30), st.integers(0, 10 ** 6), st.integers(0, 500),
       st.fractions(min_value=Fraction(1, 2), max_value=5))
def test_sampler_bounds(bound, seed, attempt, mag):
    spec = SampleSpec(("a", "b"), ("q",), bound, mag, seed)
    pt = sample_point(spec, attempt)
    for v in list(pt.values.values()) + [pt.sigma("q")]:
        assert v != 0 and abs(v) <= mag and v.denominator <= bound and abs(v.numerator) <= bound
    assert abs(pt.sigma("q")) != 1
