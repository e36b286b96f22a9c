from dataclasses import replace
from fractions import Fraction as F

import pytest

from conftest import exact_residuals
from qabel import catalog as C
from qabel import transforms as T
from qabel.exact_arith import ParamPoint, PoleSignal, SampleSpec, sample_point, stream_seed

H = F(1, 2)
PARAMS = T.MasterParams(
    a=(F(1, 3), F(-2, 5), F(3, 7), F(5, 4)),
    sigma_p=(F(1, 2), F(-2, 3), F(3, 5), F(1, 4)),
    x=(F(2, 3), F(1, 5), F(-3, 4), F(4, 7)),
    sigma_q=(F(-1, 3), F(2, 5), F(1, 2), F(3, 4)),
)


@pytest.mark.parametrize("fn", [T.thm1_residual, T.thm2_residual, T.thm3_residual, T.thm3_derivation_residual])
def test_masters_at_fixed_point(fn):
    assert [fn(PARAMS, n) for n in range(6)] == [0] * 6


def test_master_negative_control():
    """Perturbing one side's data while keeping the other breaks the identity."""
    lhs, _ = T.thm1_sides(PARAMS, 3)
    _, rhs = T.thm1_sides(replace(PARAMS, a=(F(1, 3), F(-2, 5), F(3, 7), F(6, 5))), 3)
    assert lhs != rhs


@pytest.mark.parametrize("id", ["thm1", "thm2", "thm3"])
def test_masters_random_points(id):
    rows = exact_residuals(id, range(1, 6), 5, seed=11)
    assert all(r == 0 for row in rows for r in row)


def test_gamma_zero_is_signalled():
    # repeating (x, sigma) pairs makes x1 x2 s1 s2 = x3 x4 s3 s4, so every Gamma_k vanishes
    p = replace(PARAMS, x=(F(1, 2), F(3), F(1, 2), F(3)), sigma_q=(F(1, 3), F(2, 5), F(1, 3), F(2, 5)))
    with pytest.raises(T.GammaZero):
        [T.thm2_residual(p, n) for n in range(4)]
    assert issubclass(T.GammaZero, PoleSignal)


def test_param_validation():
    with pytest.raises(ValueError):
        T.MasterParams((1, 2, 3), (1, 1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        T.MasterParams((1, 2, 3, 0), (1, 1, 1, 1), (1, 1, 1, 1), (1, 1, 1, 1))
    assert T.MasterParams.from_point(PARAMS.to_point()) == PARAMS


SCALARS = dict(a=F(1, 3), b=F(2, 5), c=F(-3, 7), d=F(1, 4), e=F(5, 6),
               x=F(2, 3), y=F(-1, 5), z=F(3, 8), w=F(1, 7), u=F(4, 9))


def test_exponent_family_half_pattern_matches_bibasic_entry():
    """r = s = (1/2,...) reproduces the bibasic entry that specializes the first transformation."""
    for tp, tq in ((F(2, 3), F(-1, 2)), (F(1, 3), F(3, 4))):
        params = T.ExponentParams((H,) * 4, (H,) * 4, tp, tq, SCALARS)
        pt = ParamPoint(SCALARS, {"p": tp * tp, "q": tq * tq})
        ratios = set()
        for n in range(1, 5):
            el, er = T.thm41_sides(params, n)
            cl, cr = C.get("c3.2-rogerspsi65").exact_sides(pt, n)
            assert el == er and cl == cr
            ratios.add(el / cl)
        assert len(ratios) == 1
    assert [C.verify_specialization("c3.2-rogerspsi65", p, n)
            for p in [sample_point(SampleSpec(C.CHAINS["c3.2-rogerspsi65"].symbols,
                                              C.CHAINS["c3.2-rogerspsi65"].half_bases, 12, F(3), 3), 0)]
            for n in range(3)] == [0, 0, 0]


def test_exponent_family_cubic_pattern():
    r, s = (H, H, F(1), F(1)), (H, F(1), F(1), F(1))
    done = 0
    spec = SampleSpec(T.EXPONENT_SCALARS, ("tp", "tq"), 12, F(3), stream_seed("cubic"))
    for attempt in range(40):
        pt = sample_point(spec, attempt)
        params = T.ExponentParams(r, s, pt.sigma("tp"), pt.sigma("tq"), {k: pt[k] for k in T.EXPONENT_SCALARS})
        try:
            assert [T.thm41_residual(params, n) for n in range(5)] == [0] * 5
        except PoleSignal:
            continue
        done += 1
        if done == 4:
            break
    assert done == 4


def test_boundary_closed_form():
    params = T.ExponentParams((H, H, F(1), F(1)), (H, F(1), F(1), F(1)), F(2, 3), F(-1, 2), SCALARS)
    closed, direct = T.thm41_boundary(params)
    assert closed == direct


def test_exponent_validation():
    with pytest.raises(ValueError):
        T.ExponentParams((H,) * 4, (H,) * 3, 1, 1, SCALARS)
    with pytest.raises(ValueError):
        T.ExponentParams((H,) * 4, (H,) * 4, 1, 1, {"a": 1})
    with pytest.raises(ValueError):
        T.ExponentParams((-H,) + (H,) * 3, (H,) * 4, 1, 1, SCALARS)
