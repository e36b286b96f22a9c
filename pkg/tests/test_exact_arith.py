from fractions import Fraction as F

import pytest

from qabel.exact_arith import (ParamPoint, PoleSignal, SampleSpec, as_rational, div, guard_nonzero,
                               pow_int, sample_point, stream_seed)


def test_pow_int_values():
    assert pow_int(F(1, 2), -3) == 8
    assert pow_int(F(-2, 3), 2) == F(4, 9)
    assert all(pow_int(x, 0) == 1 for x in (F(5), F(-1, 7), F(3, 11)))


def test_pow_int_zero_negative_is_pole():
    with pytest.raises(PoleSignal):
        pow_int(0, -1)


def test_guard_and_div():
    assert guard_nonzero(F(3, 7)) == F(3, 7)
    with pytest.raises(PoleSignal):
        guard_nonzero(F(0))
    a = F(1)
    with pytest.raises(PoleSignal):
        div(1, 1 - a)


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == F(3, 4)


def test_point_half_bases():
    pt = ParamPoint({"a": F(2)}, {"q": F(-1, 3)})
    assert pt["q"] == F(1, 9) and pt.sigma("q") == F(-1, 3)
    assert pt.scope() == {"a": 2, "q": F(1, 9)}
    with pytest.raises(ValueError):
        ParamPoint({"q": 1}, {"q": 2})


def test_sampling_is_deterministic():
    spec = SampleSpec(("a", "b"), ("q",), 12, F(3), seed=5)
    assert sample_point(spec, 3) == sample_point(spec, 3)
    assert sample_point(spec, 3).to_json() == sample_point(SampleSpec(("a", "b"), ("q",), 12, F(3), 5), 3).to_json()


def test_small_denominator_bound():
    allowed = {F(s * n, d) for s in (1, -1) for n in (1, 2) for d in (1, 2)}
    spec = SampleSpec(("a", "b", "c"), ("q",), 2, F(3), seed=0)
    for attempt in range(200):
        pt = sample_point(spec, attempt)
        assert set(pt.values.values()) <= allowed
        # half-bases avoid +-1 so the base is never 1
        assert pt.sigma("q") in allowed - {1, -1}


def test_attempt_streams_rarely_collide():
    spec = SampleSpec(("a", "b", "c", "d"), (), 12, F(3), seed=1)
    seen = [tuple(sample_point(spec, i).values.values()) for i in range(1000)]
    assert len(seen) - len(set(seen)) < 5


def test_stream_seed_stable():
    # fixed value: independent of PYTHONHASHSEED and of the process
    assert stream_seed(7, "thm1", 0) == stream_seed(7, "thm1", 0)
    assert stream_seed(7, "thm1", 0) != stream_seed(7, "thm1", 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        SampleSpec(("a",), (), 1)
    with pytest.raises(ValueError):
        SampleSpec(("a",), ("a",))
