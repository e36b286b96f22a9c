from fractions import Fraction as F

import pytest

from qabel import catalog as C
from qabel import transforms as T
from qabel.abel import Sequence, abel_sbp_residual, closed_diff_residual, delta, exchange_residual, nabla
from qabel.exact_arith import stream_seed


def test_differences():
    assert all(delta(lambda k: F(4), k) == 0 for k in range(5))
    assert delta(lambda k: F(k * k), 3) == 5
    assert nabla(lambda k: F(9, 2), 2) == 0
    assert nabla(lambda k: F(1, 2) ** k, 1) == F(1, 4)


def test_sequence_of_list_starts_at_minus_one():
    s = Sequence.of([7, 1, 2])
    assert (s(-1), s(0), s(1)) == (7, 1, 2)


def test_sbp_empty():
    assert abel_sbp_residual(lambda k: F(k + 3), lambda k: F(2) ** k, 0) == 0


def test_exchange_trivial_cases():
    assert exchange_residual(lambda k: F(k + 1), lambda k: F(5 - k), 0) == 0
    f = lambda k: F(1, k + 2)
    assert all(exchange_residual(f, f, n) == 0 for n in range(6))


def test_exchange_negative_control():
    """Replacing the triangle i + k <= n by i <= k loses the symmetry."""
    a, b = (lambda k: F(k + 1)), (lambda k: F(1, k + 3))
    n = 4
    side = lambda f, g: sum(f(k) * sum(g(i) for i in range(k + 1)) for k in range(n + 1))
    assert exchange_residual(a, b, n) == 0
    assert side(a, b) - side(b, a) != 0


@pytest.fixture(scope="module")
def master_point():
    pt, _, _ = C.admissible_point(C.get("thm1"), stream_seed("abel-tests"),
                                  probe=lambda p: [closed_diff_residual(w, p, k)
                                                   for w in ("diffak", "diffbk", "diffbbk") for k in range(5)])
    return pt


def test_sbp_on_master_sequences(master_point):
    p = T.MasterParams.from_point(master_point)
    assert abel_sbp_residual(T.seq_A(p), T.seq_B(p), 4) == 0


@pytest.mark.parametrize("which", ["diffak", "diffbk", "diffbbk"])
def test_closed_differences(master_point, which):
    assert all(closed_diff_residual(which, master_point, k) == 0 for k in range(5))


def test_closed_difference_matches_direct(master_point):
    p = T.MasterParams.from_point(master_point)
    assert T.diffak_closed(p, 2) == delta(T.seq_A(p), 2)
    assert T.diffak_closed(p, 2) != delta(T.seq_A(p), 3)


def test_unknown_closed_form(master_point):
    with pytest.raises(ValueError):
        closed_diff_residual("diffzz", master_point, 0)
