import json
from fractions import Fraction as F

import pytest

from conftest import exact_residuals
from qabel import catalog as C
from qabel.exact_arith import ParamPoint, PoleSignal, SampleSpec, sample_point, stream_seed
from qabel.numeric import NumericPolicy, infinite_residual


def test_listing_sorted_and_complete():
    rows = C.list_identities()
    assert [r[0] for r in rows] == sorted(C.REGISTRY)
    assert len(rows) == len(C.REGISTRY) >= 45
    assert {r[0] for r in C.list_identities("recurrence")} >= {
        "t3.2-quad-recurrence", "cubic-recurrence", "quartic-recurrence", "c4.6-quintic"}
    with pytest.raises(ValueError):
        C.list_identities("bogus")


def test_get_unknown():
    with pytest.raises(KeyError):
        C.get("no-such-id")


def test_kind_mismatch():
    pt = ParamPoint({}, {"q": F(1, 3)})
    with pytest.raises(ValueError):
        C.finite_residual("cubic-recurrence", pt, 1)
    with pytest.raises(ValueError):
        C.recurrence_residual("thm1", pt, 1)


def test_ex25_empty_sum():
    pt = ParamPoint({"y": F(1, 3), "w": F(2, 5), "u": F(-1, 4)}, {"q": F(1, 2)})
    assert C.get("ex3.3-gr-ex2.5").exact_sides(pt, 0) == (1, 1)


@pytest.mark.parametrize("id,ns,points", [
    ("c3.2-rogerspsi65", range(5), 15),
    ("eq-succeed-10phi9", range(5), 10),
    ("t3.2-quad-recurrence", range(1, 7), 10),
    ("cubic-recurrence", range(1, 7), 5),
    ("quartic-recurrence", range(3, 8), 5),
])
def test_entries_exact(id, ns, points):
    rows = exact_residuals(id, ns, points, seed=21)
    assert all(r == 0 for row in rows for r in row)


def test_missing_symbol_rejected():
    with pytest.raises(C.ConstraintViolation):
        C.finite_residual("eq-xinrong-333", ParamPoint({"a": F(1, 2)}, {"q": F(1, 3)}), 2)


def test_half_base_required():
    with pytest.raises(C.ConstraintViolation):
        C.finite_residual("eq-xinrong-333", ParamPoint({"a": F(1, 2), "d": 2, "q": F(1, 9)}), 2)


def test_range_error():
    pt = ParamPoint({"a": F(1, 2), "b": F(1, 5)}, {"q": F(1, 3)})
    with pytest.raises(C.RangeError):
        C.recurrence_residual("quartic-recurrence", pt, 0)


def test_binomial_small_cases():
    assert C.binomial_identity_residual(1) == 0
    assert C.binomial_identity_residual(2) == 0
    assert all(C.binomial_identity_residual(n) == 0 for n in range(1, 31))


def test_entry_perturbation_detected():
    """The two sides taken at points differing in one parameter disagree."""
    entry = C.get("thm1")
    pt, _, _ = C.admissible_point(entry, 5, probe=lambda p: entry.exact_sides(p, 4))
    vals = dict(pt.values)
    vals["x1"] += F(1, 101)
    lhs, _ = entry.exact_sides(pt, 3)
    _, rhs = entry.exact_sides(ParamPoint(vals, pt.half_bases), 3)
    assert lhs != rhs


def test_recurrence_product_checks():
    entry = C.get("t3.2-quad-recurrence")
    for name in entry.checks:
        got = {}

        def probe(pt):
            got["r"] = [entry.check_residual(name, pt, k) for k in range(7)]

        C.admissible_point(entry, stream_seed("checks", name), probe=probe)
        assert got["r"] == [0] * 7


def test_admissible_point_starvation():
    entry = C.get("thm1")

    def never(pt):
        raise PoleSignal("always")

    with pytest.raises(PoleSignal):
        C.admissible_point(entry, 0, probe=never)


def test_infinite_entries_small_sample():
    policy = NumericPolicy()
    for id, *_ in C.list_identities("infinite"):
        got = {}

        def probe(pt):
            got["r"] = infinite_residual(id, pt, policy)

        C.admissible_point(C.get(id), stream_seed("cat", id), probe=probe)
        assert got["r"].passed, id


def test_manifest_round_trip():
    m = json.loads(C.manifest_json())
    assert m["manifest_version"] == 1
    ids = [e["id"] for e in m["entries"]]
    assert ids == sorted(C.REGISTRY)
    withparent = [e for e in m["entries"] if "parent" in e]
    assert len(withparent) == len(C.CHAINS)
