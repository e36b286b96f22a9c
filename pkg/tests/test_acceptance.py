"""End-to-end acceptance checks; each test records one PASS/FAIL line."""

from __future__ import annotations

import random
import time
from fractions import Fraction as F

from conftest import chain_residuals, exact_residuals
from qabel import catalog as C
from qabel import transforms as T
from qabel.abel import abel_sbp_residual, closed_diff_residual, exchange_residual
from qabel.catalog.base import CHAINS
from qabel.cli import main
from qabel.exact_arith import PoleSignal, SampleSpec, sample_point, stream_seed
from qabel.numeric import NumericPolicy, infinite_residual
from qabel.qkernel import four_term_residual, four_term_variant_residual

H = F(1, 2)


def _all_zero(rows):
    return all(r == 0 for row in rows for r in row)


def test_1_four_term_identities(acceptance):
    t0 = time.perf_counter()
    spec = SampleSpec(("b", "c", "x", "z"), (), 12, F(3), seed=2024)
    res = []
    for attempt in range(100):
        b, c, x, z = (sample_point(spec, attempt)[s] for s in "bcxz")
        res += [four_term_residual(b, c, x, z), four_term_variant_residual(b, c, x, z)]
    dt = time.perf_counter() - t0
    ok = all(r == 0 for r in res) and len(res) == 200 and dt < 1
    acceptance(1, ok, "four-term identity and variant exact at 100 points", dt)
    assert ok


def _rand_seq(rng, length):
    return [F(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(length)]


def test_2_abel_oracles(acceptance):
    t0 = time.perf_counter()
    rng = random.Random(99)
    res = []
    for _ in range(50):
        length = rng.randint(1, 12)
        A, B = _rand_seq(rng, length + 2), _rand_seq(rng, length + 2)
        # index -1 is the first list entry, so n = length uses every term
        res.append(abel_sbp_residual(lambda k: A[k + 1], lambda k: B[k + 1], length))
        al, be = _rand_seq(rng, length), _rand_seq(rng, length)
        res.append(exchange_residual(lambda k: al[k], lambda k: be[k], length - 1))
    dt = time.perf_counter() - t0
    ok = all(r == 0 for r in res) and dt < 1
    acceptance(2, ok, "summation by parts and double-sum exchange at 50 random pairs", dt)
    assert ok


def test_3_closed_differences(acceptance):
    t0 = time.perf_counter()
    rows = []
    for which in ("diffak", "diffbk", "diffbbk"):
        rows += exact_residuals(f"eq-{which}", range(5), 25, seed=3,
                                fn=lambda id, pt, k: closed_diff_residual(id[3:], pt, k))
    dt = time.perf_counter() - t0
    ok = _all_zero(rows) and len(rows) == 75 and dt < 5
    acceptance(3, ok, "closed forms of the proof-step differences, k = 0..4", dt)
    assert ok


THM41_PATTERNS = [
    ((H,) * 4, (H,) * 4),
    ((H, H, F(1), F(1)), (H, F(1), F(1), F(1))),
    ((H, H, F(3, 2), F(3, 2)), (H, H, F(3, 2), F(3, 2))),
    ((F(3, 2),) * 4, (F(3, 2),) * 4),
    ((H, H, F(1), F(1)), (H, H, F(1), F(1))),
    ((H, H, F(2), F(2)), (H, F(3, 2), F(3, 2), F(3, 2))),
    ((H, H, F(3, 2), F(3, 2)), (H, F(1), F(1), F(3, 2))),
    ((F(1), F(1), F(3, 2), F(5, 2)), (F(1), F(1), F(3, 2), F(5, 2))),
]


def _thm41_rows(r, s, points, seed):
    rows = []
    for trial in range(points):
        spec = SampleSpec(T.EXPONENT_SCALARS, ("tp", "tq"), 12, F(3), stream_seed(seed, r, s, trial))
        for attempt in range(C.MAX_RESAMPLES + 1):
            pt = sample_point(spec, attempt)
            sc = {k: pt[k] for k in T.EXPONENT_SCALARS}
            params = T.ExponentParams(r, s, pt.sigma("tp"), pt.sigma("tq"), sc)
            try:
                rows.append([T.thm41_residual(params, n) for n in range(5)])
                break
            except (PoleSignal, ZeroDivisionError):
                continue
    return rows


def test_4_master_theorems(acceptance):
    t0 = time.perf_counter()
    rows = []
    for id in ("thm1", "thm2", "thm3"):
        got = exact_residuals(id, range(6), 25, seed=4)
        assert len(got) == 25
        rows += got
    for r, s in THM41_PATTERNS:
        got = _thm41_rows(r, s, 10, seed=4)
        assert len(got) == 10, (r, s)
        rows += got
    dt = time.perf_counter() - t0
    ok = _all_zero(rows) and dt < 120
    acceptance(4, ok, "three master transformations (n<=5) and the exponent family (n<=4)", dt)
    assert ok


def test_5_finite_catalog(acceptance):
    t0 = time.perf_counter()
    bad = []
    ids = [i for i, kind, _, _ in C.list_identities("finite")]
    for id in ids:
        entry = C.get(id)
        ns = range(max(entry.n_min, 0), max(entry.n_min, 4) + 1)
        points = 10 if entry.free_symbols else 1
        if not _all_zero(exact_residuals(id, ns, points, seed=5)):
            bad.append(id)
    dt = time.perf_counter() - t0
    ok = not bad and len(ids) >= 20 and dt < 180
    acceptance(5, ok, f"{len(ids)} finite catalog entries exact for n<=4" + (f"; failing {bad}" if bad else ""), dt)
    assert ok


RECURRENCE_RANGES = {
    "t3.2-quad-recurrence": range(0, 7),
    "cubic-recurrence": range(0, 7),
    "quartic-recurrence": range(3, 8),
    "c4.6-quintic": range(0, 5),
}


def test_6_recurrences(acceptance):
    t0 = time.perf_counter()
    assert {i for i, *_ in C.list_identities("recurrence")} == set(RECURRENCE_RANGES)
    rows = []
    for id, ns in RECURRENCE_RANGES.items():
        ns = [n for n in ns if n >= C.get(id).n_min]
        rows += exact_residuals(id, ns, 10, seed=6)
    dt = time.perf_counter() - t0
    ok = _all_zero(rows) and dt < 60
    acceptance(6, ok, "four recurrences exact over their index ranges", dt)
    assert ok


def test_7_specialization_chains(acceptance):
    t0 = time.perf_counter()
    bad = [id for id in sorted(CHAINS) if not _all_zero(chain_residuals(id, range(5), 10, seed=7))]
    dt = time.perf_counter() - t0
    ok = not bad and len(CHAINS) >= 15 and dt < 120
    acceptance(7, ok, f"{len(CHAINS)} specialization chains exact for n<=4" + (f"; failing {bad}" if bad else ""), dt)
    assert ok


def test_8_central_binomial(acceptance):
    t0 = time.perf_counter()
    res = [C.binomial_identity_residual(n) for n in range(1, 31)]
    dt = time.perf_counter() - t0
    ok = all(r == 0 for r in res) and dt < 1
    acceptance(8, ok, "central binomial identity exact for 1<=n<=30", dt)
    assert ok


INFINITE_IDS = [
    "eq-magic", "eq-phiseries-2", "eq-1.39", "eq-phiseries-1-new", "t3.2-solution-gasperid-new",
    "eq-gasperid-222", "eq-gasperid-333", "eq-wang-xu-cubic", "eq-3.47",
]


def test_9_infinite_identities(acceptance):
    t0 = time.perf_counter()
    policy = NumericPolicy()
    worst, unsound = 0.0, []
    for id in INFINITE_IDS:
        entry = C.get(id)
        assert entry.magnitude <= H
        for trial in range(3):
            got = {}

            def probe(pt):
                got["r"] = infinite_residual(id, pt, policy)

            C.admissible_point(entry, stream_seed(9, id, trial), probe=probe)
            worst = max(worst, got["r"].residual)
            if not got["r"].tail_sound:
                unsound.append(id)
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and not unsound and dt < 60
    acceptance(9, ok, f"nine infinite identities, worst residual {worst:.1e}, sound tails", dt)
    assert ok


def test_10_determinism(acceptance, tmp_path):
    t0 = time.perf_counter()
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = [main(["verify", "all", "--seed", "7", "--jobs", "1", "--json", str(a)]),
             main(["verify", "all", "--seed", "7", "--jobs", "2", "--json", str(b)])]
    dt = time.perf_counter() - t0
    ok = a.read_bytes() == b.read_bytes() and codes == [0, 0]
    acceptance(10, ok, "verify all --seed 7 twice gives byte-identical JSON", dt)
    assert ok
