from __future__ import annotations

from fractions import Fraction

import pytest

from qabel import catalog as C
from qabel.catalog.base import CHAINS
from qabel.catalog.dsl import all_hold
from qabel.exact_arith import PoleSignal, SampleSpec, sample_point, stream_seed

ACCEPTANCE_LINES: list[str] = []


def exact_residuals(id: str, ns, points: int, seed: int = 1, fn=None):
    """Residuals at ``points`` admissible points for every n in ns: a list of lists."""
    entry = C.get(id)
    fn = fn or (C.finite_residual if entry.kind == "finite" else C.recurrence_residual)
    out = []
    for trial in range(points):
        got = {}

        def probe(pt):
            got["r"] = [fn(id, pt, n) for n in ns]

        C.admissible_point(entry, stream_seed(seed, id, trial), probe=probe)
        out.append(got["r"])
    return out


def chain_residuals(id: str, ns, points: int, seed: int = 1, chain=None):
    chain = chain or CHAINS[id]
    out = []
    for trial in range(points):
        spec = SampleSpec(chain.symbols, chain.half_bases, 12, Fraction(3), stream_seed(seed, id, "chain", trial))
        for attempt in range(C.MAX_RESAMPLES + 1):
            pt = sample_point(spec, attempt)
            if all_hold(chain.constraints, pt.scope()):
                continue
            try:
                out.append([C.verify_specialization(id, pt, n) for n in ns])
                break
            except (PoleSignal, C.ConstraintViolation):
                continue
        else:
            raise AssertionError(f"{id}: chain starved")
    return out


@pytest.fixture
def acceptance():
    """Record a criterion line; the summary prints all of them at the end."""
    def record(number: int, ok: bool, text: str, seconds: float):
        ACCEPTANCE_LINES.append(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}  [{seconds:.2f}s]")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
