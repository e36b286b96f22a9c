"""Seeded verification campaigns over catalog entries."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction

from .. import catalog as C
from ..catalog.base import CHAINS, ConstraintViolation
from ..catalog.dsl import all_hold
from ..exact_arith import PoleSignal, SampleSpec, sample_point, stream_seed
from ..numeric import Diverged, MaxTermsExceeded, NumericPolicy, infinite_residual

MAX_RESAMPLES = C.MAX_RESAMPLES
_REJECT = (PoleSignal, ConstraintViolation)
_NUMERIC_REJECT = _REJECT + (Diverged, MaxTermsExceeded)


@dataclass
class Settings:
    trials: int = 10
    n_max: int = 4
    den_bound: int = 12
    eps: float = 1e-12
    prec_bits: int = 128
    magnitude: Fraction | None = None


@dataclass
class Report:
    id: str
    kind: str
    trials_requested: int
    trials_admissible: int = 0
    resamples: int = 0
    n_range: list | None = None
    verdict: str = "pass"
    max_residual: float = 0.0
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    def to_json(self, timings: bool = False) -> dict:
        out = asdict(self)
        if not timings:
            out.pop("elapsed_ms")
        return out


class _Starved(Exception):
    pass


def _draw(symbols, half_bases, magnitude, s: Settings, seed, tag, evaluate):
    """Sample until ``evaluate(point)`` succeeds; returns (value, point, attempt)."""
    spec = SampleSpec(symbols, half_bases, s.den_bound, magnitude, stream_seed(seed, *tag))
    for attempt in range(MAX_RESAMPLES + 1):
        point = sample_point(spec, attempt)
        try:
            return evaluate(point), point, attempt
        except _NUMERIC_REJECT:
            continue
    raise _Starved


def _record(rep: Report, *, seed, trial, attempt, point, n, residual, tolerance, check="identity"):
    mag = float(abs(residual))
    rep.max_residual = max(rep.max_residual, mag)
    bad = residual != 0 if tolerance is None else not mag < tolerance
    if bad:
        rep.failures.append({"check": check, "seed": seed, "trial": trial, "attempt": attempt,
                             "point": point.to_json(), "n": n, "residual": str(residual)})


def _exact_trials(rep, entry, s, seed, ns, residual_fn, check):
    for trial in range(s.trials):
        def evaluate(pt):
            return [residual_fn(pt, n) for n in ns]

        mag = entry.magnitude if s.magnitude is None else s.magnitude
        try:
            res, pt, attempt = _draw(entry.symbols, entry.half_bases, mag, s, seed, (entry.id, check, trial), evaluate)
        except _Starved:
            rep.verdict = "inconclusive"
            rep.resamples += MAX_RESAMPLES + 1
            continue
        rep.resamples += attempt
        if check == "identity":
            rep.trials_admissible += 1
        for n, r in zip(ns, res):
            _record(rep, seed=seed, trial=trial, attempt=attempt, point=pt, n=n, residual=r, tolerance=None, check=check)


def _chain_trials(rep, chain, s, seed, ns):
    done = 0
    for trial in range(s.trials):
        def evaluate(pt):
            bad = all_hold(chain.constraints, pt.scope())
            if bad:
                raise ConstraintViolation(str(bad[0]))
            return [C.verify_specialization(chain.entry, pt, n) for n in ns]

        mag = s.magnitude if s.magnitude is not None else Fraction(3)
        try:
            res, pt, attempt = _draw(chain.symbols, chain.half_bases, mag, s, seed, (chain.entry, "chain", trial), evaluate)
        except _Starved:
            rep.verdict = "inconclusive"
            continue
        rep.resamples += attempt
        done += 1
        for n, r in zip(ns, res):
            _record(rep, seed=seed, trial=trial, attempt=attempt, point=pt, n=n, residual=r, tolerance=None, check="chain")
    rep.checks["chain"] = {"parent": chain.parent, "trials_admissible": done}


def run_entry(id: str, s: Settings, seed: int, timings: bool = False) -> dict:
    t0 = time.perf_counter()
    entry = C.get(id)
    if not entry.free_symbols:
        s = replace(s, trials=1)  # every draw would be the same empty point
    rep = Report(id, entry.kind, s.trials)
    if entry.kind == "infinite":
        policy = NumericPolicy(target_eps=s.eps, precision_bits=s.prec_bits)
        mag = entry.magnitude if s.magnitude is None else s.magnitude
        sound, tail = True, 0.0
        for trial in range(s.trials):
            def evaluate(pt):
                return infinite_residual(id, pt, policy)

            try:
                res, pt, attempt = _draw(entry.symbols, entry.half_bases, mag, s, seed, (id, "identity", trial), evaluate)
            except _Starved:
                rep.verdict = "inconclusive"
                continue
            rep.resamples += attempt
            rep.trials_admissible += 1
            sound = sound and res.tail_sound
            tail = max(tail, res.tail_total)
            _record(rep, seed=seed, trial=trial, attempt=attempt, point=pt, n=None, residual=res.residual,
                    tolerance=policy.tolerance)
        rep.checks["tail_bounds_sound"] = sound
        rep.checks["max_tail_bound"] = tail
        if not sound:
            rep.failures.append({"check": "tail_bound", "seed": seed})
    else:
        lo = entry.n_min
        ns = list(range(lo, max(s.n_max, lo) + 1))
        rep.n_range = [ns[0], ns[-1]]
        fn = C.finite_residual if entry.kind == "finite" else C.recurrence_residual
        _exact_trials(rep, entry, s, seed, ns, lambda pt, n: fn(id, pt, n), "identity")
        for name in sorted(getattr(entry, "checks", {})):
            ks = list(range(0, 7))
            _exact_trials(rep, entry, s, seed, ks, lambda pt, k: entry.check_residual(name, pt, k), name)
            rep.checks[name] = "k=0..6"
        chain = CHAINS.get(id)
        if chain is not None:
            _chain_trials(rep, chain, s, seed, ns)
    if rep.failures:
        rep.verdict = "fail"
    rep.elapsed_ms = int((time.perf_counter() - t0) * 1000)
    return rep.to_json(timings)
