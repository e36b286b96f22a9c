"""Registry of identities with exact and numeric residual checks."""

from __future__ import annotations

import json
from fractions import Fraction

from ..exact_arith import ParamPoint, PoleSignal, SampleSpec, sample_point
from .base import CHAINS, KINDS, REGISTRY, Chain, ConstraintViolation, IdentityEntry, RangeError, RecurrenceEntry
from . import masters, finite, multibasic, recurrences, infinite, chains  # noqa: F401  (registration)
from .chains import chain_for, verify_specialization
from .finite import binomial_identity_residual

MAX_RESAMPLES = 100

__all__ = [
    "ConstraintViolation", "RangeError", "IdentityEntry", "RecurrenceEntry", "Chain",
    "get", "list_identities", "finite_residual", "recurrence_residual", "verify_specialization",
    "chain_for", "binomial_identity_residual", "admissible_point", "manifest", "KINDS",
]


def get(id: str) -> IdentityEntry:
    try:
        return REGISTRY[id]
    except KeyError:
        raise KeyError(f"unknown identity {id!r}") from None


def list_identities(kind: str | None = None) -> list[tuple]:
    """(id, kind, anchor, free_symbols) rows sorted by id."""
    if kind is not None and kind not in KINDS:
        raise ValueError(f"unknown kind {kind}")
    return [(e.id, e.kind, e.anchor, e.free_symbols)
            for e in sorted(REGISTRY.values(), key=lambda e: e.id) if kind in (None, e.kind)]


def finite_residual(id: str, point: ParamPoint, n: int) -> Fraction:
    entry = get(id)
    if entry.kind != "finite":
        raise ValueError(f"{id} is a {entry.kind} entry")
    lhs, rhs = entry.exact_sides(point, n)
    return Fraction(lhs) - Fraction(rhs)


def recurrence_residual(id: str, point: ParamPoint, n: int) -> Fraction:
    entry = get(id)
    if entry.kind != "recurrence":
        raise ValueError(f"{id} is a {entry.kind} entry")
    lhs, rhs = entry.exact_sides(point, n)
    return Fraction(lhs) - Fraction(rhs)


def admissible_point(entry: IdentityEntry, seed: int, den_bound: int = 12, probe=None, start: int = 0):
    """First sampled point (attempt >= start) passing the constraints and ``probe``.

    Returns (point, attempt, resamples). ``probe(point)`` may raise PoleSignal
    or ConstraintViolation to reject a point; after MAX_RESAMPLES rejections
    the last error propagates.
    """
    spec = SampleSpec(entry.symbols, entry.half_bases, den_bound, entry.magnitude, seed)
    last = None
    for i in range(MAX_RESAMPLES + 1):
        pt = sample_point(spec, start + i)
        try:
            entry.check(pt)
            if probe is not None:
                probe(pt)
            return pt, start + i, i
        except (PoleSignal, ConstraintViolation) as exc:
            last = exc
    raise last


def manifest() -> dict:
    return {
        "manifest_version": 1,
        "entries": [REGISTRY[k].to_json() for k in sorted(REGISTRY)],
    }


def manifest_json() -> str:
    return json.dumps(manifest(), indent=2, sort_keys=True)
