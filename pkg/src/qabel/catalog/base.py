"""Catalog record types and the shared registry."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..exact_arith import ParamPoint, PoleSignal
from .dsl import Pred, all_hold


class ConstraintViolation(ValueError):
    """The point does not satisfy an entry's side conditions."""


class RangeError(ValueError):
    """n lies below the smallest index the entry is stated for."""


KINDS = ("finite", "infinite", "recurrence")


@dataclass(frozen=True)
class IdentityEntry:
    """One catalog identity.

    ``sides(point, n)`` returns (lhs, rhs) exactly for finite and recurrence
    entries; for infinite entries ``sides(env, evaluator)`` works on floats.
    """

    id: str
    kind: str
    anchor: str
    symbols: tuple
    half_bases: tuple
    sides: Callable
    constraints: tuple = ()
    n_min: int = 0
    magnitude: Fraction = Fraction(3)
    note: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind}")
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "half_bases", tuple(self.half_bases))
        object.__setattr__(self, "constraints", tuple(self.constraints))

    @property
    def parent(self) -> str | None:
        chain = CHAINS.get(self.id)
        return chain.parent if chain else None

    @property
    def free_symbols(self) -> tuple:
        return self.symbols + self.half_bases

    def check(self, point: ParamPoint) -> None:
        missing = [s for s in self.free_symbols if s not in point]
        if missing:
            raise ConstraintViolation(f"{self.id}: point lacks {missing}")
        for s in self.half_bases:
            if s not in point.half_bases:
                raise ConstraintViolation(f"{self.id}: {s} must be given as a half-base")
        bad = all_hold(self.constraints, point.scope())
        if bad:
            raise ConstraintViolation(f"{self.id}: violates {', '.join(map(str, bad))}")

    def exact_sides(self, point: ParamPoint, n: int):
        if self.kind == "infinite":
            raise ValueError(f"{self.id} is an infinite identity")
        if n < self.n_min:
            raise RangeError(f"{self.id} needs n >= {self.n_min}")
        self.check(point)
        try:
            return self.sides(point, n)
        except ZeroDivisionError as exc:
            raise PoleSignal(str(exc)) from None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "anchor": self.anchor,
            "symbols": list(self.symbols),
            "half_bases": list(self.half_bases),
            "constraints": [p.to_json() for p in self.constraints],
            "n_min": self.n_min,
        }
        chain = CHAINS.get(self.id)
        if chain:
            out["parent"] = {"id": chain.parent, "substitution": chain.substitution}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class RecurrenceEntry(IdentityEntry):
    """A recurrence: ``sides`` gives (state at the shifted argument, the recurrence's right side).

    ``coefficients`` maps a name to an exact evaluator (point, n) -> value;
    ``checks`` maps a name to a residual (point, k) that must vanish.
    """

    state: str = ""
    coefficients: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def check_residual(self, name: str, point: ParamPoint, k: int) -> Fraction:
        self.check(point)
        try:
            return self.checks[name](point, k)
        except ZeroDivisionError as exc:
            raise PoleSignal(str(exc)) from None

    def to_json(self) -> dict:
        out = super().to_json()
        out["state"] = self.state
        out["coefficients"] = sorted(self.coefficients)
        return out


@dataclass(frozen=True)
class Chain:
    """How an entry arises from its parent.

    ``lift`` maps a point over ``symbols``/``half_bases`` to (entry point,
    parent point). ``relate(point, n, eL, eR)`` predicts the parent's sides
    from the entry's; ``parent_eval`` replaces the parent's registered
    evaluator when the parent is used at other fixed data (exponents).
    """

    entry: str
    parent: str
    symbols: tuple
    half_bases: tuple
    lift: Callable
    substitution: str
    scale: Callable = lambda pt, n: Fraction(1)
    parent_n: Callable = lambda n: n
    relate: Callable | None = None
    parent_eval: Callable | None = None
    constraints: tuple = ()


REGISTRY: dict[str, IdentityEntry] = {}
CHAINS: dict[str, Chain] = {}


def register(entry: IdentityEntry) -> IdentityEntry:
    if entry.id in REGISTRY:
        raise ValueError(f"duplicate id {entry.id}")
    REGISTRY[entry.id] = entry
    return entry


def register_chain(chain: Chain) -> Chain:
    if chain.entry in CHAINS:
        raise ValueError(f"duplicate chain for {chain.entry}")
    CHAINS[chain.entry] = chain
    return chain


def values(point, names: str):
    """Tuple of point[name] for each whitespace-separated name."""
    return tuple(point[s] for s in names.split())
