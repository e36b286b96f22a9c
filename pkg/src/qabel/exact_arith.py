"""Exact rational scalars, pole-safe division and deterministic point sampling."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

Rational = Fraction


class PoleSignal(ArithmeticError):
    """A denominator vanished: the sampled point is inadmissible."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction, int or string")
    return Fraction(x)


def guard_nonzero(x: Fraction) -> Fraction:
    if x == 0:
        raise PoleSignal("vanishing denominator")
    return x


def div(num, den) -> Fraction:
    return Fraction(num) / guard_nonzero(Fraction(den))


def pow_int(x, n: int) -> Fraction:
    x = Fraction(x)
    if n < 0:
        if x == 0:
            raise PoleSignal("pole: zero raised to a negative power")
        return 1 / x ** (-n)
    return x ** n


def _frozen(m: Mapping[str, object]) -> Mapping[str, Fraction]:
    return MappingProxyType({k: as_rational(v) for k, v in m.items()})


@dataclass(frozen=True)
class ParamPoint:
    """Rational values for the free symbols plus half-bases (base = sigma**2)."""

    values: Mapping[str, Fraction] = field(default_factory=dict)
    half_bases: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(self.values))
        object.__setattr__(self, "half_bases", _frozen(self.half_bases))
        clash = set(self.values) & set(self.half_bases)
        if clash:
            raise ValueError(f"symbols in both maps: {sorted(clash)}")
        for name, s in self.half_bases.items():
            if s == 0 or s * s == 1:
                raise ValueError(f"half-base {name}={s} gives a degenerate base")

    def __getitem__(self, name: str) -> Fraction:
        if name in self.values:
            return self.values[name]
        return self.half_bases[name] ** 2

    def __contains__(self, name: str) -> bool:
        return name in self.values or name in self.half_bases

    def sigma(self, name: str) -> Fraction:
        return self.half_bases[name]

    def scope(self) -> dict[str, Fraction]:
        """Every symbol mapped to its value, with bases squared out."""
        env = dict(self.values)
        env.update({k: s * s for k, s in self.half_bases.items()})
        return env

    def to_json(self) -> dict:
        return {
            "values": {k: str(v) for k, v in sorted(self.values.items())},
            "half_bases": {k: str(v) for k, v in sorted(self.half_bases.items())},
        }


@dataclass(frozen=True)
class SampleSpec:
    symbols: tuple[str, ...]
    half_base_symbols: tuple[str, ...] = ()
    denominator_bound: int = 12
    magnitude_bound: Fraction = Fraction(3)
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "half_base_symbols", tuple(self.half_base_symbols))
        object.__setattr__(self, "magnitude_bound", as_rational(self.magnitude_bound))
        if self.denominator_bound < 2:
            raise ValueError("denominator_bound must be at least 2")
        if self.magnitude_bound <= 0:
            raise ValueError("magnitude_bound must be positive")
        if self.magnitude_bound < Fraction(1, self.denominator_bound):
            raise ValueError("magnitude_bound admits no sample value")
        if set(self.symbols) & set(self.half_base_symbols):
            raise ValueError("a symbol cannot be both a value and a half-base")


def stream_seed(*parts) -> int:
    """Stable 64-bit seed from arbitrary parts, independent of PYTHONHASHSEED."""
    text = "\x1f".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "big")


def _draw(rng: random.Random, bound: int, mag: Fraction, avoid_units: bool) -> Fraction:
    while True:
        num = rng.randint(-bound, bound)
        if num == 0:
            continue
        v = Fraction(num, rng.randint(1, bound))
        if abs(v) > mag or (avoid_units and abs(v) == 1):
            continue
        return v


def sample_point(spec: SampleSpec, attempt: int) -> ParamPoint:
    rng = random.Random(stream_seed(spec.seed, attempt))
    D, M = spec.denominator_bound, spec.magnitude_bound
    values = {s: _draw(rng, D, M, False) for s in spec.symbols}
    halves = {s: _draw(rng, D, M, True) for s in spec.half_base_symbols}
    return ParamPoint(values, halves)
