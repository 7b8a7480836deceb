"""Bi-banded edge weights and peak-counting vertex weights.

Monomials are kept as exponent records.  A bi-banded path weighs
``a^exp_a b^exp_b``; a peak-counting path weighs ``m^exp_m``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .path import Path, Step, turns


class Band(enum.Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass(frozen=True)
class BiBandedMonomial:
    exp_a: int
    exp_b: int

    @property
    def n(self) -> int:
        return (self.exp_a + self.exp_b) // 2

    @property
    def v(self) -> int:
        """Half the power of ``b``."""
        return self.exp_b // 2

    def __str__(self) -> str:
        return format_ab(self.exp_a, self.exp_b)

    def to_json(self) -> dict:
        return {"exp_a": self.exp_a, "exp_b": self.exp_b}


@dataclass(frozen=True)
class PeakMonomial:
    exp_m: int

    def __str__(self) -> str:
        return format_m(self.exp_m)

    def to_json(self) -> dict:
        return {"exp_m": self.exp_m}


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def format_ab(exp_a: int, exp_b: int) -> str:
    return (_power("a", exp_a) + _power("b", exp_b)) or "1"


def format_m(exp_m: int) -> str:
    return _power("m", exp_m) or "1"


def band_of(step: Step, start_height: int) -> Band:
    # Python's % gives mathematical parity for negative heights
    even = start_height % 2 == 0
    if (step is Step.UP and even) or (step is Step.DOWN and not even):
        return Band.ODD
    return Band.EVEN


def edge_bands(path: Path) -> list[Band]:
    return [band_of(s, h) for s, h in zip(path.steps, path.heights)]


def bibanded_monomial(path: Path) -> BiBandedMonomial:
    odd = sum(1 for b in edge_bands(path) if b is Band.ODD)
    return BiBandedMonomial(odd, path.length - odd)


def peak_monomial(path: Path) -> PeakMonomial:
    return PeakMonomial(len(turns(path).peaks))


def odd_indexed_ups(path: Path) -> int:
    """Up-steps at odd 1-based positions."""
    return sum(1 for s in path.steps[0::2] if s is Step.UP)


def even_indexed_ups(path: Path) -> int:
    return sum(1 for s in path.steps[1::2] if s is Step.UP)
