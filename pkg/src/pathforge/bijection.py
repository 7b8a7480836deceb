"""The map between bi-banded and peak-counting paths, and its inverse.

``phi`` splits a word into odd- and even-position letters, toggles the odd
part to get north-west checkmarks, drops the last even letter to get
south-west checkmarks, and rebuilds a path from that checkmark pair.  A
path weighing ``a^(2n-2v) b^(2v)`` maps to one with ``v + 1`` peaks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .checkmark import CheckmarkPair, from_checkmarks, to_checkmarks
from .path import Path, Step, heights, Word
from .weighting import bibanded_monomial, peak_monomial


@dataclass(frozen=True)
class SplitWord:
    s_odd: tuple[Step, ...]
    s_even: tuple[Step, ...]

    @classmethod
    def of(cls, word: Word) -> SplitWord:
        return cls(word.steps[0::2], word.steps[1::2])

    def interleave(self) -> Word:
        out = []
        for a, b in zip(self.s_odd, self.s_even):
            out += (a, b)
        return Word(tuple(out))


def split_to_pair(split: SplitWord) -> CheckmarkPair:
    nw = tuple(s is Step.DOWN for s in split.s_odd)
    sw = tuple(s is Step.UP for s in split.s_even[:-1])
    return CheckmarkPair(len(split.s_odd), nw, sw)


def pair_to_split(pair: CheckmarkPair) -> SplitWord:
    n = pair.n
    s_odd = tuple(Step.DOWN if a else Step.UP for a in pair.nw)
    s_even = [Step.UP if a else Step.DOWN for a in pair.sw]
    ups = sum(1 for s in s_odd if s is Step.UP) + sum(1 for s in s_even if s is Step.UP)
    missing = n - ups
    assert missing in (0, 1), f"cannot complete word: {missing} up-steps missing"
    s_even.append(Step.UP if missing else Step.DOWN)
    return SplitWord(s_odd, tuple(s_even))


def phi(path: Path) -> Path:
    return from_checkmarks(split_to_pair(SplitWord.of(path.word)))


def phi_inverse(path: Path) -> Path:
    return heights(pair_to_split(to_checkmarks(path)).interleave())


@dataclass(frozen=True)
class WeightCorrespondence:
    v: int
    exp_m: int
    holds: bool


def check_weight_correspondence(path: Path) -> WeightCorrespondence:
    v = bibanded_monomial(path).exp_b // 2
    exp_m = peak_monomial(phi(path)).exp_m
    return WeightCorrespondence(v, exp_m, exp_m == v + 1)


def mapping_record(path: Path, inverse: bool = False) -> dict:
    """JSON mapping record for ``path`` pushed forward (or back)."""
    image = phi_inverse(path) if inverse else phi(path)
    # the bi-banded side is always the preimage
    banded, peaked = (image, path) if inverse else (path, image)
    return {
        "input": str(path),
        "image": str(image),
        "bibanded": bibanded_monomial(banded).to_json(),
        "peaks": peak_monomial(peaked).to_json(),
        "dyck_in": path.is_dyck,
        "dyck_out": image.is_dyck,
    }


@dataclass(frozen=True)
class SweepReport:
    n: int
    paths: int
    bijective: bool
    inverse_ok: bool
    dyck_preserved: bool
    weights_transported: bool

    @property
    def ok(self) -> bool:
        return self.bijective and self.inverse_ok and self.dyck_preserved and self.weights_transported


def sweep(n: int, backend: str | None = None) -> SweepReport:
    """Check the bijection over all of the bilateral paths of length ``2n`` at once."""
    masks = _kernels.enumerate_masks(n, False, backend)
    image = _kernels.phi_masks(masks, n, backend)
    back = _kernels.phi_inverse_masks(image, n, backend)
    evu, _, dyck_in = _kernels.path_stats(masks, n, backend)
    _, peaks_out, dyck_out = _kernels.path_stats(image, n, backend)
    return SweepReport(
        n=n,
        paths=len(masks),
        bijective=bool(np.array_equal(np.sort(image), masks)),
        inverse_ok=bool(np.array_equal(back, masks)),
        dyck_preserved=bool(np.array_equal(dyck_in, dyck_out)),
        weights_transported=bool(np.array_equal(evu + 1, peaks_out)),
    )
