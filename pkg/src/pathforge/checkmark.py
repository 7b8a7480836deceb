"""Checkmark representation of paths.

A path of length ``2n`` sits in the square bounding box with corners
``(0,0), (n,n), (2n,0), (n,-n)``.  The north-west sequence has ``n``
labels; label ``k`` is the anti-diagonal ``i + h = 2(k - 1)`` and carries an
arrow when the path turns right (a peak) on it.  The south-west sequence has
``n - 1`` labels; label ``k`` is the diagonal ``i - h = 2k`` and carries an
arrow when the path turns left (a valley) on it.  Turns on the north-east
and south-east walls leave no mark.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MalformedPair, WalkError
from .path import Path, Step, heights, turns, Word

ARROW = "^"
BLANK = "."


def satisfies_condition_i(nw: Sequence[bool], sw: Sequence[bool]) -> bool:
    """North-west arrows equal the south-west arrows or exceed them by one."""
    return sum(nw) - sum(sw) in (0, 1)


@dataclass(frozen=True)
class CheckmarkPair:
    """North-west and south-west checkmark sequences (``True`` = arrow)."""

    n: int
    nw: tuple[bool, ...]
    sw: tuple[bool, ...]

    def __post_init__(self) -> None:
        nw = tuple(bool(x) for x in self.nw)
        sw = tuple(bool(x) for x in self.sw)
        object.__setattr__(self, "nw", nw)
        object.__setattr__(self, "sw", sw)
        if self.n < 1:
            raise MalformedPair(f"n must be positive, got {self.n}")
        if len(nw) != self.n or len(sw) != self.n - 1:
            raise MalformedPair(
                f"expected sequence lengths {self.n} and {self.n - 1}, "
                f"got {len(nw)} and {len(sw)}"
            )
        if not satisfies_condition_i(nw, sw):
            raise MalformedPair(
                f"{sum(nw)} north-west arrows vs {sum(sw)} south-west arrows; "
                "north-west must equal or exceed south-west by one"
            )

    @classmethod
    def from_labels(cls, n: int, nw: Iterable[int], sw: Iterable[int]) -> CheckmarkPair:
        """Build from 1-based arrow labels."""
        nw_set, sw_set = set(nw), set(sw)
        for label in nw_set:
            if not 1 <= label <= n:
                raise MalformedPair(f"north-west label {label} outside 1..{n}")
        for label in sw_set:
            if not 1 <= label <= n - 1:
                raise MalformedPair(f"south-west label {label} outside 1..{n - 1}")
        return cls(
            n,
            tuple(k in nw_set for k in range(1, n + 1)),
            tuple(k in sw_set for k in range(1, n)),
        )

    @property
    def nw_labels(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.nw, start=1) if a)

    @property
    def sw_labels(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.sw, start=1) if a)

    @property
    def nw_arrows(self) -> int:
        return sum(self.nw)

    @property
    def sw_arrows(self) -> int:
        return sum(self.sw)

    def to_text(self) -> str:
        def enc(seq):
            return "".join(ARROW if a else BLANK for a in seq)

        return f"NW={enc(self.nw)};SW={enc(self.sw)}"

    def to_json(self) -> dict:
        return {"n": self.n, "nw": list(self.nw_labels), "sw": list(self.sw_labels)}

    @classmethod
    def from_json(cls, data: dict) -> CheckmarkPair:
        return cls.from_labels(int(data["n"]), data.get("nw", ()), data.get("sw", ()))


_TEXT_RE = re.compile(r"^\s*NW=([.^]*)\s*;\s*SW=([.^]*)\s*$")


def parse_checkmarks(text: str) -> CheckmarkPair:
    """Parse ``"NW=.^^;SW=^."`` into a pair."""
    m = _TEXT_RE.match(text)
    if not m:
        raise MalformedPair(f"cannot parse checkmark text {text!r}")
    nw = tuple(c == ARROW for c in m.group(1))
    sw = tuple(c == ARROW for c in m.group(2))
    return CheckmarkPair(len(nw), nw, sw)


def to_checkmarks(path: Path) -> CheckmarkPair:
    n = path.n
    h = path.heights
    tl = turns(path)
    nw = [False] * n
    sw = [False] * (n - 1)
    for i in tl.peaks:
        d = i + h[i]
        if d < 2 * n:
            nw[d // 2] = True
    for i in tl.valleys:
        e = i - h[i]
        if e < 2 * n:
            sw[e // 2 - 1] = True
    return CheckmarkPair(n, tuple(nw), tuple(sw))


def walk(n: int, nw: Sequence[bool], sw: Sequence[bool]) -> list[Step]:
    """Reconstitution walk: steps of the path encoded by ``(nw, sw)``.

    Starts at the origin heading up.  At every vertex one check is made for
    the current heading: heading up, turn down on the north-east wall or on a
    north-west arrow's anti-diagonal; heading down, turn up on the south-east
    wall or on a south-west arrow's diagonal.  Then one step is taken.
    """
    t = 2 * n
    i = h = 0
    up = True
    used_nw = used_sw = 0
    steps: list[Step] = []
    while i < t:
        if up:
            d = i + h
            if d == t:
                up = False
            elif nw[d // 2]:
                up = False
                used_nw += 1
        else:
            e = i - h
            if e == t:
                up = True
            elif e >= 2 and sw[e // 2 - 1]:
                up = True
                used_sw += 1
        if up:
            steps.append(Step.UP)
            h += 1
        else:
            steps.append(Step.DOWN)
            h -= 1
        i += 1
    if h != 0 or used_nw != sum(nw) or used_sw != sum(sw):
        raise WalkError(
            f"walk ended at height {h} using {used_nw}/{sum(nw)} north-west "
            f"and {used_sw}/{sum(sw)} south-west arrows"
        )
    return steps


def from_checkmarks(pair: CheckmarkPair) -> Path:
    if not satisfies_condition_i(pair.nw, pair.sw):
        raise MalformedPair("pair violates the arrow-count condition")
    return heights(Word(tuple(walk(pair.n, pair.nw, pair.sw))))


def is_dyck_pair(pair: CheckmarkPair) -> bool:
    """Whether ``pair`` encodes a Dyck path.

    Requires equal arrow counts and the h-th north-west arrow label to be
    strictly greater than the h-th south-west arrow label for every h.
    """
    ks = pair.nw_labels
    ls = pair.sw_labels
    if len(ks) != len(ls):
        return False
    return all(k > l for k, l in zip(ks, ls))
