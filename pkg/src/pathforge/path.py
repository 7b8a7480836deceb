"""Steps, words, height profiles and turns of lattice paths.

A path of length ``2n`` starts at ``(0, 0)`` and ends at ``(2n, 0)`` using
unit up-steps ``(1, 1)`` and down-steps ``(1, -1)``.  Dyck paths never go
below the axis; bilateral paths may.

Vertex and edge positions are 0-based internally.  Anything shown to a
user (error messages, JSON, CLI) uses 1-based edge labels.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptyWord, IllegalCharacter, OddLength, UnbalancedWord


class Step(enum.Enum):
    UP = "U"
    DOWN = "D"

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1

    def toggled(self) -> Step:
        return Step.DOWN if self is Step.UP else Step.UP


class Lattice(enum.Enum):
    DYCK = "dyck"
    BILATERAL = "bilateral"

    @classmethod
    def parse(cls, value: str | Lattice) -> Lattice:
        if isinstance(value, Lattice):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(f"unknown lattice {value!r}") from None


_LETTERS = {"U": Step.UP, "1": Step.UP, "D": Step.DOWN, "0": Step.DOWN}


@dataclass(frozen=True, order=False)
class Word:
    """A balanced sequence of steps with ``n`` ups and ``n`` downs."""

    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        steps = tuple(self.steps)
        object.__setattr__(self, "steps", steps)
        if not steps:
            raise EmptyWord()
        if len(steps) % 2:
            raise OddLength(len(steps))
        ups = sum(1 for s in steps if s is Step.UP)
        if 2 * ups != len(steps):
            raise UnbalancedWord(ups, len(steps) - ups)

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __str__(self) -> str:
        return "".join(s.value for s in self.steps)

    def sort_key(self) -> tuple[int, ...]:
        """Key realising the canonical order, lexicographic with U < D."""
        return tuple(0 if s is Step.UP else 1 for s in self.steps)

    def __lt__(self, other: Word) -> bool:
        return self.sort_key() < other.sort_key()


@dataclass(frozen=True)
class Path:
    """A word together with its height profile ``h_0 .. h_2n``."""

    word: Word
    heights: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def steps(self) -> tuple[Step, ...]:
        return self.word.steps

    @cached_property
    def is_dyck(self) -> bool:
        return min(self.heights) >= 0

    def vertices(self) -> list[tuple[int, int]]:
        return list(enumerate(self.heights))

    def __str__(self) -> str:
        return str(self.word)

    def __lt__(self, other: Path) -> bool:
        return self.word < other.word

    def to_json(self) -> dict:
        return {
            "word": str(self.word),
            "heights": list(self.heights),
            "dyck": self.is_dyck,
        }


@dataclass(frozen=True)
class TurnList:
    """Peak and valley vertex indices (0-based vertices, ``0 .. 2n``)."""

    peaks: tuple[int, ...]
    valleys: tuple[int, ...]


def parse_word(text: str) -> Word:
    """Parse ``text`` over ``{U, D}`` (or ``{1, 0}``) into a :class:`Word`.

    Raises :class:`IllegalCharacter` with a 1-based position,
    :class:`OddLength`, :class:`UnbalancedWord` or :class:`EmptyWord`.
    """
    steps = []
    for pos, ch in enumerate(text, start=1):
        try:
            steps.append(_LETTERS[ch.upper()])
        except KeyError:
            raise IllegalCharacter(ch, pos) from None
    return Word(tuple(steps))


def render_word(word: Word | Path) -> str:
    return str(word)


def word_from_steps(steps: Iterable[Step]) -> Word:
    return Word(tuple(steps))


def heights(word: Word) -> Path:
    h = 0
    out = [0]
    for s in word.steps:
        h += s.delta
        out.append(h)
    return Path(word, tuple(out))


def path_from_text(text: str) -> Path:
    return heights(parse_word(text))


def path_from_steps(steps: Sequence[Step]) -> Path:
    return heights(Word(tuple(steps)))


def classify(path: Path) -> bool:
    """True iff ``path`` is a Dyck path (never below the axis)."""
    return path.is_dyck


def in_lattice(path: Path, lattice: Lattice) -> bool:
    return lattice is Lattice.BILATERAL or path.is_dyck


def turns(path: Path) -> TurnList:
    """Peaks and valleys of ``path``.

    The path is treated as if preceded by a virtual up-step into ``v_0`` and
    followed by a virtual down-step out of ``v_2n``.  So ``v_0`` is a peak
    iff the first step is down and ``v_2n`` is a peak iff the last step is
    up; neither end is ever a valley.
    """
    steps = path.steps
    t = len(steps)
    # step entering vertex i and leaving it, with the virtual boundary steps
    into = (Step.UP,) + steps
    out = steps + (Step.DOWN,)
    peaks = []
    valleys = []
    for i in range(t + 1):
        if into[i] is Step.UP and out[i] is Step.DOWN:
            peaks.append(i)
        elif into[i] is Step.DOWN and out[i] is Step.UP:
            valleys.append(i)
    return TurnList(tuple(peaks), tuple(valleys))
