"""Exception types raised across the package."""


class PathforgeError(ValueError):
    """Base class for all pathforge errors."""


class WordError(PathforgeError):
    """A word could not be parsed into a balanced path."""


class IllegalCharacter(WordError):
    def __init__(self, char: str, position: int) -> None:
        # position is 1-based
        super().__init__(f"illegal character {char!r} at position {position}")
        self.char = char
        self.position = position


class OddLength(WordError):
    def __init__(self, length: int) -> None:
        super().__init__(f"word length {length} is odd")
        self.length = length


class UnbalancedWord(WordError):
    def __init__(self, ups: int, downs: int) -> None:
        super().__init__(f"word has {ups} up-steps and {downs} down-steps")
        self.ups = ups
        self.downs = downs


class EmptyWord(WordError):
    def __init__(self) -> None:
        super().__init__("empty word (n = 0 is not a path)")


class MalformedPair(PathforgeError):
    """Checkmark sequences that do not form a checkmark pair."""


class WalkError(PathforgeError):
    """The reconstitution walk ended in an inconsistent state."""


class LimitExceeded(PathforgeError):
    """Requested size exceeds the configured enumeration limit."""


class ArithmeticOverflow(PathforgeError):
    """A count would not fit the fixed-width accumulator."""
