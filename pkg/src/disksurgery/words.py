"""Words in a finite-rank free group.

A letter is a nonzero int: ``+i`` stands for the generator ``x_i`` and
``-i`` for ``x_i^-1``. A :class:`Word` is an arbitrary finite letter
sequence; construction never reduces, so a word read off a curve keeps
its cancelling pairs until :meth:`Word.reduced` is called. A
:class:`CyclicWord` is the canonical representative of a conjugacy
class: cyclically reduced and stored in the least rotation under the
letter order x1 < x1^-1 < x2 < x2^-1 < ...

The rank of the ambient free group is a context parameter passed to
parsing and validation, not stored on words, so the same value can be
read in any free group whose rank covers its generator indices.

Text syntax (CLI and scenario files): whitespace-separated tokens
``x<k>`` and ``x<k>^-1``; the empty word is the single token ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from ._kernels import canonical_cyclic, cyclic_reduce, free_reduce, letter_key

__all__ = [
    "Word",
    "CyclicWord",
    "WordSyntaxError",
    "check_rank",
    "check_letter",
    "format_letter",
    "parse_word",
    "format_word",
    "concat",
    "abelianize",
    "unoriented_cyclic_class",
]


class WordSyntaxError(ValueError):
    """Malformed word text or out-of-range generator index."""


def check_rank(rank: int) -> int:
    if not isinstance(rank, int) or rank < 2:
        raise ValueError(f"rank must be an integer >= 2, got {rank!r}")
    return rank


def check_letter(letter: int, rank: int) -> int:
    if not isinstance(letter, int) or letter == 0:
        raise ValueError(f"letters are nonzero ints, got {letter!r}")
    if abs(letter) > rank:
        raise ValueError(f"generator index {abs(letter)} exceeds rank {rank}")
    return letter


def format_letter(letter: int) -> str:
    return f"x{letter}" if letter > 0 else f"x{-letter}^-1"


def _validated(letters: Iterable[int]) -> tuple[int, ...]:
    out = tuple(letters)
    for a in out:
        if not isinstance(a, int) or a == 0:
            raise ValueError(f"letters are nonzero ints, got {a!r}")
    return out


@dataclass(frozen=True, slots=True)
class Word:
    """A finite, possibly unreduced sequence of letters.

    >>> str(Word((1, -2)))
    'x1 x2^-1'
    >>> str(Word((1, -1)).reduced())
    '1'
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _validated(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Juxtaposition, not reduced."""
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def reduced(self) -> "Word":
        """The unique freely reduced word equal to this one."""
        return Word(free_reduce(self.letters))

    def inverse(self) -> "Word":
        """Reverse the sequence and flip every sign."""
        return Word(tuple(-a for a in reversed(self.letters)))

    def cyclic(self) -> "CyclicWord":
        """Canonical cyclic form of this word's conjugacy class."""
        return CyclicWord(self.letters)


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """Canonical cyclic form: cyclically reduced, least rotation.

    Construction canonicalizes, so any representative of the conjugacy
    class yields the same value:

    >>> CyclicWord((1, 2, -1)) == CyclicWord((2,))
    True
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", canonical_cyclic(_validated(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"CyclicWord({format_word(self)!r})"

    def to_word(self) -> Word:
        return Word(self.letters)

    def inverse(self) -> "CyclicWord":
        return CyclicWord(tuple(-a for a in reversed(self.letters)))

    def sort_key(self) -> tuple[int, ...]:
        """Key ordering canonical cyclic words lexicographically."""
        return tuple(letter_key(a) for a in self.letters)


_TOKEN = re.compile(r"^x(\d+)(\^-1)?$")


def parse_word(text: str, rank: int) -> Word:
    """Parse word text at the given rank.

    Errors carry the 1-based token position:

    >>> parse_word("x3 x1", 2)
    Traceback (most recent call last):
        ...
    disksurgery.words.WordSyntaxError: token 1: generator index 3 exceeds rank 2
    """
    check_rank(rank)
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError("empty input: the empty word is written '1'")
    if tokens == ["1"]:
        return Word()
    letters = []
    for pos, tok in enumerate(tokens, start=1):
        m = _TOKEN.match(tok)
        if m is None:
            raise WordSyntaxError(
                f"token {pos}: {tok!r} is not of the form 'x<k>' or 'x<k>^-1'"
            )
        index = int(m.group(1))
        if index == 0:
            raise WordSyntaxError(f"token {pos}: generator index must be at least 1")
        if index > rank:
            raise WordSyntaxError(
                f"token {pos}: generator index {index} exceeds rank {rank}"
            )
        letters.append(index if m.group(2) is None else -index)
    return Word(tuple(letters))


def format_word(word: Word | CyclicWord | Iterable[int]) -> str:
    letters = tuple(word.letters if hasattr(word, "letters") else word)
    if not letters:
        return "1"
    return " ".join(format_letter(a) for a in letters)


def concat(*words: Word) -> Word:
    """Juxtapose words left to right without reducing."""
    letters: tuple[int, ...] = ()
    for w in words:
        letters += w.letters
    return Word(letters)


def abelianize(word: Word | CyclicWord, rank: int) -> tuple[int, ...]:
    """Exponent-sum vector of length ``rank``; a conjugacy invariant."""
    check_rank(rank)
    sums = [0] * rank
    for a in word.letters:
        check_letter(a, rank)
        sums[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(sums)


def unoriented_cyclic_class(word: Word | CyclicWord) -> CyclicWord:
    """Canonical form of a word's conjugacy class, up to inversion.

    This is the identity notion for surgered disk boundaries: a boundary
    curve has no preferred orientation, so words differing by rotation
    and/or inversion name the same outcome.
    """
    forward = CyclicWord(tuple(word.letters))
    backward = forward.inverse()
    return min(forward, backward, key=CyclicWord.sort_key)
