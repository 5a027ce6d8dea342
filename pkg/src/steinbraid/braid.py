"""
Braid words on n strands.

A braid word is a finite sequence of letters sigma_i^(+1) or sigma_i^(-1) with
1 <= i <= n-1. Words are immutable and never simplified implicitly: multiply,
inverse and conjugate are purely syntactic, and the word problem is decided
elsewhere (steinbraid.garside, steinbraid.handles).

Text grammar (whitespace separated tokens):

    word  := token*
    token := "s" INT ("^" SINT)?  |  SINT

"s3^-2" expands to two letters sigma_3^-1; a bare integer k means sigma_k for
k > 0 and sigma_|k|^-1 for k < 0. The printer emits the "s<k>" form with "^-1"
for single inverse letters, so format_word(parse_braid(t)) re-parses to the
same word.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .errors import BraidSyntaxError, GeneratorIndexError, StrandMismatchError

DEFAULT_STRANDS = 6

_TOKEN = re.compile(r"\S+")
_GENERATOR_TOKEN = re.compile(r"s(\d+)(?:\^([+-]?\d+))?\Z")
_INTEGER_TOKEN = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class BraidLetter:
    """A generator sigma_index raised to sign (+1 or -1)."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.index < 1:
            raise GeneratorIndexError(f"generator index must be >= 1, got {self.index}")

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.index, -self.sign)

    def signed(self) -> int:
        """The letter as a signed integer: k for sigma_k, -k for its inverse."""
        return self.sign * self.index

    def __str__(self) -> str:
        return f"s{self.index}" if self.sign > 0 else f"s{self.index}^-1"


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1..sigma_{n-1} and their inverses; the empty word is the identity."""

    strands: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"a braid group needs at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_index(letter.index, self.strands)

    @classmethod
    def identity(cls, strands: int = DEFAULT_STRANDS) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def from_signed(cls, strands: int, values: Iterable[int]) -> "BraidWord":
        """Build a word from signed integers (k -> sigma_k, -k -> sigma_k^-1)."""
        letters = []
        for value in values:
            if value == 0:
                raise GeneratorIndexError("0 is not a generator")
            letters.append(BraidLetter(abs(value), 1 if value > 0 else -1))
        return cls(strands, tuple(letters))

    @classmethod
    def generator(cls, index: int, strands: int = DEFAULT_STRANDS, sign: int = 1) -> "BraidWord":
        return cls(strands, (BraidLetter(index, sign),))

    def signed(self) -> Tuple[int, ...]:
        return tuple(letter.signed() for letter in self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(letter.sign > 0 for letter in self.letters)

    def inverse(self) -> "BraidWord":
        return inverse(self)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else inverse(self)
        return BraidWord(self.strands, base.letters * abs(exponent))

    def __str__(self) -> str:
        return format_word(self)


def _check_index(index: int, strands: int, position=None):
    if not 1 <= index <= strands - 1:
        where = f" (at position {position})" if position is not None else ""
        raise GeneratorIndexError(
            f"generator s{index} out of range for {strands} strands "
            f"(valid: s1..s{strands - 1}){where}"
        )


def _check_same_strands(u: BraidWord, v: BraidWord):
    if u.strands != v.strands:
        raise StrandMismatchError(f"strand counts differ: {u.strands} vs {v.strands}")


def parse_braid(text: str, strands: int = DEFAULT_STRANDS) -> BraidWord:
    """
    Parse braid-word text into a BraidWord on the given number of strands.

    Raises:
        BraidSyntaxError: a token matches neither grammar form (position is the
            character offset of the token).
        GeneratorIndexError: a generator index is outside 1..strands-1.
    """
    letters = []
    for match in _TOKEN.finditer(text):
        token, position = match.group(), match.start()

        generator = _GENERATOR_TOKEN.match(token)
        if generator:
            index = int(generator.group(1))
            exponent = int(generator.group(2)) if generator.group(2) is not None else 1
            if exponent == 0:
                raise BraidSyntaxError(f"zero exponent in {token!r}", position)
        elif _INTEGER_TOKEN.match(token):
            value = int(token)
            if value == 0:
                raise BraidSyntaxError("0 does not name a generator", position)
            index, exponent = abs(value), (1 if value > 0 else -1)
        else:
            raise BraidSyntaxError(f"unexpected token {token!r}", position)

        _check_index(index, strands, position)
        letter = BraidLetter(index, 1 if exponent > 0 else -1)
        letters.extend([letter] * abs(exponent))

    return BraidWord(strands, tuple(letters))


def format_word(word: BraidWord) -> str:
    """Print a word in the "s<k>" / "s<k>^-1" form; the empty word prints as ""."""
    return " ".join(str(letter) for letter in word.letters)


def multiply(u: BraidWord, v: BraidWord) -> BraidWord:
    """Concatenate two words without any simplification."""
    _check_same_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters)


def inverse(word: BraidWord) -> BraidWord:
    """Reverse the word and flip every sign."""
    return BraidWord(word.strands, tuple(letter.inverse() for letter in reversed(word.letters)))


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent sigma_i sigma_i^-1 and sigma_i^-1 sigma_i pairs until none remain."""
    stack = []
    for letter in word.letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(word.strands, tuple(stack))


def conjugate(word: BraidWord, by: BraidWord) -> BraidWord:
    """Return by * word * by^-1, unreduced."""
    _check_same_strands(word, by)
    return BraidWord(word.strands, by.letters + word.letters + inverse(by).letters)


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    """Return [u, v] = u v u^-1 v^-1, unreduced."""
    _check_same_strands(u, v)
    return BraidWord(u.strands, u.letters + v.letters + inverse(u).letters + inverse(v).letters)


def delta(strands: int = DEFAULT_STRANDS) -> BraidWord:
    """
    The positive half-twist (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1 s2) s1.

    Its length is n(n-1)/2 and its permutation reverses the strands.
    """
    indices = [i for top in range(strands - 1, 0, -1) for i in range(1, top + 1)]
    return BraidWord.from_signed(strands, indices)
