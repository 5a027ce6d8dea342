"""
Garside left normal form for braid groups.

Every braid has a unique factorization

    Delta^k * A_1 * A_2 * ... * A_r

where Delta is the positive half-twist, each A_j is a permutation braid other
than the identity and Delta, and every consecutive pair (A_j, A_{j+1}) is
left-weighted: each generator that left-divides A_{j+1} already right-divides
A_j. Two words represent the same braid iff their normal forms coincide, which
is how equal() decides the word problem.

Permutation braids are stored as permutations. Internally images are 0-based
tuples: perm[k] is the final position of the strand that starts at position k.
Generator s_i (1-based) swaps positions i-1 and i.
"""

from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from .braid import BraidWord, _check_same_strands, delta

Images = Tuple[int, ...]


def _identity(n: int) -> Images:
    return tuple(range(n))


def _delta(n: int) -> Images:
    return tuple(range(n - 1, -1, -1))


def _generator(n: int, index: int) -> Images:
    images = list(range(n))
    images[index - 1], images[index] = index, index - 1
    return tuple(images)


def _compose(p: Images, q: Images) -> Images:
    """p followed by q."""
    return tuple(q[image] for image in p)


def _invert(p: Images) -> Images:
    inverse = [0] * len(p)
    for start, end in enumerate(p):
        inverse[end] = start
    return tuple(inverse)


def _tau(p: Images) -> Images:
    """Conjugation by Delta: Delta * p * Delta^-1."""
    n = len(p)
    return tuple(n - 1 - p[n - 1 - k] for k in range(n))


def _starting_set(p: Images) -> FrozenSet[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def _finishing_set(p: Images) -> FrozenSet[int]:
    return _starting_set(_invert(p))


def _times_generator(p: Images, index: int) -> Images:
    """p * s_index."""
    return tuple(index if v == index - 1 else index - 1 if v == index else v for v in p)


def _generator_times(index: int, p: Images) -> Images:
    """s_index * p."""
    images = list(p)
    images[index - 1], images[index] = images[index], images[index - 1]
    return tuple(images)


def _weight_pair(a: Images, b: Images) -> Tuple[Images, Images]:
    """Move crossings from the front of b to the back of a until (a, b) is left-weighted."""
    while True:
        missing = _starting_set(b) - _finishing_set(a)
        if not missing:
            return a, b
        index = min(missing)
        a = _times_generator(a, index)
        b = _generator_times(index, b)


def _left_weight(factors: List[Images]):
    stable = False
    while not stable:
        stable = True
        for j in range(len(factors) - 2, -1, -1):
            pair = _weight_pair(factors[j], factors[j + 1])
            if pair != (factors[j], factors[j + 1]):
                factors[j], factors[j + 1] = pair
                stable = False


@dataclass(frozen=True)
class Permutation:
    """A permutation of n strand positions (0-based images, printed 1-based)."""

    images: Images

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection of 0..{len(self.images) - 1}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(_identity(n))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(_delta(n))

    @classmethod
    def generator(cls, n: int, index: int) -> "Permutation":
        return cls(_generator(n, index))

    @property
    def size(self) -> int:
        return len(self.images)

    def then(self, other: "Permutation") -> "Permutation":
        """Apply self, then other (the permutation of the braid product self*other)."""
        return Permutation(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_invert(self.images))

    def one_based(self) -> Tuple[int, ...]:
        return tuple(image + 1 for image in self.images)

    def __str__(self) -> str:
        return "[" + " ".join(str(image) for image in self.one_based()) + "]"


@dataclass(frozen=True)
class SimpleFactor:
    """A positive permutation braid, identified by its permutation."""

    permutation: Permutation

    @property
    def strands(self) -> int:
        return self.permutation.size

    def starting_set(self) -> FrozenSet[int]:
        """Generators s_i that left-divide the factor."""
        return _starting_set(self.permutation.images)

    def finishing_set(self) -> FrozenSet[int]:
        """Generators s_i that right-divide the factor."""
        return _finishing_set(self.permutation.images)

    def is_identity(self) -> bool:
        return self.permutation.images == _identity(self.strands)

    def is_delta(self) -> bool:
        return self.permutation.images == _delta(self.strands)

    def word(self) -> BraidWord:
        """The positive word of the factor, peeling the lowest left divisor each step."""
        images = self.permutation.images
        indices = []
        while True:
            starting = _starting_set(images)
            if not starting:
                break
            index = min(starting)
            indices.append(index)
            images = _generator_times(index, images)
        return BraidWord.from_signed(self.strands, indices)

    def __str__(self) -> str:
        return str(self.word())


@dataclass(frozen=True)
class GarsideNormalForm:
    """Delta^infimum followed by left-weighted simple factors."""

    strands: int
    infimum: int
    factors: Tuple[SimpleFactor, ...] = ()

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def supremum(self) -> int:
        return self.infimum + len(self.factors)

    def is_trivial(self) -> bool:
        return self.infimum == 0 and not self.factors

    def to_word(self) -> BraidWord:
        """A word for the braid: Delta^infimum then the factor words."""
        result = delta(self.strands) ** self.infimum
        for factor in self.factors:
            result = result * factor.word()
        return result

    def permutation(self) -> Permutation:
        images = _delta(self.strands) if self.infimum % 2 else _identity(self.strands)
        for factor in self.factors:
            images = _compose(images, factor.permutation.images)
        return Permutation(images)

    def __str__(self) -> str:
        parts = [f"inf {self.infimum}", f"{len(self.factors)} factors"]
        parts.extend(f"  ({factor})" for factor in self.factors)
        return "\n".join(parts)


def normal_form(word: BraidWord) -> GarsideNormalForm:
    """
    Compute the left normal form of word, one letter at a time.

    A positive letter is appended as a new factor. A negative letter s_i^-1 is
    rewritten as Delta^-1 (Delta s_i^-1); the Delta^-1 is pushed left through the
    existing factors, conjugating each one by Delta.
    """
    n = word.strands
    identity, full = _identity(n), _delta(n)
    infimum = 0
    factors: List[Images] = []

    for letter in word.letters:
        if letter.sign > 0:
            factors.append(_generator(n, letter.index))
        else:
            factors = [_tau(factor) for factor in factors]
            factors.append(_times_generator(full, letter.index))
            infimum -= 1

        _left_weight(factors)
        while factors and factors[0] == full:
            factors.pop(0)
            infimum += 1
        while factors and factors[-1] == identity:
            factors.pop()

    return GarsideNormalForm(
        strands=n,
        infimum=infimum,
        factors=tuple(SimpleFactor(Permutation(factor)) for factor in factors),
    )


def equal(u: BraidWord, v: BraidWord) -> bool:
    """True iff u and v represent the same braid."""
    _check_same_strands(u, v)
    return normal_form(u) == normal_form(v)


def is_trivial(word: BraidWord) -> bool:
    return normal_form(word).is_trivial()


def is_left_weighted(factors: Sequence[SimpleFactor]) -> bool:
    """Every consecutive pair (A, B) satisfies S(B) <= F(A)."""
    return all(
        b.starting_set() <= a.finishing_set() for a, b in zip(factors, factors[1:])
    )


def permutation_of(word: BraidWord) -> Permutation:
    """The underlying permutation, composing the letter transpositions left to right."""
    images = _identity(word.strands)
    for letter in word.letters:
        images = _times_generator(images, letter.index)
    return Permutation(images)
