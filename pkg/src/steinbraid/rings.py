"""
Exact commutative rings for matrix entries and relator parameters.

Two rings are provided: the integers (Python ints, arbitrary precision) and the
residues modulo m >= 2. Ring elements are plain Python ints; a ring only knows
how to bring an int into canonical form and how to sample one.
"""

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .errors import ConfigError

INTEGER_SAMPLE_RANGE = (-5, 5)


class Ring(ABC):
    """A commutative ring whose elements are represented by Python ints."""

    @property
    @abstractmethod
    def spec(self) -> str:
        """The command-line spelling of the ring ("int" or "zmod:<m>")."""

    @abstractmethod
    def normalize(self, value: int) -> int:
        """Canonical representative of value."""

    @abstractmethod
    def sample(self, rng: random.Random) -> int:
        """Draw a ring element for relator sampling."""

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.normalize(1)

    def add(self, a: int, b: int) -> int:
        return self.normalize(a + b)

    def negate(self, a: int) -> int:
        return self.normalize(-a)

    def multiply(self, a: int, b: int) -> int:
        return self.normalize(a * b)

    def equal(self, a: int, b: int) -> bool:
        return self.normalize(a) == self.normalize(b)


@dataclass(frozen=True)
class Integers(Ring):
    """The integers Z."""

    @property
    def spec(self) -> str:
        return "int"

    def normalize(self, value: int) -> int:
        return int(value)

    def sample(self, rng: random.Random) -> int:
        low, high = INTEGER_SAMPLE_RANGE
        return rng.randint(low, high)

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class IntegersMod(Ring):
    """The residues Z/m, represented by 0..m-1."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ConfigError(f"modulus must be at least 2, got {self.modulus}")

    @property
    def spec(self) -> str:
        return f"zmod:{self.modulus}"

    def normalize(self, value: int) -> int:
        return int(value) % self.modulus

    def sample(self, rng: random.Random) -> int:
        return rng.randrange(self.modulus)

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


ZZ = Integers()


def parse_ring(text: str) -> Ring:
    """
    Parse a ring spec: "int" for Z, "zmod:<m>" for Z/m.

    Raises:
        ConfigError: unknown spelling or m < 2.
    """
    spec = text.strip().lower()
    if spec == "int":
        return ZZ
    if spec.startswith("zmod:"):
        modulus = spec[len("zmod:") :]
        if not modulus.isdigit():
            raise ConfigError(f"invalid modulus in ring spec {text!r}")
        return IntegersMod(int(modulus))
    raise ConfigError(f"unknown ring {text!r} (expected 'int' or 'zmod:<m>')")
