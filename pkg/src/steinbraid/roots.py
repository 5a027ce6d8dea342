"""The eight roots of the C2 root system, written a*alpha + b*beta."""

from enum import Enum
from typing import Optional, Tuple


class Root(Enum):
    """A C2 root, valued by its (alpha, beta) coefficients."""

    ALPHA = (1, 0)
    BETA = (0, 1)
    ALPHA_PLUS_BETA = (1, 1)
    TWO_ALPHA_PLUS_BETA = (2, 1)
    NEG_ALPHA = (-1, 0)
    NEG_BETA = (0, -1)
    NEG_ALPHA_PLUS_BETA = (-1, -1)
    NEG_TWO_ALPHA_PLUS_BETA = (-2, -1)

    @property
    def coefficients(self) -> Tuple[int, int]:
        return self.value

    @property
    def label(self) -> str:
        return _LABELS[self]

    def negative(self) -> "Root":
        a, b = self.value
        return Root((-a, -b))

    def is_positive(self) -> bool:
        return self.value in _POSITIVE

    def is_long(self) -> bool:
        """beta and 2alpha+beta (and their negatives) have length 2."""
        return self.value in ((0, 1), (2, 1), (0, -1), (-2, -1))

    @classmethod
    def from_coefficients(cls, a: int, b: int) -> Optional["Root"]:
        """The root a*alpha + b*beta, or None when that vector is not a root."""
        try:
            return cls((a, b))
        except ValueError:
            return None

    @classmethod
    def from_label(cls, label: str) -> "Root":
        for root, text in _LABELS.items():
            if text == label:
                return root
        raise ValueError(f"unknown root label {label!r}")

    def __str__(self) -> str:
        return self.label


_POSITIVE = ((1, 0), (0, 1), (1, 1), (2, 1))

_LABELS = {
    Root.ALPHA: "a",
    Root.BETA: "b",
    Root.ALPHA_PLUS_BETA: "a+b",
    Root.TWO_ALPHA_PLUS_BETA: "2a+b",
    Root.NEG_ALPHA: "-a",
    Root.NEG_BETA: "-b",
    Root.NEG_ALPHA_PLUS_BETA: "-(a+b)",
    Root.NEG_TWO_ALPHA_PLUS_BETA: "-(2a+b)",
}

POSITIVE_ROOTS = tuple(root for root in Root if root.is_positive())
