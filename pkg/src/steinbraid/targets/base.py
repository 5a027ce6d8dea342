"""
Abstract base interface for relator targets.

An assignment sends every root to an element of some concrete group and
supplies that group's multiplication, inversion and equality. The Steinberg
relator engine only talks to this interface, so the same catalog is checked
against matrices (the projection to Sp4) and against braid words (the map into
B6).
"""

from abc import ABC, abstractmethod
from typing import Any, Iterable

from ..report import Engine
from ..rings import Ring
from ..roots import Root


class Assignment(ABC):
    """
    Abstract interface for a root -> group element assignment.

    Example:
        class MyAssignment(Assignment):
            def image(self, root, parameter):
                # element assigned to x_root(parameter)
                ...

            # ... implement the other methods
    """

    #: how equalities decided by this target are tagged in reports
    engine: Engine

    @property
    @abstractmethod
    def ring(self) -> Ring:
        """The ring that relator parameters are drawn from."""

    @abstractmethod
    def identity(self) -> Any:
        """The identity element of the target group."""

    @abstractmethod
    def multiply(self, a: Any, b: Any) -> Any:
        """The product a * b."""

    @abstractmethod
    def inverse(self, a: Any) -> Any:
        """The inverse of a."""

    @abstractmethod
    def equal(self, a: Any, b: Any) -> bool:
        """True iff a and b are the same group element."""

    @abstractmethod
    def image(self, root: Root, parameter: int) -> Any:
        """
        The element assigned to x_root(parameter).

        Raises:
            UnassignedRootError: the assignment has no image for root.
        """

    @abstractmethod
    def describe(self, element: Any) -> Any:
        """A JSON-ready rendering of element for counterexamples."""

    def product(self, elements: Iterable[Any]) -> Any:
        result = self.identity()
        for element in elements:
            result = self.multiply(result, element)
        return result
