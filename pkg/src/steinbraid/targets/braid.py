"""Braid target: x_gamma(k) -> (image of x_gamma)^k in a braid group."""

import logging
from typing import Dict, Mapping

from ..braid import BraidWord, format_word, inverse
from ..config import EngineChoice
from ..errors import UnassignedRootError
from ..garside import equal as garside_equal
from ..handles import DEFAULT_STEP_BUDGET, oracle_equal
from ..report import Engine
from ..rings import ZZ, Ring
from ..roots import Root
from .base import Assignment

logger = logging.getLogger(__name__)


def braid_equal(
    u: BraidWord,
    v: BraidWord,
    engine: EngineChoice = EngineChoice.GARSIDE,
    budget: int = DEFAULT_STEP_BUDGET,
) -> bool:
    """
    Decide u = v with the chosen engine.

    With EngineChoice.BOTH the words are equal only when both engines say so;
    a disagreement is logged and counts as not equal.
    """
    if engine == EngineChoice.GARSIDE:
        return garside_equal(u, v)
    if engine == EngineChoice.ORACLE:
        return oracle_equal(u, v, budget)

    by_garside = garside_equal(u, v)
    by_oracle = oracle_equal(u, v, budget)
    if by_garside != by_oracle:
        logger.warning(
            "engines disagree on %r = %r (garside %s, oracle %s)",
            format_word(u),
            format_word(v),
            by_garside,
            by_oracle,
        )
    return by_garside and by_oracle


class BraidAssignment(Assignment):
    """
    Assign a braid word to every root. Parameters must be integers: x_root(k) is
    the k-th power of the assigned word.
    """

    engine = Engine.EXACT_B6

    def __init__(
        self,
        images: Mapping[Root, BraidWord],
        strands: int = 6,
        choice: EngineChoice = EngineChoice.GARSIDE,
        budget: int = DEFAULT_STEP_BUDGET,
    ):
        self.images: Dict[Root, BraidWord] = dict(images)
        self.strands = strands
        self.choice = choice
        self.budget = budget

    @property
    def ring(self) -> Ring:
        return ZZ

    def identity(self) -> BraidWord:
        return BraidWord.identity(self.strands)

    def multiply(self, a: BraidWord, b: BraidWord) -> BraidWord:
        return a * b

    def inverse(self, a: BraidWord) -> BraidWord:
        return inverse(a)

    def equal(self, a: BraidWord, b: BraidWord) -> bool:
        return braid_equal(a, b, self.choice, self.budget)

    def image(self, root: Root, parameter: int) -> BraidWord:
        if root not in self.images:
            raise UnassignedRootError(f"no braid word assigned to x_{root}")
        return self.images[root] ** parameter

    def describe(self, element: BraidWord) -> str:
        return format_word(element)
