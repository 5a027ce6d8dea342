"""
Handle reduction: an independent word-problem oracle for braid groups.

A sigma_i-handle is a subword s_i^e v s_i^-e (e = +1 or -1) in which every
letter of v has index > i. Reducing it replaces each s_{i+1}^d in v by
s_{i+1}^-e s_i^d s_{i+1}^e, keeps the other letters, and drops the two ends.
Repeating until no handle is left terminates, and the final word is empty
iff the braid is trivial.

The handle with the leftmost right end is always reduced first. No handle can
be nested inside it, so the reduction is always permitted and the output is
deterministic.
"""

import logging
from enum import Enum
from typing import List, Optional, Tuple

from .braid import BraidWord, _check_same_strands, free_reduce, inverse
from .errors import StepBudgetExceeded

logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10**7


class SigmaOrdering(Enum):
    """Sign of the lowest generator left after handle reduction."""

    TRIVIAL = "trivial"
    POSITIVE = "positive"
    NEGATIVE = "negative"


def _first_handle(letters: List[int], strands: int) -> Optional[Tuple[int, int]]:
    # latest[i] is the last position seen holding a letter of index <= i
    latest: List[Optional[int]] = [None] * strands
    for position, letter in enumerate(letters):
        index = abs(letter)
        start = latest[index]
        if start is not None and letters[start] == -letter:
            return start, position
        for j in range(index, strands):
            latest[j] = position
    return None


def _reduce_handle(handle: List[int]) -> List[int]:
    index = abs(handle[0])
    sign = 1 if handle[0] > 0 else -1
    above = index + 1

    out: List[int] = []
    for letter in handle[1:-1]:
        if abs(letter) == above:
            d = 1 if letter > 0 else -1
            replacement = [-sign * above, d * index, sign * above]
        else:
            replacement = [letter]
        for item in replacement:
            if out and out[-1] == -item:
                out.pop()
            else:
                out.append(item)
    return out


def handle_reduce(word: BraidWord, budget: int = DEFAULT_STEP_BUDGET) -> BraidWord:
    """
    Return a handle-free word representing the same braid as word.

    Each reduction costs the length of the handle it rewrites; the total is
    capped by budget.

    Raises:
        StepBudgetExceeded: the reduction needed more than budget steps.
    """
    letters = list(free_reduce(word).signed())
    steps = 0
    reductions = 0

    while True:
        span = _first_handle(letters, word.strands)
        if span is None:
            break
        start, end = span
        steps += end - start + 1
        if steps > budget:
            raise StepBudgetExceeded(budget, steps)
        letters[start : end + 1] = _reduce_handle(letters[start : end + 1])
        reductions += 1

    logger.debug(
        "handle reduction: %d letters -> %d letters, %d handles, %d steps",
        len(word),
        len(letters),
        reductions,
        steps,
    )
    return BraidWord.from_signed(word.strands, letters)


def oracle_equal(u: BraidWord, v: BraidWord, budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """True iff u * v^-1 handle-reduces to the empty word."""
    _check_same_strands(u, v)
    return handle_reduce(u * inverse(v), budget).is_empty()


def classify(word: BraidWord, budget: int = DEFAULT_STEP_BUDGET) -> SigmaOrdering:
    """Classify a braid by the sign of the lowest generator in its handle-free form."""
    reduced = handle_reduce(word, budget).signed()
    if not reduced:
        return SigmaOrdering.TRIVIAL
    lowest = min(abs(letter) for letter in reduced)
    signs = {letter > 0 for letter in reduced if abs(letter) == lowest}
    if signs == {True}:
        return SigmaOrdering.POSITIVE
    if signs == {False}:
        return SigmaOrdering.NEGATIVE
    raise AssertionError(f"handle-free word uses s{lowest} with both signs: {reduced}")
