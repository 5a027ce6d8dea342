"""Tests for handle reduction."""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from steinbraid.braid import BraidWord, inverse
from steinbraid.errors import StepBudgetExceeded
from steinbraid.garside import equal as garside_equal
from steinbraid.handles import SigmaOrdering, classify, handle_reduce, oracle_equal
from tests.conftest import random_word, w


class TestHandleReduce:
    """Test the reduction itself."""

    def test_single_handle(self):
        """s1 s2 s1^-1 -> s2^-1 s1 s2."""
        assert handle_reduce(w("s1 s2 s1^-1")).signed() == (-2, 1, 2)

    def test_free_cancellation(self):
        """A bare s_i s_i^-1 pair is an empty handle."""
        assert handle_reduce(w("s3 s1 s1^-1 s3^-1")).is_empty()

    def test_handle_free_words_unchanged(self):
        """Words without handles come back as they are."""
        word = w("s2^-1 s1 s2")
        assert handle_reduce(word) == word

    def test_braid_relator_reduces_to_empty(self):
        """s1 s2 s1 s2^-1 s1^-1 s2^-1 is the identity."""
        assert handle_reduce(BraidWord.from_signed(6, [1, 2, 1, -2, -1, -2])).is_empty()

    def test_idempotent(self, rng):
        """A reduced word has no handles left."""
        for _ in range(30):
            reduced = handle_reduce(random_word(rng, max_length=12))
            assert handle_reduce(reduced) == reduced

    def test_budget(self):
        """Exceeding the step budget raises."""
        with pytest.raises(StepBudgetExceeded) as exc_info:
            handle_reduce(w("s1 s2 s1^-1"), budget=2)
        assert exc_info.value.budget == 2
        assert isinstance(exc_info.value, RuntimeError)


class TestOracle:
    """Test handle reduction as a word-problem oracle."""

    def test_braid_relations(self):
        """The defining relations hold."""
        assert oracle_equal(w("s1 s2 s1"), w("s2 s1 s2"))
        assert oracle_equal(w("s1 s4"), w("s4 s1"))

    def test_distinct(self):
        """Adjacent generators do not commute."""
        assert not oracle_equal(w("s1 s2"), w("s2 s1"))

    def test_agrees_with_garside(self, rng):
        """Both engines decide the same way on random pairs."""
        relator = w("s2 s3 s2 s3^-1 s2^-1 s3^-1")
        for _ in range(40):
            u = random_word(rng, max_length=12)
            if rng.random() < 0.5:
                v = random_word(rng, max_length=12)
            else:
                cut = rng.randint(0, len(u))
                v = BraidWord(6, u.letters[:cut] + relator.letters + u.letters[cut:])
            assert oracle_equal(u, v) == garside_equal(u, v)


class TestClassify:
    """Test the sign of the handle-free form."""

    def test_basic(self):
        """Single letters and the identity."""
        assert classify(w("s1")) == SigmaOrdering.POSITIVE
        assert classify(w("s1^-1")) == SigmaOrdering.NEGATIVE
        assert classify(w("")) == SigmaOrdering.TRIVIAL
        assert classify(w("s1 s2 s1^-1")) == SigmaOrdering.POSITIVE

    def test_trichotomy(self, rng):
        """Exactly one of w, w^-1 is positive unless w is trivial."""
        opposite = {
            SigmaOrdering.POSITIVE: SigmaOrdering.NEGATIVE,
            SigmaOrdering.NEGATIVE: SigmaOrdering.POSITIVE,
            SigmaOrdering.TRIVIAL: SigmaOrdering.TRIVIAL,
        }
        for _ in range(30):
            word = random_word(rng, max_length=12)
            assert classify(inverse(word)) == opposite[classify(word)]
