"""Tests for braid words and the word grammar."""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from steinbraid.braid import (
    BraidLetter,
    BraidWord,
    commutator,
    conjugate,
    delta,
    format_word,
    free_reduce,
    inverse,
    multiply,
    parse_braid,
)
from steinbraid.errors import BraidSyntaxError, GeneratorIndexError, StrandMismatchError
from tests.conftest import random_word


class TestParse:
    """Test the braid-word grammar."""

    def test_generator_tokens(self):
        """s<k> and s<k>^-1 should map to signed letters."""
        assert parse_braid("s1 s2^-1 s3").signed() == (1, -2, 3)

    def test_integer_tokens(self):
        """Bare signed integers are the same letters."""
        assert parse_braid("1 -2 3") == parse_braid("s1 s2^-1 s3")

    def test_exponents_expand(self):
        """s<k>^e repeats the letter |e| times."""
        assert parse_braid("s2^3").signed() == (2, 2, 2)
        assert parse_braid("s2^-2 s1^+1").signed() == (-2, -2, 1)

    def test_empty_text_is_identity(self):
        """Empty or blank input parses to the identity."""
        assert parse_braid("").is_empty()
        assert parse_braid("   \n ").is_empty()

    def test_default_strands(self):
        """Words default to six strands."""
        assert parse_braid("s5").strands == 6
        assert parse_braid("s2", strands=3).strands == 3

    def test_index_out_of_range(self):
        """Indices outside 1..n-1 are rejected."""
        with pytest.raises(GeneratorIndexError):
            parse_braid("s6")
        with pytest.raises(GeneratorIndexError):
            parse_braid("s3", strands=3)
        with pytest.raises(GeneratorIndexError):
            parse_braid("s0")

    def test_zero_is_not_a_generator(self):
        """0 and a zero exponent are syntax errors."""
        with pytest.raises(BraidSyntaxError):
            parse_braid("1 0 2")
        with pytest.raises(BraidSyntaxError):
            parse_braid("s1^0")

    def test_syntax_error_position(self):
        """The error should carry the character offset of the bad token."""
        with pytest.raises(BraidSyntaxError) as exc_info:
            parse_braid("s1 foo s2")
        assert exc_info.value.position == 3
        assert "position 3" in str(exc_info.value)

    def test_syntax_error_is_value_error(self):
        """Callers catching ValueError still see grammar errors."""
        with pytest.raises(ValueError):
            parse_braid("s1 s2^x")


class TestWordOperations:
    """Test the unreduced word operations."""

    def test_format_word(self):
        """Words print in the s<k> / s<k>^-1 form."""
        assert format_word(parse_braid("1 -2 3")) == "s1 s2^-1 s3"
        assert format_word(BraidWord.identity()) == ""

    def test_inverse_reverses_and_flips(self):
        """The inverse reverses the word and flips every sign."""
        assert inverse(parse_braid("1 -2 3")).signed() == (-3, 2, -1)
        assert parse_braid("1 -2 3").inverse() == inverse(parse_braid("1 -2 3"))

    def test_multiply_concatenates(self):
        """Products are plain concatenation."""
        product = multiply(parse_braid("s1"), parse_braid("s1^-1"))
        assert product.signed() == (1, -1)
        assert (parse_braid("s1") * parse_braid("s2")).signed() == (1, 2)

    def test_strand_mismatch(self):
        """Words on different strand counts cannot be combined."""
        with pytest.raises(StrandMismatchError):
            multiply(parse_braid("s1", 3), parse_braid("s1", 4))

    def test_powers(self):
        """Negative powers invert."""
        word = parse_braid("s1 s2")
        assert (word**2).signed() == (1, 2, 1, 2)
        assert (word**-1).signed() == (-2, -1)
        assert (word**0).is_empty()

    def test_free_reduce(self):
        """Adjacent inverse pairs cancel, including nested ones."""
        word = parse_braid("s1 s2 s2^-1 s1^-1 s3")
        assert free_reduce(word).signed() == (3,)
        assert free_reduce(parse_braid("s1 s2 s1")).signed() == (1, 2, 1)

    def test_conjugate_and_commutator(self):
        """conjugate(w, c) = c w c^-1 and [u, v] = u v u^-1 v^-1."""
        assert conjugate(parse_braid("s2"), parse_braid("s1")).signed() == (1, 2, -1)
        assert commutator(parse_braid("s1"), parse_braid("s3")).signed() == (1, 3, -1, -3)

    def test_inverse_is_involution(self, rng):
        """Inverting twice gives the word back."""
        for _ in range(30):
            word = random_word(rng, max_length=20)
            assert inverse(inverse(word)) == word

    def test_format_then_parse(self, rng):
        """Printed words parse back to themselves."""
        for _ in range(30):
            word = random_word(rng, max_length=20)
            assert parse_braid(format_word(word)) == word

    def test_delta(self):
        """Delta has n(n-1)/2 positive letters."""
        assert delta(4).signed() == (1, 2, 3, 1, 2, 1)
        assert len(delta(6)) == 15
        assert delta(6).is_positive()

    def test_letter_validation(self):
        """Letters need sign +-1 and a positive index."""
        with pytest.raises(ValueError):
            BraidLetter(1, 2)
        with pytest.raises(GeneratorIndexError):
            BraidLetter(0)
        assert str(BraidLetter(3, -1)) == "s3^-1"

    def test_from_signed_rejects_zero(self):
        """0 does not name a letter."""
        with pytest.raises(GeneratorIndexError):
            BraidWord.from_signed(6, [1, 0])
