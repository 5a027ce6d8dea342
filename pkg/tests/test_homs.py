"""Tests for the maps f, f_bar and phi and their verification checks."""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from steinbraid.braid import BraidWord, free_reduce
from steinbraid.config import EngineChoice
from steinbraid.garside import equal
from steinbraid.homs import (
    C,
    DELTA,
    MOD_N_RELATORS,
    P,
    PHI_MAP,
    f_bar,
    f_image,
    mod_n_witnesses,
    phi_image,
    relator_beta,
    surjectivity_witnesses,
    verify_corollary_42,
    verify_delta_facts,
    verify_engine_agreement,
    verify_f_beta_trivial,
    verify_f_braid_relations,
    verify_homomorphism_law,
    verify_lemma_44,
    verify_phi_f_identity,
    verify_phi_relations,
    verify_remark_45,
    verify_surjectivity,
    verify_weyl_inverses,
)
from steinbraid.report import Engine
from steinbraid.rings import IntegersMod
from steinbraid.roots import Root
from steinbraid.symplectic import SymplecticMatrix, w_matrix, x_matrix
from tests.conftest import w


def assert_all_pass(entries):
    failures = [(entry.check_id, entry.counterexample) for entry in entries if not entry.passed]
    assert not failures


class TestMaps:
    """Test the maps on individual words."""

    def test_f_bar_generators(self):
        """f_bar(s1) = X_{2a+b} and f_bar(s5) = X_b."""
        assert f_bar(w("s1")) == x_matrix(Root.TWO_ALPHA_PLUS_BETA)
        assert f_bar(w("s5")) == x_matrix(Root.BETA)
        assert f_bar(w("s4^-1")) == x_matrix(Root.NEG_BETA)

    def test_f_bar_of_c(self):
        """f_bar(s1 s3^-1 s5) = X_{a+b}."""
        assert f_bar(C) == x_matrix(Root.ALPHA_PLUS_BETA)

    def test_f_bar_identity(self):
        """The empty word maps to I."""
        assert f_bar(BraidWord.identity()).is_identity()

    def test_f_bar_over_residues(self):
        """f_bar can be taken over Z/m."""
        ring = IntegersMod(3)
        assert f_bar(w("s1"), ring) == x_matrix(Root.TWO_ALPHA_PLUS_BETA, 1, ring)

    def test_f_image_inverse_letters(self):
        """s_i^-1 maps to the inverse Steinberg word."""
        assert f_image(w("s3^-1")) == f_image(w("s3")).inverse()
        assert len(f_image(w("s3 s1"))) == 4

    def test_relator_beta_letters(self):
        """beta = (s1 s2 s1)^2 (s1 s3^-1 s5) (s1 s2 s1)^-2 (s1 s3^-1 s5)."""
        assert relator_beta().signed() == (
            1, 2, 1, 1, 2, 1,
            1, -3, 5,
            -1, -2, -1, -1, -2, -1,
            1, -3, 5,
        )  # fmt: skip

    def test_phi_images(self):
        """phi(x_b) = s5 and phi(x_-b) = s4^-1."""
        assert PHI_MAP.images[Root.BETA] == w("s5")
        assert PHI_MAP.images[Root.NEG_BETA] == w("s4^-1")
        assert PHI_MAP.images[Root.ALPHA_PLUS_BETA] == w("s1 s3^-1 s5")

    def test_phi_of_f_sigma3_reduces_freely(self):
        """(phi o f)(s3) free-reduces to s3."""
        assert free_reduce(phi_image(f_image(w("s3")))) == w("s3")

    def test_surjectivity_witnesses(self):
        """Every generator matrix is f_bar of a braid word."""
        for root, braid in surjectivity_witnesses().items():
            assert f_bar(braid) == x_matrix(root)

    def test_f_bar_of_s1s2s1(self):
        """f_bar(s1 s2 s1) is the Weyl matrix of 2a+b."""
        assert f_bar(P) == w_matrix(Root.TWO_ALPHA_PLUS_BETA)


class TestMatrixShadowChecks:
    """Test the checks decided by matrices."""

    def test_f_braid_relations(self):
        """All ten braid relations hold among f_bar(s_i)."""
        entries = verify_f_braid_relations()
        assert len(entries) == 10
        assert_all_pass(entries)
        assert {entry.engine for entry in entries} == {Engine.MATRIX_SHADOW}

    def test_surjectivity(self):
        """Eight recovery identities."""
        entries = verify_surjectivity()
        assert len(entries) == 8
        assert_all_pass(entries)

    def test_beta_trivial(self):
        """f_bar(beta) = I, also after conjugation."""
        entries = verify_f_beta_trivial(random.Random(5))
        ids = [entry.check_id for entry in entries]
        assert ids == ["F-beta", "F-s1s2s1-weyl", "F-beta-conjugate"]
        assert_all_pass(entries)

    def test_homomorphism_law(self):
        """f_bar(uv) = f_bar(u) f_bar(v)."""
        assert_all_pass(verify_homomorphism_law(random.Random(9), samples=10))

    def test_remark_45(self):
        """f_bar(Delta^2) = I and the long Weyl elements have order 4."""
        entries = verify_remark_45()
        assert len(entries) == 10
        assert_all_pass(entries)
        assert f_bar(DELTA**2) == SymplecticMatrix.identity()

    def test_corollary_42(self):
        """The twelve relators of the five-generator presentation map to I."""
        entries = verify_corollary_42()
        assert len(entries) == 12
        assert_all_pass(entries)


class TestExactChecks:
    """Test the checks decided in B6."""

    def test_phi_f_identity(self):
        """(phi o f)(s_i) = s_i."""
        entries = verify_phi_f_identity()
        assert len(entries) == 5
        assert_all_pass(entries)

    def test_lemma_44(self):
        """The four equalities hold and both engines agree."""
        entries = verify_lemma_44()
        assert [entry.check_id for entry in entries] == ["L4.4-1", "L4.4-2", "L4.4-3", "L4.4-4"]
        assert_all_pass(entries)

    def test_phi_relations_split(self):
        """18 relators hold exactly, 6 only modulo N."""
        entries = verify_phi_relations()
        assert len(entries) == 24
        assert_all_pass(entries)
        exact = [entry for entry in entries if entry.engine == Engine.EXACT_B6]
        mod_n = [entry for entry in entries if entry.engine == Engine.MOD_N_WITNESS]
        assert len(exact) == 18
        assert [entry.check_id for entry in mod_n] == list(MOD_N_RELATORS)

    def test_phi_relations_with_oracle(self):
        """The split does not depend on the engine."""
        entries = verify_phi_relations(EngineChoice.ORACLE)
        assert_all_pass(entries)

    def test_witnesses_are_exact(self):
        """Every witness step is an equality in B6."""
        witnesses = mod_n_witnesses()
        assert set(witnesses) == set(MOD_N_RELATORS)
        for relator_id, steps in witnesses.items():
            for label, lhs, rhs in steps:
                assert equal(lhs, rhs), (relator_id, label)

    def test_delta_facts(self):
        """Conjugation by Delta, centrality, symmetries and the C3 relations."""
        entries = verify_delta_facts()
        assert len(entries) == 22
        assert_all_pass(entries)

    def test_weyl_inverses(self):
        """Long roots are checked in B6 as well."""
        entries = verify_weyl_inverses()
        assert len(entries) == 8
        assert_all_pass(entries)
        both = {entry.check_id for entry in entries if entry.engine == Engine.BOTH}
        assert both == {"L2.2-wb", "L2.2-w-b", "L2.2-w2a+b", "L2.2-w-(2a+b)"}

    def test_engine_agreement(self):
        """Both engines agree on a small random batch."""
        entries = verify_engine_agreement(random.Random(11), samples=20, max_length=15)
        assert [entry.check_id for entry in entries] == [
            "E-agree",
            "E-inverse",
            "E-relator-insertion",
        ]
        assert_all_pass(entries)

    @pytest.mark.slow
    def test_engine_agreement_thousand_pairs(self):
        """1000 random pairs of length up to 40."""
        assert_all_pass(verify_engine_agreement(random.Random(0), samples=1000))
