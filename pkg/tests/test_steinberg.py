"""Tests for Steinberg words, the relator catalog and assignments."""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from steinbraid.errors import UnassignedRootError
from steinbraid.homs import PHI_MAP
from steinbraid.report import CheckStatus, Engine
from steinbraid.rings import ZZ, IntegersMod
from steinbraid.roots import Root
from steinbraid.steinberg import (
    Monomial,
    RelatorKind,
    SteinbergWord,
    check_one_parameter_law,
    check_relator,
    check_weyl_inverse,
    check_weyl_table,
    evaluate,
    relator_by_id,
    relator_catalog,
    sample_pairs,
    x,
)
from steinbraid.symplectic import x_matrix
from steinbraid.targets import MatrixAssignment


class TestSteinbergWords:
    """Test word construction."""

    def test_inverse(self):
        """The inverse reverses and negates parameters."""
        word = SteinbergWord.of((Root.ALPHA, 2), (Root.BETA, -1))
        assert word.inverse() == SteinbergWord.of((Root.BETA, 1), (Root.ALPHA, -2))

    def test_str(self):
        """Letters print as x_root(parameter); the empty word is 1."""
        assert str(x(Root.NEG_BETA, -1)) == "x_-b(-1)"
        assert str(SteinbergWord()) == "1"

    def test_evaluate(self):
        """Evaluation multiplies the assigned images left to right."""
        word = x(Root.ALPHA, 2) * x(Root.BETA)
        assert evaluate(word, MatrixAssignment()) == x_matrix(Root.ALPHA, 2) @ x_matrix(Root.BETA)
        assert evaluate(SteinbergWord(), MatrixAssignment()).is_identity()

    def test_unassigned_root(self):
        """Roots outside the assignment raise UnassignedRootError."""
        with pytest.raises(UnassignedRootError):
            evaluate(x(Root.BETA), MatrixAssignment(roots=[Root.ALPHA]))
        with pytest.raises(KeyError):
            evaluate(x(Root.BETA), MatrixAssignment(roots=[]))


class TestCatalog:
    """Test the two relator catalogs."""

    def test_sizes_and_ids(self):
        """24 relators each, with unique ids."""
        unparametrized = relator_catalog(RelatorKind.UNPARAMETRIZED)
        parametrized = relator_catalog("parametrized")
        assert len(unparametrized) == len(parametrized) == 24
        assert len({r.id for r in unparametrized}) == 24
        assert unparametrized[0].id == "P2.1-x1a"
        assert "P2.1-x6a" in {r.id for r in unparametrized}
        assert "A-B6" in {r.id for r in parametrized}
        assert parametrized[-1].id == "A-B15"

    def test_specialization(self):
        """Parametrized relators at u = v = 1 are the unparametrized ones."""
        pairs = zip(relator_catalog("unparametrized"), relator_catalog("parametrized"))
        for plain, general in pairs:
            assert plain.pair == general.pair
            assert plain.lhs.instantiate(ZZ) == general.lhs.instantiate(ZZ, 1, 1)
            assert plain.rhs.instantiate(ZZ) == general.rhs.instantiate(ZZ, 1, 1)

    def test_rhs_terms(self):
        """(B5): [x_a(u), x_{a+b}(v)] = x_{2a+b}(2uv)."""
        relator = relator_by_id("A-B5")
        assert relator.pair == (Root.ALPHA, Root.ALPHA_PLUS_BETA)
        assert relator.rhs_terms() == {Root.TWO_ALPHA_PLUS_BETA: Monomial(2, 1, 1)}

    def test_alternate_rhs(self):
        """x4 has a second factor order; x5 has one factor."""
        assert relator_by_id("P2.1-x4").alternate_rhs is not None
        assert relator_by_id("P2.1-x5").alternate_rhs is None

    def test_unknown_id(self):
        """Unknown ids raise KeyError."""
        with pytest.raises(KeyError):
            relator_by_id("P2.1-x99")

    def test_monomial_str(self):
        """Monomials print compactly."""
        assert str(Monomial(2, 1, 1)) == "2uv"
        assert str(Monomial(-1, 2, 1)) == "-u^2v"
        assert str(Monomial(3)) == "3"


class TestMatrixChecks:
    """Test the relators under the matrix projection."""

    def test_presentation_over_z(self):
        """All 24 unparametrized relators hold in Sp4(Z)."""
        assignment = MatrixAssignment()
        for relator in relator_catalog("unparametrized"):
            entry = check_relator(relator, assignment)
            assert entry.passed, entry.counterexample
            assert entry.engine == Engine.MATRIX_SHADOW

    @pytest.mark.parametrize("ring", [ZZ, IntegersMod(2), IntegersMod(12)], ids=lambda r: r.spec)
    def test_parametrized(self, ring):
        """All 24 parametrized relators hold on seeded samples."""
        samples = sample_pairs(ring, 25, random.Random(7))
        assignment = MatrixAssignment(ring)
        for relator in relator_catalog("parametrized"):
            assert check_relator(relator, assignment, samples).passed

    def test_corrupted_assignment_fails(self):
        """Scaling x_b by 2 breaks relator x4."""
        entry = check_relator(relator_by_id("P2.1-x4"), MatrixAssignment(scales={Root.BETA: 2}))
        assert entry.status == CheckStatus.FAIL
        assert entry.counterexample["side"] == "rhs"
        assert entry.counterexample["u"] == 1

    def test_weyl_table(self):
        """All 24 conjugation identities hold under the projection."""
        entries = check_weyl_table(MatrixAssignment())
        assert len(entries) == 24
        assert all(entry.passed for entry in entries)

    def test_weyl_inverse(self):
        """w_gamma w_{-gamma} = 1 for every root."""
        for root in Root:
            entry = check_weyl_inverse(root, MatrixAssignment())
            assert entry.passed
            assert entry.check_id == f"L2.2-w{root}"

    def test_one_parameter_law(self):
        """x(u) x(v) = x(u + v) over Z/4."""
        ring = IntegersMod(4)
        samples = sample_pairs(ring, 20, random.Random(1))
        for root in Root:
            entry = check_one_parameter_law(root, MatrixAssignment(ring), samples)
            assert entry.passed
            assert entry.check_id.endswith("zmod:4")


class TestBraidChecks:
    """Test the relators under the phi assignment."""

    def test_exact_relator(self):
        """[x_b, x_{a+b}] = 1 holds exactly in B6."""
        entry = check_relator(relator_by_id("P2.1-x1b"), PHI_MAP.assignment())
        assert entry.passed
        assert entry.engine == Engine.EXACT_B6

    def test_mod_n_relator_fails_exactly(self):
        """x4 only holds modulo N."""
        entry = check_relator(relator_by_id("P2.1-x4"), PHI_MAP.assignment())
        assert not entry.passed
