"""
steinbraid - braid groups, Sp4(Z) and the C2 Steinberg group

Exact tools for the maps relating the braid group B6, the Steinberg group
St(C2, Z) and the symplectic group Sp4(Z):
1. Braid words with two independent word-problem engines (Garside normal form
   and handle reduction)
2. Exact 4x4 symplectic matrices over Z and Z/m
3. The relator catalog of St(C2, Z), checkable against any assignment
4. The homomorphisms f: B6 -> St(C2, Z) and phi: St(C2, Z) -> B6/N with a full
   verification suite

Quick Start:
    ```python
    from steinbraid import parse_braid, normal_form, equal

    u = parse_braid("s1 s2 s1")
    v = parse_braid("s2 s1 s2")
    assert equal(u, v)
    print(normal_form(u))
    ```

Checking relators:
    ```python
    from steinbraid import MatrixAssignment, check_relator, relator_catalog

    pi = MatrixAssignment()
    for relator in relator_catalog("unparametrized"):
        assert check_relator(relator, pi).passed
    ```

Running the verification suites:
    ```python
    from steinbraid import RunConfig, run_suites

    report = run_suites("all", RunConfig(seed=42))
    print(report.generate_text())
    assert report.all_passed
    ```
"""

from .braid import (
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
from .config import EngineChoice, OutputFormat, RunConfig
from .errors import (
    BraidSyntaxError,
    ConfigError,
    GeneratorIndexError,
    NotSymplecticError,
    RingMismatchError,
    StepBudgetExceeded,
    SteinbraidError,
    StrandMismatchError,
    StructureConstantError,
    UnassignedRootError,
)
from .garside import GarsideNormalForm, Permutation, SimpleFactor, equal, normal_form
from .handles import SigmaOrdering, classify, handle_reduce, oracle_equal
from .homs import F_MAP, PHI_MAP, f_bar, f_image, phi_image, relator_beta
from .report import CheckStatus, Engine, ReportEntry, VerificationReport
from .rings import ZZ, Integers, IntegersMod, Ring, parse_ring
from .roots import Root
from .steinberg import (
    Relator,
    SteinbergWord,
    check_relator,
    evaluate,
    relator_by_id,
    relator_catalog,
)
from .suites import SUITES, run_suites
from .symplectic import (
    SymplecticMatrix,
    derive_structure_constants,
    is_symplectic,
    mat_inv,
    mat_mul,
    w_matrix,
    x_matrix,
)
from .targets import Assignment, BraidAssignment, MatrixAssignment

__version__ = "0.1.0"

__all__ = [
    # Braids
    "BraidLetter",
    "BraidWord",
    "parse_braid",
    "format_word",
    "multiply",
    "inverse",
    "free_reduce",
    "conjugate",
    "commutator",
    "delta",
    # Word problem
    "GarsideNormalForm",
    "Permutation",
    "SimpleFactor",
    "normal_form",
    "equal",
    "SigmaOrdering",
    "handle_reduce",
    "oracle_equal",
    "classify",
    # Matrices
    "Ring",
    "Integers",
    "IntegersMod",
    "ZZ",
    "parse_ring",
    "Root",
    "SymplecticMatrix",
    "x_matrix",
    "w_matrix",
    "mat_mul",
    "mat_inv",
    "is_symplectic",
    "derive_structure_constants",
    # Steinberg group
    "SteinbergWord",
    "Relator",
    "relator_catalog",
    "relator_by_id",
    "evaluate",
    "check_relator",
    "Assignment",
    "MatrixAssignment",
    "BraidAssignment",
    # Homomorphisms
    "F_MAP",
    "PHI_MAP",
    "f_image",
    "f_bar",
    "phi_image",
    "relator_beta",
    # Verification
    "RunConfig",
    "EngineChoice",
    "OutputFormat",
    "CheckStatus",
    "Engine",
    "ReportEntry",
    "VerificationReport",
    "SUITES",
    "run_suites",
    # Errors
    "SteinbraidError",
    "BraidSyntaxError",
    "GeneratorIndexError",
    "StrandMismatchError",
    "RingMismatchError",
    "NotSymplecticError",
    "UnassignedRootError",
    "StepBudgetExceeded",
    "StructureConstantError",
    "ConfigError",
]
