"""
Verification suites.

A suite is a named group of checks. run_suites() runs the selected suites in a
fixed canonical order and collects their entries into one VerificationReport:

    presentation   the 24 relators under the matrix projection over Z
    appendix       the 24 parametrized relators over the configured rings, the
                   one-parameter law, and the derived structure constants
    weyl           the Weyl conjugation table and w_gamma w_-gamma = 1
    f-relations    braid relations among f_bar(sigma_i), surjectivity, phi o f = id
    beta           f_bar(beta) = I
    lemma44        the four B6 equalities, by both engines
    phi-relations  phi-images of the 24 relators (18 exact, 6 modulo N)
    delta          conjugation by Delta and the C3 relations
    remark45       f_bar(Delta^2) and the orders of the long Weyl elements
    corollary42    relators of the five-generator presentation map to I
    engines        Garside normal form against handle reduction on random words

Every suite draws randomness from its own generator seeded with
"<seed>:<suite name>", so a suite's entries do not depend on which other suites
ran.
"""

import logging
import random
from typing import Callable, Dict, List, Optional

from . import homs
from .config import RunConfig
from .errors import ConfigError
from .report import Engine, ReportEntry, VerificationReport
from .roots import Root
from .steinberg import (
    RelatorKind,
    check_one_parameter_law,
    check_relator,
    check_weyl_table,
    relator_catalog,
    sample_pairs,
)
from .symplectic import derive_structure_constants
from .targets.matrix import MatrixAssignment

logger = logging.getLogger(__name__)

Suite = Callable[[RunConfig, random.Random], List[ReportEntry]]


def presentation_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    assignment = MatrixAssignment()
    catalog = relator_catalog(RelatorKind.UNPARAMETRIZED)
    return [check_relator(relator, assignment) for relator in catalog]


def _constants_entry(relator) -> ReportEntry:
    gamma, delta = relator.pair
    derived = {ij: c for ij, c in derive_structure_constants(gamma, delta)}
    displayed = {
        (term.u_power, term.v_power): term.coefficient for term in relator.rhs_terms().values()
    }
    return ReportEntry.outcome(
        relator.id.replace("A-", "A-const-", 1),
        relator.anchor,
        derived == displayed,
        Engine.MATRIX_SHADOW,
        {"derived": sorted(derived.items()), "displayed": sorted(displayed.items())},
    )


def appendix_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    rings = config.appendix_rings()
    catalog = relator_catalog(RelatorKind.PARAMETRIZED)
    entries = []
    for ring in rings:
        assignment = MatrixAssignment(ring)
        samples = sample_pairs(ring, config.samples, rng)
        for relator in catalog:
            entry = check_relator(relator, assignment, samples)
            if len(rings) > 1:
                entry.check_id = f"{entry.check_id}@{ring.spec}"
            entries.append(entry)
        entries.extend(check_one_parameter_law(root, assignment, samples) for root in Root)
    entries.extend(_constants_entry(relator) for relator in catalog)
    return entries


def weyl_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return check_weyl_table(MatrixAssignment()) + homs.verify_weyl_inverses(config.step_budget)


def f_relations_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return (
        homs.verify_f_braid_relations()
        + homs.verify_surjectivity()
        + homs.verify_homomorphism_law(rng)
        + homs.verify_phi_f_identity(config.engine, config.step_budget)
    )


def beta_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_f_beta_trivial(rng)


def lemma44_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_lemma_44(config.step_budget)


def phi_relations_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_phi_relations(config.engine, config.step_budget)


def delta_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_delta_facts(config.engine, config.step_budget)


def remark45_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_remark_45()


def corollary42_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_corollary_42()


def engines_suite(config: RunConfig, rng: random.Random) -> List[ReportEntry]:
    return homs.verify_engine_agreement(rng, config.samples, budget=config.step_budget)


# canonical order
SUITES: Dict[str, Suite] = {
    "presentation": presentation_suite,
    "appendix": appendix_suite,
    "weyl": weyl_suite,
    "f-relations": f_relations_suite,
    "beta": beta_suite,
    "lemma44": lemma44_suite,
    "phi-relations": phi_relations_suite,
    "delta": delta_suite,
    "remark45": remark45_suite,
    "corollary42": corollary42_suite,
    "engines": engines_suite,
}

SELECTORS = ["all"] + list(SUITES)


def run_suites(selector: str = "all", config: Optional[RunConfig] = None) -> VerificationReport:
    """
    Run one suite, or all of them, and collect a report.

    Raises:
        ConfigError: unknown selector or invalid config.
    """
    config = (config or RunConfig()).validate()
    if selector not in SELECTORS:
        raise ConfigError(f"unknown suite {selector!r}; choose from {', '.join(SELECTORS)}")

    names = list(SUITES) if selector == "all" else [selector]
    report = VerificationReport(header=config.header(selector))
    for name in names:
        entries = SUITES[name](config, random.Random(f"{config.seed}:{name}"))
        for entry in entries:
            entry.suite = name
        logger.debug("suite %s: %d entries", name, len(entries))
        report.extend(entries)
    return report
