"""
The maps between the braid group B6, the Steinberg group St(C2, Z) and Sp4(Z),
and the checks that tie them together.

    f:      B6 -> St(C2, Z)        sigma_i -> a Steinberg word (F_MAP)
    f_bar:  B6 -> Sp4(Z)           f followed by x_gamma -> X_gamma
    phi:    St(C2, Z) -> B6 / N    x_gamma -> a braid word (PHI_MAP)

N is the normal closure of the braid RELATOR_BETA. Braid identities are decided
exactly (Garside normal form, handle reduction, or both); Steinberg identities
are decided through their images under the matrix projection. Each verify_*
function returns a list of report entries and never raises on a failed check.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .braid import (
    BraidWord,
    commutator,
    conjugate,
    delta,
    format_word,
    free_reduce,
    inverse,
    parse_braid,
)
from .config import EngineChoice
from .garside import equal as garside_equal
from .garside import normal_form
from .handles import DEFAULT_STEP_BUDGET, oracle_equal
from .report import Engine, ReportEntry
from .rings import ZZ, Ring
from .roots import Root
from .steinberg import (
    SteinbergWord,
    check_weyl_inverse,
    evaluate,
    relator_catalog,
    x,
)
from .symplectic import SymplecticMatrix, w_matrix, x_matrix
from .targets.braid import BraidAssignment, braid_equal
from .targets.matrix import MatrixAssignment

logger = logging.getLogger(__name__)

STRANDS = 6


def word(text: str) -> BraidWord:
    return parse_braid(text, STRANDS)


def sigma(index: int, sign: int = 1) -> BraidWord:
    return BraidWord.generator(index, STRANDS, sign)


# Named braids
C = word("s1 s3^-1 s5")
P = word("s1 s2 s1")
Q = word("s4 s5 s4")
RELATOR_BETA = P**2 * C * P**-2 * C
GAMMA = C * P**-2 * C * P**2
W = word("s5 s4 s1 s2") * word("s1 s2 s3")
DELTA = delta(STRANDS)


@dataclass(frozen=True)
class FMap:
    """sigma_i -> f(sigma_i) for i = 1..5."""

    images: Dict[int, SteinbergWord] = field(default_factory=dict)

    def image(self, braid: BraidWord) -> SteinbergWord:
        """f(braid): concatenated letter images, sigma_i^-1 -> f(sigma_i)^-1."""
        result = SteinbergWord()
        for letter in braid.letters:
            image = self.images[letter.index]
            result = result * (image if letter.sign > 0 else image.inverse())
        return result


@dataclass(frozen=True)
class PhiMap:
    """x_gamma -> phi(x_gamma) in B6 for the eight roots."""

    images: Dict[Root, BraidWord] = field(default_factory=dict)

    def image(self, steinberg: SteinbergWord) -> BraidWord:
        """phi of a Steinberg word: x_gamma(k) -> phi(x_gamma)^k, concatenated."""
        result = BraidWord.identity(STRANDS)
        for letter in steinberg.letters:
            result = result * self.images[letter.root] ** letter.parameter
        return result

    def assignment(
        self, choice: EngineChoice = EngineChoice.GARSIDE, budget: int = DEFAULT_STEP_BUDGET
    ) -> BraidAssignment:
        return BraidAssignment(self.images, STRANDS, choice, budget)


F_MAP = FMap(
    {
        1: x(Root.TWO_ALPHA_PLUS_BETA),
        2: x(Root.NEG_TWO_ALPHA_PLUS_BETA, -1),
        3: SteinbergWord.of(
            (Root.BETA, 1), (Root.ALPHA_PLUS_BETA, -1), (Root.TWO_ALPHA_PLUS_BETA, 1)
        ),
        4: x(Root.NEG_BETA, -1),
        5: x(Root.BETA),
    }
)

PHI_MAP = PhiMap(
    {
        Root.ALPHA: conjugate(C, word("s5 s4")),
        Root.BETA: word("s5"),
        Root.ALPHA_PLUS_BETA: C,
        Root.TWO_ALPHA_PLUS_BETA: word("s1"),
        Root.NEG_ALPHA: conjugate(C, word("s1 s2")),
        Root.NEG_BETA: word("s4^-1"),
        Root.NEG_ALPHA_PLUS_BETA: conjugate(word("s1^-1 s3 s5^-1"), word("s1 s2 s5 s4")),
        Root.NEG_TWO_ALPHA_PLUS_BETA: word("s2^-1"),
    }
)


def phi(root: Root) -> BraidWord:
    return PHI_MAP.images[root]


def relator_beta() -> BraidWord:
    """(s1 s2 s1)^2 (s1 s3^-1 s5) (s1 s2 s1)^-2 (s1 s3^-1 s5)."""
    return RELATOR_BETA


def f_image(braid: BraidWord) -> SteinbergWord:
    return F_MAP.image(braid)


def phi_image(steinberg: SteinbergWord) -> BraidWord:
    return PHI_MAP.image(steinberg)


def f_bar(braid: BraidWord, ring: Ring = ZZ) -> SymplecticMatrix:
    """The matrix of f(braid) in Sp4 over ring."""
    return evaluate(f_image(braid), MatrixAssignment(ring))


def braid_relations(strands: int = STRANDS) -> List[Tuple[str, BraidWord, BraidWord]]:
    """(id suffix, lhs, rhs) for the commutation and braid relations of B_n."""
    relations = []
    for i in range(1, strands):
        for j in range(i + 1, strands):
            si, sj = BraidWord.generator(i, strands), BraidWord.generator(j, strands)
            if j == i + 1:
                relations.append((f"{i}{j}{i}", si * sj * si, sj * si * sj))
            else:
                relations.append((f"{i}{j}", si * sj, sj * si))
    return relations


def random_word(
    rng: random.Random, strands: int = STRANDS, max_length: int = 40, min_length: int = 0
) -> BraidWord:
    length = rng.randint(min_length, max_length)
    return BraidWord.from_signed(
        strands, [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    )


def _matrix_entry(check_id: str, anchor: str, lhs: SymplecticMatrix, rhs: SymplecticMatrix):
    return ReportEntry.outcome(
        check_id,
        anchor,
        lhs == rhs,
        Engine.MATRIX_SHADOW,
        {"lhs": lhs.format(), "rhs": rhs.format()},
    )


def _braid_entry(
    check_id: str,
    anchor: str,
    lhs: BraidWord,
    rhs: BraidWord,
    engine: EngineChoice,
    budget: int,
):
    return ReportEntry.outcome(
        check_id,
        anchor,
        braid_equal(lhs, rhs, engine, budget),
        Engine.EXACT_B6,
        {"lhs": format_word(lhs), "rhs": format_word(rhs)},
    )


def verify_f_braid_relations() -> List[ReportEntry]:
    """The ten braid relations among f_bar(sigma_i), as matrix identities."""
    return [
        _matrix_entry(f"F-braid-{suffix}", "Prop 3.1", f_bar(lhs), f_bar(rhs))
        for suffix, lhs, rhs in braid_relations()
    ]


def surjectivity_witnesses() -> Dict[Root, BraidWord]:
    """
    A braid word whose f_bar is X_gamma, for every root.

    Five roots are images of generators; x_a, x_-a and x_-(a+b) are recovered from
    commutators of the others.
    """
    x_alpha = commutator(C, sigma(4, -1)) * sigma(1)
    x_neg_alpha = commutator(C, sigma(2, -1)) * sigma(5)
    return {
        Root.ALPHA: x_alpha,
        Root.BETA: sigma(5),
        Root.ALPHA_PLUS_BETA: C,
        Root.TWO_ALPHA_PLUS_BETA: sigma(1),
        Root.NEG_ALPHA: x_neg_alpha,
        Root.NEG_BETA: sigma(4, -1),
        Root.NEG_ALPHA_PLUS_BETA: sigma(2, -1) * inverse(commutator(x_neg_alpha, sigma(4, -1))),
        Root.NEG_TWO_ALPHA_PLUS_BETA: sigma(2, -1),
    }


def verify_surjectivity() -> List[ReportEntry]:
    return [
        _matrix_entry(f"F-onto-{root}", "Prop 3.1 (surjectivity)", f_bar(braid), x_matrix(root))
        for root, braid in surjectivity_witnesses().items()
    ]


def verify_f_beta_trivial(rng: Optional[random.Random] = None) -> List[ReportEntry]:
    """f_bar(beta) = I, f_bar(s1 s2 s1) = w_{2a+b}, and a random conjugate of beta maps to I."""
    rng = rng or random.Random(0)
    identity = SymplecticMatrix.identity()
    conjugator = random_word(rng, max_length=12, min_length=1)
    return [
        _matrix_entry("F-beta", "Prop 4.6", f_bar(RELATOR_BETA), identity),
        _matrix_entry(
            "F-s1s2s1-weyl",
            "Prop 4.6 (w_2a+b = f(s1 s2 s1))",
            f_bar(P),
            w_matrix(Root.TWO_ALPHA_PLUS_BETA),
        ),
        _matrix_entry(
            "F-beta-conjugate", "Prop 4.6", f_bar(conjugate(RELATOR_BETA, conjugator)), identity
        ),
    ]


def verify_phi_f_identity(
    engine: EngineChoice = EngineChoice.GARSIDE, budget: int = DEFAULT_STEP_BUDGET
) -> List[ReportEntry]:
    """(phi o f)(sigma_i) = sigma_i for i = 1..5."""
    entries = []
    for index in range(1, STRANDS):
        composed = phi_image(F_MAP.images[index])
        target = sigma(index)
        passed = free_reduce(composed) == target and braid_equal(composed, target, engine, budget)
        entries.append(
            ReportEntry.outcome(
                f"PF-s{index}",
                "Prop 4.3 (phi o f = id)",
                passed,
                Engine.EXACT_B6,
                {"composed": format_word(composed), "reduced": format_word(free_reduce(composed))},
            )
        )
    return entries


def lemma_44_equalities() -> List[Tuple[BraidWord, BraidWord]]:
    a, b = phi(Root.ALPHA), phi(Root.BETA)
    ab, tab = phi(Root.ALPHA_PLUS_BETA), phi(Root.TWO_ALPHA_PLUS_BETA)
    na, nb, nab = phi(Root.NEG_ALPHA), phi(Root.NEG_BETA), phi(Root.NEG_ALPHA_PLUS_BETA)
    return [
        (inverse(commutator(a, b)) * ab * tab, Q**2 * C * Q**-2 * C),
        (inverse(commutator(a, ab)) * tab**2, C * Q**2 * C * Q**-2),
        (commutator(a, nab) * nb**2, conjugate(inverse(GAMMA), W)),
        (commutator(ab, na) * b**2, C * P**2 * C * P**-2),
    ]


def verify_lemma_44(budget: int = DEFAULT_STEP_BUDGET) -> List[ReportEntry]:
    """The four B6 equalities, each decided by both engines."""
    entries = []
    for number, (lhs, rhs) in enumerate(lemma_44_equalities(), start=1):
        by_garside = garside_equal(lhs, rhs)
        by_oracle = oracle_equal(lhs, rhs, budget)
        if by_garside != by_oracle:
            logger.warning("engines disagree on Lemma 4.4 equality %d", number)
        entries.append(
            ReportEntry.outcome(
                f"L4.4-{number}",
                "Lemma 4.4",
                by_garside and by_oracle,
                Engine.EXACT_B6,
                {"garside": by_garside, "oracle": by_oracle},
            )
        )
    return entries


# relators whose phi-images hold only modulo N
MOD_N_RELATORS = ("P2.1-x4", "P2.1-x5", "P2.1-x6a", "P2.1-x9", "P2.1-x12", "P2.1-x15")


def phi_relator(relator_id: str) -> BraidWord:
    """phi(lhs) * phi(rhs)^-1 for an unparametrized relator."""
    for relator in relator_catalog("unparametrized"):
        if relator.id == relator_id:
            return phi_image(relator.lhs.instantiate(ZZ)) * inverse(
                phi_image(relator.rhs.instantiate(ZZ))
            )
    raise KeyError(relator_id)


def mod_n_witnesses() -> Dict[str, List[Tuple[str, BraidWord, BraidWord]]]:
    """
    For each relator holding only modulo N, a chain of exact B6 equalities ending
    with r = c beta^(+-1) c^-1, r being the relator's phi-image.
    """
    a, b = phi(Root.ALPHA), phi(Root.BETA)
    ab, tab = phi(Root.ALPHA_PLUS_BETA), phi(Root.TWO_ALPHA_PLUS_BETA)
    beta_inv = inverse(RELATOR_BETA)
    a4, a5 = commutator(a, b), commutator(a, ab)
    lemma = lemma_44_equalities()

    r4, r5, r6a = phi_relator("P2.1-x4"), phi_relator("P2.1-x5"), phi_relator("P2.1-x6a")
    r9, r12, r15 = phi_relator("P2.1-x9"), phi_relator("P2.1-x12"), phi_relator("P2.1-x15")
    return {
        "P2.1-x4": [
            ("lemma", *lemma[0]),
            ("delta", Q**2 * C * Q**-2 * C, conjugate(RELATOR_BETA, DELTA)),
            ("normal", r4, conjugate(beta_inv, a4 * DELTA)),
        ],
        "P2.1-x5": [
            ("lemma", *lemma[1]),
            ("delta", C * Q**2 * C * Q**-2, conjugate(RELATOR_BETA, C * DELTA)),
            ("normal", r5, conjugate(beta_inv, a5 * C * DELTA)),
        ],
        "P2.1-x6a": [
            ("lemma", r6a, lemma[2][1]),
            ("gamma", GAMMA, conjugate(RELATOR_BETA, P**-2)),
            ("normal", r6a, conjugate(beta_inv, W * P**-2)),
        ],
        "P2.1-x9": [
            ("lemma", r9, lemma[3][1]),
            ("normal", r9, conjugate(RELATOR_BETA, C)),
        ],
        "P2.1-x12": [
            ("delta", r12, conjugate(lemma[0][0], DELTA)),
            ("normal", r12, conjugate(RELATOR_BETA, DELTA**2)),
        ],
        "P2.1-x15": [
            ("delta", r15, conjugate(r6a, DELTA)),
            ("normal", r15, conjugate(beta_inv, DELTA * W * P**-2)),
        ],
    }


def verify_phi_relations(
    engine: EngineChoice = EngineChoice.GARSIDE, budget: int = DEFAULT_STEP_BUDGET
) -> List[ReportEntry]:
    """
    Substitute phi into the 24 relators. 18 hold exactly in B6; the six in
    MOD_N_RELATORS are checked against their witness chains and must not hold
    exactly.
    """
    assignment = PHI_MAP.assignment(engine, budget)
    witnesses = mod_n_witnesses()
    entries = []
    for relator in relator_catalog("unparametrized"):
        lhs = evaluate(relator.lhs.instantiate(ZZ), assignment)
        rhs = evaluate(relator.rhs.instantiate(ZZ), assignment)

        if relator.id not in witnesses:
            sides = [relator.rhs] + ([relator.alternate_rhs] if relator.alternate_rhs else [])
            failing = [
                str(side)
                for side in sides
                if not assignment.equal(lhs, evaluate(side.instantiate(ZZ), assignment))
            ]
            entries.append(
                ReportEntry.outcome(
                    relator.id,
                    f"Prop 4.3 ({relator.id.split('-')[1]})",
                    not failing,
                    Engine.EXACT_B6,
                    {"failing_rhs": failing, "lhs": format_word(lhs)},
                )
            )
            continue

        problems = []
        if assignment.equal(lhs, rhs):
            problems.append("relator holds exactly")
        if relator.alternate_rhs is not None:
            alternate = evaluate(relator.alternate_rhs.instantiate(ZZ), assignment)
            if not assignment.equal(rhs, alternate):
                problems.append("alternate rhs differs")
        for label, left, right in witnesses[relator.id]:
            if not assignment.equal(left, right):
                problems.append(f"witness step '{label}' fails")
        if problems:
            logger.warning("phi relator %s: %s", relator.id, "; ".join(problems))
        entries.append(
            ReportEntry.outcome(
                relator.id,
                f"Prop 4.3 ({relator.id.split('-')[1]}) mod N",
                not problems,
                Engine.MOD_N_WITNESS,
                {"problems": problems},
            )
        )
    return entries


def verify_delta_facts(
    engine: EngineChoice = EngineChoice.GARSIDE, budget: int = DEFAULT_STEP_BUDGET
) -> List[ReportEntry]:
    """Conjugation by Delta, centrality of Delta^2, the phi symmetries and the C3 relations."""
    checks: List[Tuple[str, str, BraidWord, BraidWord]] = []
    for index in range(1, STRANDS):
        checks.append(
            (f"D-conj-s{index}", "Eq. (17)", conjugate(sigma(index), DELTA), sigma(STRANDS - index))
        )
    for index in range(1, STRANDS):
        checks.append(
            (
                f"D-central-s{index}",
                "Eq. (17), Delta^2 central",
                DELTA**2 * sigma(index),
                sigma(index) * DELTA**2,
            )
        )
    checks.extend(
        [
            ("D-c", "Eq. (18)", conjugate(C, DELTA), C),
            ("D-c-reversed", "Eq. (18)", word("s5 s3^-1 s1"), C),
            ("D-s1s2s1-a", "Eq. (Delta3)", conjugate(P, DELTA), word("s5 s4 s5")),
            ("D-s1s2s1-b", "Eq. (Delta3)", conjugate(P, DELTA), Q),
        ]
    )
    symmetries = (
        ("D-sym1", "Eq. (19)", Root.BETA, Root.TWO_ALPHA_PLUS_BETA),
        ("D-sym2", "Eq. (20)", Root.NEG_BETA, Root.NEG_TWO_ALPHA_PLUS_BETA),
        ("D-sym3", "Eq. (21)", Root.ALPHA, Root.NEG_ALPHA),
        ("D-sym4+", "Eq. (22)", Root.ALPHA_PLUS_BETA, Root.ALPHA_PLUS_BETA),
        ("D-sym4-", "Eq. (22)", Root.NEG_ALPHA_PLUS_BETA, Root.NEG_ALPHA_PLUS_BETA),
    )
    for check_id, anchor, source, target in symmetries:
        checks.append((check_id, anchor, conjugate(phi(source), DELTA), phi(target)))

    b1, b2, b3 = word("s1 s5"), word("s2 s4"), word("s3")
    checks.extend(
        [
            ("C3-121", "Remark 4.4", b1 * b2 * b1, b2 * b1 * b2),
            ("C3-13", "Remark 4.4", b1 * b3, b3 * b1),
            ("C3-2323", "Remark 4.4", b2 * b3 * b2 * b3, b3 * b2 * b3 * b2),
        ]
    )
    return [
        _braid_entry(check_id, anchor, lhs, rhs, engine, budget)
        for check_id, anchor, lhs, rhs in checks
    ]


def verify_weyl_orders() -> List[ReportEntry]:
    """w^4 = I and w^2 != I for the long roots beta and 2a+b."""
    identity = SymplecticMatrix.identity()
    entries = []
    for root in (Root.BETA, Root.TWO_ALPHA_PLUS_BETA):
        w = w_matrix(root)
        entries.append(_matrix_entry(f"W-order4-{root}", "Section 2.4", w**4, identity))
        entries.append(
            ReportEntry.outcome(
                f"W-square-{root}",
                "Section 2.4",
                w**2 != identity,
                Engine.MATRIX_SHADOW,
                {"square": (w**2).format()},
            )
        )
    return entries


def verify_remark_45() -> List[ReportEntry]:
    """Matrix shadows of f(Delta^2) = w_b^12 = w_2a+b^12 = f(Q^12) = f(P^12)."""
    identity = SymplecticMatrix.identity()
    anchor = "Remark 4.5"
    return [
        _matrix_entry("R4.5-delta2", anchor, f_bar(DELTA**2), identity),
        _matrix_entry("R4.5-delta2-wb12", anchor, f_bar(DELTA**2), w_matrix(Root.BETA) ** 12),
        _matrix_entry("R4.5-wb12", anchor, w_matrix(Root.BETA) ** 12, identity),
        _matrix_entry("R4.5-w2ab12", anchor, w_matrix(Root.TWO_ALPHA_PLUS_BETA) ** 12, identity),
        _matrix_entry("R4.5-s4s5s4-12", anchor, f_bar(Q**12), identity),
        _matrix_entry("R4.5-s1s2s1-12", anchor, f_bar(P**12), identity),
    ] + verify_weyl_orders()


def verify_corollary_42() -> List[ReportEntry]:
    """Every relator of the five-generator presentation of Sp4(Z) maps to I."""
    identity = SymplecticMatrix.identity()
    anchor = "Cor 4.2"
    entries = [
        _matrix_entry("C4.2-beta", anchor, f_bar(RELATOR_BETA), identity),
        _matrix_entry("C4.2-s1s2s1-4", anchor, f_bar(P**4), identity),
    ]
    for suffix, lhs, rhs in braid_relations():
        entries.append(
            _matrix_entry(f"C4.2-braid-{suffix}", anchor, f_bar(lhs * inverse(rhs)), identity)
        )
    return entries


def verify_engine_agreement(
    rng: random.Random,
    samples: int = 100,
    max_length: int = 40,
    budget: int = DEFAULT_STEP_BUDGET,
) -> List[ReportEntry]:
    """
    Run both word-problem engines over seeded random B6 words.

    Half of the pairs are built equal (v is u with a braid relator inserted)
    so that both outcomes are exercised.
    """
    relators = [lhs * inverse(rhs) for _, lhs, rhs in braid_relations()]
    disagreement = inverse_failure = insertion_failure = None

    for _ in range(samples):
        u = random_word(rng, max_length=max_length)
        if rng.random() < 0.5:
            v = random_word(rng, max_length=max_length)
        else:
            cut = rng.randint(0, len(u))
            v = BraidWord(STRANDS, u.letters[:cut] + rng.choice(relators).letters + u.letters[cut:])

        if disagreement is None and garside_equal(u, v) != oracle_equal(u, v, budget):
            disagreement = {"u": format_word(u), "v": format_word(v)}

        trivial = u * inverse(u)
        if inverse_failure is None and not (
            normal_form(trivial).is_trivial()
            and oracle_equal(trivial, BraidWord.identity(STRANDS), budget)
        ):
            inverse_failure = {"u": format_word(u)}

        cut = rng.randint(0, len(u))
        relator = rng.choice(relators)
        inserted = BraidWord(STRANDS, u.letters[:cut] + relator.letters + u.letters[cut:])
        if insertion_failure is None and normal_form(inserted) != normal_form(u):
            insertion_failure = {"u": format_word(u), "with_relator": format_word(inserted)}

    anchor = "Lemma 4.4 (word problem engines)"
    return [
        ReportEntry.outcome("E-agree", anchor, disagreement is None, Engine.BOTH, disagreement),
        ReportEntry.outcome(
            "E-inverse", anchor, inverse_failure is None, Engine.BOTH, inverse_failure
        ),
        ReportEntry.outcome(
            "E-relator-insertion",
            anchor,
            insertion_failure is None,
            Engine.EXACT_B6,
            insertion_failure,
        ),
    ]


def verify_homomorphism_law(
    rng: random.Random, samples: int = 20, max_length: int = 12
) -> List[ReportEntry]:
    """f_bar(uv) = f_bar(u) f_bar(v) on seeded random words."""
    counterexample = None
    for _ in range(samples):
        u, v = random_word(rng, max_length=max_length), random_word(rng, max_length=max_length)
        if f_bar(u * v) != f_bar(u) @ f_bar(v):
            counterexample = {"u": format_word(u), "v": format_word(v)}
            break
    return [
        ReportEntry.outcome(
            "F-homomorphism",
            "Prop 3.1",
            counterexample is None,
            Engine.MATRIX_SHADOW,
            counterexample,
        )
    ]


def verify_weyl_inverses(budget: int = DEFAULT_STEP_BUDGET) -> List[ReportEntry]:
    """
    w_gamma w_-gamma = 1 for every root under the matrix projection.

    For the long roots the phi-images also multiply to 1 exactly in B6, and
    those entries are tagged "both".
    """
    matrices = MatrixAssignment()
    braids = PHI_MAP.assignment(EngineChoice.GARSIDE, budget)
    entries = []
    for root in Root:
        entry = check_weyl_inverse(root, matrices)
        if root.is_long():
            exact = check_weyl_inverse(root, braids)
            entry = ReportEntry.outcome(
                entry.check_id,
                entry.anchor,
                entry.passed and exact.passed,
                Engine.BOTH,
                {"matrix": entry.counterexample, "braid": exact.counterexample},
            )
        entries.append(entry)
    return entries
