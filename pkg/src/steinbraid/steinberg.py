"""
Steinberg words and the relator catalog for the C2 Steinberg group.

Words are sequences of letters x_root(parameter). An exponent k is written as the
parameter k (x(1)^k = x(k) by the one-parameter law), so x^-1 is x(-1). Words
are never normalized: every claim about them is decided by evaluating both
sides under an Assignment.

Relators come in two catalogs of 24:
- "unparametrized": the relations among the generators x_gamma = x_gamma(1),
  with ids "P2.1-x1a" .. "P2.1-x15"
- "parametrized": the same relations with ring parameters u, v, with ids
  "A-B1a" .. "A-B15"

Both catalogs are built from one table, so every parametrized relator at
u = v = 1 is letter-for-letter its unparametrized counterpart.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .report import Engine, ReportEntry
from .rings import Ring
from .roots import Root
from .targets.base import Assignment

logger = logging.getLogger(__name__)

A = Root.ALPHA
B = Root.BETA
AB = Root.ALPHA_PLUS_BETA
TAB = Root.TWO_ALPHA_PLUS_BETA
NA = Root.NEG_ALPHA
NB = Root.NEG_BETA
NAB = Root.NEG_ALPHA_PLUS_BETA
NTAB = Root.NEG_TWO_ALPHA_PLUS_BETA


@dataclass(frozen=True)
class SteinbergLetter:
    """The generator x_root(parameter)."""

    root: Root
    parameter: int = 1

    def inverse(self) -> "SteinbergLetter":
        return SteinbergLetter(self.root, -self.parameter)

    def __str__(self) -> str:
        return f"x_{self.root}({self.parameter})"


@dataclass(frozen=True)
class SteinbergWord:
    letters: Tuple[SteinbergLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def of(cls, *pairs: Tuple[Root, int]) -> "SteinbergWord":
        """SteinbergWord.of((Root.BETA, 1), (Root.ALPHA_PLUS_BETA, -1))."""
        return cls(tuple(SteinbergLetter(root, parameter) for root, parameter in pairs))

    def inverse(self) -> "SteinbergWord":
        return SteinbergWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def __mul__(self, other: "SteinbergWord") -> "SteinbergWord":
        return SteinbergWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) or "1"


def x(root: Root, parameter: int = 1) -> SteinbergWord:
    return SteinbergWord((SteinbergLetter(root, parameter),))


def weyl_word(root: Root) -> SteinbergWord:
    """w_root = x_root x_{-root}^-1 x_root."""
    return SteinbergWord.of((root, 1), (root.negative(), -1), (root, 1))


@dataclass(frozen=True)
class Monomial:
    """coefficient * u^u_power * v^v_power, a formal relator parameter."""

    coefficient: int = 1
    u_power: int = 0
    v_power: int = 0

    def evaluate(self, ring: Ring, u: int, v: int) -> int:
        return ring.normalize(self.coefficient * u**self.u_power * v**self.v_power)

    def negated(self) -> "Monomial":
        return Monomial(-self.coefficient, self.u_power, self.v_power)

    def constant(self) -> "Monomial":
        """The monomial at u = v = 1."""
        return Monomial(self.coefficient)

    def __str__(self) -> str:
        variables = _power("u", self.u_power) + _power("v", self.v_power)
        if not variables:
            return str(self.coefficient)
        if self.coefficient == 1:
            return variables
        if self.coefficient == -1:
            return "-" + variables
        return f"{self.coefficient}{variables}"


def _power(name: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return name if exponent == 1 else f"{name}^{exponent}"


ONE = Monomial()
U = Monomial(1, 1, 0)
V = Monomial(1, 0, 1)


@dataclass(frozen=True)
class LetterTemplate:
    root: Root
    parameter: Monomial = ONE

    def __str__(self) -> str:
        return f"x_{self.root}({self.parameter})"


@dataclass(frozen=True)
class WordTemplate:
    """A Steinberg word whose parameters are monomials in u and v."""

    letters: Tuple[LetterTemplate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def instantiate(self, ring: Ring, u: int = 1, v: int = 1) -> SteinbergWord:
        return SteinbergWord(
            tuple(
                SteinbergLetter(letter.root, letter.parameter.evaluate(ring, u, v))
                for letter in self.letters
            )
        )

    def roots(self) -> Tuple[Root, ...]:
        return tuple(letter.root for letter in self.letters)

    def reversed(self) -> "WordTemplate":
        return WordTemplate(tuple(reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters) or "1"


def commutator_template(gamma: Root, delta: Root, u: Monomial = U, v: Monomial = V) -> WordTemplate:
    """[x_gamma(u), x_delta(v)] = x_gamma(u) x_delta(v) x_gamma(-u) x_delta(-v)."""
    return WordTemplate(
        (
            LetterTemplate(gamma, u),
            LetterTemplate(delta, v),
            LetterTemplate(gamma, u.negated()),
            LetterTemplate(delta, v.negated()),
        )
    )


class RelatorKind(Enum):
    UNPARAMETRIZED = "unparametrized"
    PARAMETRIZED = "parametrized"


@dataclass(frozen=True)
class Relator:
    """The identity [x_gamma(u), x_delta(v)] = rhs."""

    id: str
    anchor: str
    kind: RelatorKind
    pair: Tuple[Root, Root]
    lhs: WordTemplate
    rhs: WordTemplate
    alternate_rhs: Optional[WordTemplate] = None

    def rhs_terms(self) -> Dict[Root, Monomial]:
        return {letter.root: letter.parameter for letter in self.rhs.letters}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "alternate_rhs": str(self.alternate_rhs) if self.alternate_rhs else None,
        }


# family -> commuting pairs, members lettered a..d
_COMMUTING = (
    ("1", ((A, TAB), (B, AB), (B, TAB), (AB, TAB))),
    ("2", ((A, NB), (B, NA), (B, NTAB), (NB, TAB))),
    ("3", ((NA, NTAB), (NB, NAB), (NB, NTAB), (NAB, NTAB))),
)

# (number, gamma, delta, rhs factors as (root, coefficient, u power, v power), has a
# second displayed factor order)
_NONCOMMUTING = (
    ("4", A, B, ((AB, 1, 1, 1), (TAB, 1, 2, 1)), True),
    ("5", A, AB, ((TAB, 2, 1, 1),), False),
    ("6", A, NAB, ((NB, -2, 1, 1),), False),
    ("7", A, NTAB, ((NB, 1, 2, 1), (NAB, -1, 1, 1)), True),
    ("8", B, NAB, ((NA, 1, 1, 1), (NTAB, 1, 1, 2)), True),
    ("9", AB, NA, ((B, -2, 1, 1),), False),
    ("10", AB, NB, ((A, 1, 1, 1), (TAB, -1, 2, 1)), True),
    ("11", AB, NTAB, ((NA, 1, 1, 1), (B, -1, 2, 1)), True),
    ("12", TAB, NA, ((AB, -1, 1, 1), (B, -1, 1, 2)), True),
    ("13", TAB, NAB, ((A, 1, 1, 1), (NB, 1, 1, 2)), True),
    ("14", NA, NB, ((NAB, -1, 1, 1), (NTAB, 1, 2, 1)), True),
    ("15", NA, NAB, ((NTAB, -2, 1, 1),), False),
)

# the unparametrized catalog names relation 6 "x6a"
_UNPARAMETRIZED_NAMES = {"6": "6a"}


def _relator(kind: RelatorKind, name: str, gamma: Root, delta: Root, rhs, alternate: bool):
    if kind == RelatorKind.UNPARAMETRIZED:
        relator_id, anchor = f"P2.1-x{name}", f"Prop 2.1 ({name})"
        lhs = commutator_template(gamma, delta, ONE, ONE)
        rhs = WordTemplate(
            tuple(LetterTemplate(letter.root, letter.parameter.constant()) for letter in rhs)
        )
        alternate_rhs = rhs.reversed() if alternate else None
    else:
        relator_id, anchor = f"A-B{name}", f"Appendix A (B{name})"
        lhs = commutator_template(gamma, delta)
        rhs = WordTemplate(rhs)
        alternate_rhs = None
    return Relator(relator_id, anchor, kind, (gamma, delta), lhs, rhs, alternate_rhs)


def relator_catalog(kind: Union[RelatorKind, str] = RelatorKind.UNPARAMETRIZED) -> List[Relator]:
    """The 24 defining relators of the given kind, commuting families first."""
    kind = RelatorKind(kind)
    catalog = []
    for family, pairs in _COMMUTING:
        for suffix, (gamma, delta) in zip("abcd", pairs):
            catalog.append(_relator(kind, family + suffix, gamma, delta, (), False))
    for number, gamma, delta, factors, alternate in _NONCOMMUTING:
        rhs = tuple(LetterTemplate(root, Monomial(c, i, j)) for root, c, i, j in factors)
        name = number
        if kind == RelatorKind.UNPARAMETRIZED:
            name = _UNPARAMETRIZED_NAMES.get(number, number)
        catalog.append(_relator(kind, name, gamma, delta, rhs, alternate))
    return catalog


def relator_by_id(relator_id: str) -> Relator:
    if relator_id.startswith("P2.1-"):
        kind = RelatorKind.UNPARAMETRIZED
    else:
        kind = RelatorKind.PARAMETRIZED
    for relator in relator_catalog(kind):
        if relator.id == relator_id:
            return relator
    raise KeyError(f"unknown relator {relator_id!r}")


def evaluate(word: SteinbergWord, assignment: Assignment) -> Any:
    """
    Left-to-right product of the assigned images of word's letters.

    Raises:
        UnassignedRootError: a letter's root has no image.
    """
    return assignment.product(
        assignment.image(letter.root, letter.parameter) for letter in word.letters
    )


def sample_pairs(ring: Ring, count: int, rng: random.Random) -> List[Tuple[int, int]]:
    return [(ring.sample(rng), ring.sample(rng)) for _ in range(count)]


def check_relator(
    relator: Relator,
    assignment: Assignment,
    samples: Sequence[Tuple[int, int]] = (),
    engine: Optional[Engine] = None,
) -> ReportEntry:
    """
    Evaluate both sides of relator under assignment and compare.

    Unparametrized relators are checked once at u = v = 1 and ignore samples;
    parametrized relators are checked at every (u, v) in samples. The first
    failing sample is recorded as the counterexample.
    """
    ring = assignment.ring
    points = [(1, 1)] if relator.kind == RelatorKind.UNPARAMETRIZED else list(samples)
    sides = [("rhs", relator.rhs)]
    if relator.alternate_rhs is not None:
        sides.append(("alternate_rhs", relator.alternate_rhs))

    counterexample = None
    for u, v in points:
        lhs = evaluate(relator.lhs.instantiate(ring, u, v), assignment)
        for side, template in sides:
            rhs = evaluate(template.instantiate(ring, u, v), assignment)
            if not assignment.equal(lhs, rhs):
                counterexample = {
                    "ring": ring.spec,
                    "u": u,
                    "v": v,
                    "side": side,
                    "lhs": assignment.describe(lhs),
                    "rhs": assignment.describe(rhs),
                }
                break
        if counterexample:
            break

    if counterexample:
        logger.warning("relator %s fails over %s at u=%s, v=%s", relator.id, ring, u, v)
    return ReportEntry.outcome(
        relator.id,
        relator.anchor,
        counterexample is None,
        engine or assignment.engine,
        counterexample,
    )


# (w root, conjugated root, image root, sign): w x_delta w^-1 = x_image^sign
WEYL_TABLE: Tuple[Tuple[Root, Root, Root, int], ...] = (
    (B, A, AB, -1),
    (B, NA, NAB, -1),
    (B, AB, A, 1),
    (B, NAB, NA, 1),
    (B, TAB, TAB, 1),
    (B, NTAB, NTAB, 1),
    (TAB, B, B, 1),
    (TAB, NB, NB, 1),
    (TAB, A, NAB, -1),
    (TAB, NAB, A, 1),
    (TAB, AB, NA, 1),
    (TAB, NA, AB, -1),
    (A, B, TAB, 1),
    (A, NB, NTAB, 1),
    (A, AB, AB, -1),
    (A, NAB, NAB, -1),
    (A, TAB, B, 1),
    (A, NTAB, NB, 1),
    (AB, A, A, -1),
    (AB, NA, NA, -1),
    (AB, B, NTAB, -1),
    (AB, NTAB, B, -1),
    (AB, TAB, NB, -1),
    (AB, NB, TAB, -1),
)


def weyl_check_id(w_root: Root, delta: Root) -> str:
    return f"L2.3-w{w_root}-x{delta}"


def check_weyl_identity(
    w_root: Root, delta: Root, image: Root, sign: int, assignment: Assignment
) -> ReportEntry:
    """w_root x_delta w_root^-1 = x_image^sign under assignment."""
    w = weyl_word(w_root)
    lhs = evaluate(w * x(delta) * w.inverse(), assignment)
    rhs = evaluate(x(image, sign), assignment)
    passed = assignment.equal(lhs, rhs)
    return ReportEntry.outcome(
        weyl_check_id(w_root, delta),
        "Lemma 2.3",
        passed,
        assignment.engine,
        {"lhs": assignment.describe(lhs), "rhs": assignment.describe(rhs)},
    )


def check_weyl_table(assignment: Assignment) -> List[ReportEntry]:
    """All 24 conjugation identities of WEYL_TABLE."""
    return [
        check_weyl_identity(w_root, delta, image, sign, assignment)
        for w_root, delta, image, sign in WEYL_TABLE
    ]


def check_weyl_inverse(
    root: Root, assignment: Assignment, engine: Optional[Engine] = None
) -> ReportEntry:
    """w_root * w_{-root} = 1 under assignment."""
    value = evaluate(weyl_word(root) * weyl_word(root.negative()), assignment)
    passed = assignment.equal(value, assignment.identity())
    return ReportEntry.outcome(
        f"L2.2-w{root}",
        "Lemma 2.2",
        passed,
        engine or assignment.engine,
        {"product": assignment.describe(value)},
    )


def check_one_parameter_law(
    root: Root, assignment: Assignment, samples: Sequence[Tuple[int, int]]
) -> ReportEntry:
    """x_root(u) x_root(v) = x_root(u+v) at every sample."""
    ring = assignment.ring
    counterexample = None
    for u, v in samples:
        lhs = evaluate(x(root, u) * x(root, v), assignment)
        rhs = evaluate(x(root, ring.add(u, v)), assignment)
        if not assignment.equal(lhs, rhs):
            counterexample = {"ring": ring.spec, "u": u, "v": v}
            break
    return ReportEntry.outcome(
        f"A-additive-{root}-{ring.spec}",
        "Appendix A (one-parameter law)",
        counterexample is None,
        assignment.engine,
        counterexample,
    )
