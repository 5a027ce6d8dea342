"""
Exact 4x4 symplectic matrices over Z and Z/m.

Matrices are numpy arrays of dtype=object holding Python ints, so products never
overflow; entries are reduced into the ring after every operation. A matrix M is
symplectic when M^T J M = J for

    J = [[ 0,  I2],
         [-I2,  0]]

The root subgroup generators are X_gamma(u) = I + u * N_gamma, with one nilpotent
N_gamma per root. X_gamma(1) are the eight generators of Sp4(Z), and
X_{-gamma}(u) is the transpose of X_gamma(u).
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import NotSymplecticError, RingMismatchError, StructureConstantError
from .rings import ZZ, Ring
from .roots import Root

logger = logging.getLogger(__name__)

SIZE = 4

# (row, column) -> value of the nilpotent part of X_gamma(1), 0-based
_NILPOTENTS: Dict[Root, Dict[Tuple[int, int], int]] = {
    Root.ALPHA: {(0, 1): 1, (3, 2): -1},
    Root.NEG_ALPHA: {(1, 0): 1, (2, 3): -1},
    Root.BETA: {(1, 3): 1},
    Root.NEG_BETA: {(3, 1): 1},
    Root.ALPHA_PLUS_BETA: {(0, 3): 1, (1, 2): 1},
    Root.NEG_ALPHA_PLUS_BETA: {(2, 1): 1, (3, 0): 1},
    Root.TWO_ALPHA_PLUS_BETA: {(0, 2): 1},
    Root.NEG_TWO_ALPHA_PLUS_BETA: {(2, 0): 1},
}


def _reduce(array: np.ndarray, ring: Ring) -> np.ndarray:
    return np.frompyfunc(ring.normalize, 1, 1)(array).astype(object)


def _form(ring: Ring) -> np.ndarray:
    form = np.zeros((SIZE, SIZE), dtype=object)
    form[0, 2] = form[1, 3] = 1
    form[2, 0] = form[3, 1] = -1
    return _reduce(form, ring)


@dataclass(frozen=True, eq=False)
class SymplecticMatrix:
    """A 4x4 matrix over an exact ring (symplecticity is checked, not assumed)."""

    ring: Ring
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=object)
        if entries.shape != (SIZE, SIZE):
            raise ValueError(f"expected a {SIZE}x{SIZE} matrix, got shape {entries.shape}")
        object.__setattr__(self, "entries", _reduce(entries, self.ring))

    @classmethod
    def identity(cls, ring: Ring = ZZ) -> "SymplecticMatrix":
        return cls(ring, np.identity(SIZE, dtype=int).astype(object))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ring: Ring = ZZ) -> "SymplecticMatrix":
        return cls(ring, np.array(rows, dtype=object))

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(value) for value in row) for row in self.entries)

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix(self.ring, self.entries.T)

    def inverse(self) -> "SymplecticMatrix":
        return mat_inv(self)

    def determinant(self) -> int:
        return determinant(self)

    def is_identity(self) -> bool:
        return self == SymplecticMatrix.identity(self.ring)

    def format(self) -> str:
        """Row-major display: entries separated by spaces, rows by newlines."""
        return "\n".join(" ".join(str(value) for value in row) for row in self.rows())

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        return mat_mul(self, other)

    def __pow__(self, exponent: int) -> "SymplecticMatrix":
        base = self if exponent >= 0 else mat_inv(self)
        result = SymplecticMatrix.identity(self.ring)
        for _ in range(abs(exponent)):
            result = mat_mul(result, base)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows() == other.rows()

    def __hash__(self) -> int:
        return hash((self.ring, self.rows()))

    def __repr__(self) -> str:
        return f"SymplecticMatrix({self.ring}, {list(map(list, self.rows()))})"

    def __str__(self) -> str:
        return self.format()


def _check_same_ring(m: SymplecticMatrix, n: SymplecticMatrix):
    if m.ring != n.ring:
        raise RingMismatchError(f"matrices over different rings: {m.ring} vs {n.ring}")


def x_matrix(root: Root, u: int = 1, ring: Ring = ZZ) -> SymplecticMatrix:
    """The root subgroup element X_root(u) = I + u * N_root."""
    entries = np.identity(SIZE, dtype=int).astype(object)
    for (row, column), value in _NILPOTENTS[root].items():
        entries[row, column] += value * u
    return SymplecticMatrix(ring, entries)


def mat_mul(m: SymplecticMatrix, n: SymplecticMatrix) -> SymplecticMatrix:
    _check_same_ring(m, n)
    return SymplecticMatrix(m.ring, m.entries.dot(n.entries))


def is_symplectic(m: SymplecticMatrix) -> bool:
    """True iff M^T J M = J over the matrix's ring."""
    form = _form(m.ring)
    product = _reduce(m.entries.T.dot(form).dot(m.entries), m.ring)
    return bool((product == form).all())


def mat_inv(m: SymplecticMatrix) -> SymplecticMatrix:
    """
    Inverse of a symplectic matrix, -J M^T J.

    Raises:
        NotSymplecticError: M does not preserve the form.
    """
    if not is_symplectic(m):
        raise NotSymplecticError(f"matrix is not symplectic over {m.ring}:\n{m.format()}")
    form = _form(m.ring)
    return SymplecticMatrix(m.ring, -form.dot(m.entries.T).dot(form))


def commutator(m: SymplecticMatrix, n: SymplecticMatrix) -> SymplecticMatrix:
    """[M, N] = M N M^-1 N^-1."""
    _check_same_ring(m, n)
    return m @ n @ mat_inv(m) @ mat_inv(n)


def product(matrices: Iterable[SymplecticMatrix], ring: Ring = ZZ) -> SymplecticMatrix:
    result = SymplecticMatrix.identity(ring)
    for matrix in matrices:
        result = result @ matrix
    return result


def determinant(m: SymplecticMatrix) -> int:
    """Exact determinant by Leibniz expansion, reduced into the ring."""
    total = 0
    for perm in itertools.permutations(range(SIZE)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = -1 if inversions % 2 else 1
        for row, column in enumerate(perm):
            term *= int(m.entries[row, column])
        total += term
    return m.ring.normalize(total)


def w_matrix(root: Root, ring: Ring = ZZ) -> SymplecticMatrix:
    """The Weyl element X_root(1) X_{-root}(1)^-1 X_root(1)."""
    x = x_matrix(root, 1, ring)
    return x @ x_matrix(root.negative(), -1, ring) @ x


StructureConstants = List[Tuple[Tuple[int, int], int]]

_DERIVATION_SAMPLES = ((1, 1), (2, 1), (1, 2), (-1, 3), (3, -2))
_VERIFICATION_SAMPLES = 8
_CONSTANT_RANGE = range(-3, 4)


def _candidate_terms(gamma: Root, delta: Root) -> List[Tuple[Tuple[int, int], Root]]:
    (ga, gb), (da, db) = gamma.value, delta.value
    terms = []
    for i in range(1, 4):
        for j in range(1, 4):
            root = Root.from_coefficients(i * ga + j * da, i * gb + j * db)
            if root is not None:
                terms.append(((i, j), root))
    return sorted(terms, key=lambda term: (sum(term[0]), term[0][0]))


def _commutator_sample(gamma: Root, delta: Root, u: int, v: int) -> SymplecticMatrix:
    return commutator(x_matrix(gamma, u), x_matrix(delta, v))


def _fits(lhs: SymplecticMatrix, terms, constants, u: int, v: int) -> bool:
    rhs = product(
        x_matrix(root, c * u**i * v**j) for ((i, j), root), c in zip(terms, constants)
    )
    return lhs == rhs


def derive_structure_constants(gamma: Root, delta: Root) -> StructureConstants:
    """
    Integers c_ij with [X_gamma(u), X_delta(v)] = prod X_{i gamma + j delta}(c_ij u^i v^j).

    The product runs over i+j ascending. Candidates in -3..3 are tried against a
    fixed set of (u, v) over Z, the unique fit is confirmed on seeded random
    samples, and zero constants are dropped.

    Raises:
        ValueError: gamma + delta = 0.
        StructureConstantError: no constants fit, several do, or the fit fails
            verification.
    """
    if gamma.negative() == delta:
        raise ValueError(f"no commutator formula for opposite roots {gamma} and {delta}")

    terms = _candidate_terms(gamma, delta)
    samples = [(_commutator_sample(gamma, delta, u, v), u, v) for u, v in _DERIVATION_SAMPLES]
    solutions = [
        constants
        for constants in itertools.product(_CONSTANT_RANGE, repeat=len(terms))
        if all(_fits(lhs, terms, constants, u, v) for lhs, u, v in samples)
    ]
    if len(solutions) != 1:
        raise StructureConstantError(
            f"[{gamma}, {delta}]: expected one set of constants, found {len(solutions)}"
        )
    constants = solutions[0]

    rng = random.Random(f"structure-constants:{gamma.label}:{delta.label}")
    for _ in range(_VERIFICATION_SAMPLES):
        u, v = ZZ.sample(rng), ZZ.sample(rng)
        if not _fits(_commutator_sample(gamma, delta, u, v), terms, constants, u, v):
            raise StructureConstantError(
                f"[{gamma}, {delta}]: constants {constants} fail at u={u}, v={v}"
            )

    result = [(ij, c) for (ij, _), c in zip(terms, constants) if c != 0]
    logger.debug("structure constants [%s, %s] = %s", gamma, delta, result)
    return result


def structure_constant_table() -> Dict[Tuple[Root, Root], StructureConstants]:
    """Constants for every ordered root pair with gamma + delta != 0."""
    return {
        (gamma, delta): derive_structure_constants(gamma, delta)
        for gamma in Root
        for delta in Root
        if gamma.negative() != delta
    }
