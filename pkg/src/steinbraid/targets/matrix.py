"""Matrix target: x_gamma(u) -> X_gamma(u) in Sp4 over a ring."""

from typing import Dict, Iterable, List, Mapping, Optional

from ..errors import UnassignedRootError
from ..report import Engine
from ..rings import ZZ, Ring
from ..roots import Root
from ..symplectic import SymplecticMatrix, mat_inv, x_matrix
from .base import Assignment


class MatrixAssignment(Assignment):
    """
    The projection onto Sp4, optionally distorted for negative testing.

    Args:
        ring: Ring the matrices live over.
        scales: Per-root factor s so that x_root(u) -> X_root(s*u). Any root not
            listed keeps s = 1.
        roots: Restrict the assignment to these roots; others raise
            UnassignedRootError.
    """

    engine = Engine.MATRIX_SHADOW

    def __init__(
        self,
        ring: Ring = ZZ,
        scales: Optional[Mapping[Root, int]] = None,
        roots: Optional[Iterable[Root]] = None,
    ):
        self._ring = ring
        self.scales: Dict[Root, int] = dict(scales or {})
        self.roots: List[Root] = list(roots) if roots is not None else list(Root)

    @property
    def ring(self) -> Ring:
        return self._ring

    def identity(self) -> SymplecticMatrix:
        return SymplecticMatrix.identity(self._ring)

    def multiply(self, a: SymplecticMatrix, b: SymplecticMatrix) -> SymplecticMatrix:
        return a @ b

    def inverse(self, a: SymplecticMatrix) -> SymplecticMatrix:
        return mat_inv(a)

    def equal(self, a: SymplecticMatrix, b: SymplecticMatrix) -> bool:
        return a == b

    def image(self, root: Root, parameter: int) -> SymplecticMatrix:
        if root not in self.roots:
            raise UnassignedRootError(f"no matrix assigned to x_{root}")
        return x_matrix(root, self.scales.get(root, 1) * parameter, self._ring)

    def describe(self, element: SymplecticMatrix) -> List[List[int]]:
        return [list(row) for row in element.rows()]
