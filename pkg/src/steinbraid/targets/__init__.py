"""
Relator targets.

Each target implements the Assignment interface:

    - MatrixAssignment: x_gamma(u) -> X_gamma(u) in Sp4(Z) or Sp4(Z/m)
    - BraidAssignment: x_gamma(k) -> w_gamma^k for braid words w_gamma

Example:
    ```python
    from steinbraid.targets import MatrixAssignment
    from steinbraid.steinberg import relator_catalog, check_relator

    pi = MatrixAssignment()
    entries = [check_relator(r, pi) for r in relator_catalog("unparametrized")]
    ```
"""

from .base import Assignment
from .braid import BraidAssignment, braid_equal
from .matrix import MatrixAssignment

__all__ = [
    "Assignment",
    "BraidAssignment",
    "MatrixAssignment",
    "braid_equal",
]
