"""
Run configuration shared by the CLI and the verification suites.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional

from .errors import ConfigError
from .handles import DEFAULT_STEP_BUDGET
from .rings import ZZ, IntegersMod, Ring


class EngineChoice(Enum):
    """Which word-problem engine decides braid equalities."""

    GARSIDE = "garside"
    ORACLE = "oracle"
    BOTH = "both"


class OutputFormat(Enum):
    TEXT = "text"
    STRUCTURED = "structured"


DEFAULT_RINGS: List[Ring] = [ZZ, IntegersMod(5)]
EXTENDED_RINGS: List[Ring] = [ZZ] + [IntegersMod(m) for m in (2, 3, 4, 5, 12)]

_SEED_LIMIT = 2**64


@dataclass
class RunConfig:
    """Configuration for one CLI invocation."""

    strands: int = 6
    ring: Optional[Ring] = None  # None: the appendix suite uses its default ring list
    samples: int = 100
    seed: int = 0
    engine: EngineChoice = EngineChoice.GARSIDE
    output_format: OutputFormat = OutputFormat.TEXT
    extended_rings: bool = False
    step_budget: int = DEFAULT_STEP_BUDGET

    def validate(self) -> "RunConfig":
        """
        Check value ranges.

        Raises:
            ConfigError: a value is out of range.
        """
        if self.strands < 2:
            raise ConfigError(f"strands must be at least 2, got {self.strands}")
        if self.samples < 1:
            raise ConfigError(f"samples must be at least 1, got {self.samples}")
        if not 0 <= self.seed < _SEED_LIMIT:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.step_budget < 1:
            raise ConfigError(f"step budget must be positive, got {self.step_budget}")
        return self

    @property
    def sampling_ring(self) -> Ring:
        return self.ring if self.ring is not None else ZZ

    def appendix_rings(self) -> List[Ring]:
        """Rings the parametrized catalog is sampled over."""
        if self.extended_rings:
            return list(EXTENDED_RINGS)
        if self.ring is not None:
            return [self.ring]
        return list(DEFAULT_RINGS)

    def header(self, selector: str = "all") -> Dict[str, Any]:
        from . import __version__

        return {
            "tool": "steinbraid",
            "version": __version__,
            "selector": selector,
            "seed": self.seed,
            "samples": self.samples,
            "ring": self.sampling_ring.spec,
            "appendix_rings": [ring.spec for ring in self.appendix_rings()],
            "engine": self.engine.value,
        }
