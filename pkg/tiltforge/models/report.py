from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .group import CyclicGroupData
from .presentation import GradedPresentation


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    problems: Tuple[str, ...] = ()

    @property
    def first_problem(self) -> Optional[str]:
        return self.problems[0] if self.problems else None


@dataclass(frozen=True)
class TiltInput:
    """A graded presentation together with where it came from.

    ``group`` is set for McKay inputs; presentations read from files carry the
    user's ``ell`` and ``assumptions`` instead.
    """
    presentation: GradedPresentation
    source: str
    group: Optional[CyclicGroupData] = None
    e_vertices: Tuple[str, ...] = ()
    ell: Optional[int] = None
    assumptions: Tuple[str, ...] = ()


@dataclass
class TiltReport:
    """Output of a pipeline run; the JSON report has one key per field."""
    input: Dict[str, Any]
    hypotheses: Dict[str, Any] = field(default_factory=dict)
    route: Dict[str, Any] = field(default_factory=dict)
    presentation: Optional[GradedPresentation] = None
    cross_checks: Dict[str, Any] = field(default_factory=dict)
    status: str = 'ok'

    @property
    def exit_code(self) -> int:
        """0 ok or trivial, 2 hypothesis failure, 3 inconclusive, 5 a cross-check disagrees."""
        return {'ok': 0, 'trivial': 0, 'hypothesis-failure': 2, 'cross-check-failure': 5}.get(self.status, 3)
