"""Central soft sets: algebra, classic soft-set bridge and decision solver."""

from .algebra import (
    CentralSoftSet,
    bottom,
    complement,
    css_equal,
    difference,
    family_union,
    intersection,
    leq,
    make_css,
    project,
    top,
    union,
)
from .classic import ClassicSoftSet, Policy, from_central, to_central
from .context import Context
from .decision import (
    EvaluationSystem,
    ScoreReport,
    incidence_matrix,
    make_system,
    optional_solutions,
    oracle_optional,
    perfect_solutions,
    scores,
    solve_system,
)
from .workspace import Workspace, parse_workspace, serialize_workspace

__version__ = "0.1.0"
