"""Interval-valued q-rung orthopair fuzzy decision analysis.

Library layers, bottom to top:

* `core`: the Ivqrofn value type and its scalar functionals.
* `operators`: Weber / Algebraic / Frank / Hamacher families and the
  ordered weighted average.
* `weights`: Swing, MABAC, and Projection attribute-weight derivation,
  plus concentration and spread metrics.
* `magdm`: the six-stage group decision pipeline.
* `problemfile`, `reporting`, `cli`: I/O and the command-line front end.
"""

from .core import (
    COMPARE_TOL,
    VALIDITY_TOL,
    InvalidValueError,
    Ivqrofn,
    LinguisticTerm,
    NIS,
    NoValidRungError,
    PIS,
    accuracy,
    compare,
    distance,
    from_linguistic,
    hesitation,
    min_valid_q,
    normalized_score,
    parse_term,
    score,
    validate,
)
from .operators import (
    Algebraic,
    FamilyParameterError,
    Frank,
    Hamacher,
    OperatorFamily,
    Weber,
    WeightError,
    algebraic_add,
    algebraic_mul,
    algebraic_pow,
    algebraic_scalar,
    family_ops,
    owa_aggregate,
    validate_weights,
    weber_add,
    weber_mul,
    weber_owa_closed_form,
    weber_pow,
    weber_scalar,
    weber_tconorm,
    weber_tnorm,
)
from .weights import (
    BipartiteSelection,
    SwingConfig,
    distance_matrix,
    hhi,
    mabac_weights,
    projection_weights,
    score_spread,
    selection_matrix,
    swing_similarity,
    swing_weights,
)
from .magdm import (
    DecisionProblem,
    EvaluationReport,
    LabeledCell,
    PipelineConfig,
    PipelineError,
    aggregate_attributes,
    aggregate_experts,
    evaluate,
    ingest,
    rank,
)
from .problemfile import ProblemFileError, load_problem, parse_problem

__version__ = "1.0.0"
