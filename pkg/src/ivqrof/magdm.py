"""Multi-attribute group decision pipeline.

Six stages: normalize judgments to IVq-ROFNs, pick the smallest valid rung,
aggregate the expert layer cell-by-cell, derive attribute weights, aggregate
each alternative's row, then score and rank.  Every stage is a pure function;
`evaluate` chains them and returns a report carrying all intermediates plus
diagnostics (ingestion discrepancies, calibration parameters, fallbacks).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .core import (
    Ivqrofn,
    LinguisticTerm,
    accuracy,
    compare,
    from_linguistic,
    min_valid_q,
    normalized_score,
    parse_term,
    score,
)
from .operators import (
    OperatorFamily,
    Weber,
    owa_aggregate,
    validate_weights,
)
from .weights import SwingConfig, mabac_weights, projection_weights, swing_weights


class PipelineError(RuntimeError):
    """A pipeline stage failed; `stage` names it."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage


@dataclass(frozen=True)
class LabeledCell:
    """Judgment carrying both a linguistic label and an explicit value.

    The value is authoritative; a mismatch against the label's fixed mapping
    is reported as a diagnostic, never silently reconciled.
    """

    label: LinguisticTerm
    value: Ivqrofn


Cell = Union[Ivqrofn, LinguisticTerm, str, LabeledCell]


@dataclass(frozen=True)
class DecisionProblem:
    """Alternatives x attributes x experts with per-expert judgment matrices."""

    alternatives: Tuple[str, ...]
    attributes: Tuple[str, ...]
    experts: Tuple[str, ...]
    expert_weights: Tuple[float, ...]
    judgments: Tuple[Tuple[Tuple[Cell, ...], ...], ...]  # expert -> row -> cell

    def __post_init__(self):
        m, n, t = len(self.alternatives), len(self.attributes), len(self.experts)
        if m == 0 or n == 0 or t == 0:
            raise ValueError("alternatives, attributes and experts must be non-empty")
        validate_weights(self.expert_weights, n=t)
        if len(self.judgments) != t:
            raise ValueError(f"expected {t} judgment matrices, got {len(self.judgments)}")
        for k, mat in enumerate(self.judgments):
            if len(mat) != m or any(len(row) != n for row in mat):
                raise ValueError(
                    f"judgment matrix {k} is not {m}x{n}")

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (len(self.alternatives), len(self.attributes), len(self.experts))


def _normalize_cell(cell: Cell, where: str, diagnostics: List[str]) -> Ivqrofn:
    if isinstance(cell, Ivqrofn):
        return cell
    if isinstance(cell, str):
        cell = parse_term(cell)
    if isinstance(cell, LinguisticTerm):
        return from_linguistic(cell)
    if isinstance(cell, LabeledCell):
        mapped = from_linguistic(cell.label)
        if any(abs(a - b) > 1e-9 for a, b in zip(mapped.as_tuple(), cell.value.as_tuple())):
            diagnostics.append(
                f"ingest: {where}: value {cell.value!r} disagrees with its "
                f"label {cell.label.value} -> {mapped!r}; keeping the value")
        return cell.value
    raise PipelineError("ingest", f"{where}: unsupported cell {cell!r}")


def ingest(problem: DecisionProblem) -> Tuple[DecisionProblem, List[str]]:
    """Normalize every judgment cell to an Ivqrofn.

    Returns the normalized problem and the list of label/value discrepancy
    diagnostics.  Idempotent on already-numeric problems.
    """
    diagnostics: List[str] = []
    mats = []
    for k, mat in enumerate(problem.judgments):
        rows = []
        for i, row in enumerate(mat):
            cells = []
            for j, cell in enumerate(row):
                where = (f"expert {problem.experts[k]}, alternative "
                         f"{problem.alternatives[i]}, attribute {problem.attributes[j]}")
                try:
                    cells.append(_normalize_cell(cell, where, diagnostics))
                except PipelineError:
                    raise
                except ValueError as exc:
                    raise PipelineError("ingest", f"{where}: {exc}") from exc
            rows.append(tuple(cells))
        mats.append(tuple(rows))
    return replace(problem, judgments=tuple(mats)), diagnostics


def aggregate_experts(problem: DecisionProblem, q: float,
                      family: OperatorFamily) -> List[List[Ivqrofn]]:
    """Collapse the expert layer: one ordered weighted average per cell."""
    m, n, _ = problem.shape
    w = list(problem.expert_weights)
    R = []
    for i in range(m):
        row = []
        for j in range(n):
            vals = [mat[i][j] for mat in problem.judgments]
            row.append(owa_aggregate(vals, w, family, q))
        R.append(row)
    return R


def aggregate_attributes(R: Sequence[Sequence[Ivqrofn]], w: Sequence[float],
                         q: float, family: OperatorFamily) -> List[Ivqrofn]:
    """Collapse each alternative's attribute row with the attribute weights."""
    w = validate_weights(w, n=len(R[0]))
    return [owa_aggregate(row, w, family, q) for row in R]


@dataclass(frozen=True)
class RankedAlternative:
    index: int
    label: str
    value: Ivqrofn
    raw_score: float
    norm_score: float
    accuracy: float


def rank(aggregates: Sequence[Ivqrofn], q: float,
         labels: Optional[Sequence[str]] = None
         ) -> Tuple[List[RankedAlternative], List[List[int]]]:
    """Order alternatives best-first; returns the ordering plus tie groups.

    Tie groups list original indices whose values compare equal; singleton
    groups are omitted.
    """
    labels = list(labels) if labels is not None else [
        f"x{i + 1}" for i in range(len(aggregates))]
    order = sorted(
        range(len(aggregates)),
        key=lambda i: (-score(aggregates[i], q), -accuracy(aggregates[i], q), i))
    ranked = [
        RankedAlternative(
            index=i, label=labels[i], value=aggregates[i],
            raw_score=score(aggregates[i], q),
            norm_score=normalized_score(aggregates[i], q),
            accuracy=accuracy(aggregates[i], q))
        for i in order
    ]
    ties: List[List[int]] = []
    group = [order[0]]
    for prev, cur in zip(order, order[1:]):
        if compare(aggregates[prev], aggregates[cur], q) == 0:
            group.append(cur)
        else:
            if len(group) > 1:
                ties.append(group)
            group = [cur]
    if len(group) > 1:
        ties.append(group)
    return ranked, ties


@dataclass(frozen=True)
class PipelineConfig:
    """Everything `evaluate` needs besides the problem itself.

    q: explicit rung, or "auto" to traverse 1..q_max for the smallest valid
    integer rung.  weight_method: swing | mabac | projection | manual.
    """

    q: Union[int, float, str] = "auto"
    q_max: int = 20
    family: OperatorFamily = Weber(2.0)
    weight_method: str = "swing"
    swing: SwingConfig = SwingConfig()
    mabac_literal: bool = False
    manual_weights: Optional[Tuple[float, ...]] = None

    def __post_init__(self):
        if self.weight_method not in ("swing", "mabac", "projection", "manual"):
            raise ValueError(f"unknown weight method {self.weight_method!r}")
        if self.weight_method == "manual" and self.manual_weights is None:
            raise ValueError("manual weight method requires manual_weights")
        if isinstance(self.q, str) and self.q != "auto":
            raise ValueError(f"q must be numeric or 'auto', got {self.q!r}")


@dataclass
class EvaluationReport:
    """Full pipeline output: inputs echoed, intermediates, ranking, diagnostics."""

    alternatives: List[str]
    attributes: List[str]
    experts: List[str]
    q: float
    family: str
    weight_method: str
    weight_params: Dict[str, float]
    aggregated: List[List[Ivqrofn]]
    attribute_weights: List[float]
    aggregates: List[Ivqrofn]
    raw_scores: List[float]
    norm_scores: List[float]
    accuracies: List[float]
    ranking: List[int]
    ranking_labels: List[str]
    ties: List[List[int]]
    diagnostics: List[str] = field(default_factory=list)

    def ranking_string(self) -> str:
        return " > ".join(self.ranking_labels)

    def to_dict(self) -> dict:
        return {
            "alternatives": self.alternatives,
            "attributes": self.attributes,
            "experts": self.experts,
            "q": self.q,
            "family": self.family,
            "weight_method": self.weight_method,
            "weight_params": self.weight_params,
            "aggregated": [[list(c.as_tuple()) for c in row] for row in self.aggregated],
            "attribute_weights": self.attribute_weights,
            "aggregates": [list(c.as_tuple()) for c in self.aggregates],
            "raw_scores": self.raw_scores,
            "norm_scores": self.norm_scores,
            "accuracies": self.accuracies,
            "ranking": self.ranking,
            "ranking_labels": self.ranking_labels,
            "ties": self.ties,
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvaluationReport":
        d = dict(d)
        d["aggregated"] = [[Ivqrofn(*c) for c in row] for row in d["aggregated"]]
        d["aggregates"] = [Ivqrofn(*c) for c in d["aggregates"]]
        return cls(**d)


def derive_weights(R: Sequence[Sequence[Ivqrofn]], q: float,
                   config: PipelineConfig,
                   diagnostics: Optional[List[str]] = None
                   ) -> Tuple[List[float], Dict[str, float]]:
    """Run the configured weight method on the aggregated matrix."""
    notes: List[str] = []
    if config.weight_method == "swing":
        w = swing_weights(R, q, config.swing, notes=notes)
        params = {"d_bound": config.swing.d_bound, "alpha": config.swing.alpha,
                  "invert_selection": float(config.swing.invert_selection)}
    elif config.weight_method == "mabac":
        w = mabac_weights(R, q, literal=config.mabac_literal, notes=notes)
        params = {"literal": float(config.mabac_literal)}
    elif config.weight_method == "projection":
        w = projection_weights(R, q, notes=notes)
        params = {}
    else:
        w = validate_weights(config.manual_weights, n=len(R[0]))
        params = {}
    if diagnostics is not None:
        diagnostics.extend(notes)
    return list(w), params


def evaluate(problem: DecisionProblem, config: PipelineConfig = PipelineConfig()
             ) -> EvaluationReport:
    """Run the whole pipeline and assemble the report.

    The first failing stage aborts with a stage-tagged PipelineError.
    """
    normalized, diagnostics = ingest(problem)

    try:
        if config.q == "auto":
            cells = [c for mat in normalized.judgments for row in mat for c in row]
            q = float(min_valid_q(cells, q_max=config.q_max))
            diagnostics.append(f"rung: auto-selected q={q:g} by ascending traversal")
        else:
            q = float(config.q)
    except ValueError as exc:
        raise PipelineError("select-q", str(exc)) from exc

    try:
        R = aggregate_experts(normalized, q, config.family)
    except ValueError as exc:
        raise PipelineError("aggregate-experts", str(exc)) from exc

    try:
        w, params = derive_weights(R, q, config, diagnostics)
    except ValueError as exc:
        raise PipelineError("derive-weights", str(exc)) from exc

    try:
        aggregates = aggregate_attributes(R, w, q, config.family)
    except ValueError as exc:
        raise PipelineError("aggregate-attributes", str(exc)) from exc

    ranked, ties = rank(aggregates, q, normalized.alternatives)

    return EvaluationReport(
        alternatives=list(normalized.alternatives),
        attributes=list(normalized.attributes),
        experts=list(normalized.experts),
        q=q,
        family=config.family.label(),
        weight_method=config.weight_method,
        weight_params=params,
        aggregated=R,
        attribute_weights=list(w),
        aggregates=aggregates,
        raw_scores=[score(a, q) for a in aggregates],
        norm_scores=[normalized_score(a, q) for a in aggregates],
        accuracies=[accuracy(a, q) for a in aggregates],
        ranking=[r.index for r in ranked],
        ranking_labels=[r.label for r in ranked],
        ties=ties,
        diagnostics=diagnostics,
    )
