"""JSON problem files.

Schema (all keys required unless noted):

    {
      "name": "...",              # optional
      "description": "...",       # optional
      "alternatives": ["x1", ...],
      "attributes":   ["c1", ...],
      "experts":      ["d1", ...],
      "expert_weights": [0.25, ...],
      "matrices": [ matrix per expert, each a list of rows of cells ]
    }

A cell is a linguistic code string ("HI"), a 4-number array
[mu_lo, mu_hi, nu_lo, nu_hi], or {"label": code, "value": [4 numbers]} when a
sheet carries both and they should be cross-checked at ingestion.  Unknown
keys anywhere are rejected so typos fail loudly.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .core import Ivqrofn, InvalidValueError, parse_term
from .magdm import Cell, DecisionProblem, LabeledCell

_TOP_KEYS = {"alternatives", "attributes", "experts", "expert_weights", "matrices"}
_OPT_KEYS = {"name", "description"}
_CELL_KEYS = {"label", "value"}


class ProblemFileError(ValueError):
    """Problem file is structurally or semantically invalid."""


def _parse_cell(raw, where: str) -> Cell:
    if isinstance(raw, str):
        try:
            return parse_term(raw)
        except InvalidValueError as exc:
            raise ProblemFileError(f"{where}: {exc}") from exc
    if isinstance(raw, list):
        if len(raw) != 4 or not all(isinstance(v, (int, float)) for v in raw):
            raise ProblemFileError(
                f"{where}: numeric cell must be 4 numbers, got {raw!r}")
        try:
            return Ivqrofn(*(float(v) for v in raw))
        except InvalidValueError as exc:
            raise ProblemFileError(f"{where}: {exc}") from exc
    if isinstance(raw, dict):
        unknown = set(raw) - _CELL_KEYS
        if unknown:
            raise ProblemFileError(f"{where}: unknown cell keys {sorted(unknown)}")
        if "label" not in raw or "value" not in raw:
            raise ProblemFileError(f"{where}: labeled cell needs 'label' and 'value'")
        if not isinstance(raw["label"], str):
            raise ProblemFileError(f"{where}: cell label must be a term code string")
        try:
            label = parse_term(raw["label"])
        except InvalidValueError as exc:
            raise ProblemFileError(f"{where}: {exc}") from exc
        value = _parse_cell(raw["value"], where)
        if not isinstance(value, Ivqrofn):
            raise ProblemFileError(f"{where}: labeled cell value must be numeric")
        return LabeledCell(label=label, value=value)
    raise ProblemFileError(f"{where}: unsupported cell {raw!r}")


def parse_problem(doc: dict, source: str = "<problem>") -> DecisionProblem:
    if not isinstance(doc, dict):
        raise ProblemFileError(f"{source}: top level must be an object")
    unknown = set(doc) - _TOP_KEYS - _OPT_KEYS
    if unknown:
        raise ProblemFileError(f"{source}: unknown keys {sorted(unknown)}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise ProblemFileError(f"{source}: missing keys {sorted(missing)}")

    for key in ("alternatives", "attributes", "experts"):
        labels = doc[key]
        if (not isinstance(labels, list) or not labels
                or not all(isinstance(s, str) for s in labels)):
            raise ProblemFileError(f"{source}: '{key}' must be a non-empty "
                                   f"list of strings")
    weights = doc["expert_weights"]
    if not isinstance(weights, list) or not all(
            isinstance(v, (int, float)) for v in weights):
        raise ProblemFileError(f"{source}: 'expert_weights' must be numbers")

    m = len(doc["alternatives"])
    n = len(doc["attributes"])
    matrices = doc["matrices"]
    if not isinstance(matrices, list) or len(matrices) != len(doc["experts"]):
        raise ProblemFileError(
            f"{source}: 'matrices' must hold one matrix per expert "
            f"({len(doc['experts'])}), got {len(matrices) if isinstance(matrices, list) else matrices!r}")
    if any(not isinstance(mat, list) or not mat for mat in matrices):
        raise ProblemFileError(f"{source}: empty judgment matrix")

    parsed = []
    for k, mat in enumerate(matrices):
        if len(mat) != m:
            raise ProblemFileError(
                f"{source}: matrix {k} has {len(mat)} rows, expected {m}")
        rows = []
        for i, row in enumerate(mat):
            if not isinstance(row, list) or len(row) != n:
                raise ProblemFileError(
                    f"{source}: matrix {k} row {i} must have {n} cells")
            rows.append(tuple(
                _parse_cell(c, f"{source}: matrix {k} cell ({i},{j})")
                for j, c in enumerate(row)))
        parsed.append(tuple(rows))

    try:
        return DecisionProblem(
            alternatives=tuple(doc["alternatives"]),
            attributes=tuple(doc["attributes"]),
            experts=tuple(doc["experts"]),
            expert_weights=tuple(float(v) for v in weights),
            judgments=tuple(parsed),
        )
    except ValueError as exc:
        raise ProblemFileError(f"{source}: {exc}") from exc


def load_problem(path: Union[str, Path]) -> DecisionProblem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProblemFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{path}: not valid JSON: {exc}") from exc
    return parse_problem(doc, source=str(path))
