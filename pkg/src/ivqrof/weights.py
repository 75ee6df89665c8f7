"""Attribute-weight derivation from an aggregated decision matrix.

Three methods, all consuming an m x n matrix of IVq-ROFNs:

* Swing: threshold the per-cell distances to the positive ideal into a
  bipartite selection graph, score attribute relatedness with the Swing
  item-to-item similarity, and normalize the mean relatedness per attribute.
* MABAC: scalarize, min-max normalize per attribute, measure each column's
  total signed distance from its geometric-mean border, normalize.
* Projection: min-max normalize the scalarized matrix and project each
  attribute column onto the all-ones ideal profile.

Plus two comparison metrics over the resulting alternative scores:
the Herfindahl-Hirschman concentration index and the mean descending-gap
score spread.

Calibration defaults for Swing (d_bound = 0.24, alpha = 11.6869, selection
in the printed far-from-ideal direction, self-pairs included) were fixed by
a grid search over the bundled case; the search and the accepted/rejected
alternatives are documented in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .core import Ivqrofn, PIS, distance, normalized_score

Matrix = Sequence[Sequence[Ivqrofn]]


@dataclass(frozen=True)
class SwingConfig:
    """Swing parameters.

    d_bound: connection threshold on distance-to-ideal, in [0, 1].
    alpha: smoothing factor >= 0 in the pair weight 1 / (alpha + overlap).
    invert_selection: connect when closer than the threshold instead of
        farther (the non-default reading of the thresholding rule).
    """

    d_bound: float = 0.24
    alpha: float = 11.6869
    invert_selection: bool = False

    def __post_init__(self):
        if not (0.0 <= self.d_bound <= 1.0):
            raise ValueError(f"d_bound must lie in [0, 1], got {self.d_bound}")
        if not self.alpha >= 0.0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")


@dataclass(frozen=True)
class BipartiteSelection:
    """Boolean alternative-attribute selection graph with its two supports."""

    matrix: np.ndarray                    # m x n bool
    attribute_members: List[frozenset]    # U[j]: alternatives selecting attribute j
    alternative_choices: List[frozenset]  # I[i]: attributes selected by alternative i

    @classmethod
    def from_matrix(cls, B: np.ndarray) -> "BipartiteSelection":
        B = np.asarray(B, dtype=bool)
        U = [frozenset(np.flatnonzero(B[:, j]).tolist()) for j in range(B.shape[1])]
        I = [frozenset(np.flatnonzero(B[i, :]).tolist()) for i in range(B.shape[0])]
        return cls(B, U, I)


def distance_matrix(R: Matrix, q: float) -> np.ndarray:
    """Per-cell distance to the positive ideal solution."""
    return np.array([[distance(cell, PIS, q) for cell in row] for row in R])


def selection_matrix(D: np.ndarray, d_bound: float,
                     invert: bool = False) -> BipartiteSelection:
    """Threshold distances into the selection graph.

    Default direction connects cells strictly farther than d_bound; with
    `invert` it connects strictly closer ones.  Equality maps to "not
    connected" in both directions, keeping the graph minimal.
    """
    D = np.asarray(D, dtype=float)
    B = (D < d_bound) if invert else (D > d_bound)
    return BipartiteSelection.from_matrix(B)


def swing_similarity(sel: BipartiteSelection, alpha: float,
                     notes: Optional[List[str]] = None) -> np.ndarray:
    """Attribute relatedness matrix Ts: symmetric, unit diagonal.

    Ts[i][j] sums, over ordered pairs (including self-pairs) of alternatives
    that select both attributes, the product of the alternatives' inverse
    sqrt selection counts damped by 1 / (alpha + shared-selection count).
    """
    if not alpha >= 0.0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    U, I = sel.attribute_members, sel.alternative_choices
    n = len(U)
    Ts = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            both = U[i] & U[j]
            if not both:
                if notes is not None:
                    notes.append(
                        f"swing: attributes {i} and {j} share no selecting "
                        f"alternative; relatedness set to 0")
                continue
            s = 0.0
            for e in both:
                for g in both:
                    s += (1.0 / math.sqrt(len(I[e]))) * (1.0 / math.sqrt(len(I[g]))) \
                        / (alpha + len(I[e] & I[g]))
            Ts[i, j] = Ts[j, i] = s
    return Ts


def swing_weights(R: Matrix, q: float, cfg: SwingConfig = SwingConfig(),
                  notes: Optional[List[str]] = None) -> List[float]:
    """Swing attribute weights: normalized row means of the relatedness matrix.

    A selection graph with no off-diagonal relatedness carries no preference
    information; the weights then fall back to uniform with a note rather
    than aborting, so threshold sweeps never fail.
    """
    D = distance_matrix(R, q)
    sel = selection_matrix(D, cfg.d_bound, cfg.invert_selection)
    Ts = swing_similarity(sel, cfg.alpha, notes=notes)
    n = Ts.shape[0]
    if np.allclose(Ts, np.eye(n)):
        if notes is not None:
            notes.append(
                "swing: degenerate selection (identity relatedness); "
                "falling back to uniform weights")
        return [1.0 / n] * n
    S = Ts.mean(axis=1)
    w = S / S.sum()
    return w.tolist()


def _score_matrix(R: Matrix, q: float) -> np.ndarray:
    return np.array([[normalized_score(cell, q) for cell in row] for row in R])


def _minmax_columns(S: np.ndarray, notes: Optional[List[str]] = None) -> np.ndarray:
    lo, hi = S.min(axis=0), S.max(axis=0)
    spread = hi - lo
    out = np.empty_like(S)
    for j in range(S.shape[1]):
        if spread[j] <= 0.0:
            # a constant column carries no discrimination; park it mid-scale
            out[:, j] = 0.5
            if notes is not None:
                notes.append(
                    f"normalization: attribute column {j} has zero spread; "
                    f"normalized values set to 0.5")
        else:
            out[:, j] = (S[:, j] - lo[j]) / spread[j]
    return out


def mabac_weights(R: Matrix, q: float, literal: bool = False,
                  notes: Optional[List[str]] = None) -> List[float]:
    """MABAC attribute weights from border-approximation distances.

    Scalarizes each cell to its normalized score, min-max normalizes every
    attribute column (all case attributes are benefit-type), applies uniform
    initial weights 1/n, forms the geometric-mean border per attribute, and
    normalizes the per-attribute sums of signed border distances.

    By default the weighted values are shifted, w * (r + 1), keeping the
    geometric mean strictly positive.  `literal` applies the unshifted
    product w * r instead, flooring zeros at 1e-9; its border collapses
    toward zero whenever a column contains the per-column minimum.
    """
    S = _score_matrix(R, q)
    m, n = S.shape
    if m < 2:
        raise ValueError("MABAC needs at least two alternatives")
    rstar = _minmax_columns(S, notes=notes)
    w_init = 1.0 / n
    if literal:
        rhat = np.maximum(rstar * w_init, 1e-9)
    else:
        rhat = (rstar + 1.0) * w_init
    border = np.exp(np.log(rhat).mean(axis=0))
    dist_to_border = rhat - border
    col = dist_to_border.sum(axis=0)
    w = col / col.sum()
    return w.tolist()


def projection_weights(R: Matrix, q: float,
                       notes: Optional[List[str]] = None) -> List[float]:
    """Projection attribute weights.

    After min-max normalization the ideal profile is the all-ones matrix;
    each attribute's projection onto it is proportional to its normalized
    column sum, which is what gets normalized into weights.
    """
    S = _score_matrix(R, q)
    m, n = S.shape
    if n == 1:
        return [1.0]
    rstar = _minmax_columns(S, notes=notes)
    proj = rstar.sum(axis=0) / math.sqrt(S.size)
    total = proj.sum()
    if total <= 0.0:
        raise ValueError("projection degenerate: all normalized columns are zero")
    return (proj / total).tolist()


def hhi(scores: Sequence[float]) -> float:
    """Herfindahl-Hirschman concentration of positive scores: sum of squared shares.

    1/n for perfectly level scores, 1.0 for a single dominant one.
    """
    s = [float(x) for x in scores]
    if not s:
        raise ValueError("empty score list")
    if any(x <= 0.0 for x in s):
        raise ValueError(f"scores must be positive, got {s}")
    total = sum(s)
    return sum((x / total) ** 2 for x in s)


def score_spread(scores: Sequence[float]) -> float:
    """Mean gap between consecutive scores in descending order.

    Telescopes to (max - min) / (n - 1); larger means better-separated
    alternatives.
    """
    s = sorted((float(x) for x in scores), reverse=True)
    if len(s) < 2:
        raise ValueError("spread needs at least two scores")
    gaps = [s[i] - s[i + 1] for i in range(len(s) - 1)]
    return sum(gaps) / len(gaps)
