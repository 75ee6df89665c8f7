"""Aggregation operators on IVq-ROFNs.

Four parametric t-norm/t-conorm families drive every aggregation:

* Weber (parameter lambda): nilpotent pair with clamping,
  sum  s(x, y) = min(x + y + lam*x*y, 1),
  prod t(x, y) = max((x + y + lam*x*y - 1) / (1 + lam), 0),
  applied to the q-th powers of the four bounds.
* Algebraic: probabilistic sum / product (the classic operations).
* Frank (alpha) and Hamacher (gamma): strict families built from their
  additive generators, again on q-th powers.

`owa_aggregate` is the ordered weighted average used by the pipeline: inputs
are sorted descending by (score, accuracy) and the k-th weight multiplies the
k-th largest value, so weights attach to ranks, not to positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Union

from .core import (
    Ivqrofn,
    InvalidValueError,
    accuracy,
    check_rung,
    require_valid,
    score,
    _root,
)

WEIGHT_SUM_TOL = 1e-9


class FamilyParameterError(ValueError):
    """Operator family parameter outside its admissible range."""


class WeightError(ValueError):
    """Weight vector fails nonnegativity / normalization / length checks."""


def validate_weights(weights: Sequence[float], n: "int | None" = None) -> List[float]:
    w = [float(x) for x in weights]
    if n is not None and len(w) != n:
        raise WeightError(f"expected {n} weights, got {len(w)}")
    if not w:
        raise WeightError("weight vector is empty")
    if any(x < 0.0 for x in w):
        raise WeightError(f"negative weight in {w}")
    if abs(sum(w) - 1.0) > WEIGHT_SUM_TOL:
        raise WeightError(f"weights sum to {sum(w)!r}, expected 1")
    return w


# ---------------------------------------------------------------------------
# Weber operations (explicit clamped forms)
# ---------------------------------------------------------------------------

def _check_lambda(lam: float) -> float:
    lam = float(lam)
    # lam = 0 would be a different (unclamped) algebra entirely; reject
    # rather than silently switch formulas.
    if not (lam > -1.0) or lam == 0.0:
        raise FamilyParameterError(
            f"Weber parameter must lie in (-1, inf) excluding 0, got {lam}")
    return lam


def _weber_sum_pow(x: float, y: float, lam: float) -> float:
    return min(x + y + lam * x * y, 1.0)


def _weber_prod_pow(x: float, y: float, lam: float) -> float:
    return max((x + y + lam * x * y - 1.0) / (1.0 + lam), 0.0)


def weber_tconorm(a: float, b: float, lam: float) -> float:
    """Scalar Weber t-conorm on [0, 1]."""
    _check_lambda(lam)
    return _weber_sum_pow(float(a), float(b), lam)


def weber_tnorm(a: float, b: float, lam: float) -> float:
    """Scalar Weber t-norm on [0, 1]."""
    _check_lambda(lam)
    return _weber_prod_pow(float(a), float(b), lam)


def _weber_add_raw(a: Ivqrofn, b: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    return Ivqrofn(
        _root(_weber_sum_pow(a.mu_lo ** q, b.mu_lo ** q, lam), q),
        _root(_weber_sum_pow(a.mu_hi ** q, b.mu_hi ** q, lam), q),
        _root(_weber_prod_pow(a.nu_lo ** q, b.nu_lo ** q, lam), q),
        _root(_weber_prod_pow(a.nu_hi ** q, b.nu_hi ** q, lam), q),
    )


def _weber_mul_raw(a: Ivqrofn, b: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    return Ivqrofn(
        _root(_weber_prod_pow(a.mu_lo ** q, b.mu_lo ** q, lam), q),
        _root(_weber_prod_pow(a.mu_hi ** q, b.mu_hi ** q, lam), q),
        _root(_weber_sum_pow(a.nu_lo ** q, b.nu_lo ** q, lam), q),
        _root(_weber_sum_pow(a.nu_hi ** q, b.nu_hi ** q, lam), q),
    )


def weber_add(a: Ivqrofn, b: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    """Weber sum: t-conorm on membership powers, t-norm on non-membership.

    Inputs must be valid at q.  The output need not be: the Weber pair is
    not a dual pair, so an unweighted sum of two valid values can exceed
    the rung constraint (weight-normalized aggregation restores it for
    positive parameters).
    """
    lam = _check_lambda(lam)
    q = check_rung(q)
    require_valid(a, q)
    require_valid(b, q)
    return _weber_add_raw(a, b, lam, q)


def weber_mul(a: Ivqrofn, b: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    """Weber product: dual of `weber_add` (mu and nu swap roles)."""
    lam = _check_lambda(lam)
    q = check_rung(q)
    require_valid(a, q)
    require_valid(b, q)
    return _weber_mul_raw(a, b, lam, q)


def _weber_scalar_mu_pow(x: float, k: float, lam: float) -> float:
    return min(((1.0 + lam * x) ** k - 1.0) / lam, 1.0)


def _weber_scalar_nu_pow(x: float, k: float, lam: float) -> float:
    return max(((1.0 + lam * x) ** k / (1.0 + lam) ** (k - 1.0) - 1.0) / lam, 0.0)


def _weber_scalar_raw(k: float, a: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    return Ivqrofn(
        _root(_weber_scalar_mu_pow(a.mu_lo ** q, k, lam), q),
        _root(_weber_scalar_mu_pow(a.mu_hi ** q, k, lam), q),
        _root(_weber_scalar_nu_pow(a.nu_lo ** q, k, lam), q),
        _root(_weber_scalar_nu_pow(a.nu_hi ** q, k, lam), q),
    )


def _weber_pow_raw(a: Ivqrofn, k: float, lam: float, q: float) -> Ivqrofn:
    return Ivqrofn(
        _root(_weber_scalar_nu_pow(a.mu_lo ** q, k, lam), q),
        _root(_weber_scalar_nu_pow(a.mu_hi ** q, k, lam), q),
        _root(_weber_scalar_mu_pow(a.nu_lo ** q, k, lam), q),
        _root(_weber_scalar_mu_pow(a.nu_hi ** q, k, lam), q),
    )


def weber_scalar(k: float, a: Ivqrofn, lam: float, q: float) -> Ivqrofn:
    """k-fold Weber sum of `a` for real k > 0."""
    if not k > 0.0:
        raise InvalidValueError(f"scalar multiplier must be positive, got {k}")
    lam = _check_lambda(lam)
    q = check_rung(q)
    require_valid(a, q)
    return _weber_scalar_raw(k, a, lam, q)


def weber_pow(a: Ivqrofn, k: float, lam: float, q: float) -> Ivqrofn:
    """k-th Weber power of `a`: dual of `weber_scalar`."""
    if not k > 0.0:
        raise InvalidValueError(f"exponent must be positive, got {k}")
    lam = _check_lambda(lam)
    q = check_rung(q)
    require_valid(a, q)
    return _weber_pow_raw(a, k, lam, q)


# ---------------------------------------------------------------------------
# Algebraic operations
# ---------------------------------------------------------------------------

def algebraic_add(a: Ivqrofn, b: Ivqrofn, q: float) -> Ivqrofn:
    q = check_rung(q)
    require_valid(a, q)
    require_valid(b, q)
    def s(x, y):
        return _root(x ** q + y ** q - x ** q * y ** q, q)
    return Ivqrofn(s(a.mu_lo, b.mu_lo), s(a.mu_hi, b.mu_hi),
                   a.nu_lo * b.nu_lo, a.nu_hi * b.nu_hi)


def algebraic_mul(a: Ivqrofn, b: Ivqrofn, q: float) -> Ivqrofn:
    q = check_rung(q)
    require_valid(a, q)
    require_valid(b, q)
    def s(x, y):
        return _root(x ** q + y ** q - x ** q * y ** q, q)
    return Ivqrofn(a.mu_lo * b.mu_lo, a.mu_hi * b.mu_hi,
                   s(a.nu_lo, b.nu_lo), s(a.nu_hi, b.nu_hi))


def algebraic_scalar(k: float, a: Ivqrofn, q: float) -> Ivqrofn:
    if not k > 0.0:
        raise InvalidValueError(f"scalar multiplier must be positive, got {k}")
    q = check_rung(q)
    require_valid(a, q)
    return Ivqrofn(
        _root(1.0 - (1.0 - a.mu_lo ** q) ** k, q),
        _root(1.0 - (1.0 - a.mu_hi ** q) ** k, q),
        a.nu_lo ** k,
        a.nu_hi ** k,
    )


def algebraic_pow(a: Ivqrofn, k: float, q: float) -> Ivqrofn:
    if not k > 0.0:
        raise InvalidValueError(f"exponent must be positive, got {k}")
    q = check_rung(q)
    require_valid(a, q)
    return Ivqrofn(
        a.mu_lo ** k,
        a.mu_hi ** k,
        _root(1.0 - (1.0 - a.nu_lo ** q) ** k, q),
        _root(1.0 - (1.0 - a.nu_hi ** q) ** k, q),
    )


# ---------------------------------------------------------------------------
# Operator families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Weber:
    lam: float = 2.0

    def __post_init__(self):
        _check_lambda(self.lam)

    def label(self) -> str:
        return f"weber(lambda={self.lam:g})"


@dataclass(frozen=True)
class Algebraic:
    def label(self) -> str:
        return "algebraic"


@dataclass(frozen=True)
class Frank:
    alpha: float = 2.0

    def __post_init__(self):
        if not (self.alpha > 0.0) or self.alpha == 1.0:
            raise FamilyParameterError(
                f"Frank parameter must be positive and != 1, got {self.alpha}")

    def label(self) -> str:
        return f"frank(alpha={self.alpha:g})"


@dataclass(frozen=True)
class Hamacher:
    gamma: float = 2.0

    def __post_init__(self):
        if not self.gamma > 0.0:
            raise FamilyParameterError(
                f"Hamacher parameter must be positive, got {self.gamma}")

    def label(self) -> str:
        return f"hamacher(gamma={self.gamma:g})"


OperatorFamily = Union[Weber, Algebraic, Frank, Hamacher]


def _frank_generators(alpha: float):
    la = math.log(alpha)

    def g(x):  # t-conorm generator, g(0) = 0, g(1) = inf
        if x >= 1.0:
            return math.inf
        return -math.log(-math.expm1((1.0 - x) * la) / (1.0 - alpha))

    def ginv(y):
        if math.isinf(y):
            return 1.0
        return 1.0 - math.log1p((alpha - 1.0) * math.exp(-y)) / la

    def f(x):  # t-norm generator, f(1) = 0, f(0) = inf
        if x <= 0.0:
            return math.inf
        return -math.log(-math.expm1(x * la) / (1.0 - alpha))

    def finv(y):
        if math.isinf(y):
            return 0.0
        return math.log1p((alpha - 1.0) * math.exp(-y)) / la

    return g, ginv, f, finv


def _hamacher_generators(gamma: float):
    def g(x):
        if x >= 1.0:
            return math.inf
        return math.log((1.0 + (gamma - 1.0) * x) / (1.0 - x))

    def ginv(y):
        if math.isinf(y):
            return 1.0
        e = math.exp(y)
        return (e - 1.0) / (e + gamma - 1.0)

    def f(x):
        if x <= 0.0:
            return math.inf
        return math.log((gamma + (1.0 - gamma) * x) / x)

    def finv(y):
        if math.isinf(y):
            return 0.0
        return gamma / (math.exp(y) + gamma - 1.0)

    return g, ginv, f, finv


class FamilyOps:
    """The four operations of one family at a fixed rung.

    With `check=False` the operations skip input rung-validation; the
    aggregator uses this after validating its inputs once, because Weber
    intermediates of a fold may drift just past the validity boundary (the
    Weber sum/norm pair is not a De Morgan dual, so closure is not exact;
    see the operator property tests for worked counterexamples).
    """

    def __init__(self, family: OperatorFamily, q: float, check: bool = True):
        self.family = family
        self.q = check_rung(q)
        if isinstance(family, Weber):
            lam = family.lam
            if check:
                self.add = lambda a, b: weber_add(a, b, lam, self.q)
                self.mul = lambda a, b: weber_mul(a, b, lam, self.q)
                self.scalar = lambda k, a: weber_scalar(k, a, lam, self.q)
                self.power = lambda a, k: weber_pow(a, k, lam, self.q)
            else:
                self.add = lambda a, b: _weber_add_raw(a, b, lam, self.q)
                self.mul = lambda a, b: _weber_mul_raw(a, b, lam, self.q)
                self.scalar = lambda k, a: _weber_scalar_raw(k, a, lam, self.q)
                self.power = lambda a, k: _weber_pow_raw(a, k, lam, self.q)
            return
        if isinstance(family, Algebraic):
            self.add = lambda a, b: algebraic_add(a, b, self.q)
            self.mul = lambda a, b: algebraic_mul(a, b, self.q)
            self.scalar = lambda k, a: algebraic_scalar(k, a, self.q)
            self.power = lambda a, k: algebraic_pow(a, k, self.q)
            return
        if isinstance(family, Frank):
            gens = _frank_generators(family.alpha)
        elif isinstance(family, Hamacher):
            gens = _hamacher_generators(family.gamma)
        else:
            raise FamilyParameterError(f"unknown operator family: {family!r}")
        g, ginv, f, finv = gens
        q_ = self.q

        def merge(pairs, gen, inv):
            # sum of w * gen(x) with zero weights skipped (gen may be inf)
            tot = 0.0
            for wk, x in pairs:
                if wk == 0.0:
                    continue
                tot += wk * gen(x)
                if math.isinf(tot):
                    break
            return inv(tot)

        def combine(terms) -> Ivqrofn:
            """terms: list of (weight, Ivqrofn); conorm on mu, norm on nu."""
            bounds = []
            for side, gen, inv in (("mu_lo", g, ginv), ("mu_hi", g, ginv),
                                   ("nu_lo", f, finv), ("nu_hi", f, finv)):
                pairs = [(wk, getattr(v, side) ** q_) for wk, v in terms]
                bounds.append(_root(merge(pairs, gen, inv), q_))
            return Ivqrofn(*bounds)

        def combine_dual(terms) -> Ivqrofn:
            bounds = []
            for side, gen, inv in (("mu_lo", f, finv), ("mu_hi", f, finv),
                                   ("nu_lo", g, ginv), ("nu_hi", g, ginv)):
                pairs = [(wk, getattr(v, side) ** q_) for wk, v in terms]
                bounds.append(_root(merge(pairs, gen, inv), q_))
            return Ivqrofn(*bounds)

        def add(a, b):
            require_valid(a, q_)
            require_valid(b, q_)
            return combine([(1.0, a), (1.0, b)])

        def mul(a, b):
            require_valid(a, q_)
            require_valid(b, q_)
            return combine_dual([(1.0, a), (1.0, b)])

        def scalar(k, a):
            if not k > 0.0:
                raise InvalidValueError(f"scalar multiplier must be positive, got {k}")
            require_valid(a, q_)
            return combine([(k, a)])

        def power(a, k):
            if not k > 0.0:
                raise InvalidValueError(f"exponent must be positive, got {k}")
            require_valid(a, q_)
            return combine_dual([(k, a)])

        self.add, self.mul, self.scalar, self.power = add, mul, scalar, power


def family_ops(family: OperatorFamily, q: float, check: bool = True) -> FamilyOps:
    """Bind a family's add/mul/scalar/power at rung q."""
    return FamilyOps(family, q, check=check)


# ---------------------------------------------------------------------------
# Ordered weighted averaging
# ---------------------------------------------------------------------------

def descending_order(values: Sequence[Ivqrofn], q: float) -> List[int]:
    """Indices sorted best-first by (score, accuracy); stable on exact ties."""
    return sorted(range(len(values)),
                  key=lambda i: (-score(values[i], q), -accuracy(values[i], q), i))


def owa_aggregate(values: Sequence[Ivqrofn], weights: Sequence[float],
                  family: OperatorFamily, q: float) -> Ivqrofn:
    """Ordered weighted average: w[k] scales the k-th largest value.

    The fold runs through the family's scalar and add operations.  A zero
    weight contributes the additive identity, so those terms are skipped
    (scalar requires k > 0).
    """
    vals = list(values)
    w = validate_weights(weights, n=len(vals))
    for v in vals:
        require_valid(v, q)
    # inputs are validated once here; the fold itself must not re-check,
    # since Weber intermediates may sit a hair past the rung boundary
    ops = FamilyOps(family, q, check=False)
    order = descending_order(vals, q)
    acc = None
    for wk, idx in zip(w, order):
        if wk == 0.0:
            continue
        term = ops.scalar(wk, vals[idx])
        acc = term if acc is None else ops.add(acc, term)
    if acc is None:  # cannot happen: weights sum to 1
        raise WeightError("all weights are zero")
    return acc


def weber_owa_closed_form(values: Sequence[Ivqrofn], weights: Sequence[float],
                          lam: float, q: float) -> Ivqrofn:
    """Product closed form of the Weber ordered weighted average.

    Independent of the sequential fold in `owa_aggregate`: each sorted value
    is scaled, then the four bounds are combined through explicit products
    with a single final clamp.  Kept as a cross-check of the fold.
    """
    lam = _check_lambda(lam)
    q = check_rung(q)
    vals = list(values)
    w = validate_weights(weights, n=len(vals))
    for v in vals:
        require_valid(v, q)
    order = descending_order(vals, q)
    n = len(vals)

    def scaled_pows(getter, kind):
        out = []
        for wk, idx in zip(w, order):
            x = getter(vals[idx]) ** q
            if kind == "mu":
                out.append(_weber_scalar_mu_pow(x, wk, lam))
            else:
                out.append(_weber_scalar_nu_pow(x, wk, lam))
        return out

    def mu_combine(pows):
        prod = 1.0
        for p in pows:
            prod *= 1.0 + lam * p
        return _root(min((prod - 1.0) / lam, 1.0), q)

    def nu_combine(pows):
        prod = 1.0
        for p in pows:
            prod *= 1.0 + lam * p
        prod /= (1.0 + lam) ** (n - 1)
        return _root(max((prod - 1.0) / lam, 0.0), q)

    return Ivqrofn(
        mu_combine(scaled_pows(lambda v: v.mu_lo, "mu")),
        mu_combine(scaled_pows(lambda v: v.mu_hi, "mu")),
        nu_combine(scaled_pows(lambda v: v.nu_lo, "nu")),
        nu_combine(scaled_pows(lambda v: v.nu_hi, "nu")),
    )
