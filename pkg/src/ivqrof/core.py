"""Interval-valued q-rung orthopair fuzzy numbers and their scalar functionals.

An IVq-ROFN is a pair of subintervals of [0, 1]: a membership interval
[mu_lo, mu_hi] and a non-membership interval [nu_lo, nu_hi], admissible for a
rung q >= 1 whenever mu_hi**q + nu_hi**q <= 1.  Larger rungs admit more pairs,
so every judgment set has a minimal rung that makes it valid.

This module holds the value type plus every scalar functional used by the
decision pipeline: validity, hesitation, score, accuracy, the total comparison
order, distance, the ten-grade linguistic scale, and minimal-rung selection.
All functions are pure; values are immutable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Tuple

# Validity slack for mu_hi**q + nu_hi**q <= 1 under float round-off.
VALIDITY_TOL = 1e-12
# Score ties below this are resolved by accuracy; far below the 4-decimal
# precision at which results are reported.
COMPARE_TOL = 1e-9


class InvalidValueError(ValueError):
    """An IVq-ROFN violates its structural or rung-validity constraints."""


class NoValidRungError(ValueError):
    """No integer rung up to the requested bound validates every value."""


def check_rung(q: float) -> float:
    if not q >= 1.0:
        raise InvalidValueError(f"rung must be >= 1, got {q}")
    return float(q)


def _root(x: float, q: float) -> float:
    # Clamp round-off residue into [0, 1] before rooting; the aggregation
    # formulas clamp in the q-th-power domain, so residue below tolerance
    # carries no information.
    if x < 0.0:
        x = 0.0
    elif x > 1.0:
        x = 1.0
    return x ** (1.0 / q)


@dataclass(frozen=True)
class Ivqrofn:
    """One interval-valued q-rung orthopair fuzzy number.

    The rung is not stored: the same value may be valid at q=2 and invalid
    at q=1, so validity is checked against an explicit rung via `validate`.
    """

    mu_lo: float
    mu_hi: float
    nu_lo: float
    nu_hi: float

    def __post_init__(self):
        for name in ("mu_lo", "mu_hi", "nu_lo", "nu_hi"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise InvalidValueError(f"{name}={v} outside [0, 1]")
        if self.mu_lo > self.mu_hi:
            raise InvalidValueError(
                f"membership bounds unordered: [{self.mu_lo}, {self.mu_hi}]")
        if self.nu_lo > self.nu_hi:
            raise InvalidValueError(
                f"non-membership bounds unordered: [{self.nu_lo}, {self.nu_hi}]")

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.mu_lo, self.mu_hi, self.nu_lo, self.nu_hi)

    def __repr__(self):  # compact: mirrors the ([.,.],[.,.]) notation
        return (f"Ivqrofn([{self.mu_lo:g}, {self.mu_hi:g}], "
                f"[{self.nu_lo:g}, {self.nu_hi:g}])")


#: Positive ideal solution: full membership, no non-membership.
PIS = Ivqrofn(1.0, 1.0, 0.0, 0.0)
#: Negative ideal solution, the additive identity of every sum operator here.
NIS = Ivqrofn(0.0, 0.0, 1.0, 1.0)


def validate(a: Ivqrofn, q: float) -> bool:
    """True iff `a` is admissible at rung `q` (within VALIDITY_TOL)."""
    q = check_rung(q)
    return a.mu_hi ** q + a.nu_hi ** q <= 1.0 + VALIDITY_TOL


def require_valid(a: Ivqrofn, q: float) -> None:
    if not validate(a, q):
        raise InvalidValueError(
            f"{a!r} invalid at q={q}: mu_hi^q + nu_hi^q = "
            f"{a.mu_hi ** q + a.nu_hi ** q:.6f} > 1")


def hesitation(a: Ivqrofn, q: float) -> Tuple[float, float]:
    """Hesitation interval [pi_lo, pi_hi].

    pi_lo pairs with the upper bounds (least residual indeterminacy) and
    pi_hi with the lower bounds, so pi_lo <= pi_hi always.
    """
    require_valid(a, q)
    lo = _root(1.0 - a.mu_hi ** q - a.nu_hi ** q, q)
    hi = _root(1.0 - a.mu_lo ** q - a.nu_lo ** q, q)
    return (lo, hi)


def score(a: Ivqrofn, q: float) -> float:
    """Score in [-1, 1]: half the signed q-th-power mass, mu minus nu."""
    require_valid(a, q)
    return 0.5 * (a.mu_lo ** q + a.mu_hi ** q - a.nu_lo ** q - a.nu_hi ** q)


def normalized_score(a: Ivqrofn, q: float) -> float:
    """Score rescaled to [0, 1] via (1 + score) / 2.

    Strictly monotone in `score`, so rankings are identical under either;
    this is the scale at which the bundled case reports its results, and
    the one required by share-based diagnostics (positive inputs).
    """
    return (1.0 + score(a, q)) / 2.0


def accuracy(a: Ivqrofn, q: float) -> float:
    """Accuracy in [0, 1]: half the total q-th-power mass, mu plus nu."""
    require_valid(a, q)
    return 0.5 * (a.mu_lo ** q + a.mu_hi ** q + a.nu_lo ** q + a.nu_hi ** q)


def compare(a: Ivqrofn, b: Ivqrofn, q: float) -> int:
    """Total order: score first, accuracy on score ties. Returns -1/0/1."""
    sa, sb = score(a, q), score(b, q)
    if sa > sb + COMPARE_TOL:
        return 1
    if sb > sa + COMPARE_TOL:
        return -1
    ha, hb = accuracy(a, q), accuracy(b, q)
    if ha > hb + COMPARE_TOL:
        return 1
    if hb > ha + COMPARE_TOL:
        return -1
    return 0


def ranking_key(a: Ivqrofn, q: float) -> Tuple[float, float]:
    """(score, accuracy) sort key consistent with `compare` (modulo ties)."""
    return (score(a, q), accuracy(a, q))


def distance(a: Ivqrofn, b: Ivqrofn, q: float) -> float:
    """Normalized L1 distance between q-th powers of the four bounds.

    Symmetric, in [0, 1], zero iff the q-th powers agree component-wise,
    and satisfies the triangle inequality (it is a scaled L1 metric on the
    transformed coordinates).
    """
    require_valid(a, q)
    require_valid(b, q)
    return 0.25 * (
        abs(a.mu_lo ** q - b.mu_lo ** q)
        + abs(a.mu_hi ** q - b.mu_hi ** q)
        + abs(a.nu_lo ** q - b.nu_lo ** q)
        + abs(a.nu_hi ** q - b.nu_hi ** q)
    )


class LinguisticTerm(enum.Enum):
    """Ten-grade verbal scale used by the judgment matrices."""

    CLI = "CLI"   # certainly low importance
    VLI = "VLI"   # very low
    LI = "LI"     # low
    BAI = "BAI"   # below average
    AI = "AI"     # average
    AAI = "AAI"   # above average
    HI = "HI"     # high
    VHI = "VHI"   # very high
    CHI = "CHI"   # certainly high
    EE = "EE"     # exactly equal


_TERM_TABLE = {
    LinguisticTerm.CLI: Ivqrofn(0.05, 0.05, 0.90, 0.95),
    LinguisticTerm.VLI: Ivqrofn(0.10, 0.20, 0.80, 0.90),
    LinguisticTerm.LI: Ivqrofn(0.20, 0.35, 0.65, 0.80),
    LinguisticTerm.BAI: Ivqrofn(0.35, 0.45, 0.55, 0.65),
    LinguisticTerm.AI: Ivqrofn(0.45, 0.55, 0.45, 0.55),
    LinguisticTerm.AAI: Ivqrofn(0.55, 0.65, 0.35, 0.45),
    LinguisticTerm.HI: Ivqrofn(0.65, 0.80, 0.20, 0.35),
    LinguisticTerm.VHI: Ivqrofn(0.80, 0.90, 0.10, 0.20),
    LinguisticTerm.CHI: Ivqrofn(0.90, 0.95, 0.05, 0.05),
    LinguisticTerm.EE: Ivqrofn(0.1965, 0.1965, 0.1965, 0.1965),
}

# Shorthand found in real judgment sheets.
_TERM_ALIASES = {"BA": LinguisticTerm.BAI}


def parse_term(code: str) -> LinguisticTerm:
    """Parse a term code, accepting the documented aliases (BA -> BAI)."""
    code = code.strip().upper()
    if code in _TERM_ALIASES:
        return _TERM_ALIASES[code]
    try:
        return LinguisticTerm(code)
    except ValueError:
        raise InvalidValueError(f"unknown linguistic term {code!r}") from None


def from_linguistic(term: "LinguisticTerm | str") -> Ivqrofn:
    """Map a linguistic grade to its fixed IVq-ROFN."""
    if isinstance(term, str):
        term = parse_term(term)
    return _TERM_TABLE[term]


def min_valid_q(values: Iterable[Ivqrofn], q_max: int = 20) -> int:
    """Smallest integer rung in [1, q_max] validating every value.

    Ascending traversal; raises NoValidRungError when even q_max fails.
    """
    vals = list(values)
    for q in range(1, int(q_max) + 1):
        if all(validate(a, q) for a in vals):
            return q
    raise NoValidRungError(
        f"no integer rung in [1, {q_max}] validates all {len(vals)} values")
