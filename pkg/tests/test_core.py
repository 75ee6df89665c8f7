import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ivqrof import (
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

AI = Ivqrofn(0.45, 0.55, 0.45, 0.55)
VHI = Ivqrofn(0.80, 0.90, 0.10, 0.20)


def valid_numbers(q=2.0):
    """Strategy: random Ivqrofn valid at rung q."""
    def build(mu_hi, nu_frac, mu_frac, nu_lo_frac):
        nu_hi = nu_frac * (1.0 - mu_hi ** q) ** (1.0 / q)
        return Ivqrofn(mu_frac * mu_hi, mu_hi, nu_lo_frac * nu_hi, nu_hi)
    unit = st.floats(0.0, 1.0, allow_nan=False)
    return st.builds(build, unit, unit, unit, unit)


class TestConstruction:
    def test_bounds_must_be_ordered(self):
        with pytest.raises(InvalidValueError):
            Ivqrofn(0.6, 0.5, 0.1, 0.2)
        with pytest.raises(InvalidValueError):
            Ivqrofn(0.1, 0.2, 0.6, 0.5)

    def test_bounds_must_be_in_unit_interval(self):
        with pytest.raises(InvalidValueError):
            Ivqrofn(-0.1, 0.5, 0.1, 0.2)
        with pytest.raises(InvalidValueError):
            Ivqrofn(0.1, 1.5, 0.1, 0.2)

    def test_values_are_immutable(self):
        with pytest.raises(Exception):
            AI.mu_lo = 0.0


class TestValidate:
    def test_vhi_valid_at_two(self):
        assert validate(VHI, 2)  # 0.81 + 0.04 <= 1

    def test_boundary_identity(self):
        assert validate(PIS, 1)

    def test_overfull_pair_invalid_at_one(self):
        assert not validate(Ivqrofn(0.90, 0.99, 0.01, 0.05), 1)  # 1.04 > 1

    def test_rung_below_one_rejected(self):
        with pytest.raises(InvalidValueError):
            validate(AI, 0.5)


class TestHesitation:
    def test_fully_determined(self):
        assert hesitation(PIS, 2) == (0.0, 0.0)

    def test_fully_hesitant(self):
        lo, hi = hesitation(Ivqrofn(0, 0, 0, 0), 3)
        assert (lo, hi) == (1.0, 1.0)

    def test_midscale_value(self):
        lo, hi = hesitation(AI, 2)
        assert lo == pytest.approx(0.6284902544988267, abs=1e-12)
        assert hi == pytest.approx(0.7713624310270756, abs=1e-12)

    def test_invalid_input_raises(self):
        with pytest.raises(InvalidValueError):
            hesitation(Ivqrofn(0.9, 0.99, 0.01, 0.05), 1)

    @given(valid_numbers(), st.sampled_from([1.0, 2.0, 3.0, 5.0]))
    def test_reconstruction_at_both_endpoints(self, a, q):
        # mu^q + nu^q + pi^q == 1, pairing hi-bounds with pi_lo
        if not validate(a, q):
            return
        lo, hi = hesitation(a, q)
        assert a.mu_hi ** q + a.nu_hi ** q + lo ** q == pytest.approx(1.0, abs=1e-10)
        assert a.mu_lo ** q + a.nu_lo ** q + hi ** q == pytest.approx(1.0, abs=1e-10)


class TestScoreAccuracy:
    def test_positive_ideal_scores_one(self):
        assert score(PIS, 2) == 1.0
        assert accuracy(PIS, 2) == 1.0

    def test_symmetric_value_scores_zero(self):
        assert score(AI, 2) == pytest.approx(0.0, abs=1e-15)

    def test_case_aggregate_value(self):
        a = Ivqrofn(0.6003, 0.6947, 0.3344, 0.4252)
        assert score(a, 2) == pytest.approx(0.27517489, abs=1e-8)
        # and its rescaled form matches the case report
        assert normalized_score(a, 2) == pytest.approx(0.6376, abs=1e-4)

    def test_normalized_score_examples(self):
        assert normalized_score(PIS, 2) == 1.0
        r2 = Ivqrofn(0.7869, 0.8746, 0.1532, 0.2391)
        assert normalized_score(r2, 2) == pytest.approx(0.8259, abs=1e-4)
        r1 = Ivqrofn(0.6897, 0.7803, 0.2579, 0.3420)
        assert normalized_score(r1, 2) == pytest.approx(0.7252, abs=1e-4)

    def test_accuracy_examples(self):
        assert accuracy(Ivqrofn(0, 0, 0, 0), 2) == 0.0
        assert accuracy(AI, 2) == pytest.approx(0.505, abs=1e-12)

    @given(valid_numbers())
    def test_score_monotone_in_membership(self, a):
        # bump each mu bound up / nu bound down; score must not decrease
        q, h = 2.0, 1e-6
        if a.mu_hi ** q + a.nu_hi ** q > 0.999:
            return
        up = Ivqrofn(a.mu_lo, min(a.mu_hi + h, 1.0), a.nu_lo, a.nu_hi)
        assert score(up, q) >= score(a, q)
        if a.nu_hi >= h:
            down = Ivqrofn(a.mu_lo, a.mu_hi, min(a.nu_lo, a.nu_hi - h), a.nu_hi - h)
            assert score(down, q) >= score(a, q)

    @given(st.lists(valid_numbers(), min_size=2, max_size=8))
    def test_normalized_and_raw_rank_identically(self, values):
        scores = [score(v, 2) for v in values]
        # the affine rescale collapses sub-epsilon gaps; only ranks of
        # representably distinct scores are required to agree
        assume(all(abs(a - b) > 1e-12
                   for i, a in enumerate(scores) for b in scores[:i]))
        raw = sorted(range(len(values)), key=lambda i: scores[i])
        norm = sorted(range(len(values)), key=lambda i: normalized_score(values[i], 2))
        assert raw == norm


class TestCompare:
    def test_dominating_scores(self):
        assert compare(VHI, AI, 2) == 1
        assert compare(AI, VHI, 2) == -1

    def test_reflexive_equality(self):
        assert compare(AI, AI, 2) == 0

    def test_accuracy_breaks_score_tie(self):
        # both score 0 (mu interval == nu interval), accuracies differ
        a = Ivqrofn(0.5, 0.5, 0.5, 0.5)
        b = Ivqrofn(0.3, 0.3, 0.3, 0.3)
        assert score(a, 2) == score(b, 2) == 0.0
        assert accuracy(a, 2) > accuracy(b, 2)
        assert compare(a, b, 2) == 1

    @given(st.lists(valid_numbers(), min_size=3, max_size=3))
    def test_transitive_on_triples(self, triple):
        a, b, c = triple
        if compare(a, b, 2) >= 0 and compare(b, c, 2) >= 0:
            assert compare(a, c, 2) >= 0


class TestDistance:
    def test_self_distance_zero(self):
        assert distance(AI, AI, 2) == 0.0

    def test_antipodal_extremes(self):
        for q in (1, 2, 4):
            assert distance(NIS, PIS, q) == pytest.approx(1.0, abs=1e-15)

    def test_midscale_to_ideal(self):
        assert distance(AI, PIS, 2) == pytest.approx(0.5, abs=1e-12)

    @given(valid_numbers(), valid_numbers(), valid_numbers())
    def test_metric_properties(self, a, b, c):
        dab, dba = distance(a, b, 2), distance(b, a, 2)
        assert dab == dba
        assert 0.0 <= dab <= 1.0
        assert dab <= distance(a, c, 2) + distance(c, b, 2) + 1e-12


class TestLinguisticScale:
    def test_high_grade_row(self):
        assert from_linguistic("HI") == Ivqrofn(0.65, 0.80, 0.20, 0.35)

    def test_exactly_equal_row(self):
        assert from_linguistic(LinguisticTerm.EE) == Ivqrofn(
            0.1965, 0.1965, 0.1965, 0.1965)

    def test_certainly_high_row(self):
        # nu interval degenerates to [0.05, 0.05] on this scale
        assert from_linguistic("CHI") == Ivqrofn(0.90, 0.95, 0.05, 0.05)

    def test_shorthand_alias(self):
        assert parse_term("BA") is LinguisticTerm.BAI
        assert parse_term("bai") is LinguisticTerm.BAI

    def test_unknown_code_rejected(self):
        with pytest.raises(InvalidValueError):
            parse_term("XXL")

    def test_all_rows_valid_at_two(self):
        for term in LinguisticTerm:
            assert validate(from_linguistic(term), 2)

    def test_certainly_high_sits_on_the_rung_one_boundary(self):
        # 0.95 + 0.05 == 1 exactly; the judgment sheets' alternate rendering
        # (nu_hi = 0.10) overflows and is what forces rung 2 in the case data
        assert validate(from_linguistic("CHI"), 1)
        assert not validate(Ivqrofn(0.90, 0.95, 0.05, 0.10), 1)


class TestMinValidQ:
    def test_case_judgments_need_two(self, case_problem):
        from ivqrof import ingest
        normalized, _ = ingest(case_problem)
        cells = [c for mat in normalized.judgments for row in mat for c in row]
        assert min_valid_q(cells) == 2

    def test_balanced_value_fits_one(self):
        assert min_valid_q([Ivqrofn(0.5, 0.5, 0.5, 0.5)]) == 1

    def test_overfull_value_needs_two(self):
        assert min_valid_q([Ivqrofn(0.95, 0.99, 0.01, 0.05)]) == 2

    def test_traversal_exhaustion(self):
        with pytest.raises(NoValidRungError):
            min_valid_q([Ivqrofn(1.0, 1.0, 1.0, 1.0)], q_max=10)


@settings(max_examples=200)
@given(st.lists(valid_numbers(), min_size=2, max_size=6))
def test_comparison_induces_consistent_order(values):
    """Sorting by compare twice from different starting orders agrees."""
    import functools
    key = functools.cmp_to_key(lambda a, b: compare(a, b, 2))
    first = sorted(values, key=key)
    second = sorted(list(reversed(values)), key=key)
    # values inside the comparison tolerance count as ties, so positional
    # scores may differ by up to a few tolerance widths across tie chains
    assert [score(v, 2) for v in first] == pytest.approx(
        [score(v, 2) for v in second], abs=1e-8)
