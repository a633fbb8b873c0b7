from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dqt.cardinal import (
    EXAMPLE_FIELD,
    CardinalRealization,
    ScaledState,
    approx_sqrt,
    common_norm_solutions,
    integer_norm,
    realize,
    reference_probabilities,
    representative_state,
    rescale_states,
    scaled_probabilities,
    squarefree_split,
    validate_realization,
)
from dqt.errors import RangeOverflowError, RegionViolation
from dqt.linalg import StateVector
from dqt.ordered import AmplitudeRegion, OrderedRange

STATES = [representative_state(m) for m in (1, 2, 3, 4)]


def _realize(weights):
    return realize([ScaledState(s, w) for s, w in zip(STATES, weights)])


def test_representatives_have_requested_norms():
    assert [integer_norm(s) for s in STATES] == [1, 2, 3, 4]
    for m in range(1, 40):
        assert integer_norm(representative_state(m)) == m


@pytest.mark.parametrize("m,t,s", [(2, 0, 2), (3, 0, 2), (6, 0, 3), (24, 0, 5), (2, 1, 15), (3, 1, 18), (6, 1, 25)])
def test_approx_sqrt_values(m, t, s):
    assert approx_sqrt(m, t).s == s


@given(st.integers(1, 10**12), st.integers(0, 3))
def test_approx_sqrt_is_least(m, t):
    r = approx_sqrt(m, t)
    assert r.s**2 >= r.radicand > (r.s - 1) ** 2


def test_approx_sqrt_range_overflow():
    assert approx_sqrt(6, 0, k=19).s == 3
    with pytest.raises(RangeOverflowError) as exc:
        approx_sqrt(6, 1, k=311)
    assert exc.value.required_k == 1259


def test_squarefree_split():
    assert squarefree_split(24) == (2, 6)
    assert squarefree_split(12) == (2, 3)
    for n in range(1, 500):
        c, r = squarefree_split(n)
        assert c * c * r == n
        assert all(r % (f * f) for f in range(2, r + 1))


def test_rescale_t0_target_24():
    scaled = rescale_states(STATES, 24, 0)
    assert [s.weight for s in scaled] == [6, 4, 4, 3]
    assert [s.mu for s in scaled] == [36, 32, 48, 36]


def test_rescale_t1_target_24():
    scaled = rescale_states(STATES, 24, 1)
    assert [s.weight for s in scaled] == [50, 36, 30, 25]
    assert [s.mu for s in scaled] == [2500, 2592, 2700, 2500]
    real = realize(scaled)
    assert real.probs == ((2500, 0), (1296, 1296), (900, 1800), (1250, 1250))


def test_rescale_default_target_is_lcm():
    scaled = rescale_states(STATES)
    assert [s.weight for s in scaled] == [4, 3, 2, 2]


def test_rescale_rejects_non_multiple():
    with pytest.raises(ValueError):
        rescale_states(STATES, 25)


def test_scaled_probabilities_sum_to_mu():
    for s in rescale_states(STATES, 24, 1):
        assert sum(scaled_probabilities(s)) == s.mu


def test_scaled_probabilities_region_check():
    region = AmplitudeRegion(2, OrderedRange(311, 11))
    assert scaled_probabilities(ScaledState(STATES[2], 2), region) == [4, 8]
    big = StateVector.of(EXAMPLE_FIELD, ["2+2i", 0])
    with pytest.raises(RegionViolation):
        scaled_probabilities(ScaledState(big, 1), region)


def test_t0_collapse_resolved_at_t1():
    ref = reference_probabilities(STATES)
    t0 = validate_realization(realize(rescale_states(STATES, 24, 0)), ref)
    assert t0.valid and not t0.strict and t0.verdict() == "valid"
    assert ((2, 0), (1, 0)) in t0.collapsed
    t1_real = realize(rescale_states(STATES, 24, 1))
    t1 = validate_realization(t1_real, ref)
    assert t1.strict and t1.verdict() == "strict"
    assert t1_real.probs[2][0] == 900 and t1_real.probs[1][0] == 1296


def test_failing_and_successful_choices():
    ref = reference_probabilities(STATES)
    bad = validate_realization(_realize([4, 3, 2, 2]), ref)
    assert bad.verdict() == "invalid" and bad.reversed
    assert ((2, 1), (0, 0)) not in bad.reversed
    good = validate_realization(_realize([16, 12, 9, 8]), ref)
    assert good.verdict() == "strict" and not good.reversed


def test_reference_probabilities_exact():
    assert reference_probabilities(STATES)[2] == [Fraction(1, 3), Fraction(2, 3)]


def test_realization_bounds():
    with pytest.raises(ValueError):
        CardinalRealization(((5, 1),), (4,))
    with pytest.raises(ValueError):
        validate_realization(_realize([1, 1, 1, 1]), [[Fraction(1)]])


def test_no_common_norm_up_to_a_million():
    assert common_norm_solutions(2, 3, 10**6) == []
    assert common_norm_solutions(2, 8, 100)[0] == (2, 1)
