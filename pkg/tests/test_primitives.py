"""Contest success functions, effective effort and the power cost."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tourney import (InteriorityError, ParameterError, PowerCost,
                     ProbitUniformCsf, TullockCsf, cost_eval,
                     cost_marginal_inverse, effective_effort, win_prob,
                     win_prob_partials)

tullock_csfs = st.floats(0.05, 1.0).map(TullockCsf)
probit_csfs = st.builds(ProbitUniformCsf,
                        half_width=st.floats(2.0, 10.0),
                        f_exponent=st.floats(0.1, 0.9))
# efforts capped so that probit performance gaps stay inside the noise range
safe_efforts = st.floats(0.01, 4.0)
costs = st.builds(PowerCost, exponent=st.floats(1.05, 6.0),
                  divisor=st.floats(0.01, 100.0))


def test_effective_effort_floors_at_zero():
    assert effective_effort(5.0, 2.0) == 3.0
    assert effective_effort(2.0, 5.0) == 0.0
    assert effective_effort(0.0, 0.0) == 0.0
    out = effective_effort(np.array([5.0, 2.0]), 3.0)
    assert isinstance(out, np.ndarray)
    assert out.tolist() == [2.0, 0.0]


def test_effective_effort_rejects_negative_inputs():
    with pytest.raises(ParameterError):
        effective_effort(-1.0, 0.0)
    with pytest.raises(ParameterError):
        effective_effort(1.0, -0.5)


@given(csf=tullock_csfs, b_own=safe_efforts, b_rival=safe_efforts)
def test_tullock_probabilities_sum_to_one(csf, b_own, b_rival):
    total = csf.win_prob(b_own, b_rival) + csf.win_prob(b_rival, b_own)
    assert total == pytest.approx(1.0, abs=1e-12)


@given(csf=probit_csfs, b_own=safe_efforts, b_rival=safe_efforts)
def test_probit_probabilities_sum_to_one(csf, b_own, b_rival):
    total = csf.win_prob(b_own, b_rival) + csf.win_prob(b_rival, b_own)
    assert total == pytest.approx(1.0, abs=1e-12)


def test_tullock_edge_probabilities():
    csf = TullockCsf(r=0.5)
    assert csf.win_prob(0.0, 0.0) == 0.5
    assert csf.win_prob(1.0, 0.0) == 1.0
    assert csf.win_prob(0.0, 1.0) == 0.0


@given(csf=tullock_csfs, b=safe_efforts, lift=st.floats(0.01, 2.0))
def test_tullock_monotone_in_own_effort(csf, b, lift):
    assert csf.win_prob(b + lift, b) > csf.win_prob(b, b)
    assert csf.win_prob(b, b + lift) < csf.win_prob(b, b)


@given(csf=probit_csfs, b=safe_efforts, lift=st.floats(0.01, 2.0))
def test_probit_monotone_in_own_effort(csf, b, lift):
    assert csf.win_prob(b + lift, b) > csf.win_prob(b, b)
    assert csf.win_prob(b, b + lift) < csf.win_prob(b, b)


def _fd_partials(csf, b_own, b_rival):
    h_own = 1e-6 * b_own
    h_riv = 1e-6 * b_rival
    d_own = (csf.win_prob(b_own + h_own, b_rival)
             - csf.win_prob(b_own - h_own, b_rival)) / (2.0 * h_own)
    d_riv = (csf.win_prob(b_own, b_rival + h_riv)
             - csf.win_prob(b_own, b_rival - h_riv)) / (2.0 * h_riv)
    return d_own, d_riv


@settings(deadline=None)
@given(csf=tullock_csfs, b_own=safe_efforts, b_rival=safe_efforts)
def test_tullock_partials_match_finite_differences(csf, b_own, b_rival):
    d_own, d_rival = csf.win_prob_partials(b_own, b_rival)
    fd_own, fd_rival = _fd_partials(csf, b_own, b_rival)
    assert d_own > 0.0
    assert d_rival < 0.0
    assert d_own == pytest.approx(fd_own, abs=1e-5 * (1.0 + abs(d_own)))
    assert d_rival == pytest.approx(fd_rival, abs=1e-5 * (1.0 + abs(d_rival)))


@settings(deadline=None)
@given(csf=probit_csfs, b_own=safe_efforts, b_rival=safe_efforts)
def test_probit_partials_match_finite_differences(csf, b_own, b_rival):
    d_own, d_rival = csf.win_prob_partials(b_own, b_rival)
    fd_own, fd_rival = _fd_partials(csf, b_own, b_rival)
    assert d_own > 0.0
    assert d_rival < 0.0
    assert d_own == pytest.approx(fd_own, abs=1e-5 * (1.0 + abs(d_own)))
    assert d_rival == pytest.approx(fd_rival, abs=1e-5 * (1.0 + abs(d_rival)))


def test_probit_noise_distribution_shape():
    csf = ProbitUniformCsf(half_width=5.0, f_exponent=0.5)
    assert csf.noise_diff_cdf(0.0) == 0.5
    assert csf.noise_diff_cdf(-10.0) == 0.0
    assert csf.noise_diff_cdf(10.0) == 1.0
    assert csf.noise_diff_density(0.0) == pytest.approx(0.1)
    assert csf.noise_diff_density(10.0) == 0.0
    # the published spot value used by the bundled noise scenario
    assert csf.noise_diff_cdf(-1.0) == pytest.approx(0.405)


def test_probit_saturation_clamps_win_prob_but_blocks_partials():
    csf = ProbitUniformCsf(half_width=1.0, f_exponent=0.5)
    assert csf.win_prob(16.0, 0.25) == 1.0
    with pytest.raises(InteriorityError):
        csf.win_prob_partials(16.0, 0.25)


def test_partials_require_strictly_positive_efforts():
    with pytest.raises(ParameterError):
        TullockCsf().win_prob_partials(0.0, 1.0)
    with pytest.raises(ParameterError):
        ProbitUniformCsf(5.0, 0.5).win_prob_partials(1.0, 0.0)


@given(cost=costs, s=st.floats(1e-4, 1e3))
def test_cost_marginal_round_trip(cost, s):
    assert cost.marginal_inverse(cost.marginal(s)) == pytest.approx(s, rel=1e-10)


@given(cost=costs)
def test_unit_marginal_sabotage_costs_less_than_itself(cost):
    s = cost.marginal_inverse(1.0)
    assert 0.0 < cost.cost(s) < s


def test_cost_frozen_values():
    cost = PowerCost(3.0, 12.0)
    assert cost.cost(2.0) == pytest.approx(2.0 / 3.0, rel=1e-15)
    assert cost.marginal(2.0) == pytest.approx(1.0, rel=1e-15)
    assert cost.marginal_inverse(1.0) == pytest.approx(2.0, rel=1e-15)
    assert cost.curvature(2.0) == pytest.approx(1.0, rel=1e-15)


def test_free_function_wrappers():
    csf = TullockCsf()
    assert win_prob(csf, 3.0, 1.0) == pytest.approx(0.75)
    d_own, d_rival = win_prob_partials(csf, 1.0, 1.0)
    assert d_own == pytest.approx(0.25)
    assert d_rival == pytest.approx(-0.25)
    cost = PowerCost(3.0, 27.0)
    assert cost_eval(cost, 3.0) == pytest.approx(1.0)
    assert cost_marginal_inverse(cost, 1.0) == pytest.approx(3.0)


def test_scalar_in_scalar_out_array_in_array_out():
    csf = TullockCsf()
    assert isinstance(csf.win_prob(1.0, 2.0), float)
    assert isinstance(csf.win_prob(np.array([1.0, 2.0]), 2.0), np.ndarray)
    cost = PowerCost(2.0, 1.0)
    assert isinstance(cost.cost(1.5), float)
    assert isinstance(cost.cost(np.array([1.0])), np.ndarray)


@pytest.mark.parametrize("bad", [0.0, -0.5, 1.5])
def test_tullock_rejects_bad_decisiveness(bad):
    with pytest.raises(ParameterError):
        TullockCsf(r=bad)


def test_probit_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        ProbitUniformCsf(half_width=0.0, f_exponent=0.5)
    with pytest.raises(ParameterError):
        ProbitUniformCsf(half_width=1.0, f_exponent=1.0)
    with pytest.raises(ParameterError):
        ProbitUniformCsf(half_width=1.0, f_exponent=0.0)


def test_power_cost_rejects_bad_parameters():
    with pytest.raises(ParameterError):
        PowerCost(1.0, 12.0)
    with pytest.raises(ParameterError):
        PowerCost(3.0, 0.0)
    with pytest.raises(ParameterError):
        PowerCost(3.0, 12.0).cost(-1.0)
