import math

import numpy as np
import pytest

from circular_otto import (
    CycleConfig,
    cold_transition,
    cyclic_population,
    efficiency,
    extracted_work,
    hot_transition,
    lorentz_gamma,
    response_negative,
    response_positive,
    stroke_ledger,
    transition_probability,
)

CANONICAL = dict(v=0.999, a_hot=100.0, a_cold=15.0, e1=1.0, e2=2.0)


def canonical_config(**overrides):
    params = {**CANONICAL, **overrides}
    return CycleConfig.from_accelerations(**params)


def random_configs(n, seed):
    rng = np.random.default_rng(seed)
    configs = []
    for _ in range(n):
        v = float(rng.uniform(0.3, 0.9995))
        a_cold = float(10.0 ** rng.uniform(0.0, 2.0))
        a_hot = a_cold * float(rng.uniform(1.05, 20.0))
        e1 = float(10.0 ** rng.uniform(-0.7, 0.5))
        e2 = e1 * float(rng.uniform(1.01, 5.0))
        configs.append(CycleConfig.from_accelerations(v, a_hot, a_cold, e1, e2))
    return configs


class TestCycleConfig:
    def test_hot_arc_is_tighter(self):
        c = canonical_config()
        assert c.r_hot < c.r_cold
        assert c.hot.acceleration > c.cold.acceleration

    def test_contacts_pair_gap_with_geometry(self):
        c = canonical_config()
        e_hot, t_hot, a_hot = c.hot_contact
        e_cold, t_cold, a_cold = c.cold_contact
        assert (e_hot, e_cold) == (2.0, 1.0)
        assert a_hot == pytest.approx(100.0, rel=1e-12)
        assert a_cold == pytest.approx(15.0, rel=1e-12)
        assert t_hot < t_cold
        g = lorentz_gamma(c.v)
        assert t_hot == pytest.approx(math.pi * g * c.v / 100.0, rel=1e-12)

    def test_rejects_inverted_baths(self):
        with pytest.raises(ValueError):
            CycleConfig.from_accelerations(0.9, 10.0, 15.0, 1.0, 2.0)
        with pytest.raises(ValueError):
            CycleConfig(0.9, 3.0, 2.0, 1.0, 2.0)

    def test_rejects_bad_gaps(self):
        with pytest.raises(ValueError):
            canonical_config(e1=2.0, e2=1.0)
        with pytest.raises(ValueError):
            canonical_config(e1=0.0, e2=1.0)

    def test_idle_gap_allowed(self):
        c = canonical_config(e2=1.0)
        assert c.e1 == c.e2

    def test_population_range(self):
        with pytest.raises(ValueError):
            CycleConfig.from_accelerations(population=1.5, **CANONICAL)


class TestTransitionProbability:
    def test_half_filled_closed_form(self):
        # (1-2p) F - p E T / 8 collapses to -E T / 16 at p = 1/2, exactly
        for energy, duration, accel in [(1.0, 0.5, 20.0), (2.0, 3.0, 1.0), (0.3, 1.0, 7.0)]:
            got = transition_probability(0.5, energy, duration, accel)
            assert got == pytest.approx(-energy * duration / 16.0, rel=1e-12)

    def test_empty_detector_only_excites(self):
        assert transition_probability(0.0, 1.0, 0.7, 30.0) == pytest.approx(
            response_positive(1.0, 0.7, 30.0), rel=1e-15
        )
        assert transition_probability(0.0, 1.0, 0.7, 30.0) > 0.0

    def test_inverted_detector_only_decays(self):
        got = transition_probability(1.0, 1.0, 0.7, 30.0)
        assert got == pytest.approx(-response_negative(1.0, 0.7, 30.0), rel=1e-15)
        assert got < 0.0

    def test_domain(self):
        with pytest.raises(ValueError):
            transition_probability(1.2, 1.0, 1.0, 1.0)
        with pytest.raises(ValueError):
            transition_probability(0.5, 0.0, 1.0, 1.0)


class TestCyclicPopulation:
    def test_canonical_value_in_engine_band(self):
        p = cyclic_population(canonical_config())
        assert 0.0 < p < 0.5

    def test_cyclicity_closes_the_cycle(self):
        for config in random_configs(50, seed=21):
            p = cyclic_population(config)
            residual = hot_transition(config, p) + cold_transition(config, p)
            assert abs(residual) <= 1e-12

    def test_near_symmetric_structure(self):
        # with both contacts (almost) identical, p = 2F / (4F + 2 E T / 8)
        v, a, e = 0.9, 20.0, 1.0
        config = CycleConfig.from_accelerations(v, a * (1.0 + 1e-12), a, e, e)
        g = lorentz_gamma(v)
        duration = math.pi * g * v / a
        f = response_positive(e, duration, a)
        expected = 2.0 * f / (4.0 * f + 2.0 * e * duration / 8.0)
        assert cyclic_population(config) == pytest.approx(expected, rel=1e-6)
        assert cyclic_population(config) < 0.5


class TestStrokeLedger:
    def test_adiabats_exchange_no_heat_contacts_do_no_work(self):
        led = stroke_ledger(canonical_config())
        assert led.q1 == led.q3 == 0.0
        assert led.w2 == led.w4 == 0.0

    def test_totals(self):
        config = canonical_config()
        p = 0.3
        led = stroke_ledger(config, p)
        dp = hot_transition(config, p)
        gap = config.e2 - config.e1
        assert led.w_total == pytest.approx(-dp * gap, rel=1e-12)
        assert led.q_total == pytest.approx(dp * gap, rel=1e-12)
        assert led.w1 == pytest.approx(p * gap, rel=1e-15)
        assert led.q2 == pytest.approx(config.e2 * dp, rel=1e-15)
        assert led.w3 == pytest.approx(-(p + dp) * gap, rel=1e-12)
        assert led.q4 == pytest.approx(-config.e1 * dp, rel=1e-15)

    def test_energy_conservation(self):
        for config in random_configs(30, seed=23):
            for p in (0.0, 0.25, 0.5, 1.0, None):
                led = stroke_ledger(config, p)
                assert abs(led.w_total + led.q_total) <= 1e-12

    def test_idling_population_yields_zero_work(self):
        # choose p so the hot contact is individually balanced
        config = canonical_config()
        e2, t_hot, a_hot = config.hot_contact
        up = response_positive(e2, t_hot, a_hot)
        down = response_negative(e2, t_hot, a_hot)
        p_idle = up / (up + down)
        led = stroke_ledger(config, p_idle)
        assert abs(led.w_total) <= 1e-15

    def test_canonical_engine_signs(self):
        led = stroke_ledger(canonical_config())
        assert led.q2 > 0.0          # heat drawn from the hot contact
        assert led.w_total < 0.0     # net work done by the detector


class TestExtractedWorkAndEfficiency:
    def test_zero_gap_change_idles(self):
        assert extracted_work(canonical_config(e2=1.0)) == 0.0

    def test_canonical_positive_work(self):
        assert extracted_work(canonical_config()) > 0.0

    def test_break_even_at_gap_ratio(self):
        # a_hot / a_cold == e2 / e1 makes both contacts share one effective
        # temperature, so the cycle extracts nothing
        config = canonical_config(a_hot=30.0, a_cold=15.0)
        assert abs(extracted_work(config)) <= 1e-12

    def test_interior_maximum_in_gap_change(self):
        works = []
        for de in np.geomspace(0.01, 10.0, 40):
            config = CycleConfig.from_accelerations(0.999, 50.0, 20.0, 1.0, 1.0 + float(de))
            works.append(extracted_work(config))
        k = int(np.argmax(works))
        assert 0 < k < len(works) - 1

    def test_saturates_at_high_acceleration(self):
        works = [
            extracted_work(canonical_config(a_hot=a))
            for a in (1e3, 1e5, 1e7)
        ]
        assert works[2] == pytest.approx(works[1], rel=1e-2)
        assert works[2] > 0.0

    def test_efficiency_value_and_invariance(self):
        assert efficiency(canonical_config()) == 0.5
        assert efficiency(canonical_config(e2=1.0)) == 0.0
        values = {
            efficiency(canonical_config(v=v, a_hot=a))
            for v in (0.5, 0.9, 0.999)
            for a in (40.0, 100.0, 400.0)
        }
        assert values == {0.5}

    def test_work_over_input_heat_is_the_gap_ratio(self):
        for config in random_configs(20, seed=29):
            dp = hot_transition(config)
            if dp == 0.0:
                continue
            ratio = extracted_work(config) / (config.e2 * dp)
            assert ratio == pytest.approx(1.0 - config.e1 / config.e2, rel=1e-12)
