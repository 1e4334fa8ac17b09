import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icup import ChannelParams, Regime, b_gain, cap, classify, derive


class TestCap:
    def test_zero(self):
        assert cap(0.0) == 0.0

    def test_power_of_two_arguments(self):
        assert cap(3.0) == 1.0
        assert cap(15.0) == 2.0

    @pytest.mark.parametrize("bad", [-1e-12, -1.0, math.inf, math.nan])
    def test_rejects_negative_and_nonfinite(self, bad):
        with pytest.raises(ValueError):
            cap(bad)

    @given(st.floats(min_value=0.0, max_value=1e12), st.floats(min_value=0.0, max_value=1e12))
    def test_monotone(self, x, y):
        lo, hi = sorted((x, y))
        assert cap(lo) <= cap(hi)


class TestBGain:
    def test_values(self):
        assert b_gain(0.0) == 1.0
        assert b_gain(1.0) == 4.0
        assert b_gain(4.0) == 9.0

    @given(st.floats(min_value=0.0, max_value=1e8))
    def test_at_least_direct_gain(self, a):
        assert b_gain(a) >= 1.0 + a


class TestChannelParams:
    def test_accepts_ints(self):
        params = ChannelParams(6, 1, 0)
        assert params.p == 6.0 and isinstance(params.p, float)

    @pytest.mark.parametrize("field", ["p", "a", "c12"])
    @pytest.mark.parametrize("bad", [-1.0, math.inf, math.nan, "x", True, None])
    def test_rejects_invalid(self, field, bad):
        kwargs = {"p": 1.0, "a": 1.0, "c12": 0.0, field: bad}
        with pytest.raises(ValueError):
            ChannelParams(**kwargs)

    def test_frozen(self):
        params = ChannelParams(1.0, 1.0, 0.0)
        with pytest.raises(Exception):
            params.p = 2.0


class TestDerive:
    def test_alpha_half(self):
        d = derive(ChannelParams(100.0, 0.1, 0.0))
        assert d.inr == pytest.approx(10.0)
        assert d.alpha == pytest.approx(0.5)
        assert d.b == pytest.approx((1.0 + math.sqrt(0.1)) ** 2)

    def test_unit_gain(self):
        assert derive(ChannelParams(6.0, 1.0, 0.0)).b == 4.0

    def test_no_interference(self):
        d = derive(ChannelParams(6.0, 0.0, 0.0))
        assert d.b == 1.0 and d.inr == 0.0 and d.alpha is None

    def test_alpha_undefined_at_low_power(self):
        assert derive(ChannelParams(1.0, 2.0, 0.0)).alpha is None

    def test_beta(self):
        d = derive(ChannelParams(3.0, 1.0, 2.0))
        assert d.beta == pytest.approx(2.0)  # C(3) = 1

    def test_beta_degenerate(self):
        assert derive(ChannelParams(0.0, 1.0, 0.0)).beta == 0.0
        assert derive(ChannelParams(0.0, 1.0, 1.0)).beta == math.inf


class TestClassify:
    @pytest.mark.parametrize(
        "p,a,regime",
        [
            (10.0, 0.05, Regime.NOISE_LIMITED),
            (10.0, 0.5, Regime.WEAK),
            (10.0, 2.0, Regime.STRONG_CASE_2),
            (0.5, 4.0, Regime.STRONG_CASE_1),
            (2.0, 8.0, Regime.STRONG_CASE_3),
        ],
    )
    def test_examples(self, p, a, regime):
        assert classify(ChannelParams(p, a, 0.0)) is regime

    def test_boundary_precedence(self):
        # each tie resolves to the earlier regime in the precedence order
        assert classify(ChannelParams(0.5, 2.0, 0.0)) is Regime.NOISE_LIMITED  # aP = 1
        assert classify(ChannelParams(10.0, 1.0, 0.0)) is Regime.WEAK  # a = 1
        assert classify(ChannelParams(1.0, 2.0, 0.0)) is Regime.STRONG_CASE_1  # P = 1
        assert classify(ChannelParams(2.0, 2.0, 0.0)) is Regime.STRONG_CASE_2  # a = P

    @given(
        st.floats(min_value=1e-6, max_value=1e8),
        st.floats(min_value=1e-6, max_value=1e8),
    )
    def test_consistent_with_definitions(self, p, a):
        regime = classify(ChannelParams(p, a, 0.0))
        if a * p <= 1.0:
            assert regime is Regime.NOISE_LIMITED
        elif a <= 1.0:
            assert regime is Regime.WEAK
        elif p <= 1.0:
            assert regime is Regime.STRONG_CASE_1
        elif a <= p:
            assert regime is Regime.STRONG_CASE_2
        else:
            assert regime is Regime.STRONG_CASE_3
