"""Strong-regime and noise-limited achievability.

For a > 1 the private codebook is dropped; the scheme uses common and/or
cooperative codewords depending on which of P <= 1 <= a, 1 <= a <= P, or
1 <= P <= a holds.  When C12 >= C(bP) the cooperative codeword alone meets
the cut-set-style bound and the sum-capacity is achieved exactly.  For
aP <= 1 treating the interference as noise is within one bit of capacity.
"""

from __future__ import annotations

import math
from enum import Enum

from .channel import ChannelParams, PreconditionError, Regime, b_gain, cap, classify


class SchemeLabel(Enum):
    FULL_COOP_ONLY = "FullCoopOnly"
    COMMON_ONLY = "CommonOnly"
    COMMON_PLUS_COOP = "CommonPlusCoop"
    TREAT_AS_NOISE = "TreatAsNoise"
    UNIVERSAL_PA = "UniversalPA"
    FULL_COOP_PA = "FullCoopPA"
    OPTIMAL_GAMMA = "OptimalGamma"
    EXACT_CAPACITY = "ExactCapacity"


def capacity_condition_holds(params: ChannelParams) -> bool:
    """True when C12 >= C(bP), which makes the sum-capacity achievable."""
    return params.c12 >= cap(b_gain(params.a) * params.p)


def strong_rate(params: ChannelParams) -> tuple[float, SchemeLabel]:
    """Achievable sum-rate and scheme for a > 1, aP > 1.

    The exact-capacity branch (C12 >= C(bP)) takes precedence over the
    per-case schemes since it meets the upper bound outright.
    """
    regime = classify(params)
    if regime not in (
        Regime.STRONG_CASE_1,
        Regime.STRONG_CASE_2,
        Regime.STRONG_CASE_3,
    ):
        raise PreconditionError(
            f"strong_rate needs a > 1 and a*P > 1, got regime {regime.value}"
        )
    p, a, c12 = params.p, params.a, params.c12
    cbp = cap(b_gain(a) * p)
    if c12 >= cbp:
        return cbp, SchemeLabel.EXACT_CAPACITY
    if regime is Regime.STRONG_CASE_1:
        # all power cooperative: P_w = P_u = 0, P_V = bP
        return min(c12, cbp), SchemeLabel.FULL_COOP_ONLY
    if regime is Regime.STRONG_CASE_2:
        # all power common: P_w = P
        return cap((1.0 + a) * p), SchemeLabel.COMMON_ONLY
    # 1 <= P <= a: P_w = P - 1, P_V = b; each receiver decodes the other
    # user's common codeword jointly with v, then its own common codeword.
    inner = min(c12, cap(b_gain(a) / p)) + cap(p - 1.0)
    rate = min(inner, cap((a * p + 1.0 + 2.0 * math.sqrt(a)) / p)) + cap(p - 1.0)
    return rate, SchemeLabel.COMMON_PLUS_COOP


def noise_limited_rate(params: ChannelParams) -> float:
    """Sum-rate of treating interference as noise: log2(1 + P/(1 + aP))."""
    return math.log2(1.0 + params.p / (1.0 + params.a * params.p))
