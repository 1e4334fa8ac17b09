"""Weak-regime achievability: Han-Kobayashi rate splitting plus a cooperative
codeword relayed over the C12 link.

Each transmitter splits its power between a private codeword (received at
the noise level of the other receiver, P_u = 1/a), a common codeword, and a
cooperative codeword sent coherently by both transmitters.  The common and
cooperative messages form a compound MAC at each receiver; the private
messages are decoded last and contribute C(P_u/2) per user.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from . import _kernels
from .channel import (
    INTERFERENCE_TOL,
    ChannelParams,
    PreconditionError,
    b_gain,
    cap,
)


@dataclass(frozen=True)
class PowerAllocation:
    """Per-transmitter power split.

    p_u, p_w, p_v are the private/common/cooperative powers of one
    transmitter; p_V is the combined receive power of the cooperative
    codeword, (1 + sqrt(a))**2 * p_v.
    """

    p_u: float
    p_w: float
    p_v: float
    p_V: float


@dataclass(frozen=True)
class SumBounds:
    """The three bounds on 2*R_w + R_v implied by the compound MAC."""

    r_b1: float
    r_b2: float
    r_b3: float
    r_tilde_w: float

    def min(self) -> float:
        return min(self.r_b1, self.r_b2, self.r_b3)


@dataclass(frozen=True)
class UniversalRateTerms:
    """Candidate rate terms under the universal allocation P_w = P_V.

    r6 and r7 are the two redundant terms; r_min is min(r1..r5).
    """

    r1: float
    r2: float
    r3: float
    r4: float
    r5: float
    r6: float
    r7: float
    r_min: float


class MacBounds(NamedTuple):
    """Right-hand sides of the seven MAC constraints at one receiver."""

    r_v: float
    r_w_own: float
    r_w_cross: float
    r_w_pair: float
    r_w_own_v: float
    r_w_cross_v: float
    r_total: float


def _check_interference_limited(params: ChannelParams) -> None:
    if params.a <= 0.0:
        raise PreconditionError("weak-regime schemes need a > 0 (P_u = 1/a)")
    if params.a * params.p < 1.0 - INTERFERENCE_TOL:
        raise PreconditionError(
            f"need a*P >= 1, got a*P = {params.a * params.p}"
        )


def gamma_pa(params: ChannelParams, gamma: float) -> PowerAllocation:
    """Power split with fraction gamma of the residual power cooperative.

    P_u = 1/a; the remaining P - 1/a is split gamma / (1 - gamma) between
    the cooperative and common codewords.
    """
    _check_interference_limited(params)
    gamma = float(gamma)
    if not (0.0 <= gamma <= 1.0):
        raise ValueError(f"gamma must lie in [0, 1], got {gamma}")
    p_u = 1.0 / params.a
    rem = max(params.p - p_u, 0.0)
    p_v = gamma * rem
    p_w = rem - p_v
    return PowerAllocation(p_u=p_u, p_w=p_w, p_v=p_v, p_V=b_gain(params.a) * p_v)


def universal_pa(params: ChannelParams) -> PowerAllocation:
    """Universal split: P_w = P_V, i.e. P_w = (P - 1/a) / (1 + 1/b)."""
    _check_interference_limited(params)
    b = b_gain(params.a)
    p_u = 1.0 / params.a
    p_w = max(params.p - p_u, 0.0) / (1.0 + 1.0 / b)
    p_v = p_w / b
    return PowerAllocation(p_u=p_u, p_w=p_w, p_v=p_v, p_V=b * p_v)


def mac_region(pa: PowerAllocation, params: ChannelParams) -> MacBounds:
    """Seven constraint right-hand sides for one receiver's compound MAC.

    The +2 in the denominators is the unit noise plus the interfering
    private signal, whose received power is a*P_u = 1.
    """
    a, c12 = params.a, params.c12
    den = pa.p_u + 2.0
    return MacBounds(
        r_v=min(cap(pa.p_V / den), c12),
        r_w_own=cap(pa.p_w / den),
        r_w_cross=cap(a * pa.p_w / den),
        r_w_pair=cap((1.0 + a) * pa.p_w / den),
        r_w_own_v=cap((pa.p_w + pa.p_V) / den),
        r_w_cross_v=cap((a * pa.p_w + pa.p_V) / den),
        r_total=cap((pa.p_w + a * pa.p_w + pa.p_V) / den),
    )


def sum_bounds(pa: PowerAllocation, params: ChannelParams) -> SumBounds:
    """The three ways to bound 2*R_w + R_v from the MAC constraints."""
    a, c12 = params.a, params.c12
    den = pa.p_u + 2.0
    r_tilde_w = min(cap(a * pa.p_w / den), 0.5 * cap((1.0 + a) * pa.p_w / den))
    r_b1 = cap((pa.p_w * (1.0 + a) + pa.p_V) / den)
    r_b2 = 2.0 * r_tilde_w + min(cap(pa.p_V / den), c12)
    r_b3 = cap((a * pa.p_w + pa.p_V) / den) + r_tilde_w
    return SumBounds(r_b1=r_b1, r_b2=r_b2, r_b3=r_b3, r_tilde_w=r_tilde_w)


def weak_sum_rate(params: ChannelParams, gamma: float) -> float:
    """Achievable sum-rate 2*C(P_u/2) + min_i R_Bi at the given gamma."""
    pa = gamma_pa(params, gamma)
    return 2.0 * cap(pa.p_u / 2.0) + sum_bounds(pa, params).min()


def universal_rates(params: ChannelParams) -> UniversalRateTerms:
    """Rate terms of the universal allocation; the sum-rate adds 2*C(P_u/2)."""
    pa = universal_pa(params)
    a, c12 = params.a, params.c12
    den = pa.p_u + 2.0
    c_cross = cap(a * pa.p_w / den)
    c_pair = cap((1.0 + a) * pa.p_w / den)
    c_own = cap(pa.p_w / den)
    r1 = cap((2.0 + a) * pa.p_w / den)
    r2 = 2.0 * c_cross + c12
    r3 = c_pair + c12
    r4 = c_pair + c_cross
    r5 = 1.5 * c_pair
    r6 = 2.0 * c_cross + c_own
    r7 = c_pair + c_own
    return UniversalRateTerms(
        r1=r1, r2=r2, r3=r3, r4=r4, r5=r5, r6=r6, r7=r7,
        r_min=min(r1, r2, r3, r4, r5),
    )


def universal_sum_rate(params: ChannelParams) -> float:
    """Sum-rate achieved by the universal allocation."""
    terms = universal_rates(params)
    return terms.r_min + 2.0 * cap((1.0 / params.a) / 2.0)


def full_coop_rate(params: ChannelParams) -> float:
    """Sum-rate when all residual power goes to cooperation (gamma = 1)."""
    _check_interference_limited(params)
    a = params.a
    coop = cap(b_gain(a) * max(a * params.p - 1.0, 0.0) / (2.0 * a + 1.0))
    return min(params.c12, coop) + 2.0 * cap(1.0 / (2.0 * a))


def optimize_gamma(params: ChannelParams) -> tuple[float, float]:
    """Best gamma over a 2001-point grid plus three trisection refinements.

    Deterministic derivative-free search; the objective is piecewise smooth
    with min() kinks, so the grid resolution dominates accuracy and is well
    below the gap tolerances used by the verification suites.
    """
    _check_interference_limited(params)
    g, r = _kernels.optimize_gamma_impl(params.p, params.a, params.c12)
    return float(g), float(r)
