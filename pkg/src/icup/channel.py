"""Channel parameterization for the two-user symmetric Gaussian interference
channel with a unidirectional cooperative link.

A channel is the triple (P, a, C12): per-transmitter average power P,
interference link power gain a, and cooperative link capacity C12 in bits
per channel use.  SNR = P and INR = a*P.  All rates are base-2 logarithms,
in bits per real dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class PreconditionError(ValueError):
    """Inputs are valid numbers but outside the regime an operation covers."""


# Tolerance for the interference-limited precondition a*P >= 1, so grid
# points constructed as P = INR/a survive float round-off.
INTERFERENCE_TOL = 1e-9


class Regime(Enum):
    NOISE_LIMITED = "NoiseLimited"
    WEAK = "Weak"
    STRONG_CASE_1 = "StrongCase1"
    STRONG_CASE_2 = "StrongCase2"
    STRONG_CASE_3 = "StrongCase3"


def cap(x: float) -> float:
    """Gaussian capacity 0.5*log2(1 + x) of a nonnegative power ratio."""
    x = float(x)
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"power ratio must be finite and >= 0, got {x}")
    return 0.5 * math.log2(1.0 + x)


def b_gain(a: float) -> float:
    """Coherent combining gain (1 + sqrt(a))**2 of the cooperative codeword."""
    return (1.0 + math.sqrt(a)) ** 2


@dataclass(frozen=True)
class ChannelParams:
    """Channel triple: power P, interference gain a, cooperative capacity C12."""

    p: float
    a: float
    c12: float

    def __post_init__(self):
        for name in ("p", "a", "c12"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise ValueError(f"{name} must be a real number, got {v!r}")
            v = float(v)
            if not math.isfinite(v) or v < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class DerivedParams:
    """Quantities derived from a ChannelParams.

    alpha is log(INR)/log(SNR) and is None when undefined (P <= 1, or
    INR = 0).  beta is C12 normalized by the single-link capacity C(P).
    """

    snr: float
    inr: float
    alpha: float | None
    beta: float
    b: float


def derive(params: ChannelParams) -> DerivedParams:
    p, a, c12 = params.p, params.a, params.c12
    inr = a * p
    if p > 1.0 and inr > 0.0:
        alpha = math.log(inr) / math.log(p)
    else:
        alpha = None
    cp = cap(p)
    if cp > 0.0:
        beta = c12 / cp
    else:
        beta = 0.0 if c12 == 0.0 else math.inf
    return DerivedParams(snr=p, inr=inr, alpha=alpha, beta=beta, b=b_gain(a))


def classify(params: ChannelParams) -> Regime:
    """Map a channel to its operating regime.

    Ties resolve with precedence NoiseLimited > Weak > StrongCase1 >
    StrongCase2 > StrongCase3 (all regime boundaries are non-strict).
    """
    p, a = params.p, params.a
    if a * p <= 1.0:
        return Regime.NOISE_LIMITED
    if a <= 1.0:
        return Regime.WEAK
    if p <= 1.0:
        return Regime.STRONG_CASE_1
    if a <= p:
        return Regime.STRONG_CASE_2
    return Regime.STRONG_CASE_3
