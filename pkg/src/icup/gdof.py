"""Generalized degrees of freedom of the channel.

d(alpha, beta) is the high-SNR limit of the sum-rate normalized by C(SNR),
with alpha = log(INR)/log(SNR) and beta = C12/C(P).  The closed form is a
five-branch piecewise function of alpha, continuous at the breakpoints
1/2, 2/3, 1 and 2 and nondecreasing in beta.  The numeric estimate
evaluates the rate machinery at finite P and returns the achievable and
bound ratios for sandwiching the formula value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channel import ChannelParams, cap
from .gaps import gap_report


@dataclass(frozen=True)
class GdofPoint:
    alpha: float
    beta: float
    d_formula: float
    d_numeric_ach: float | None = None
    d_numeric_ub: float | None = None


def gdof_formula(alpha: float, beta: float) -> float:
    """Closed-form optimal GDOF."""
    if alpha < 0.0 or beta < 0.0:
        raise ValueError("alpha and beta must be >= 0")
    if alpha < 0.5:
        return 2.0 - 2.0 * alpha + min(alpha, beta)
    if alpha < 2.0 / 3.0:
        return min(2.0 - alpha, 2.0 * alpha + min(alpha, beta))
    if alpha < 1.0:
        return 2.0 - alpha
    if alpha < 2.0:
        return alpha
    return min(2.0 + beta, alpha)


def gdof_numeric(alpha: float, beta: float, p: float) -> tuple[float, float]:
    """Achievable and bound ratios at finite P: a = P**(alpha-1), C12 = beta*C(P)."""
    if p <= 1.0:
        raise ValueError("need P > 1 so that alpha is well defined")
    if alpha < 0.0 or beta < 0.0:
        raise ValueError("alpha and beta must be >= 0")
    cp = cap(p)
    params = ChannelParams(p=p, a=p ** (alpha - 1.0), c12=beta * cp)
    report = gap_report(params)
    return report.achievable / cp, report.upper / cp


def gdof_curve(
    beta: float,
    alpha_min: float,
    alpha_max: float,
    step: float,
    numeric_p: float | None = None,
) -> list[GdofPoint]:
    """Ordered GDOF table over [alpha_min, alpha_max] with the given step."""
    if alpha_min < 0.0 or alpha_max < alpha_min:
        raise ValueError("need 0 <= alpha_min <= alpha_max")
    if step <= 0.0:
        raise ValueError("step must be > 0")
    count = int((alpha_max - alpha_min) / step + 1e-9) + 1
    points = []
    for i in range(count):
        alpha = alpha_min + i * step
        d = gdof_formula(alpha, beta)
        if numeric_p is not None:
            ach, ub = gdof_numeric(alpha, beta, numeric_p)
            points.append(GdofPoint(alpha, beta, d, ach, ub))
        else:
            points.append(GdofPoint(alpha, beta, d))
    return points
