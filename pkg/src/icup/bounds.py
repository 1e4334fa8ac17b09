"""Sum-capacity upper bounds.

Weak regime (a <= 1): the exact cognitive-channel sum-capacity (maximized
over the genie correlation eta), its closed-form enlargement, and a
genie-aided bound carrying an additive C12 term.  Strong regime (a >= 1):
the min of the cut-set bound C12 + 2C(P) and the cognitive-channel bound
C(bP).  The genie-aided bound is applied in every regime; taking the min of
valid bounds is always sound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .channel import ChannelParams, PreconditionError, b_gain, cap


@dataclass(frozen=True)
class BoundReport:
    """All applicable bounds plus the binding one.

    Weak-only fields (ub1, ub_cgrc_exact) and the strong-only field (ub3)
    are None outside their regime; at a = 1 both families are filled.
    """

    ub1: float | None
    ub_cgrc_exact: float | None
    ub2: float
    ub3: float | None
    best: float
    best_label: str


def ub_cgrc_exact(params: ChannelParams) -> float:
    """Cognitive-channel sum-capacity for a <= 1, maximized over eta.

    The objective is a sum of a decreasing and an increasing term in eta;
    a 1001-point grid seeds a golden-section refinement to width 1e-10.
    """
    if params.a > 1.0:
        raise PreconditionError("exact cognitive-channel bound needs a <= 1")
    return float(_kernels.cgrc_eta_max(params.p, params.a))


def ub_weak_enlarged(params: ChannelParams) -> float:
    """Closed-form enlargement of the cognitive-channel bound (a <= 1)."""
    if params.a > 1.0:
        raise PreconditionError("enlarged weak bound needs a <= 1")
    p, a = params.p, params.a
    return cap(b_gain(a) * p) + 0.5 * math.log2((1.0 + p) / (1.0 + a * p))


def ub_genie(params: ChannelParams) -> float:
    """Genie-aided bound: C12 + log2((P + (aP+1)^2)/(aP+1))."""
    p, a = params.p, params.a
    inr1 = a * p + 1.0
    return params.c12 + math.log2((p + inr1 * inr1) / inr1)


def ub_strong(params: ChannelParams) -> float:
    """min{C12 + 2C(P), C(bP)} for the strong-interference regime (a >= 1)."""
    if params.a < 1.0:
        raise PreconditionError("strong-regime bound needs a >= 1")
    return min(params.c12 + 2.0 * cap(params.p), cap(b_gain(params.a) * params.p))


def best_bound(params: ChannelParams) -> BoundReport:
    """Minimum applicable bound; at a = 1 both bound families apply."""
    a = params.a
    ub2 = ub_genie(params)
    ub1 = cgrc = ub3 = None
    candidates: list[tuple[str, float]] = []
    if a <= 1.0:
        cgrc = ub_cgrc_exact(params)
        ub1 = ub_weak_enlarged(params)
        candidates += [("cgrc-exact", cgrc), ("weak-enlarged", ub1)]
    candidates.append(("genie", ub2))
    if a >= 1.0:
        ub3 = ub_strong(params)
        candidates.append(("strong", ub3))
    best_label, best = min(candidates, key=lambda kv: kv[1])
    return BoundReport(
        ub1=ub1, ub_cgrc_exact=cgrc, ub2=ub2, ub3=ub3,
        best=best, best_label=best_label,
    )
