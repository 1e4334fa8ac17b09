"""Brute-force region oracle for the weak-regime compound MAC.

Builds the 3-variable rate polytope over (R_w1, R_w2, R_v) from the seven
MAC constraints at each receiver plus nonnegativity, and maximizes a linear
objective by exact vertex enumeration (every triple of constraint
hyperplanes).  Used to certify the closed-form min(R_B1, R_B2, R_B3)
independently of the formulas it checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .channel import ChannelParams
from .weak import PowerAllocation, mac_region


class LinearConstraint(NamedTuple):
    """coeffs . (R_w1, R_w2, R_v) <= rhs"""

    coeffs: tuple[float, float, float]
    rhs: float


@dataclass(frozen=True)
class PolytopeResult:
    optimum: float
    vertex: np.ndarray


def build_constraints(
    pa: PowerAllocation, params: ChannelParams
) -> list[LinearConstraint]:
    """All 17 constraints: 7 per receiver plus 3 nonnegativity rows.

    Duplicates arising from the symmetric allocation are kept; the vertex
    enumeration handles redundancy naturally.
    """
    mac = mac_region(pa, params)
    out: list[LinearConstraint] = []
    for own, cross in (((1.0, 0.0), (0.0, 1.0)), ((0.0, 1.0), (1.0, 0.0))):
        out += [
            LinearConstraint((0.0, 0.0, 1.0), mac.r_v),
            LinearConstraint((*own, 0.0), mac.r_w_own),
            LinearConstraint((*cross, 0.0), mac.r_w_cross),
            LinearConstraint((1.0, 1.0, 0.0), mac.r_w_pair),
            LinearConstraint((*own, 1.0), mac.r_w_own_v),
            LinearConstraint((*cross, 1.0), mac.r_w_cross_v),
            LinearConstraint((1.0, 1.0, 1.0), mac.r_total),
        ]
    out += [
        LinearConstraint((-1.0, 0.0, 0.0), 0.0),
        LinearConstraint((0.0, -1.0, 0.0), 0.0),
        LinearConstraint((0.0, 0.0, -1.0), 0.0),
    ]
    return out


def maximize(
    constraints: Sequence[LinearConstraint],
    objective: Sequence[float] = (1.0, 1.0, 1.0),
) -> PolytopeResult:
    """Exact maximum of objective . x over the constraint polytope.

    Deterministic: ties between optimal vertices break lexicographically.
    """
    A = np.array([c.coeffs for c in constraints], dtype=np.float64)
    b = np.array([c.rhs for c in constraints], dtype=np.float64)
    opt, vertex = _kernels.vertex_enum_max(A, b, np.asarray(objective, dtype=np.float64))
    return PolytopeResult(optimum=float(opt), vertex=vertex)
