"""Sum-rate bounds, capacity gaps, and GDOF curves for the two-user
symmetric Gaussian interference channel with a unidirectional cooperative
link of capacity C12."""

from .bounds import (
    BoundReport,
    best_bound,
    ub_cgrc_exact,
    ub_genie,
    ub_strong,
    ub_weak_enlarged,
)
from .channel import (
    ChannelParams,
    DerivedParams,
    PreconditionError,
    Regime,
    b_gain,
    cap,
    classify,
    derive,
)
from .gaps import RateReport, Violation, gap_report, suite_checks, verify_suite
from .gdof import GdofPoint, gdof_curve, gdof_formula, gdof_numeric
from .oracle import LinearConstraint, PolytopeResult, build_constraints, maximize
from .strong import (
    SchemeLabel,
    capacity_condition_holds,
    noise_limited_rate,
    strong_rate,
)
from .weak import (
    PowerAllocation,
    SumBounds,
    UniversalRateTerms,
    full_coop_rate,
    gamma_pa,
    mac_region,
    optimize_gamma,
    sum_bounds,
    universal_pa,
    universal_rates,
    universal_sum_rate,
    weak_sum_rate,
)

__version__ = "0.1.0"
