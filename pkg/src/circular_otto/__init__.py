"""Quantum Otto engine driven by a detector in ultra-relativistic circular motion.

The package evaluates the response of a two-level detector that couples to
the massless vacuum through a Lorentzian window while riding a circular
arc, both in closed form (:mod:`circular_otto.response`) and by direct
regulated quadrature (:mod:`circular_otto.quadrature`), and builds the full
Otto-cycle thermodynamics on top (:mod:`circular_otto.engine`): transition
probabilities, the cyclic population, per-stroke heat/work ledgers, work
output and efficiency. :mod:`circular_otto.sweep` runs deterministic
parameter sweeps to CSV; ``python -m circular_otto`` exposes everything on
the command line.

All coupling-dependent quantities are reported per unit squared coupling;
natural units hbar = c = k_B = 1 throughout.
"""

from .correlation import wightman_circular_exact, wightman_ultra
from .engine import (
    CycleConfig,
    StrokeLedger,
    cold_transition,
    cyclic_population,
    efficiency,
    extracted_work,
    hot_transition,
    stroke_ledger,
    transition_probability,
)
from .kinematics import (
    CircularMotion,
    lorentz_gamma,
    switching,
    trajectory_point,
    unruh_temperature,
)
from .quadrature import (
    ExtrapolatedResponse,
    ExtrapolationUnstableError,
    QuadratureConvergenceError,
    QuadratureResult,
    QuadratureSpec,
    lorentzian_reduction_check,
    response_extrapolated,
    response_quadrature,
)
from .response import (
    POLE_DEGENERACY_RTOL,
    ResponseQuery,
    pole_timescale,
    response,
    response_negative,
    response_positive,
)
from .sweep import (
    ConfigError,
    OracleMismatchError,
    SweepGrid,
    SweepRow,
    SweepSpec,
    emit_csv,
    preset,
    run_sweep,
)

__all__ = [
    "CircularMotion",
    "ConfigError",
    "CycleConfig",
    "ExtrapolatedResponse",
    "ExtrapolationUnstableError",
    "OracleMismatchError",
    "POLE_DEGENERACY_RTOL",
    "QuadratureConvergenceError",
    "QuadratureResult",
    "QuadratureSpec",
    "ResponseQuery",
    "StrokeLedger",
    "SweepGrid",
    "SweepRow",
    "SweepSpec",
    "cold_transition",
    "cyclic_population",
    "efficiency",
    "emit_csv",
    "extracted_work",
    "hot_transition",
    "lorentz_gamma",
    "lorentzian_reduction_check",
    "pole_timescale",
    "preset",
    "response",
    "response_extrapolated",
    "response_negative",
    "response_positive",
    "response_quadrature",
    "run_sweep",
    "stroke_ledger",
    "switching",
    "trajectory_point",
    "transition_probability",
    "unruh_temperature",
    "wightman_circular_exact",
    "wightman_ultra",
]
