"""Closed form vs the regulated-quadrature route, point by point.

The oracle never touches the residue algebra: it integrates the reduced
response integrand at several regulators and extrapolates eta -> 0, and the
window reduction itself is validated as a separate double-vs-single
integral identity."""

import math
import time

from circular_otto import (
    ResponseQuery,
    lorentzian_reduction_check,
    response,
    response_extrapolated,
)

SQRT12 = math.sqrt(12.0)

cases = [
    (1.0, 1.0, SQRT12 / 2.0),
    (-1.0, 1.0, SQRT12 / 2.0),
    (0.5, 2.0, 1.0),
    (2.0, 0.4, 30.0),
    (0.0, 1.0, SQRT12),   # the degenerate b = T point
]

print(f"{'E':>6} {'T':>6} {'a':>8} {'closed form':>14} {'oracle':>14} {'rel dev':>10}")
t0 = time.monotonic()
for energy, duration, accel in cases:
    closed = response(energy, duration, accel)
    oracle = response_extrapolated(ResponseQuery(energy, duration, accel))
    rel = abs(closed - oracle.value) / abs(closed)
    print(f"{energy:6.2f} {duration:6.2f} {accel:8.3f} {closed:14.8f}"
          f" {oracle.value:14.8f} {rel:10.2e}")
print(f"({time.monotonic() - t0:.1f}s)")

print("\nwindow-reduction identity, double integral vs pi T^3/4 single integral:")
for label, kernel in (("exp(-m^2)", lambda m: math.exp(-m * m)),
                      ("1/(1+m^2)", lambda m: 1.0 / (1.0 + m * m))):
    double, single = lorentzian_reduction_check(kernel, 2.0)
    print(f"  g = {label}:  {double:.10f}  vs  {single:.10f}"
          f"  (rel {abs(double - single) / single:.1e})")
