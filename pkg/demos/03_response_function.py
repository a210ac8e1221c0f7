"""The closed-form response: excitation vs de-excitation, the degenerate
two-timescale point, and saturation along the coupled window."""

import math

from circular_otto import lorentz_gamma, pole_timescale, response

SQRT12 = math.sqrt(12.0)

print("=== response at T = 1 for a range of accelerations ===")
print(f"{'a':>8} {'b = sqrt12/a':>13} {'F(+1, 1)':>12} {'F(-1, 1)':>12} {'offset/ (ET/8)':>15}")
for accel in (0.5, 1.0, SQRT12, 6.0, 20.0):
    up = response(1.0, 1.0, accel)
    down = response(-1.0, 1.0, accel)
    print(f"{accel:8.3f} {pole_timescale(accel):13.4f} {up:12.6f} {down:12.6f}"
          f" {(down - up) / (1.0 / 8.0):15.6f}")

print("\nDe-excitation always exceeds excitation by exactly E T / 8.")

print("\n=== the b = T degenerate point is regular ===")
for offset in (1e-2, 1e-4, 1e-6, 0.0):
    b = 1.0 * (1.0 + offset)
    val = response(1.0, 1.0, SQRT12 / b)
    print(f"  b/T - 1 = {offset:8.0e}:  F = {val:.10f}")
print(f"  analytic limit e^-1 * 4 / 32 = {math.exp(-1.0) * 4.0 / 32.0:.10f}")

print("\n=== saturation along the coupled window T = pi gamma v / a ===")
v = 0.999
g = lorentz_gamma(v)
r = math.pi * g * v / SQRT12
plateau = (1.0 + r + r * r) / (16.0 * (1.0 + r))
for accel in (15.0, 50.0, 200.0, 1000.0, 1e5):
    duration = math.pi * g * v / accel
    print(f"  a = {accel:8.0f}:  F(1, T(a)) = {response(1.0, duration, accel):.6f}")
print(f"  plateau (1 + r + r^2) / (16 (1 + r)) = {plateau:.6f}")
print(f"  large-r shorthand pi gamma v / (16 sqrt12) = {math.pi * g * v / (16.0 * SQRT12):.6f}")
