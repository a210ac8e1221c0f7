"""Tour of the circular-motion kinematics: how speed and radius set the
proper acceleration, the half-circle time, and the interaction window."""

import math

from circular_otto import CircularMotion, lorentz_gamma, switching, trajectory_point, unruh_temperature

print("=== relativistic circular motion ===\n")

for v in (0.5, 0.9, 0.99, 0.999):
    g = lorentz_gamma(v)
    print(f"v = {v:5.3f}   gamma = {g:8.4f}")

print("\nA detector at v = 0.999 on circles sized for three accelerations:")
print(f"{'a':>8} {'radius':>10} {'half-circle T':>14} {'Unruh temp':>12}")
for accel in (15.0, 100.0, 500.0):
    m = CircularMotion.from_acceleration(0.999, accel)
    print(
        f"{accel:8.1f} {m.radius:10.4f} {m.half_circle_duration:14.4f}"
        f" {unruh_temperature(accel):12.4f}"
    )

m = CircularMotion.from_acceleration(0.999, 15.0)
print(f"\nidentity check: a * T = {m.acceleration * m.half_circle_duration:.6f}"
      f"  vs  pi * gamma * v = {math.pi * m.gamma * m.v:.6f}")

print("\nworldline samples over one half circle (t, x, y):")
for k in range(5):
    tau = k * m.half_circle_duration / 4.0
    t, x, y, _ = trajectory_point(tau, m)
    print(f"  tau = {tau:7.3f}:  t = {t:8.2f}  x = {x:8.3f}  y = {y:8.3f}")

print("\nLorentzian window for the a = 15 half circle (T = %.3f):" % m.half_circle_duration)
for frac in (0.0, 0.5, 1.0, 2.0):
    tau = frac * m.half_circle_duration
    print(f"  w({frac:3.1f} T) = {switching(tau, m.half_circle_duration):.4f}")
