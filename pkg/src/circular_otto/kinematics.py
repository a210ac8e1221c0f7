"""Relativistic kinematics of a detector on a circular arc.

Natural units are used throughout the package: hbar = c = k_B = 1, so
speeds are fractions of the speed of light and energies, accelerations
and inverse times all share one unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

HBAR = 1.0
C = 1.0
K_B = 1.0


def lorentz_gamma(v: float) -> float:
    """Lorentz factor 1/sqrt(1 - v^2), monotone increasing on 0 <= v < 1."""
    if not 0.0 <= v < 1.0:
        raise ValueError(f"speed must satisfy 0 <= v < 1, got {v!r}")
    return 1.0 / math.sqrt(1.0 - v * v)


@dataclass(frozen=True)
class CircularMotion:
    """Uniform circular motion at speed ``v`` on a circle of radius ``radius``.

    Derived quantities satisfy, up to roundoff,

        acceleration * half_circle_duration == pi * gamma * v
        radius == acceleration * half_circle_duration**2 / pi**2

    Either the radius or the centripetal acceleration may be prescribed;
    see :meth:`from_acceleration` for the latter.
    """

    v: float
    radius: float

    def __post_init__(self) -> None:
        if not 0.0 < self.v < 1.0:
            raise ValueError(f"speed must satisfy 0 < v < 1, got {self.v!r}")
        if not self.radius > 0.0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")

    @classmethod
    def from_acceleration(cls, v: float, accel: float) -> "CircularMotion":
        """Motion with prescribed centripetal acceleration, radius = gamma^2 v^2 / a."""
        if not accel > 0.0:
            raise ValueError(f"acceleration must be positive, got {accel!r}")
        g = lorentz_gamma(v)
        return cls(v, g * g * v * v / accel)

    @property
    def gamma(self) -> float:
        return lorentz_gamma(self.v)

    @property
    def acceleration(self) -> float:
        """Centripetal proper acceleration gamma^2 v^2 / R."""
        g = self.gamma
        return g * g * self.v * self.v / self.radius

    @property
    def angular_velocity(self) -> float:
        """Angular velocity d(theta)/d(tau) = v / R with respect to proper time."""
        return self.v / self.radius

    @property
    def half_circle_duration(self) -> float:
        """Proper time pi R / (gamma v) spent on one half revolution."""
        return math.pi * self.radius / (self.gamma * self.v)


def trajectory_point(tau: float, motion: CircularMotion) -> tuple[float, float, float, float]:
    """Lab-frame event (t, x, y, z) of the detector at proper time ``tau``.

    The worldline is t = gamma tau, x = R cos(v gamma tau / R),
    y = R sin(v gamma tau / R), z = 0, so x^2 + y^2 = R^2 identically.
    """
    g = motion.gamma
    phase = motion.v * g * tau / motion.radius
    return (
        g * tau,
        motion.radius * math.cos(phase),
        motion.radius * math.sin(phase),
        0.0,
    )


def switching(tau: float, duration: float) -> float:
    """Lorentzian window (T/2)^2 / (tau^2 + (T/2)^2) of timescale ``duration``.

    Even in ``tau``, peaks at 1 for tau = 0 and equals 1/2 at tau = +-T/2.
    """
    if not duration > 0.0:
        raise ValueError(f"window timescale must be positive, got {duration!r}")
    half = 0.5 * duration
    return half * half / (tau * tau + half * half)


def unruh_temperature(accel: float) -> float:
    """Thermal temperature a / (2 pi) associated with proper acceleration ``accel``."""
    if accel < 0.0:
        raise ValueError(f"acceleration must be nonnegative, got {accel!r}")
    return accel / (2.0 * math.pi)
