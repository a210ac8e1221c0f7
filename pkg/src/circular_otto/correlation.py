"""Vacuum two-point correlators along the circular worldline.

Two forms are provided. ``wightman_circular_exact`` evaluates the massless-field
vacuum correlator on the exact circular trajectory; its denominator mixes
the lab-frame time lapse with the chord length between the two trajectory
points. ``wightman_ultra`` is the ultra-relativistic (gamma >> 1) reduction
in which the denominator collapses to dtau^2 + a^2 dtau^4 / 12, leaving the
centripetal acceleration as the only trajectory parameter.

Both accept the usual small imaginary time shift ``eta > 0`` that displaces
the coincidence singularity off the real axis; physical values are the
eta -> 0+ limit. The ultra-relativistic form also admits eta = 0 away from
coincidence, where it is real.
"""

from __future__ import annotations

import math

from .kinematics import CircularMotion

_FOUR_PI_SQ = 4.0 * math.pi * math.pi


def wightman_circular_exact(dtau: float, motion: CircularMotion, eta: float) -> complex:
    """Exact circular-trajectory correlator at proper-time difference ``dtau``.

    Returns -1 / (4 pi^2) / ((gamma dtau - i eta)^2 - 4 R^2 sin^2(v gamma dtau / 2R)).
    Finite for every real ``dtau`` as long as ``eta > 0``.
    """
    if not eta > 0.0:
        raise ValueError(f"regulator must be positive, got {eta!r}")
    g = motion.gamma
    half_angle = motion.v * g * dtau / (2.0 * motion.radius)
    chord = 2.0 * motion.radius * math.sin(half_angle)
    den = (g * dtau - 1j * eta) ** 2 - chord * chord
    return -1.0 / (_FOUR_PI_SQ * den)


def wightman_ultra(dtau: float, accel: float, eta: float = 0.0) -> complex:
    """Ultra-relativistic correlator -1 / (4 pi^2) / ((dtau - i eta)^2 + a^2 dtau^4 / 12).

    With ``eta = 0`` the value is real and even in ``dtau``; the coincidence
    point dtau = 0 then divides by zero and raises.
    """
    if not accel > 0.0:
        raise ValueError(f"acceleration must be positive, got {accel!r}")
    if eta < 0.0:
        raise ValueError(f"regulator must be nonnegative, got {eta!r}")
    den = (dtau - 1j * eta) ** 2 + accel * accel * dtau ** 4 / 12.0
    return -1.0 / (_FOUR_PI_SQ * den)
