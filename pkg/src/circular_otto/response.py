"""Closed-form response of a windowed two-level detector in circular motion.

In the ultra-relativistic regime the vacuum correlator seen by the detector
has two intrinsic timescales: the Lorentzian window width ``T`` and the
correlation decay time ``b = sqrt(12) / a`` set by the centripetal
acceleration ``a``. Closing the response integral in the complex plane
leaves one simple pole per timescale, and for a negative energy gap an
extra double pole at the regulator, so the response is elementary:

    excitation   (E >= 0):  F(E, T) = [b^2 e^{-E T} - (T^3 / b) e^{-E b}]
                                       / (16 (b^2 - T^2))
    de-excitation (E > 0):  F(-E, T) = F(E, T) + E T / 8

Values are per unit squared detector-field coupling.

When the two timescales collide (b = T, i.e. a = sqrt(12)/T) the generic
expression is 0/0; within a narrow relative window the merged double-pole
limit e^{-E b} (E b + 3) / 32 is returned instead. Everything here is
cross-checked against direct numerical integration in
:mod:`circular_otto.quadrature`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Relative half-width of the window around b = T inside which the merged
#: double-pole limit replaces the generic two-pole expression.
POLE_DEGENERACY_RTOL = 1e-6

_SQRT12 = math.sqrt(12.0)


def pole_timescale(accel: float) -> float:
    """Correlation decay time b = sqrt(12) / a of the circular vacuum."""
    if not accel > 0.0:
        raise ValueError(f"acceleration must be positive, got {accel!r}")
    return _SQRT12 / accel


@dataclass(frozen=True)
class ResponseQuery:
    """Argument triple of the response function F(energy, duration) at ``accel``.

    ``energy`` is the signed detector gap (positive: excitation), ``duration``
    the Lorentzian window timescale, ``accel`` the centripetal acceleration.
    """

    energy: float
    duration: float
    accel: float

    def __post_init__(self) -> None:
        if not self.duration > 0.0:
            raise ValueError(f"duration must be positive, got {self.duration!r}")
        if not self.accel > 0.0:
            raise ValueError(f"acceleration must be positive, got {self.accel!r}")

    @property
    def pole_scale(self) -> float:
        return pole_timescale(self.accel)


def _double_pole_limit(energy: float, b: float) -> float:
    # b = T limit of the generic expression (L'Hopital in b).
    return math.exp(-energy * b) * (energy * b + 3.0) / 32.0


def response_positive(energy: float, duration: float, accel: float) -> float:
    """Excitation response F(E, T) for a nonnegative gap.

    Positive on every parameter range this package exercises; decays in both
    E*T and E*b. The degenerate point b = T returns the analytic double-pole
    limit e^{-E b} (E b + 3) / 32.
    """
    if energy < 0.0:
        raise ValueError(f"gap must be nonnegative here, got {energy!r}")
    if not duration > 0.0:
        raise ValueError(f"duration must be positive, got {duration!r}")
    b = pole_timescale(accel)
    if abs(b - duration) <= POLE_DEGENERACY_RTOL * max(b, duration):
        return _double_pole_limit(energy, b)
    num = b * b * math.exp(-energy * duration) - (duration ** 3 / b) * math.exp(-energy * b)
    return num / (16.0 * (b * b - duration * duration))


def response_negative(energy: float, duration: float, accel: float) -> float:
    """De-excitation response F(-|E|, T) = F(|E|, T) + |E| T / 8.

    ``energy`` is the gap magnitude. The linear offset is the double-pole
    contribution of the regulator, present only on this branch; it makes
    de-excitation always outpace excitation by exactly E T / 8.
    """
    return response_positive(energy, duration, accel) + energy * duration / 8.0


def response(energy: float, duration: float, accel: float) -> float:
    """Signed-gap dispatch: ``response_positive`` for E >= 0, else
    ``response_negative`` at |E|. Continuous at E = 0."""
    if energy >= 0.0:
        return response_positive(energy, duration, accel)
    return response_negative(-energy, duration, accel)
