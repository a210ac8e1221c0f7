"""Otto-cycle thermodynamics of the circularly moving detector.

The working substance is a two-level detector that alternates between two
half-circle arcs. On the tighter arc (radius ``r_hot``, acceleration
``a_hot``) the vacuum acts as the hot bath and the detector carries the
widened gap ``e2``; on the wider arc it carries ``e1`` and sees the cold
bath. The two free-flight legs change the gap adiabatically.

All transition probabilities, heats and works that involve the detector's
coupling to the field are reported per unit squared coupling. The stroke
entries ``w1`` and the bare-population part of ``w3`` are set by the
prepared population alone and carry no coupling factor; they cancel in the
totals, so energy conservation w_total + q_total = 0 holds identically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kinematics import CircularMotion, lorentz_gamma
from .response import response_negative, response_positive


@dataclass(frozen=True)
class CycleConfig:
    """Full engine specification.

    The hot arc must be the tighter one (``r_hot < r_cold``, equivalently
    ``a_hot > a_cold``) and the gaps must satisfy 0 < e1 <= e2. Equal gaps
    describe an idling cycle with zero work; the engine regime proper has
    e1 < e2. ``population`` is an optional prepared excited-state
    population; when absent, operations default to the cyclic value that
    lets the detector return to its initial state after one cycle.
    """

    v: float
    r_hot: float
    r_cold: float
    e1: float
    e2: float
    population: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.v < 1.0:
            raise ValueError(f"speed must satisfy 0 < v < 1, got {self.v!r}")
        if not 0.0 < self.r_hot < self.r_cold:
            raise ValueError(
                f"need 0 < r_hot < r_cold (hot arc tighter), got {self.r_hot!r}, {self.r_cold!r}"
            )
        if not 0.0 < self.e1 <= self.e2:
            raise ValueError(f"gaps must satisfy 0 < e1 <= e2, got {self.e1!r}, {self.e2!r}")
        if self.population is not None and not 0.0 <= self.population <= 1.0:
            raise ValueError(f"population must lie in [0, 1], got {self.population!r}")

    @classmethod
    def from_accelerations(
        cls,
        v: float,
        a_hot: float,
        a_cold: float,
        e1: float,
        e2: float,
        population: float | None = None,
    ) -> "CycleConfig":
        """Build from the two centripetal accelerations, a_hot > a_cold > 0."""
        if not a_hot > a_cold > 0.0:
            raise ValueError(f"need a_hot > a_cold > 0, got {a_hot!r}, {a_cold!r}")
        g2v2 = lorentz_gamma(v) ** 2 * v * v
        return cls(v, g2v2 / a_hot, g2v2 / a_cold, e1, e2, population)

    @property
    def gamma(self) -> float:
        return lorentz_gamma(self.v)

    @property
    def hot(self) -> CircularMotion:
        return CircularMotion(self.v, self.r_hot)

    @property
    def cold(self) -> CircularMotion:
        return CircularMotion(self.v, self.r_cold)

    @property
    def hot_contact(self) -> tuple[float, float, float]:
        """(gap, window timescale, acceleration) of the hot-bath stroke."""
        m = self.hot
        return (self.e2, m.half_circle_duration, m.acceleration)

    @property
    def cold_contact(self) -> tuple[float, float, float]:
        """(gap, window timescale, acceleration) of the cold-bath stroke."""
        m = self.cold
        return (self.e1, m.half_circle_duration, m.acceleration)


@dataclass(frozen=True)
class StrokeLedger:
    """Per-stroke heats and works plus their totals.

    q1 = q3 = 0 (adiabatic strokes) and w2 = w4 = 0 (bath contacts) by
    construction; w_total = -q_total always.
    """

    q1: float
    w1: float
    q2: float
    w2: float
    q3: float
    w3: float
    q4: float
    w4: float
    w_total: float
    q_total: float


def transition_probability(
    population: float, energy: float, duration: float, accel: float
) -> float:
    """Population change of one bath contact, per unit squared coupling.

    Equals (1 - p) F(E, T) - p F(-E, T): stimulated excitation out of the
    ground-state fraction minus decay of the excited fraction. At p = 1/2
    this collapses to -E T / 16 exactly.
    """
    if not 0.0 <= population <= 1.0:
        raise ValueError(f"population must lie in [0, 1], got {population!r}")
    if not energy > 0.0:
        raise ValueError(f"gap must be positive, got {energy!r}")
    up = response_positive(energy, duration, accel)
    down = response_negative(energy, duration, accel)
    return (1.0 - population) * up - population * down


def cyclic_population(config: CycleConfig) -> float:
    """Prepared population for which the two contacts cancel over a cycle.

    Solves delta_p_hot(p) + delta_p_cold(p) = 0, giving
    p = N / D with N the sum of the two excitation responses and D the sum
    of all four responses. Lies strictly below 1/2 because de-excitation
    always outpaces excitation.
    """
    e2, t_hot, a_hot = config.hot_contact
    e1, t_cold, a_cold = config.cold_contact
    up = response_positive(e2, t_hot, a_hot) + response_positive(e1, t_cold, a_cold)
    down = response_negative(e2, t_hot, a_hot) + response_negative(e1, t_cold, a_cold)
    total = up + down
    if total == 0.0:
        raise ValueError(f"degenerate configuration: vanishing response sum for {config}")
    return up / total


def _resolve_population(config: CycleConfig, population: float | None) -> float:
    if population is not None:
        if not 0.0 <= population <= 1.0:
            raise ValueError(f"population must lie in [0, 1], got {population!r}")
        return population
    if config.population is not None:
        return config.population
    return cyclic_population(config)


def hot_transition(config: CycleConfig, population: float | None = None) -> float:
    """Hot-contact population change per unit squared coupling."""
    p = _resolve_population(config, population)
    e2, t_hot, a_hot = config.hot_contact
    return transition_probability(p, e2, t_hot, a_hot)


def cold_transition(config: CycleConfig, population: float | None = None) -> float:
    """Cold-contact population change per unit squared coupling."""
    p = _resolve_population(config, population)
    e1, t_cold, a_cold = config.cold_contact
    return transition_probability(p, e1, t_cold, a_cold)


def stroke_ledger(config: CycleConfig, population: float | None = None) -> StrokeLedger:
    """Heats and works of the four strokes at a given prepared population.

    w1 = p (e2 - e1) is the gap-widening work on the detector, q2 = e2 dpH
    the heat drawn from the hot contact, w3 = -(p + dpH)(e2 - e1) the power
    stroke, q4 = -e1 dpH the heat dumped to the cold contact (using the
    cyclic condition dpC = -dpH for the totals bookkeeping).
    """
    p = _resolve_population(config, population)
    dp_hot = hot_transition(config, p)
    gap = config.e2 - config.e1
    w1 = p * gap
    q2 = config.e2 * dp_hot
    w3 = -(p + dp_hot) * gap
    q4 = -config.e1 * dp_hot
    return StrokeLedger(
        q1=0.0,
        w1=w1,
        q2=q2,
        w2=0.0,
        q3=0.0,
        w3=w3,
        q4=q4,
        w4=0.0,
        w_total=w1 + w3,
        q_total=q2 + q4,
    )


def extracted_work(config: CycleConfig) -> float:
    """Net work output per cycle at the cyclic population, per squared coupling.

    Equals dpH(p_cyc) * (e2 - e1); positive exactly when the contacts make
    the hot arc effectively hotter than the gap ratio demands
    (a_hot / a_cold > e2 / e1 for the coupled half-circle windows).
    """
    return hot_transition(config, cyclic_population(config)) * (config.e2 - config.e1)


def efficiency(config: CycleConfig) -> float:
    """Work output per unit input heat, 1 - e1/e2.

    Depends only on the gap ratio, not on speed, radii or accelerations.
    """
    if not config.e2 > 0.0:
        raise ValueError(f"e2 must be positive, got {config.e2!r}")
    return 1.0 - config.e1 / config.e2
