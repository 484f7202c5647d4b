"""Complex electrical power and its mapping onto quadratic-map parameters.

AC power is the complex quantity S = P + jQ: real power P from resistive
behavior and reactive power Q from inductive or capacitive behavior.
Signs follow the passive load convention -- P > 0 consumes, P < 0
supplies; Q > 0 is inductive (current lags voltage), Q < 0 capacitive
(current leads).  The sign pattern of (P, Q) places S in quadrant I-IV of
the complex power plane; zero components land on an axis or the origin
and are kept as distinct cases rather than folded into a quadrant.

A power point becomes a parameter c of the map z -> z**2 + c either
directly (P, Q read as complex coordinates) or normalized against the
positive-axis extents of the connectedness locus, 0.25 on the real axis
and 0.63 on the imaginary axis by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .iteration import require_finite

DEFAULT_REAL_AXIS_LIMIT = 0.25
DEFAULT_IMAG_AXIS_LIMIT = 0.63

LAGGING = "lagging"
LEADING = "leading"
UNITY = "unity"
PURELY_REACTIVE = "purely-reactive"


@dataclass(frozen=True)
class PowerPhasor:
    """Signed real power P (watts) and reactive power Q (vars)."""

    p: float
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and math.isfinite(self.q)):
            raise ValueError(f"power components must be finite, got p={self.p!r}, q={self.q!r}")

    @property
    def apparent_magnitude(self) -> float:
        """|S| = sqrt(P**2 + Q**2); zero only at the origin."""
        return math.hypot(self.p, self.q)


class Quadrant(str, Enum):
    """Location of S in the complex power plane, axes and origin included."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    POSITIVE_REAL_AXIS = "PositiveRealAxis"
    NEGATIVE_REAL_AXIS = "NegativeRealAxis"
    POSITIVE_IMAG_AXIS = "PositiveImagAxis"
    NEGATIVE_IMAG_AXIS = "NegativeImagAxis"
    ORIGIN = "Origin"


def classify_quadrant(s: PowerPhasor) -> Quadrant:
    """Sign-pattern classification of (P, Q), with explicit axis/origin cases."""
    if s.p > 0 and s.q > 0:
        return Quadrant.I
    if s.p < 0 and s.q > 0:
        return Quadrant.II
    if s.p < 0 and s.q < 0:
        return Quadrant.III
    if s.p > 0 and s.q < 0:
        return Quadrant.IV
    if s.p > 0:
        return Quadrant.POSITIVE_REAL_AXIS
    if s.p < 0:
        return Quadrant.NEGATIVE_REAL_AXIS
    if s.q > 0:
        return Quadrant.POSITIVE_IMAG_AXIS
    if s.q < 0:
        return Quadrant.NEGATIVE_IMAG_AXIS
    return Quadrant.ORIGIN


class PowerFactor(NamedTuple):
    value: float
    character: str


def power_factor(s: PowerPhasor) -> PowerFactor:
    """P / |S| with its load character.

    The value carries the sign of P (negative for sources) so quadrant
    information stays recoverable; lead/lag is reported separately.  A
    purely reactive load (P = 0) is its own character rather than a
    degenerate lag/lead.
    """
    if s.p == 0 and s.q == 0:
        raise ValueError("power factor undefined at origin")
    value = s.p / s.apparent_magnitude
    if s.p == 0:
        character = PURELY_REACTIVE
    elif s.q > 0:
        character = LAGGING
    elif s.q < 0:
        character = LEADING
    else:
        character = UNITY
    return PowerFactor(value, character)


@dataclass(frozen=True)
class ScalingConfig:
    """How power coordinates become parameter-plane coordinates.

    direct mode reads (P, Q) as the parameter unchanged; normalized mode
    maps the per-axis base values onto the positive-axis extents c_x, c_y.
    Each axis uses the single precomputed factor c/base for both the
    forward and inverse map, which keeps round trips within one ulp.
    """

    mode: str = "direct"
    c_x: float = DEFAULT_REAL_AXIS_LIMIT
    c_y: float = DEFAULT_IMAG_AXIS_LIMIT
    p_base: float = 1.0
    q_base: float = 1.0

    def __post_init__(self):
        if self.mode not in ("direct", "normalized"):
            raise ValueError(f"mode must be 'direct' or 'normalized', got {self.mode!r}")
        for name in ("c_x", "c_y", "p_base", "q_base"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a finite positive value, got {v!r}")

    @property
    def real_factor(self) -> float:
        return self.c_x / self.p_base

    @property
    def imag_factor(self) -> float:
        return self.c_y / self.q_base


DIRECT = ScalingConfig()


def to_parameter(s: PowerPhasor, sc: ScalingConfig = DIRECT) -> complex:
    """Map a power point onto the parameter plane of z -> z**2 + c."""
    if sc.mode == "direct":
        return complex(s.p, s.q)
    return complex(s.p * sc.real_factor, s.q * sc.imag_factor)


def from_parameter(c: complex, sc: ScalingConfig = DIRECT) -> PowerPhasor:
    """Inverse of to_parameter for the same scaling configuration."""
    c = require_finite(c, "c")
    if sc.mode == "direct":
        return PowerPhasor(c.real, c.imag)
    return PowerPhasor(c.real / sc.real_factor, c.imag / sc.imag_factor)
