"""Scalar kernels for the complex quadratic family z -> z**2 + c.

An orbit starts at some seed z_0 and repeatedly applies

    z_t = z_{t-1}**2 + c

in IEEE double precision.  It "escapes" at the first index t >= 1 whose
iterate satisfies |z_t| > bailout_radius *strictly*; radius 2 is the
smallest sufficient choice for this family (once |z| exceeds 2 the orbit
provably diverges, so a larger iterate can never return).  The test runs
after each update and never on the seed itself, which keeps a single code
path: a seed already outside the bailout escapes at index 1 because its
square only grows.

Magnitudes are compared squared (re**2 + im**2 against bailout**2) to
avoid square roots; for positive radii the comparison is identical.

Everything here is a pure function of its arguments.  Identical inputs
produce bitwise-identical outcomes, and the exact operation order

    re' = re*re - im*im + c.re
    im' = 2.0*re*im + c.im

is replayed verbatim by the vectorized grid kernels, so scalar and array
paths agree bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

BAILOUT_RADIUS = 2.0
RENDER_ITERATIONS = 500
CLASSIFY_ITERATIONS = 1000
MAX_ITERATION_BUDGET = 2**31 - 2  # escape indices are stored as int32 in grid fields


def require_finite(z: complex, name: str = "value") -> complex:
    """Return z as a complex number, rejecting NaN or infinite coordinates."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must have finite coordinates, got {z!r}")
    return z


@dataclass(frozen=True)
class IterationConfig:
    """Escape-test parameters: bailout radius and iteration budget."""

    bailout_radius: float = BAILOUT_RADIUS
    max_iterations: int = RENDER_ITERATIONS

    def __post_init__(self):
        # Radius 2 is the smallest mathematically sufficient escape radius.
        if not (math.isfinite(self.bailout_radius) and self.bailout_radius >= 2.0):
            raise ValueError(f"bailout_radius must be a finite value >= 2, got {self.bailout_radius!r}")
        if not 1 <= self.max_iterations <= MAX_ITERATION_BUDGET:
            raise ValueError(
                f"max_iterations must be in [1, {MAX_ITERATION_BUDGET}], got {self.max_iterations!r}"
            )

    @property
    def bailout_squared(self) -> float:
        return self.bailout_radius * self.bailout_radius


RENDER_CONFIG = IterationConfig(max_iterations=RENDER_ITERATIONS)
CLASSIFY_CONFIG = IterationConfig(max_iterations=CLASSIFY_ITERATIONS)


@dataclass(frozen=True)
class OrbitOutcome:
    """What happened to one orbit: escaped at an index, or bounded at budget.

    escape_index is the first t with |z_t| > bailout (None when the orbit
    ran the full budget without escaping); final_value is z at termination
    either way.
    """

    escaped: bool
    escape_index: int | None
    final_value: complex


def quadratic_step(z: complex, c: complex) -> complex:
    """One update of the quadratic map: z**2 + c, componentwise.

    Computed as re' = re*re - im*im + c.re, im' = 2*re*im + c.im -- the
    exact double-precision operation sequence every other kernel in this
    package replays.
    """
    z = require_finite(z, "z")
    c = require_finite(c, "c")
    return complex(
        z.real * z.real - z.imag * z.imag + c.real,
        2.0 * z.real * z.imag + c.imag,
    )


def escape_time(z0: complex, c: complex, cfg: IterationConfig = RENDER_CONFIG) -> OrbitOutcome:
    """Iterate z -> z**2 + c from z0 until strict escape or budget exhaustion.

    Indices count from 1: the outcome of testing right after the first
    update is index 1.  A bounded outcome means exactly cfg.max_iterations
    updates ran and none exceeded the bailout.
    """
    z0 = require_finite(z0, "z0")
    c = require_finite(c, "c")
    zr, zi = z0.real, z0.imag
    cr, ci = c.real, c.imag
    limit = cfg.bailout_squared
    for t in range(1, cfg.max_iterations + 1):
        zr, zi = zr * zr - zi * zi + cr, 2.0 * zr * zi + ci
        if zr * zr + zi * zi > limit:
            return OrbitOutcome(True, t, complex(zr, zi))
    return OrbitOutcome(False, None, complex(zr, zi))


def critical_orbit(c: complex, cfg: IterationConfig = RENDER_CONFIG) -> OrbitOutcome:
    """Orbit of the critical point z = 0 under parameter c.

    Named because both membership of c in the connectedness locus and
    connectivity of the filled Julia set hinge on whether this particular
    orbit stays bounded.
    """
    return escape_time(0j, c, cfg)
