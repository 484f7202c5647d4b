"""Membership, Julia connectivity, and machine-checkable symmetry relations.

A parameter c belongs to the connectedness locus of z -> z**2 + c exactly
when the orbit of the critical point 0 stays bounded, and the filled Julia
set of c is connected in exactly the same case -- otherwise it shatters
into a totally disconnected point cloud.  That dichotomy lets one decision
procedure serve both questions.

Two closed forms prove the bulk of the interior without iterating:

    main cardioid:   q * (q + re - 1/4) < im**2 / 4,  q = (re - 1/4)**2 + im**2
    period-2 bulb:   (re + 1)**2 + im**2 < 1/16

Both tests are strict, so boundary parameters (the cusp at 1/4, the bulb
tangency at -3/4) fall through to the iterative test and classify as
bounded-at-budget belief rather than proved interior.  Everything the
quadrant studies exercise lands in one of these two components.

The symmetry checkers turn mirror observations about rendered sets into
exact escape-count identities:

  * negation: (-z)**2 + c = z**2 + c, so orbits of z and -z coincide from
    the first update and their escape data match bitwise;
  * conjugation: conj(z)**2 + conj(c) = conj(z**2 + c), so the dynamics of
    conj(c) at conj(z) replay those of c at z with every imaginary part
    negated -- escape indices match bitwise, final values conjugate.

For real c the conjugation relation degenerates to the real-axis mirror of
a single set.  Any nonzero mismatch count indicates an implementation bug,
never a property of the map.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .iteration import (
    CLASSIFY_CONFIG,
    IterationConfig,
    OrbitOutcome,
    critical_orbit,
    escape_time,
    require_finite,
)
from .sampling import Lcg64


class Decision(str, Enum):
    CONNECTED = "Connected"
    DISCONNECTED = "Disconnected"


class Evidence(str, Enum):
    ORACLE_INTERIOR = "OracleInterior"      # closed-form proof, no iteration ran
    BOUNDED_AT_BUDGET = "BoundedAtBudget"   # belief limited by the iteration budget
    ESCAPED_AT = "EscapedAt"                # proof of escape at the recorded index


@dataclass(frozen=True)
class ConnectivityVerdict:
    """Connected/disconnected decision plus the evidence that produced it."""

    decision: Decision
    evidence: Evidence
    escape_index: int | None
    budget_used: int

    def __post_init__(self):
        disconnected = self.decision is Decision.DISCONNECTED
        escaped = self.evidence is Evidence.ESCAPED_AT
        if disconnected != escaped:
            raise ValueError("Disconnected verdicts carry EscapedAt evidence, and only those")
        if escaped and not (self.escape_index and 1 <= self.escape_index <= self.budget_used):
            raise ValueError("escape index must lie within the budget")

    def describe(self) -> str:
        """Evidence-qualified wording, e.g. 'Disconnected/EscapedAt(7) budget=1000'."""
        label = f"{self.decision.value}/{self.evidence.value}"
        if self.escape_index is not None:
            label += f"({self.escape_index})"
        return f"{label} budget={self.budget_used}"


def cardioid_or_bulb_interior(c: complex) -> bool:
    """Closed-form interior test for the two largest interior components.

    True implies the critical orbit of c is bounded (connected Julia set);
    False says nothing -- smaller interior components fall to iteration.
    """
    c = require_finite(c, "c")
    re, im = c.real, c.imag
    q = (re - 0.25) ** 2 + im * im
    if q * (q + re - 0.25) < im * im / 4.0:
        return True
    return (re + 1.0) ** 2 + im * im < 1.0 / 16.0


def _classify(c: complex, cfg: IterationConfig) -> ConnectivityVerdict:
    if cardioid_or_bulb_interior(c):
        return ConnectivityVerdict(Decision.CONNECTED, Evidence.ORACLE_INTERIOR, None, cfg.max_iterations)
    outcome = critical_orbit(c, cfg)
    if outcome.escaped:
        return ConnectivityVerdict(
            Decision.DISCONNECTED, Evidence.ESCAPED_AT, outcome.escape_index, cfg.max_iterations
        )
    return ConnectivityVerdict(Decision.CONNECTED, Evidence.BOUNDED_AT_BUDGET, None, cfg.max_iterations)


def mandelbrot_membership(c: complex, cfg: IterationConfig = CLASSIFY_CONFIG) -> ConnectivityVerdict:
    """Does c belong to the connectedness locus?

    Closed-form interior short-circuits the iteration; otherwise the
    critical orbit decides: escape is proof of exclusion, staying bounded
    for the whole budget is budget-limited belief of membership.
    """
    return _classify(c, cfg)


def julia_connectivity(c: complex, cfg: IterationConfig = CLASSIFY_CONFIG) -> ConnectivityVerdict:
    """Is the filled Julia set of c connected?

    Same decision procedure as mandelbrot_membership -- the dichotomy
    equates the two questions -- read as a statement about the Julia set.
    """
    return _classify(c, cfg)


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of checking an exact escape identity over sampled seeds."""

    relation_name: str
    samples_tested: int
    mismatches: int
    first_mismatch: tuple[complex, tuple, tuple] | None = None  # (z, expected, actual)

    def describe(self) -> str:
        line = f"{self.relation_name}: samples={self.samples_tested} mismatches={self.mismatches}"
        if self.first_mismatch is not None:
            z, expected, actual = self.first_mismatch
            line += f" first_mismatch(z={z}, expected={expected}, actual={actual})"
        return line


def _escape_signature(outcome: OrbitOutcome) -> tuple:
    return (outcome.escaped, outcome.escape_index)


def _run_check(
    relation_name: str,
    c: complex,
    transform,
    sample_count: int,
    seed: int,
    cfg: IterationConfig,
    center: complex,
    width: float,
    height: float,
) -> SymmetryReport:
    if sample_count < 1:
        raise ValueError(f"sample_count must be >= 1, got {sample_count!r}")
    rng = Lcg64(seed)
    mismatches = 0
    first = None
    for _ in range(sample_count):
        z = rng.complex_in_window(center, width, height)
        expected = _escape_signature(escape_time(z, c, cfg))
        z2, c2 = transform(z, c)
        actual = _escape_signature(escape_time(z2, c2, cfg))
        if expected != actual:
            mismatches += 1
            if first is None:
                first = (z, expected, actual)
    return SymmetryReport(relation_name, sample_count, mismatches, first)


def check_negation_symmetry(
    c: complex,
    sample_count: int = 1000,
    seed: int = 0,
    cfg: IterationConfig = CLASSIFY_CONFIG,
    center: complex = 0j,
    width: float = 4.0,
    height: float = 4.0,
) -> SymmetryReport:
    """Sampled check that escape_time(-z, c) matches escape_time(z, c).

    Draws sample_count seeds from the window with the documented generator
    and compares escaped/escape_index pairs; the identity is algebraically
    exact, so the report must show zero mismatches.
    """
    c = require_finite(c, "c")
    return _run_check(
        "negation escape_time(-z, c) == escape_time(z, c)",
        c, lambda z, cc: (-z, cc), sample_count, seed, cfg, center, width, height,
    )


def check_conjugation_relation(
    c: complex,
    sample_count: int = 1000,
    seed: int = 0,
    cfg: IterationConfig = CLASSIFY_CONFIG,
    center: complex = 0j,
    width: float = 4.0,
    height: float = 4.0,
) -> SymmetryReport:
    """Sampled check that escape_time(conj(z), conj(c)) matches escape_time(z, c).

    This is the exact content of the quadrant mirror observations: the set
    for conj(c) is the reflection of the set for c.  For real c it
    degenerates to the real-axis mirror of a single set, and the relation
    name says so.
    """
    c = require_finite(c, "c")
    name = "conjugation escape_time(conj z, conj c) == escape_time(z, c)"
    if c.imag == 0:
        name += " [real-axis mirror]"
    return _run_check(
        name, c, lambda z, cc: (z.conjugate(), cc.conjugate()),
        sample_count, seed, cfg, center, width, height,
    )
