import random

import pytest
from hypothesis import given, strategies as st

from powerfractal.analysis import (
    ConnectivityVerdict,
    Decision,
    Evidence,
    cardioid_or_bulb_interior,
    check_conjugation_relation,
    check_negation_symmetry,
    julia_connectivity,
    mandelbrot_membership,
)
from powerfractal.iteration import IterationConfig, critical_orbit
from powerfractal.sampling import Lcg64

coords = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
params = st.builds(complex, coords, coords)


@pytest.mark.parametrize(
    "c,inside",
    [
        (0j, True),              # cardioid center
        (-1 + 0j, True),         # bulb center
        (0.22 + 0.22j, True),
        (0.22 - 0.22j, True),
        (-0.22 + 0.22j, True),
        (-0.22 - 0.22j, True),
        (-0.33 + 0.57j, True),
        (0.63j, True),           # barely inside the cardioid
        (0.125 + 0j, True),
        (0.315j, True),
        (0.25 + 0j, False),      # cusp: the strict test excludes the boundary
        (0.44 + 0.15j, False),
        (0.26 + 0j, False),
        (0.70j, False),
        (1j, False),
        (3 + 0j, False),
    ],
)
def test_closed_form_interior(c, inside):
    assert cardioid_or_bulb_interior(c) is inside


def test_membership_known_parameters():
    assert mandelbrot_membership(-1 + 0j).decision is Decision.CONNECTED
    v = mandelbrot_membership(1 + 0j)
    assert (v.decision, v.evidence, v.escape_index) == (Decision.DISCONNECTED, Evidence.ESCAPED_AT, 3)
    v = mandelbrot_membership(3 + 0j)
    assert (v.decision, v.escape_index) == (Decision.DISCONNECTED, 1)
    v = mandelbrot_membership(-0.33 + 0.57j)
    assert (v.decision, v.evidence) == (Decision.CONNECTED, Evidence.ORACLE_INTERIOR)


def test_cusp_is_budget_limited_belief():
    v = mandelbrot_membership(0.25 + 0j, IterationConfig(max_iterations=1000))
    assert (v.decision, v.evidence) == (Decision.CONNECTED, Evidence.BOUNDED_AT_BUDGET)
    assert v.budget_used == 1000


def test_julia_connectivity_known_parameters():
    v = julia_connectivity(0.44 + 0.15j)
    assert (v.decision, v.escape_index) == (Decision.DISCONNECTED, 7)
    v = julia_connectivity(0.22 - 0.22j)
    assert (v.decision, v.evidence) == (Decision.CONNECTED, Evidence.ORACLE_INTERIOR)
    v = julia_connectivity(0.26 + 0j)
    assert (v.decision, v.escape_index) == (Decision.DISCONNECTED, 30)


def test_verdict_invariants_enforced():
    with pytest.raises(ValueError):
        ConnectivityVerdict(Decision.DISCONNECTED, Evidence.BOUNDED_AT_BUDGET, None, 100)
    with pytest.raises(ValueError):
        ConnectivityVerdict(Decision.CONNECTED, Evidence.ESCAPED_AT, 5, 100)
    with pytest.raises(ValueError):
        ConnectivityVerdict(Decision.DISCONNECTED, Evidence.ESCAPED_AT, 101, 100)


def test_describe_is_evidence_qualified():
    assert julia_connectivity(0.44 + 0.15j).describe() == "Disconnected/EscapedAt(7) budget=1000"
    assert mandelbrot_membership(0j).describe() == "Connected/OracleInterior budget=1000"


@given(c=params)
def test_dichotomy_consistency(c):
    cfg = IterationConfig(max_iterations=150)
    assert julia_connectivity(c, cfg) == mandelbrot_membership(c, cfg)


@given(radius=st.floats(min_value=2.0, max_value=50.0, exclude_min=True),
       angle=st.floats(min_value=0.0, max_value=6.283185307179586))
def test_escape_soundness_outside_radius_two(radius, angle):
    import math

    c = complex(radius * math.cos(angle), radius * math.sin(angle))
    v = mandelbrot_membership(c, IterationConfig(max_iterations=10))
    assert (v.decision, v.escape_index) == (Decision.DISCONNECTED, 1)


@given(c=params)
def test_real_axis_mirror_of_membership(c):
    cfg = IterationConfig(max_iterations=120)
    a = mandelbrot_membership(c, cfg)
    b = mandelbrot_membership(c.conjugate(), cfg)
    assert (a.decision, a.evidence, a.escape_index) == (b.decision, b.evidence, b.escape_index)


@given(c=params, small=st.integers(min_value=5, max_value=60),
       extra=st.integers(min_value=0, max_value=300))
def test_budget_monotonicity_of_verdicts(c, small, extra):
    lo = mandelbrot_membership(c, IterationConfig(max_iterations=small))
    hi = mandelbrot_membership(c, IterationConfig(max_iterations=small + extra))
    if lo.decision is Decision.DISCONNECTED:
        assert hi.decision is Decision.DISCONNECTED and hi.escape_index == lo.escape_index
    if hi.decision is Decision.CONNECTED:
        assert lo.decision is Decision.CONNECTED


def test_oracle_soundness_sampled():
    rng = Lcg64(2024)
    cfg = IterationConfig(max_iterations=400)
    tested = 0
    while tested < 2000:
        c = complex(rng.uniform(-1.3, 0.5), rng.uniform(-0.7, 0.7))
        if not cardioid_or_bulb_interior(c):
            continue
        assert not critical_orbit(c, cfg).escaped, f"oracle-interior {c} escaped"
        tested += 1


@pytest.mark.parametrize("c", [0.22 + 0.22j, 0.44 + 0.15j, 0j])
def test_negation_symmetry_reports_zero_mismatches(c):
    report = check_negation_symmetry(c, 400, seed=42, cfg=IterationConfig(max_iterations=200))
    assert report.samples_tested == 400
    assert report.mismatches == 0
    assert report.first_mismatch is None


@pytest.mark.parametrize("c", [0.22 + 0.22j, -0.22 + 0.22j, 0.25 + 0j])
def test_conjugation_relation_reports_zero_mismatches(c):
    report = check_conjugation_relation(c, 400, seed=7, cfg=IterationConfig(max_iterations=200))
    assert report.mismatches == 0


def test_real_parameter_reported_as_axis_mirror():
    report = check_conjugation_relation(0.25 + 0j, 10, seed=1, cfg=IterationConfig(max_iterations=50))
    assert "real-axis mirror" in report.relation_name
    report = check_conjugation_relation(0.25 + 0.1j, 10, seed=1, cfg=IterationConfig(max_iterations=50))
    assert "real-axis mirror" not in report.relation_name


def test_symmetry_reports_are_reproducible():
    cfg = IterationConfig(max_iterations=100)
    a = check_negation_symmetry(0.1 + 0.2j, 250, seed=9, cfg=cfg)
    b = check_negation_symmetry(0.1 + 0.2j, 250, seed=9, cfg=cfg)
    assert a == b


def test_symmetry_check_rejects_empty_sample():
    with pytest.raises(ValueError, match="sample_count"):
        check_negation_symmetry(0j, 0)
