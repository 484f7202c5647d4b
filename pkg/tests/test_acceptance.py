"""Acceptance suite: one criterion per test, one printed pass/fail line each.

Run with output visible:  pytest tests/test_acceptance.py -v -s
"""

import time
from contextlib import contextmanager

import numpy as np

from powerfractal.analysis import (
    Decision,
    Evidence,
    cardioid_or_bulb_interior,
    check_conjugation_relation,
    check_negation_symmetry,
    julia_connectivity,
    mandelbrot_membership,
)
from powerfractal.cli import PRESETS, classify_power_point, main
from powerfractal.imaging import colorize, write_ppm
from powerfractal.iteration import IterationConfig
from powerfractal.power import PowerPhasor, ScalingConfig, to_parameter
from powerfractal.render import (
    GridSpec,
    INTERIOR,
    JuliaMode,
    MANDELBROT,
    compute_escape_field,
    escape_counts,
)
from powerfractal.sampling import Lcg64

CLASSIFY = IterationConfig(max_iterations=1000)


@contextmanager
def criterion(number, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {number} {name}: PASS")


def test_c1_known_membership_facts():
    with criterion(1, "known membership facts"):
        assert mandelbrot_membership(-1 + 0j, CLASSIFY).decision is Decision.CONNECTED
        v = mandelbrot_membership(1 + 0j, CLASSIFY)
        assert (v.decision, v.evidence, v.escape_index) == (
            Decision.DISCONNECTED, Evidence.ESCAPED_AT, 3)
        for c in (3 + 0j, 2.1j, -2.5 + 0.1j, 2 + 2j, -3j):
            v = mandelbrot_membership(c, CLASSIFY)
            assert (v.decision, v.escape_index) == (Decision.DISCONNECTED, 1), c


def test_c2_showcase_parameters():
    with criterion(2, "showcase parameter pair"):
        assert julia_connectivity(-0.33 + 0.57j, CLASSIFY).decision is Decision.CONNECTED
        v = julia_connectivity(0.44 + 0.15j, CLASSIFY)
        assert v.decision is Decision.DISCONNECTED
        assert v.escape_index == 7  # frozen from the pre-build direct-orbit oracle


def test_c3_unit_disk_field():
    with criterion(3, "unit-disk field at c=0 (512x512, <5s, 1e-6 band)"):
        spec = GridSpec(0j, 4.0, 512, 512)
        start = time.perf_counter()
        field = compute_escape_field(spec, JuliaMode(0j), IterationConfig(max_iterations=500))
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"took {elapsed:.2f}s"
        pitch = spec.width / spec.cols
        re = (np.arange(spec.cols) + 0.5 - spec.cols / 2.0) * pitch
        im = (spec.rows / 2.0 - np.arange(spec.rows) - 0.5) * pitch
        mags = np.hypot(re[None, :], im[:, None])
        decidable = np.abs(mags - 1.0) > 1e-6
        exempt_fraction = 1.0 - decidable.mean()
        assert exempt_fraction < 0.005, f"exempt band holds {exempt_fraction:.2%} of pixels"
        bounded = field.cells == INTERIOR
        assert np.array_equal(bounded[decidable], (mags < 1.0)[decidable])


def test_c4_sweep_preset_verdicts():
    with criterion(4, "sweep preset verdict sequences"):
        fig3 = [julia_connectivity(to_parameter(ph), CLASSIFY) for ph in PRESETS["fig3"].phasors()]
        assert [v.decision for v in fig3] == [
            Decision.CONNECTED, Decision.CONNECTED, Decision.CONNECTED, Decision.DISCONNECTED]
        assert fig3[2].evidence is Evidence.BOUNDED_AT_BUDGET  # the cusp member
        assert fig3[3].escape_index == 30 and fig3[3].escape_index <= 1000

        fig4 = [julia_connectivity(to_parameter(ph), CLASSIFY) for ph in PRESETS["fig4"].phasors()]
        assert [v.decision for v in fig4] == [
            Decision.CONNECTED, Decision.CONNECTED, Decision.CONNECTED, Decision.DISCONNECTED]
        assert fig4[3].escape_index == 13 and fig4[3].escape_index <= 1000


def test_c5_quadrant_study():
    with criterion(5, "four-quadrant study at magnitude 0.22"):
        for p, q in ((0.22, 0.22), (-0.22, 0.22), (-0.22, -0.22), (0.22, -0.22)):
            record = classify_power_point(PowerPhasor(p, q), ScalingConfig(), CLASSIFY)
            assert record.verdict.decision is Decision.CONNECTED, (p, q)
            assert record.verdict.evidence is Evidence.ORACLE_INTERIOR, (p, q)


def test_c6_symmetry_identities():
    with criterion(6, "symmetry identities over 20 parameters x 500 samples"):
        rng = Lcg64(1905)
        cfg = IterationConfig(max_iterations=256)
        total = 0
        for k in range(20):
            c = complex(rng.uniform(-1.5, 0.8), rng.uniform(-1.2, 1.2))
            neg = check_negation_symmetry(c, 500, seed=k, cfg=cfg)
            conj = check_conjugation_relation(c, 500, seed=1000 + k, cfg=cfg)
            assert neg.mismatches == 0, c
            assert conj.mismatches == 0, c
            total += neg.samples_tested
        assert total >= 10_000


def test_c7_oracle_soundness():
    with criterion(7, "closed-form interior never escapes (10k params, budget 1000, <10s)"):
        start = time.perf_counter()
        rng = Lcg64(424242)
        interior = []
        while len(interior) < 10_000:
            c = complex(rng.uniform(-1.3, 0.5), rng.uniform(-0.7, 0.7))
            if cardioid_or_bulb_interior(c):
                interior.append(c)
        cs = np.array(interior)
        counts = escape_counts(0.0, 0.0, cs.real, cs.imag, IterationConfig(max_iterations=1000))
        elapsed = time.perf_counter() - start
        assert (counts == INTERIOR).all(), "an oracle-interior parameter escaped"
        assert elapsed < 10.0, f"took {elapsed:.2f}s"


def test_c8_determinism(tmp_path):
    with criterion(8, "bitwise determinism across workers and runs"):
        spec = GridSpec(-0.5 + 0j, 3.0, 512, 512)
        cfg = IterationConfig(max_iterations=500)
        fields = [compute_escape_field(spec, MANDELBROT, cfg, workers=w) for w in (1, 2, 8)]
        assert np.array_equal(fields[0].cells, fields[1].cells)
        assert np.array_equal(fields[0].cells, fields[2].cells)

        first, second = tmp_path / "a.ppm", tmp_path / "b.ppm"
        write_ppm(colorize(fields[0]), first)
        write_ppm(colorize(fields[2]), second)
        assert first.read_bytes() == second.read_bytes()

        args = ["sweep", "--preset", "fig3", "--cols", "64", "--rows", "64"]
        assert main([*args, "--out-dir", str(tmp_path / "run1")]) == 0
        assert main([*args, "--out-dir", str(tmp_path / "run2")]) == 0
        run1, run2 = tmp_path / "run1", tmp_path / "run2"
        names = sorted(p.name for p in run1.iterdir())
        assert sorted(p.name for p in run2.iterdir()) == names
        for name in names:
            assert (run1 / name).read_bytes() == (run2 / name).read_bytes(), name
