"""Command-line surface: rendering, classification, sweeps, quadrant and
symmetry studies.

Exit codes are a stable contract: 0 success, 1 runtime or domain failure,
2 usage error.  Report CSV files use the fixed header below with 6-decimal
fixed-point formatting, '.' decimal separator and '\\n' line endings, so
identical flags reproduce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .analysis import (
    ConnectivityVerdict,
    check_conjugation_relation,
    check_negation_symmetry,
    julia_connectivity,
)
from .imaging import colorize, overlay_marker, write_ppm
from .iteration import CLASSIFY_ITERATIONS, IterationConfig, RENDER_ITERATIONS
from .power import (
    DEFAULT_IMAG_AXIS_LIMIT,
    DEFAULT_REAL_AXIS_LIMIT,
    PowerPhasor,
    Quadrant,
    ScalingConfig,
    classify_quadrant,
    power_factor,
    to_parameter,
)
from .render import (
    DEFAULT_JULIA_WINDOW,
    DEFAULT_MANDELBROT_WINDOW,
    GridSpec,
    JuliaMode,
    MANDELBROT,
    compute_escape_field,
)

CSV_HEADER = "p,q,c_re,c_im,quadrant,power_factor,verdict,evidence,escape_index,budget"


@dataclass(frozen=True)
class ClassificationRecord:
    """One classified power point, ready for line/CSV/JSON serialization."""

    p: float
    q: float
    c: complex
    quadrant: Quadrant
    power_factor: str       # 6-decimal value, or "undefined" at the origin
    pf_character: str | None
    verdict: ConnectivityVerdict

    def csv_row(self) -> str:
        index = "" if self.verdict.escape_index is None else str(self.verdict.escape_index)
        return (
            f"{self.p:.6f},{self.q:.6f},{self.c.real:.6f},{self.c.imag:.6f},"
            f"{self.quadrant.value},{self.power_factor},"
            f"{self.verdict.decision.value},{self.verdict.evidence.value},"
            f"{index},{self.verdict.budget_used}"
        )

    def json_object(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "c_re": self.c.real,
            "c_im": self.c.imag,
            "quadrant": self.quadrant.value,
            "power_factor": self.power_factor,
            "verdict": self.verdict.decision.value,
            "evidence": self.verdict.evidence.value,
            "escape_index": self.verdict.escape_index,
            "budget": self.verdict.budget_used,
        }

    def line(self) -> str:
        pf = self.power_factor if self.pf_character is None else f"{self.power_factor} {self.pf_character}"
        return (
            f"p={self.p:.6f} q={self.q:.6f} c={self.c.real:.6f}{self.c.imag:+.6f}i "
            f"quadrant={self.quadrant.value} pf={pf} {self.verdict.describe()}"
        )


def classify_power_point(phasor: PowerPhasor, scaling: ScalingConfig, cfg: IterationConfig) -> ClassificationRecord:
    c = to_parameter(phasor, scaling)
    try:
        pf = power_factor(phasor)
        pf_text, pf_char = f"{pf.value:.6f}", pf.character
    except ValueError:
        pf_text, pf_char = "undefined", None
    return ClassificationRecord(
        phasor.p, phasor.q, c, classify_quadrant(phasor), pf_text, pf_char,
        julia_connectivity(c, cfg),
    )


@dataclass(frozen=True)
class SweepPreset:
    """One-axis study: ordered parameter magnitudes with the other axis fixed."""

    axis: str  # "real" or "reactive"
    values: tuple[float, ...]
    fixed_other: float

    def __post_init__(self):
        if self.axis not in ("real", "reactive"):
            raise ValueError(f"axis must be 'real' or 'reactive', got {self.axis!r}")
        if not self.values:
            raise ValueError("sweep needs at least one value")

    def phasors(self) -> list[PowerPhasor]:
        if self.axis == "real":
            return [PowerPhasor(v, self.fixed_other) for v in self.values]
        return [PowerPhasor(self.fixed_other, v) for v in self.values]


# Half the positive-axis limit, the limit itself, and a member chosen just
# beyond it to exercise a slow escape while staying decisively exterior.
PRESETS = {
    "fig3": SweepPreset("real", (0.0, 0.125, 0.25, 0.26), 0.0),
    "fig4": SweepPreset("reactive", (0.0, 0.315, 0.63, 0.70), 0.0),
}


def _parse_pair(text: str) -> tuple[float, float]:
    try:
        first, second = text.split(",")
        return float(first), float(second)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'X,Y', got {text!r}") from None


def _add_window_args(sub: argparse.ArgumentParser, center: complex, width: float) -> None:
    sub.add_argument("--center", type=_parse_pair, default=(center.real, center.imag),
                     metavar="RE,IM", help=f"window center (default {center.real},{center.imag})")
    sub.add_argument("--width", type=float, default=width, help=f"window width (default {width})")
    sub.add_argument("--cols", type=int, default=512, help="image columns (default 512)")
    sub.add_argument("--rows", type=int, default=512, help="image rows (default 512)")
    sub.add_argument("--max-iter", type=int, default=RENDER_ITERATIONS,
                     help=f"render iteration budget (default {RENDER_ITERATIONS})")
    sub.add_argument("--threads", type=int, default=1, help="worker cap for rendering (default 1)")


def _add_scaling_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--scaling", choices=("direct", "normalized"), default="direct",
                     help="how P,Q map onto the parameter plane (default direct)")
    sub.add_argument("--cx", type=float, default=DEFAULT_REAL_AXIS_LIMIT,
                     help=f"positive real-axis extent for normalized mode (default {DEFAULT_REAL_AXIS_LIMIT})")
    sub.add_argument("--cy", type=float, default=DEFAULT_IMAG_AXIS_LIMIT,
                     help=f"positive imaginary-axis extent for normalized mode (default {DEFAULT_IMAG_AXIS_LIMIT})")
    sub.add_argument("--p-base", type=float, default=1.0, help="real power base (default 1)")
    sub.add_argument("--q-base", type=float, default=1.0, help="reactive power base (default 1)")


def _add_budget_arg(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--budget", type=int, default=CLASSIFY_ITERATIONS,
                     help=f"classification iteration budget (default {CLASSIFY_ITERATIONS})")


def _scaling(args) -> ScalingConfig:
    return ScalingConfig(args.scaling, args.cx, args.cy, args.p_base, args.q_base)


def _grid(args) -> GridSpec:
    return GridSpec(complex(*args.center), args.width, args.cols, args.rows)


def _render_cfg(args) -> IterationConfig:
    return IterationConfig(max_iterations=args.max_iter)


def cmd_mandelbrot(args) -> int:
    spec = _grid(args)
    field = compute_escape_field(spec, MANDELBROT, _render_cfg(args), workers=args.threads)
    img = colorize(field)
    if args.mark is not None:
        point = to_parameter(PowerPhasor(*args.mark), _scaling(args))
        img = overlay_marker(img, spec, point)
    write_ppm(img, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_julia(args) -> int:
    c = to_parameter(PowerPhasor(args.p, args.q), _scaling(args))
    spec = _grid(args)
    field = compute_escape_field(spec, JuliaMode(c), _render_cfg(args), workers=args.threads)
    write_ppm(colorize(field), args.out)
    verdict = julia_connectivity(c, IterationConfig(max_iterations=args.budget))
    print(f"wrote {args.out}")
    print(verdict.describe())
    return 0


def cmd_classify(args) -> int:
    record = classify_power_point(
        PowerPhasor(args.p, args.q), _scaling(args), IterationConfig(max_iterations=args.budget)
    )
    if args.format == "json":
        print(json.dumps(record.json_object()))
    else:
        print(record.line())
    return 0


def _write_report(out_dir: Path, records: list[ClassificationRecord]) -> Path:
    report = out_dir / "report.csv"
    text = CSV_HEADER + "\n" + "".join(r.csv_row() + "\n" for r in records)
    report.write_bytes(text.encode("ascii"))
    return report


def cmd_sweep(args) -> int:
    if args.preset is not None:
        preset = PRESETS[args.preset]
    elif args.axis is not None:
        if not args.values:
            raise ValueError("explicit sweeps need --values")
        fixed = args.q if args.axis == "real" else args.p
        preset = SweepPreset(args.axis, tuple(args.values), fixed)
    else:
        raise ValueError("choose --preset or --axis/--values")

    limit = DEFAULT_REAL_AXIS_LIMIT if preset.axis == "real" else DEFAULT_IMAG_AXIS_LIMIT
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    render_cfg = _render_cfg(args)
    classify_cfg = IterationConfig(max_iterations=args.budget)
    spec = GridSpec(complex(*args.center), args.width, args.cols, args.rows)

    records = []
    print(f"sweep axis={preset.axis} fixed_other={preset.fixed_other:.6f} (positive-axis limit {limit})")
    for phasor in preset.phasors():
        record = classify_power_point(phasor, ScalingConfig(), classify_cfg)
        field = compute_escape_field(spec, JuliaMode(record.c), render_cfg, workers=args.threads)
        write_ppm(colorize(field), out_dir / f"julia_p{phasor.p:+.6f}_q{phasor.q:+.6f}.ppm")
        records.append(record)
        swept = phasor.p if preset.axis == "real" else phasor.q
        flag = "  [beyond limit]" if swept > limit else ""
        print(f"  {record.line()}{flag}")
    report = _write_report(out_dir, records)
    print(f"wrote {len(records)} images and {report}")
    return 0


QUADRANT_STUDY = (Quadrant.I, Quadrant.II, Quadrant.III, Quadrant.IV)
_SIGNS = {Quadrant.I: (1, 1), Quadrant.II: (-1, 1), Quadrant.III: (-1, -1), Quadrant.IV: (1, -1)}


def cmd_quadrants(args) -> int:
    if args.magnitude < 0:
        raise ValueError(f"magnitude must be >= 0, got {args.magnitude}")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    render_cfg = _render_cfg(args)
    classify_cfg = IterationConfig(max_iterations=args.budget)

    if args.magnitude == 0:
        print("warning: magnitude 0 collapses all four studies to the origin; emitting one record",
              file=sys.stderr)
        studies = [("Origin", PowerPhasor(0.0, 0.0))]
    else:
        studies = [
            (quad.value, PowerPhasor(sp * args.magnitude, sq * args.magnitude))
            for quad, (sp, sq) in ((q, _SIGNS[q]) for q in QUADRANT_STUDY)
        ]

    m_center, m_width = DEFAULT_MANDELBROT_WINDOW
    m_spec = GridSpec(m_center, m_width, args.cols, args.rows)
    m_img = colorize(compute_escape_field(m_spec, MANDELBROT, render_cfg, workers=args.threads))
    j_center, j_width = DEFAULT_JULIA_WINDOW
    j_spec = GridSpec(j_center, j_width, args.cols, args.rows)

    records = []
    for tag, phasor in studies:
        record = classify_power_point(phasor, ScalingConfig(), classify_cfg)
        write_ppm(overlay_marker(m_img, m_spec, record.c), out_dir / f"mandelbrot_{tag}.ppm")
        field = compute_escape_field(j_spec, JuliaMode(record.c), render_cfg, workers=args.threads)
        write_ppm(colorize(field), out_dir / f"julia_{tag}.ppm")
        records.append(record)
        print(f"  {tag}: {record.line()}")
    report = _write_report(out_dir, records)
    print(f"wrote {2 * len(records)} images and {report}")
    return 0


def cmd_symmetry(args) -> int:
    c = to_parameter(PowerPhasor(args.p, args.q))
    cfg = IterationConfig(max_iterations=args.budget)
    reports = [
        check_negation_symmetry(c, args.samples, args.seed, cfg),
        check_conjugation_relation(c, args.samples, args.seed, cfg),
    ]
    for report in reports:
        print(report.describe())
    return 0 if all(r.mismatches == 0 for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powerfractal",
        description="Map AC complex power onto the z -> z^2 + c parameter plane and study the result.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    m_center, m_width = DEFAULT_MANDELBROT_WINDOW
    sub = subs.add_parser("mandelbrot", help="render the parameter-plane escape field")
    _add_window_args(sub, m_center, m_width)
    _add_scaling_args(sub)
    sub.add_argument("--mark", type=_parse_pair, metavar="P,Q", default=None,
                     help="overlay a yellow marker at the parameter for this power point")
    sub.add_argument("--out", required=True, help="output PPM path")
    sub.set_defaults(func=cmd_mandelbrot)

    j_center, j_width = DEFAULT_JULIA_WINDOW
    sub = subs.add_parser("julia", help="render one Julia escape field and print its verdict")
    sub.add_argument("--p", type=float, required=True, help="real power")
    sub.add_argument("--q", type=float, required=True, help="reactive power")
    _add_window_args(sub, j_center, j_width)
    _add_scaling_args(sub)
    _add_budget_arg(sub)
    sub.add_argument("--out", required=True, help="output PPM path")
    sub.set_defaults(func=cmd_julia)

    sub = subs.add_parser("classify", help="classify one power point")
    sub.add_argument("--p", type=float, required=True, help="real power")
    sub.add_argument("--q", type=float, required=True, help="reactive power")
    _add_scaling_args(sub)
    _add_budget_arg(sub)
    sub.add_argument("--format", choices=("line", "json"), default="line")
    sub.set_defaults(func=cmd_classify)

    sub = subs.add_parser("sweep", help="sweep one power axis: images plus report.csv")
    sub.add_argument("--preset", choices=tuple(PRESETS), default=None,
                     help="fig3 = real-axis sweep, fig4 = reactive-axis sweep")
    sub.add_argument("--axis", choices=("real", "reactive"), default=None)
    sub.add_argument("--values", type=float, nargs="+", default=None,
                     help="swept magnitudes for an explicit --axis sweep")
    sub.add_argument("--p", type=float, default=0.0, help="fixed real power for reactive sweeps")
    sub.add_argument("--q", type=float, default=0.0, help="fixed reactive power for real sweeps")
    _add_window_args(sub, j_center, j_width)
    _add_budget_arg(sub)
    sub.add_argument("--out-dir", required=True)
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("quadrants", help="four-quadrant study at +/-magnitude")
    sub.add_argument("--magnitude", type=float, default=0.22)
    sub.add_argument("--cols", type=int, default=512)
    sub.add_argument("--rows", type=int, default=512)
    sub.add_argument("--max-iter", type=int, default=RENDER_ITERATIONS)
    sub.add_argument("--threads", type=int, default=1)
    _add_budget_arg(sub)
    sub.add_argument("--out-dir", required=True)
    sub.set_defaults(func=cmd_quadrants)

    sub = subs.add_parser("symmetry", help="check the negation and conjugation escape identities")
    sub.add_argument("--p", type=float, required=True, help="real power")
    sub.add_argument("--q", type=float, required=True, help="reactive power")
    sub.add_argument("--samples", type=int, default=1000)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=RENDER_ITERATIONS,
                     help=f"iteration budget per sample (default {RENDER_ITERATIONS})")
    sub.set_defaults(func=cmd_symmetry)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
