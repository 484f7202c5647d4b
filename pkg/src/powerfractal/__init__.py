"""powerfractal: AC complex power on the parameter plane of z -> z**2 + c.

A power point S = P + jQ becomes a parameter c of the quadratic map;
escape-time kernels render the parameter plane and the Julia set of c,
closed forms plus the critical orbit decide connectivity, and sampled
identity checks verify the exact mirror symmetries of the escape data.
"""

from .analysis import (
    ConnectivityVerdict,
    Decision,
    Evidence,
    SymmetryReport,
    cardioid_or_bulb_interior,
    check_conjugation_relation,
    check_negation_symmetry,
    julia_connectivity,
    mandelbrot_membership,
)
from .imaging import (
    DEFAULT_PALETTE,
    ImageBuffer,
    PaletteSpec,
    colorize,
    overlay_marker,
    read_ppm,
    write_ppm,
)
from .iteration import (
    CLASSIFY_CONFIG,
    IterationConfig,
    OrbitOutcome,
    RENDER_CONFIG,
    critical_orbit,
    escape_time,
    quadratic_step,
)
from .power import (
    DIRECT,
    PowerFactor,
    PowerPhasor,
    Quadrant,
    ScalingConfig,
    classify_quadrant,
    from_parameter,
    power_factor,
    to_parameter,
)
from .render import (
    EscapeField,
    GridSpec,
    INTERIOR,
    JuliaMode,
    MANDELBROT,
    MandelbrotMode,
    compute_escape_field,
    escape_counts,
    pixel_to_complex,
)
from .sampling import Lcg64

__version__ = "0.1.0"

__all__ = [
    "CLASSIFY_CONFIG",
    "ConnectivityVerdict",
    "DEFAULT_PALETTE",
    "DIRECT",
    "Decision",
    "EscapeField",
    "Evidence",
    "GridSpec",
    "INTERIOR",
    "ImageBuffer",
    "IterationConfig",
    "JuliaMode",
    "Lcg64",
    "MANDELBROT",
    "MandelbrotMode",
    "OrbitOutcome",
    "PaletteSpec",
    "PowerFactor",
    "PowerPhasor",
    "Quadrant",
    "RENDER_CONFIG",
    "ScalingConfig",
    "SymmetryReport",
    "cardioid_or_bulb_interior",
    "check_conjugation_relation",
    "check_negation_symmetry",
    "classify_quadrant",
    "colorize",
    "compute_escape_field",
    "critical_orbit",
    "escape_counts",
    "escape_time",
    "from_parameter",
    "julia_connectivity",
    "mandelbrot_membership",
    "overlay_marker",
    "pixel_to_complex",
    "power_factor",
    "quadratic_step",
    "read_ppm",
    "to_parameter",
    "write_ppm",
]
