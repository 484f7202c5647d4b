"""Four quadrants of the power plane, one gallery of Julia sets.

The sign pattern of (P, Q) encodes what a load is doing: consuming or
supplying real power, lagging (inductive) or leading (capacitive).  At
magnitude 0.22 all four sign combinations stay inside the connectedness
locus -- the closed-form interior test proves each one -- so all four
Julia sets are connected, and conjugate parameters (quadrants I/IV and
II/III) produce mirror-image sets.

Writes, per quadrant, the parameter-plane image with a yellow marker on
the power point plus the Julia image; assembles a PNG montage when
matplotlib is available.

Run:  python demos/05_quadrant_gallery.py
"""

from pathlib import Path

import numpy as np

from powerfractal import (
    GridSpec,
    JuliaMode,
    MANDELBROT,
    PowerPhasor,
    classify_quadrant,
    colorize,
    compute_escape_field,
    julia_connectivity,
    overlay_marker,
    power_factor,
    to_parameter,
    write_ppm,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

MAGNITUDE = 0.22
param_spec = GridSpec(center=-0.5 + 0j, width=3.0, cols=512, rows=512)
julia_spec = GridSpec(center=0j, width=4.0, cols=512, rows=512)

# One parameter-plane render serves all four markers.
atlas = colorize(compute_escape_field(param_spec, MANDELBROT, workers=4))

fields = {}
for sp, sq in ((1, 1), (-1, 1), (-1, -1), (1, -1)):
    phasor = PowerPhasor(sp * MAGNITUDE, sq * MAGNITUDE)
    quadrant = classify_quadrant(phasor)
    pf = power_factor(phasor)
    c = to_parameter(phasor)
    verdict = julia_connectivity(c)
    write_ppm(overlay_marker(atlas, param_spec, c), OUT / f"atlas_{quadrant.value}.ppm")
    field = compute_escape_field(julia_spec, JuliaMode(c), workers=4)
    write_ppm(colorize(field), OUT / f"quadrant_{quadrant.value}.ppm")
    fields[quadrant.value] = field
    print(f"quadrant {quadrant.value:>3}: P={phasor.p:+.2f} Q={phasor.q:+.2f} "
          f"pf={pf.value:+.4f} {pf.character:<15} {verdict.describe()}")

# Conjugate parameters give vertically mirrored fields; check it on the cells.
mirror = np.array_equal(fields["I"].cells, fields["IV"].cells[::-1, :])
print(f"\nquadrant I field is the top-bottom mirror of quadrant IV: {mirror}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(2, 2, figsize=(9, 9))
    order = [["II", "I"], ["III", "IV"]]
    for row in range(2):
        for col in range(2):
            tag = order[row][col]
            cells = fields[tag].cells.astype(float)
            cells[cells == 0] = np.nan  # interior in solid black via the background
            axes[row, col].imshow(cells, cmap="twilight", extent=(-2, 2, -2, 2))
            axes[row, col].set_facecolor("black")
            axes[row, col].set_title(f"quadrant {tag}")
    fig.suptitle(f"Julia sets for (P, Q) = (±{MAGNITUDE}, ±{MAGNITUDE})")
    fig.tight_layout()
    fig.savefig(OUT / "quadrant_gallery.png", dpi=120)
    print(f"montage: {OUT / 'quadrant_gallery.png'}")
except ImportError:
    print("matplotlib not installed; skipping the montage PNG")
