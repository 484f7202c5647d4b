"""Connected set or point cloud: the dichotomy in action.

The filled Julia set of c is connected exactly when c itself belongs to
the connectedness locus, i.e. when the orbit of 0 under z -> z**2 + c
stays bounded.  Two parameters on opposite sides of the boundary make
the jump visible: -0.33+0.57i sits inside (one solid piece), 0.44+0.15i
sits outside (the set shatters into dust).

Renders both sets as PPM files and prints the verdicts with their
evidence: closed-form interior proof, budget-limited boundedness, or a
concrete escape index.

Run:  python demos/02_connectivity_showcase.py
"""

from pathlib import Path

from powerfractal import (
    GridSpec,
    JuliaMode,
    colorize,
    compute_escape_field,
    julia_connectivity,
    write_ppm,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

spec = GridSpec(center=0j, width=4.0, cols=512, rows=512)

for label, c in [("inside", -0.33 + 0.57j), ("outside", 0.44 + 0.15j)]:
    verdict = julia_connectivity(c)
    field = compute_escape_field(spec, JuliaMode(c), workers=4)
    interior_share = (~field.escaped()).mean()
    path = OUT / f"julia_{label}.ppm"
    write_ppm(colorize(field), path)
    print(f"c = {c}  ({label} the locus)")
    print(f"  verdict:  {verdict.describe()}")
    print(f"  bounded pixels: {interior_share:.1%} of the window")
    print(f"  image:    {path}")
    print()

print("The disconnected case still shows plenty of slow-escaping pixels --")
print("the dust has structure -- but no pixel survives the full budget.")
