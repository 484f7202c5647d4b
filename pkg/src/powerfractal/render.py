"""Escape fields over pixel grids, computed deterministically and in parallel.

Pixel (col, row) samples the complex plane at its center:

    re = center.re + (col + 0.5 - cols/2) * (width / cols)
    im = center.im + (rows/2 - row - 0.5) * (width / cols)

Row 0 is the top of the image (largest imaginary part), pixels are square,
and the window height follows as width * rows / cols.  No supersampling:
one sample per pixel, matching the binary draw rule of the escape-time
algorithm.

Two field modes share one kernel.  A parameter-plane field varies c per
pixel and starts every orbit at 0; a dynamic-plane field fixes c and uses
the pixel coordinate as the seed.  The vectorized kernel replays exactly
the double-precision operation sequence of iteration.escape_time, and
work is split into disjoint row bands, so the assembled field is bitwise
identical to per-pixel scalar evaluation and to itself under any worker
count.

Cells hold the escape index as int32, with 0 reserved as the interior
sentinel (real escape indices start at 1).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .iteration import IterationConfig, RENDER_CONFIG, require_finite

INTERIOR = 0  # cell value for pixels whose orbit never escaped

DEFAULT_MANDELBROT_WINDOW = (-0.5 + 0j, 3.0)  # (center, width) framing the whole locus
DEFAULT_JULIA_WINDOW = (0j, 4.0)


@dataclass(frozen=True)
class GridSpec:
    """Rectangular complex-plane window sampled on a cols x rows pixel grid."""

    center: complex = 0j
    width: float = 4.0
    cols: int = 512
    rows: int = 512

    def __post_init__(self):
        require_finite(self.center, "center")
        if not (math.isfinite(self.width) and self.width > 0):
            raise ValueError(f"width must be a finite positive value, got {self.width!r}")
        if self.cols < 1 or self.rows < 1:
            raise ValueError(f"grid needs at least one pixel per axis, got {self.cols}x{self.rows}")

    @property
    def pitch(self) -> float:
        """Complex-plane distance between adjacent pixel centers."""
        return self.width / self.cols

    @property
    def height(self) -> float:
        return self.width * self.rows / self.cols


@dataclass(frozen=True)
class MandelbrotMode:
    """Parameter-plane field: c varies per pixel, every orbit starts at 0."""


@dataclass(frozen=True)
class JuliaMode:
    """Dynamic-plane field for one fixed parameter: the seed varies per pixel."""

    c: complex

    def __post_init__(self):
        require_finite(self.c, "c")


MANDELBROT = MandelbrotMode()
FieldMode = MandelbrotMode | JuliaMode


def pixel_to_complex(spec: GridSpec, col: int, row: int) -> complex:
    """Complex coordinate of the center of pixel (col, row).

    Row 0 is the top of the image; out-of-range indices are a usage error.
    """
    if not 0 <= col < spec.cols:
        raise IndexError(f"col {col} out of range [0, {spec.cols})")
    if not 0 <= row < spec.rows:
        raise IndexError(f"row {row} out of range [0, {spec.rows})")
    pitch = spec.width / spec.cols
    return complex(
        spec.center.real + (col + 0.5 - spec.cols / 2.0) * pitch,
        spec.center.imag + (spec.rows / 2.0 - row - 0.5) * pitch,
    )


def escape_counts(z_re, z_im, c_re, c_im, cfg: IterationConfig = RENDER_CONFIG) -> np.ndarray:
    """Escape index per element, INTERIOR where bounded, as int32.

    Inputs broadcast against each other (scalars allowed); the result is
    flat.  Each iteration updates both components from the previous pair
    and then applies the strict squared-magnitude test, in the same
    operation order as the scalar kernel, so results match it bitwise.
    Escaped elements leave the working set immediately, which keeps the
    cost proportional to the surviving pixels.
    """
    zr, zi, cr, ci = (
        np.ascontiguousarray(a, dtype=np.float64).ravel()
        for a in np.broadcast_arrays(z_re, z_im, c_re, c_im)
    )
    n = zr.size
    counts = np.full(n, INTERIOR, dtype=np.int32)
    alive = np.arange(n)
    limit = cfg.bailout_squared
    for t in range(1, cfg.max_iterations + 1):
        new_r = zr * zr - zi * zi + cr
        new_i = 2.0 * zr * zi + ci
        escaped = new_r * new_r + new_i * new_i > limit
        if escaped.any():
            counts[alive[escaped]] = t
            keep = ~escaped
            alive = alive[keep]
            if alive.size == 0:
                break
            zr, zi, cr, ci = new_r[keep], new_i[keep], cr[keep], ci[keep]
        else:
            zr, zi = new_r, new_i
    return counts


@dataclass(frozen=True, eq=False)
class EscapeField:
    """Grid of per-pixel escape indices (INTERIOR sentinel where bounded)."""

    spec: GridSpec
    mode: FieldMode
    cells: np.ndarray  # rows x cols int32, row 0 at top
    budget: int

    def __post_init__(self):
        if self.cells.shape != (self.spec.rows, self.spec.cols):
            raise ValueError(
                f"cells shape {self.cells.shape} does not match grid {self.spec.rows}x{self.spec.cols}"
            )
        if self.cells.dtype != np.int32:
            raise ValueError(f"cells must be int32, got {self.cells.dtype}")

    def escaped(self) -> np.ndarray:
        """Boolean mask of pixels that escaped within the budget."""
        return self.cells != INTERIOR


def _axis_coordinates(spec: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    # Same expression structure as pixel_to_complex, evaluated per axis.
    pitch = spec.width / spec.cols
    re = spec.center.real + (np.arange(spec.cols, dtype=np.float64) + 0.5 - spec.cols / 2.0) * pitch
    im = spec.center.imag + (spec.rows / 2.0 - np.arange(spec.rows, dtype=np.float64) - 0.5) * pitch
    return re, im


def compute_escape_field(
    spec: GridSpec,
    mode: FieldMode,
    cfg: IterationConfig = RENDER_CONFIG,
    workers: int = 1,
) -> EscapeField:
    """Evaluate the escape kernel over every pixel of the grid.

    A parameter-plane field runs the critical orbit of each pixel's
    coordinate; a dynamic-plane field runs escape_time from each pixel's
    coordinate under the fixed parameter.  Rows are split into disjoint
    bands across workers; since every pixel is independent, the output is
    bitwise identical for any worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    re_axis, im_axis = _axis_coordinates(spec)

    def band_counts(row_indices: np.ndarray) -> np.ndarray:
        nrows = row_indices.size
        plane_re = np.tile(re_axis, nrows)
        plane_im = np.repeat(im_axis[row_indices], spec.cols)
        if isinstance(mode, JuliaMode):
            counts = escape_counts(plane_re, plane_im, mode.c.real, mode.c.imag, cfg)
        else:
            counts = escape_counts(0.0, 0.0, plane_re, plane_im, cfg)
        return counts.reshape(nrows, spec.cols)

    bands = np.array_split(np.arange(spec.rows), min(workers, spec.rows))
    if workers == 1:
        parts = [band_counts(band) for band in bands]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(band_counts, bands))
    cells = np.vstack(parts)
    cells.setflags(write=False)
    return EscapeField(spec, mode, cells, cfg.max_iterations)
