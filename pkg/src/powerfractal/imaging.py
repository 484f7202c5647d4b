"""Escape fields to RGB images and bit-exact binary PPM files.

Coloring follows the classic draw rule: interior pixels get the reserved
interior color (black by default) and escaped pixels get a color keyed to
how fast they escaped.  The default escape ramp is a fixed 256-entry hue
wheel -- entry h is the fully saturated, full-value HSV color at hue
h/256, each channel rounded as round(255 * channel) -- indexed at
(escape_index * hue_step) mod 256 with hue_step 8, so small indices land
on visibly distinct colors.  No ramp entry may equal the interior color;
palette validation enforces that reservation and a minimum contrast for
the first escape index against the interior.

Files are binary PPM (P6): the ASCII header "P6\\n<cols> <rows>\\n255\\n"
followed by raw row-major RGB bytes, top row first, nothing else.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass, field

import numpy as np

from .render import GridSpec, EscapeField, INTERIOR

RGB = tuple[int, int, int]
BLACK: RGB = (0, 0, 0)
YELLOW: RGB = (255, 255, 0)


def hue_wheel() -> tuple[RGB, ...]:
    """The default 256-entry ramp table (formula in the module docstring)."""
    table = []
    for h in range(256):
        r, g, b = colorsys.hsv_to_rgb(h / 256.0, 1.0, 1.0)
        table.append((round(255 * r), round(255 * g), round(255 * b)))
    return tuple(table)


def _l1_distance(a: RGB, b: RGB) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True)
class PaletteSpec:
    """Interior color plus the escape ramp; validated so they never collide."""

    interior_color: RGB = BLACK
    ramp: tuple[RGB, ...] = field(default_factory=hue_wheel)
    hue_step: int = 8
    min_first_escape_contrast: int = 96  # L1 distance required between ramp(1) and interior

    def __post_init__(self):
        if not self.ramp:
            raise ValueError("escape ramp must have at least one entry")
        if self.hue_step < 1:
            raise ValueError(f"hue_step must be >= 1, got {self.hue_step!r}")
        for color in (self.interior_color, *self.ramp):
            if len(color) != 3 or any(not (0 <= v <= 255 and int(v) == v) for v in color):
                raise ValueError(f"colors are integer RGB triples in [0, 255], got {color!r}")
        if self.interior_color in self.ramp:
            raise ValueError("interior color is reserved; it may not appear in the escape ramp")
        if _l1_distance(self.escape_color(1), self.interior_color) < self.min_first_escape_contrast:
            raise ValueError("first escape color does not contrast enough with the interior")

    def escape_color(self, index: int) -> RGB:
        return self.ramp[(index * self.hue_step) % len(self.ramp)]


DEFAULT_PALETTE = PaletteSpec()


@dataclass(frozen=True)
class ImageBuffer:
    """Row-major RGB pixels, 3 bytes per pixel, top row first."""

    cols: int
    rows: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != self.cols * self.rows * 3:
            raise ValueError(
                f"pixel buffer holds {len(self.pixels)} bytes, expected {self.cols * self.rows * 3}"
            )


def colorize(field: EscapeField, palette: PaletteSpec = DEFAULT_PALETTE) -> ImageBuffer:
    """Map each cell through the palette; interior sentinel -> interior color."""
    lut = np.array(palette.ramp, dtype=np.uint8)
    indices = (field.cells.astype(np.int64) * palette.hue_step) % len(palette.ramp)
    rgb = lut[indices]
    rgb[field.cells == INTERIOR] = np.array(palette.interior_color, dtype=np.uint8)
    return ImageBuffer(field.spec.cols, field.spec.rows, rgb.tobytes())


def overlay_marker(
    img: ImageBuffer,
    spec: GridSpec,
    point: complex,
    color: RGB = YELLOW,
) -> ImageBuffer:
    """Return a copy of the image with a filled square marker over the point.

    The square has side max(3, cols // 100) pixels, is centered on the
    pixel containing the point, and is clipped at the image borders.  A
    point outside the grid window is an error naming the window bounds.
    """
    if (img.cols, img.rows) != (spec.cols, spec.rows):
        raise ValueError(
            f"image is {img.cols}x{img.rows} but grid is {spec.cols}x{spec.rows}"
        )
    half_w = spec.width / 2.0
    half_h = spec.height / 2.0
    re_lo, re_hi = spec.center.real - half_w, spec.center.real + half_w
    im_lo, im_hi = spec.center.imag - half_h, spec.center.imag + half_h
    if not (re_lo <= point.real <= re_hi and im_lo <= point.imag <= im_hi):
        raise ValueError(
            f"marker point {point} outside window re [{re_lo}, {re_hi}], im [{im_lo}, {im_hi}]"
        )
    pitch = spec.pitch
    col = int((point.real - spec.center.real) / pitch + spec.cols / 2.0)
    row = int(spec.rows / 2.0 - (point.imag - spec.center.imag) / pitch)
    col = min(max(col, 0), spec.cols - 1)  # points on the far edges belong to the last pixel
    row = min(max(row, 0), spec.rows - 1)

    side = max(3, spec.cols // 100)
    c_lo = max(col - side // 2, 0)
    c_hi = min(col - side // 2 + side, spec.cols)
    r_lo = max(row - side // 2, 0)
    r_hi = min(row - side // 2 + side, spec.rows)

    rgb = np.frombuffer(img.pixels, dtype=np.uint8).reshape(img.rows, img.cols, 3).copy()
    rgb[r_lo:r_hi, c_lo:c_hi] = np.array(color, dtype=np.uint8)
    return ImageBuffer(img.cols, img.rows, rgb.tobytes())


def write_ppm(img: ImageBuffer, destination) -> None:
    """Write the image as binary PPM (P6), bit-exact as documented above."""
    header = f"P6\n{img.cols} {img.rows}\n255\n".encode("ascii")
    with open(destination, "wb") as f:
        f.write(header)
        f.write(img.pixels)


def read_ppm(source) -> ImageBuffer:
    """Parse a PPM file in exactly the form write_ppm emits."""
    with open(source, "rb") as f:
        data = f.read()
    if not data.startswith(b"P6\n"):
        raise ValueError(f"{source}: not a binary PPM written by this package")
    dims_end = data.index(b"\n", 3)
    cols_text, rows_text = data[3:dims_end].split(b" ")
    depth_end = data.index(b"\n", dims_end + 1)
    if data[dims_end + 1 : depth_end] != b"255":
        raise ValueError(f"{source}: unsupported sample depth")
    return ImageBuffer(int(cols_text), int(rows_text), data[depth_end + 1 :])
