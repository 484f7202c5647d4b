"""Seeded, portable pseudo-random sampling.

Symmetry reports must be reproducible across runs, machines and
implementations, so sampling uses a plainly documented 64-bit linear
congruential generator instead of a platform RNG:

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2**64

(Knuth's MMIX multiplier and increment).  Each draw advances the state
once and yields the top 53 bits scaled into [0, 1).
"""

from __future__ import annotations

_MULTIPLIER = 6364136223846793005
_INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg64:
    """Deterministic generator for the recurrence documented above."""

    def __init__(self, seed: int = 0):
        self._state = seed & _MASK

    def next_float(self) -> float:
        """Next draw in [0, 1): the top 53 state bits divided by 2**53."""
        self._state = (_MULTIPLIER * self._state + _INCREMENT) & _MASK
        return (self._state >> 11) * 2.0**-53

    def uniform(self, low: float, high: float) -> float:
        return low + (high - low) * self.next_float()

    def complex_in_window(self, center: complex = 0j, width: float = 4.0, height: float = 4.0) -> complex:
        """Uniform point in an axis-aligned window; draws re first, then im."""
        re = self.uniform(center.real - width / 2.0, center.real + width / 2.0)
        im = self.uniform(center.imag - height / 2.0, center.imag + height / 2.0)
        return complex(re, im)
