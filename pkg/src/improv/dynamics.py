"""Sliding-window "current dynamics" (mean of the last tau intensities) and
intensity rescaling for loudness coherence between player and machine."""

from __future__ import annotations

import math
from collections import deque
from fractions import Fraction


class DynamicsWindow:
    """Ring of the last tau intensities with an O(1) running sum."""

    def __init__(self, tau: int):
        if tau < 1:
            raise ValueError(f"tau must be >= 1, got {tau}")
        self._ring: deque[int] = deque()
        self.capacity = tau
        self.sum = 0

    def __len__(self) -> int:
        return len(self._ring)

    @property
    def average(self) -> Fraction | None:
        """Exact mean of the window contents, None while empty."""
        if not self._ring:
            return None
        return Fraction(self.sum, len(self._ring))

    def push(self, intensity: int) -> Fraction:
        """Append an intensity, evicting the oldest at capacity; returns the
        new average."""
        if not 1 <= intensity <= 127:
            raise ValueError(f"intensity must be in 1..127, got {intensity}")
        if len(self._ring) == self.capacity:
            self.sum -= self._ring.popleft()
        self._ring.append(intensity)
        self.sum += intensity
        return Fraction(self.sum, len(self._ring))

    def contents(self) -> list[int]:
        return list(self._ring)

    def resize(self, tau: int) -> None:
        """Change capacity, keeping the most recent intensities."""
        if tau < 1:
            raise ValueError(f"tau must be >= 1, got {tau}")
        while len(self._ring) > tau:
            self.sum -= self._ring.popleft()
        self.capacity = tau


def window_new(tau: int) -> DynamicsWindow:
    return DynamicsWindow(tau)


def compute_factor(user_avg, comp_avg) -> tuple[Fraction, bool]:
    """Loudness factor user_avg / comp_avg.

    Either average being None (empty window) yields the identity factor with
    a degenerate flag set.
    """
    if user_avg is None or comp_avg is None:
        return Fraction(1), True
    return Fraction(user_avg) / Fraction(comp_avg), False


def rescale(intensity: int, factor) -> int:
    """Scale an intensity by a positive factor, round half up, clamp to
    1..127."""
    f = Fraction(factor)
    if f <= 0:
        raise ValueError(f"factor must be positive, got {factor}")
    scaled = math.floor(intensity * f + Fraction(1, 2))
    return min(127, max(1, scaled))
