"""Halton low-discrepancy sequences via radical inversion in prime bases."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# One coprime base per coordinate; six bases cover the supported dimensions.
PRIMES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True)
class HaltonConfig:
    """Sequence parameters: ambient dimension and first index used."""

    dim: int
    start_index: int = 1

    def __post_init__(self):
        if not 2 <= self.dim <= len(PRIMES):
            raise ValueError(f"dim must be in 2..{len(PRIMES)}, got {self.dim}")
        if self.start_index < 1:
            raise ValueError(f"start_index must be >= 1, got {self.start_index}")

    @property
    def bases(self) -> tuple[int, ...]:
        return PRIMES[: self.dim]


def radical_inverse(index: int, base: int) -> float:
    """Reflect the base-b digits of a positive integer about the radix point.

    The digits are accumulated as one exact integer fraction and divided
    once at the end, so equal indices always give bit-identical results.
    """
    if index < 1:
        raise ValueError(f"index must be >= 1, got {index}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    num, den = 0, 1
    x = index
    while x > 0:
        x, digit = divmod(x, base)
        num = num * base + digit
        den *= base
    return num / den


def _radical_inverse_many(indices: np.ndarray, base: int) -> np.ndarray:
    num = np.zeros_like(indices)
    den = np.ones_like(indices)
    x = indices.copy()
    while np.any(x > 0):
        x, digit = np.divmod(x, base)
        num = num * base + digit
        den *= base
    return num / den


def halton_points(count: int, dim: int, start_index: int = 1) -> np.ndarray:
    """First `count` Halton points in [0,1)^dim, one prime base per axis."""
    cfg = HaltonConfig(dim=dim, start_index=start_index)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    if count == 0:
        return np.empty((0, dim))
    indices = np.arange(cfg.start_index, cfg.start_index + count, dtype=np.int64)
    return np.column_stack([_radical_inverse_many(indices, b) for b in cfg.bases])
