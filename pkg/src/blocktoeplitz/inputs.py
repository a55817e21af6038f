"""Seeded input sequences with mean 0 and variance 1.

Every sequence is addressed by ``(seed, replicate, stream)`` and drawn from
numpy's PCG64 seeded through ``SeedSequence(seed, spawn_key=(replicate, stream))``.
Both the bit generator and the seeding procedure are specified by numpy to be
platform independent, so a fixed seed gives the same values everywhere.
Values are drawn one double per element, so ``take(m)`` is always a prefix of
``take(m + 1)``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace

import numpy as np

DISTRIBUTIONS = ("rademacher", "gaussian", "uniform")
SEED_ENV = "BLOCKTOEPLITZ_SEED"
_SQRT3 = math.sqrt(3.0)


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "20111104"))


@dataclass(frozen=True)
class InputSpec:
    distribution: str = "rademacher"
    seed: int = field(default_factory=default_seed)

    def __post_init__(self):
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}; expected one of {DISTRIBUTIONS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    @property
    def bounded(self) -> bool:
        return self.distribution != "gaussian"

    def with_seed(self, seed: int) -> "InputSpec":
        return replace(self, seed=seed)


class InputStream:
    """Infinite reproducible sequence for one stream label."""

    def __init__(self, spec: InputSpec, stream: int, replicate: int = 0):
        if stream < 0 or replicate < 0:
            raise ValueError("stream and replicate labels must be non-negative")
        self.spec = spec
        self.stream = stream
        self.replicate = replicate

    def _generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.spec.seed, spawn_key=(self.replicate, self.stream))
        return np.random.Generator(np.random.PCG64(ss))

    @staticmethod
    def _draw(rng: np.random.Generator, dist: str, m: int) -> np.ndarray:
        if dist == "rademacher":
            return np.where(rng.random(m) < 0.5, -1.0, 1.0)
        if dist == "uniform":
            return (2.0 * rng.random(m) - 1.0) * _SQRT3
        return rng.standard_normal(m)

    def take(self, m: int) -> np.ndarray:
        """First ``m`` values of the stream."""
        return self._draw(self._generator(), self.spec.distribution, m)

    def __iter__(self):
        rng = self._generator()
        while True:
            yield from self._draw(rng, self.spec.distribution, 4096)


def sample_input(spec: InputSpec, stream: int, replicate: int = 0) -> InputStream:
    return InputStream(spec, stream, replicate)
