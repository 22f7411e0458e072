"""Counter-based splittable PRNG.

The generator is a SplitMix64-style bit mixer applied to ``key ^ mix(counter)``.
Every draw is a pure function of ``(key, counter)``, so streams are
reproducible across platforms and runs. ``split`` derives a child key from
``(key, index)`` with an independent mixing constant, giving statistically
independent streams for parallel work (per-seed runs, per-cell grids).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_SPLIT_TAG = np.uint64(0xD6E8FEB86659FD93)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@dataclass(frozen=True)
class PrngState:
    """Immutable generator state: draws advance the counter, never the key."""

    key: int
    counter: int = 0

    def __post_init__(self):
        object.__setattr__(self, "key", int(self.key) & 0xFFFFFFFFFFFFFFFF)
        object.__setattr__(self, "counter", int(self.counter) & 0xFFFFFFFFFFFFFFFF)


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z + _GOLDEN) & _MASK
    z = ((z ^ (z >> np.uint64(30))) * _MIX1) & _MASK
    z = ((z ^ (z >> np.uint64(27))) * _MIX2) & _MASK
    return z ^ (z >> np.uint64(31))


def _raw(key: int, counters: np.ndarray) -> np.ndarray:
    return _mix64(np.uint64(key) ^ _mix64(counters.astype(np.uint64)))


def next_uint64(state: PrngState) -> tuple[int, PrngState]:
    val = _raw(state.key, np.array([state.counter], dtype=np.uint64))[0]
    return int(val), PrngState(state.key, state.counter + 1)


def next_uniform(state: PrngState) -> tuple[float, PrngState]:
    """One draw uniform in [0, 1) with 53 random mantissa bits."""
    val, state = next_uint64(state)
    return (val >> 11) * (1.0 / (1 << 53)), state


def uniform_array(state: PrngState, shape, low: float = 0.0, high: float = 1.0) -> tuple[np.ndarray, PrngState]:
    """Uniform array in [low, high); advances the counter by the element count."""
    n = int(np.prod(shape)) if shape else 1
    counters = (np.uint64(state.counter) + np.arange(n, dtype=np.uint64)) & _MASK
    bits = _raw(state.key, counters)
    u = (bits >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))
    out = (low + (high - low) * u).reshape(shape)
    return out, PrngState(state.key, state.counter + n)


def normal_array(state: PrngState, shape, mean: float = 0.0, std: float = 1.0) -> tuple[np.ndarray, PrngState]:
    """Standard Box-Muller off two uniform arrays."""
    n = int(np.prod(shape)) if shape else 1
    u1, state = uniform_array(state, (n,))
    u2, state = uniform_array(state, (n,))
    u1 = np.maximum(u1, 1e-300)
    z = np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
    return (mean + std * z).reshape(shape), state


def randint(state: PrngState, low: int, high: int) -> tuple[int, PrngState]:
    """One integer in [low, high) by rejection-free modular reduction."""
    span = high - low
    if span <= 0:
        raise ValueError(f"randint: empty range [{low}, {high})")
    val, state = next_uint64(state)
    return low + val % span, state


def permutation(state: PrngState, n: int) -> tuple[np.ndarray, PrngState]:
    """Fisher-Yates permutation of range(n)."""
    idx = np.arange(n)
    for i in range(n - 1, 0, -1):
        j, state = randint(state, 0, i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx, state


def split(state: PrngState, index: int = 0) -> PrngState:
    """Child stream keyed by (key, index); independent of the parent's counter."""
    tag = (np.uint64(index & 0xFFFFFFFFFFFFFFFF) * _SPLIT_TAG) & _MASK
    child_key = _mix64(np.array([np.uint64(state.key) ^ tag], dtype=np.uint64))[0]
    return PrngState(int(child_key), 0)
