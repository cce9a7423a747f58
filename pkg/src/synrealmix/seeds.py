"""Deterministic seed derivation so batch items and RNG streams are independent."""

import numpy as np

_MASK = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One splitmix64 step; maps any 64-bit state to a well-mixed 64-bit value."""
    z = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


def derive_seed(seed: int, *path: int) -> int:
    """Fold path components (stream tag, step, item index, ...) into a child seed.

    Children of the same root seed are statistically independent, and the
    derivation is pure, so work can be fanned out without sharing RNG state.
    """
    s = int(seed) & _MASK
    for p in path:
        s = splitmix64(s ^ (int(p) & _MASK))
    return s


def rng_from(seed) -> np.random.Generator:
    """A Generator for an integer seed; passes an existing Generator through."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)
