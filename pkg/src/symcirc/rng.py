"""Deterministic counter-based randomness.

All randomized code draws from numpy's Philox counter-based generator.  A
stream is keyed by the user seed plus a tuple of purpose tags (strings or
ints), so independent pipeline stages get independent, reproducible streams:

    rng = stream(seed, "ilp-repeat", 7)

The same (seed, tags) always yields the same stream, on any platform.
"""

import hashlib

import numpy as np
from numpy.random import Generator, Philox, SeedSequence


def _tag_int(tag) -> int:
    if isinstance(tag, (int, np.integer)):
        return int(tag) & 0xFFFFFFFFFFFFFFFF
    digest = hashlib.blake2b(str(tag).encode(), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def stream(seed: int, *tags) -> Generator:
    entropy = [int(seed) & 0xFFFFFFFFFFFFFFFF] + [_tag_int(t) for t in tags]
    return Generator(Philox(SeedSequence(entropy)))


def coin(rng: Generator) -> int:
    return int(rng.integers(0, 2))
