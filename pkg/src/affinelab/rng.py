"""Reproducible random streams.

A :class:`RngStream` is a value, not a stateful generator: the pair
``(master_seed, stream_id)`` fully determines every draw an operation
makes from it.  Operations that need several independent sources derive
substreams with a fixed layout, so results never depend on thread count
or scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels

_WORD = 1 << 64


@dataclass(frozen=True)
class RngStream:
    """Key of a deterministic random stream.

    Values are reduced modulo 2**64.  Distinct keys give streams that are
    independent for all practical purposes (xoshiro256++ states derived
    through a SplitMix64 mixing chain, see ``kernels.seed_words``).
    """

    master_seed: int
    stream_id: int

    def __post_init__(self):
        object.__setattr__(self, "master_seed", int(self.master_seed) % _WORD)
        object.__setattr__(self, "stream_id", int(self.stream_id) % _WORD)

    def state_words(self) -> tuple[int, int, int, int]:
        return kernels.seed_words(self.master_seed, self.stream_id)

    def sample_uniforms(self, n: int) -> np.ndarray:
        """n uniforms on [0, 1); mainly for smoke tests."""
        out = np.empty(int(n), dtype=np.float64)
        kernels.fill_uniforms(out, self.master_seed, self.stream_id)
        return out


def derive_stream(master_seed: int, replicate: int) -> RngStream:
    """Stream used by replicate ``replicate`` of a run seeded with
    ``master_seed``.  The mapping is the identity on the pair, hence
    injective and stable across versions."""
    return RngStream(master_seed, replicate)


def substream(rng: RngStream, batch: int, index: int) -> RngStream:
    """Independent substream ``index`` of batch ``batch`` under ``rng``.

    Layout (frozen): ``stream_id + (batch << 32) + index`` modulo 2**64,
    so batch 0 keeps the plain per-replicate ids 0..n-1.
    """
    return RngStream(rng.master_seed, rng.stream_id + (int(batch) << 32) + int(index))


__all__ = ["RngStream", "derive_stream", "substream"]
