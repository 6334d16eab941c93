"""Reproducible random streams.

A stream is identified by a master seed and a stream id; the pair feeds a
``numpy.random.SeedSequence`` whose spawn key is the stream id, and the
counter-based Philox bit generator draws from it. Equal pairs give equal
sample sequences whatever the order in which streams are consumed.
"""
from dataclasses import dataclass, field

import numpy as np

from .fields import FieldTag

__all__ = ["RngStream"]


@dataclass(frozen=True)
class RngStream:
    """A reproducible random stream.

    Parameters
    ----------
    master_seed : int
        64-bit seed shared by a family of streams
    stream_id : int
        index of this stream inside the family

    """
    master_seed: int = 0
    stream_id: int = 0
    generator: np.random.Generator = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.master_seed < 0 or self.stream_id < 0:
            raise ValueError("Seeds and stream ids must be non-negative integers.")
        seq = np.random.SeedSequence(int(self.master_seed), spawn_key=(int(self.stream_id),))
        object.__setattr__(self, 'generator', np.random.Generator(np.random.Philox(seq)))

    def spawn(self, offset: int) -> "RngStream":
        """A fresh stream of the same family."""
        return RngStream(self.master_seed, self.stream_id * 100_003 + offset + 1)

    def normal(self, shape, field: FieldTag = FieldTag.REAL):
        """Standard Gaussian draws.

        Complex draws have unit variance per complex coordinate, i.e. real and
        imaginary parts of variance 1/2 each.
        """
        if FieldTag.parse(field) is FieldTag.REAL:
            return self.generator.standard_normal(shape)
        re, im = self.generator.standard_normal((2, *np.atleast_1d(shape)))
        return (re + 1j * im) / np.sqrt(2.0)

    def uniform(self, low=0.0, high=1.0, size=None):
        return self.generator.uniform(low, high, size)

    def integers(self, low, high=None, size=None):
        return self.generator.integers(low, high, size)
