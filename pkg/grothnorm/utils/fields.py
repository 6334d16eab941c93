from enum import Enum

import numpy as np

from .exceptions import FieldMismatchError

__all__ = ["FieldTag", "TOL_ZERO", "TOL_PSD", "TOL_REPORT", "csign", "field_of"]

TOL_ZERO = 1e-10
TOL_PSD = 1e-8
TOL_REPORT = 1e-6


class FieldTag(Enum):
    """The base field of a matrix or of a norm request."""
    REAL = "real"
    COMPLEX = "complex"

    @property
    def dtype(self):
        return np.float64 if self is FieldTag.REAL else np.complex128

    @property
    def is_real(self):
        return self is FieldTag.REAL

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise FieldMismatchError(f"Unknown field {value!r}; use 'real' or 'complex'.") from None

    def check(self, other: "FieldTag"):
        if self is not other:
            raise FieldMismatchError(f"Field mismatch: {self.value} against {other.value}.")


def field_of(array) -> FieldTag:
    return FieldTag.COMPLEX if np.iscomplexobj(array) else FieldTag.REAL


def csign(z):
    """Elementwise sign with the convention sign(0) = 1.

    Real input gives entries in {-1, 1}; complex input gives unit-modulus
    entries z/|z|. The result never contains a zero.
    """
    z = np.asarray(z)
    if np.iscomplexobj(z):
        modulus = np.abs(z)
        safe = np.where(modulus > 0, modulus, 1.0)
        return np.where(modulus > 0, z / safe, 1.0 + 0.0j)
    return np.where(z >= 0, 1.0, -1.0)
