"""Finite-dimensional real normed spaces holding the terms of a series.

Scalars are plain floats; vectors are read-only float64 numpy arrays. Both
spaces are complete, so they are Banach spaces.
"""
from __future__ import annotations

import math

import numpy as np


class DimensionMismatch(ValueError):
    pass


class Space:
    dim: int = 1

    def zero(self):
        raise NotImplementedError

    def contains(self, x) -> bool:
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    @property
    def rounding_factor(self) -> float:
        # worst-case ratio between coordinatewise rounding and the norm
        return math.sqrt(self.dim)


class RealScalar(Space):
    def zero(self) -> float:
        return 0.0

    def contains(self, x) -> bool:
        return isinstance(x, (float, int)) and not isinstance(x, bool)

    def format(self, x) -> str:
        return repr(float(x))

    def parse(self, text: str) -> float:
        return float(text)

    def __eq__(self, other):
        return isinstance(other, RealScalar)

    def __hash__(self):
        return hash(RealScalar)

    def __repr__(self):
        return "RealScalar()"


class RealVector(Space):
    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self.dim = dim

    def zero(self) -> np.ndarray:
        return vector(np.zeros(self.dim))

    def contains(self, x) -> bool:
        return isinstance(x, np.ndarray) and x.shape == (self.dim,)

    def format(self, x) -> str:
        return ";".join(repr(float(v)) for v in x)

    def parse(self, text: str) -> np.ndarray:
        x = vector([float(v) for v in text.split(";")])
        if x.shape != (self.dim,):
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {x.shape[0]}")
        return x

    def __eq__(self, other):
        return isinstance(other, RealVector) and other.dim == self.dim

    def __hash__(self):
        return hash((RealVector, self.dim))

    def __repr__(self):
        return f"RealVector({self.dim})"


SCALAR = RealScalar()


def vector(values) -> np.ndarray:
    x = np.array(values, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("vectors must be one-dimensional")
    x.flags.writeable = False
    return x


def axpy(c: float, x, y):
    """Return ``c*x + y``."""
    if isinstance(x, np.ndarray) or isinstance(y, np.ndarray):
        x, y = np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
        if x.shape != y.shape:
            raise DimensionMismatch(f"cannot combine shapes {x.shape} and {y.shape}")
        out = c * x + y
        out.flags.writeable = False
        return out
    return c * x + y


def norm(x) -> float:
    """Absolute value for scalars, Euclidean norm for vectors."""
    if isinstance(x, np.ndarray):
        # hypot rescales, so tiny nonzero vectors keep a nonzero norm
        return math.hypot(*(float(v) for v in x))
    return abs(float(x))


def space_of(x) -> Space:
    if isinstance(x, np.ndarray):
        return RealVector(x.shape[0])
    return SCALAR
