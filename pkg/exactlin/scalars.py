"""
Prime-field and rational scalars.

Rationals are plain ``fractions.Fraction`` values (always in lowest terms with a
positive denominator). Prime-field elements are small immutable wrappers that
carry their modulus; bulk arithmetic inside matrices works on raw ints instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np
from sympy import isprime

from config.settings import DEFAULT_PRIME
from core.exceptions import SpecError

RationalScalar = Fraction

Number = Union[int, Fraction]


@lru_cache(maxsize=None)
def _checked_prime(modulus: int) -> bool:
    return modulus >= 2 and bool(isprime(modulus))


def to_fraction(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, strings like "3/4" and fractions to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    return Fraction(value)


@dataclass(frozen=True)
class PrimeField:
    """The field of integers modulo a prime."""

    modulus: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _checked_prime(self.modulus):
            raise SpecError(f"modulus must be a prime, got {self.modulus}")

    def reduce(self, value: Number) -> int:
        """Map an integer or rational to its residue."""
        if isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise SpecError(
                    f"denominator of {value} vanishes modulo {self.modulus}; choose another prime"
                )
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return int(value) % self.modulus

    def inverse(self, value: int) -> int:
        if value % self.modulus == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(value, -1, self.modulus)

    def power(self, base: int, exponent: int) -> int:
        """Power allowing negative exponents (base must then be nonzero)."""
        if exponent < 0:
            return pow(self.inverse(base), -exponent, self.modulus)
        return pow(base, exponent, self.modulus)

    def random_nonzero(self, rng: np.random.Generator, size: int) -> tuple[int, ...]:
        """Draw independent uniform nonzero elements."""
        if self.modulus <= 2**63 - 1:
            draws = rng.integers(1, self.modulus, size=size, dtype=np.int64)
            return tuple(int(v) for v in draws)
        # Moduli beyond int64 are assembled from two 62-bit halves.
        values = []
        for _ in range(size):
            value = 0
            while value == 0:
                high = int(rng.integers(0, 2**62, dtype=np.int64))
                low = int(rng.integers(0, 2**62, dtype=np.int64))
                value = ((high << 62) | low) % self.modulus
            values.append(value)
        return tuple(values)

    def element(self, value: Number) -> "PrimeFieldScalar":
        return PrimeFieldScalar(self.reduce(value), self.modulus)


@dataclass(frozen=True)
class PrimeFieldScalar:
    """An element of Z/pZ."""

    value: int
    modulus: int = DEFAULT_PRIME

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, PrimeFieldScalar):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, (int, Fraction)):
            return PrimeField(self.modulus).reduce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar((self.value + o) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar((self.value - o) % self.modulus, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar((o - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldScalar(self.value * o % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldScalar(-self.value % self.modulus, self.modulus)

    def inverse(self) -> "PrimeFieldScalar":
        return PrimeFieldScalar(PrimeField(self.modulus).inverse(self.value), self.modulus)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldScalar(o, self.modulus).inverse()

    def __pow__(self, exponent: int):
        return PrimeFieldScalar(PrimeField(self.modulus).power(self.value, exponent), self.modulus)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldScalar):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"
