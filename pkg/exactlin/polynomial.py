"""
Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples (one nonnegative int per variable)
to nonzero ``Fraction`` coefficients. The zero polynomial has no terms and its
degree is ``None``; callers must check for it before doing degree arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from exactlin.scalars import PrimeField, to_fraction

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]


class SparsePolynomial:
    """Immutable sparse polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Coefficient]] = None):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != nvars:
                raise ValueError(
                    f"exponent {exponent} has length {len(exponent)}, expected {nvars}"
                )
            if any(e < 0 for e in exponent):
                raise ValueError(f"negative exponent in {exponent}")
            value = clean.get(exponent, Fraction(0)) + to_fraction(coefficient)
            if value:
                clean[exponent] = value
            else:
                clean.pop(exponent, None)
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, nvars: int, terms: Dict[Exponent, Fraction]) -> "SparsePolynomial":
        # Trusted constructor: terms are already canonical.
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls._wrap(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Coefficient) -> "SparsePolynomial":
        value = to_fraction(value)
        return cls._wrap(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exponent = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._wrap(nvars, {exponent: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: Coefficient = 1) -> "SparsePolynomial":
        return cls(len(exponent), {tuple(exponent): coefficient})

    # Inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    @property
    def degree(self) -> Optional[int]:
        """Total degree; None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Lexicographically largest term."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exponent = max(self._terms)
        return exponent, self._terms[exponent]

    def __len__(self) -> int:
        return len(self._terms)

    # Arithmetic

    def _check(self, other: "SparsePolynomial"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> Optional["SparsePolynomial"]:
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SparsePolynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, 0) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return SparsePolynomial._wrap(self.nvars, result)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._wrap(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, factor: Coefficient) -> "SparsePolynomial":
        factor = to_fraction(factor)
        if not factor:
            return SparsePolynomial.zero(self.nvars)
        return SparsePolynomial._wrap(self.nvars, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check(other)
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                value = result.get(exponent, 0) + c1 * c2
                if value:
                    result[exponent] = value
                else:
                    result.pop(exponent, None)
        return SparsePolynomial._wrap(self.nvars, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_div(self, divisor: "SparsePolynomial") -> "SparsePolynomial":
        """
        Quotient of an exact division.

        Raises:
            ZeroDivisionError: divisor is zero
            ArithmeticError: divisor does not divide self
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(1 / divisor.constant_value())

        lead_exp, lead_coeff = divisor.leading_term()
        remainder = dict(self._terms)
        quotient: Dict[Exponent, Fraction] = {}
        while remainder:
            exponent = max(remainder)
            shift = tuple(a - b for a, b in zip(exponent, lead_exp))
            if any(s < 0 for s in shift):
                raise ArithmeticError("polynomial division is not exact")
            factor = remainder[exponent] / lead_coeff
            quotient[shift] = factor
            for e, c in divisor._terms.items():
                target = tuple(a + b for a, b in zip(e, shift))
                value = remainder.get(target, 0) - factor * c
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return SparsePolynomial._wrap(self.nvars, quotient)

    def partial(self, index: int) -> "SparsePolynomial":
        """Formal partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.nvars:
            raise ValueError(f"variable index {index} out of range for {self.nvars} variables")
        result: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            power = exponent[index]
            if power:
                lowered = exponent[:index] + (power - 1,) + exponent[index + 1:]
                result[lowered] = coefficient * power
        return SparsePolynomial._wrap(self.nvars, result)

    def extend(self, nvars: int) -> "SparsePolynomial":
        """Same polynomial in a larger ring; new variables are appended and unused."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable count")
        pad = (0,) * (nvars - self.nvars)
        return SparsePolynomial._wrap(nvars, {e + pad: c for e, c in self._terms.items()})

    def shift_variables(self, offset: int, nvars: int) -> "SparsePolynomial":
        """Embed into ``nvars`` variables with this ring's variables starting at ``offset``."""
        if offset + self.nvars > nvars:
            raise ValueError("embedding does not fit")
        before = (0,) * offset
        after = (0,) * (nvars - offset - self.nvars)
        return SparsePolynomial._wrap(nvars, {before + e + after: c for e, c in self._terms.items()})

    def substitute_linear(self, images: Sequence["SparsePolynomial"]) -> "SparsePolynomial":
        """
        Replace variable i by ``images[i]``, a polynomial of degree at most one.

        All images must live in a common ring, which becomes the result's ring.
        """
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        if not images:
            return self
        target = images[0].nvars
        for image in images:
            if image.nvars != target:
                raise ValueError("images must share one variable count")
            if (image.degree or 0) > 1:
                raise ValueError("images must be affine-linear")
        result = SparsePolynomial.zero(target)
        for exponent, coefficient in self._terms.items():
            term = SparsePolynomial.constant(target, coefficient)
            for image, power in zip(images, exponent):
                if power:
                    term = term * image ** power
            result = result + term
        return result

    # Evaluation

    def evaluate(self, point: Sequence[Coefficient]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        values = [to_fraction(v) for v in point]
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for v, e in zip(values, exponent):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate_mod(self, point: Sequence[int], field: PrimeField) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        p = field.modulus
        total = 0
        for exponent, coefficient in self._terms.items():
            term = field.reduce(coefficient)
            for v, e in zip(point, exponent):
                if e:
                    term = term * pow(v, e, p) % p
            total += term
        return total % p

    # Printing

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        """Render in the grammar accepted by ``parse_poly``."""
        names = list(names) if names is not None else [f"x{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("one name per variable is required")
        if not self._terms:
            return "0"

        pieces = []
        for exponent in sorted(self._terms, reverse=True):
            coefficient = self._terms[exponent]
            factors = []
            for name, e in zip(names, exponent):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coefficient)
            if not factors:
                body = _format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_format_rational(magnitude)] + factors)
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))

        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {self.to_text()!r})"

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def polynomial_sum(polys: Iterable[SparsePolynomial], nvars: int) -> SparsePolynomial:
    total = SparsePolynomial.zero(nvars)
    for poly in polys:
        total = total + poly
    return total
