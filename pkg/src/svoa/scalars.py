"""Exact scalars in the cyclotomic field Q(zeta_24).

Every coefficient that shows up in the shipped examples (i, 1/sqrt2,
1/sqrt3, rationals) lives in Q(zeta_24), a degree-8 extension of Q.  A
:class:`Scalar` stores its coordinates on the power basis 1, z, ..., z^7
where z = exp(2 pi i / 24) satisfies z^8 = z^4 - 1.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from ._backend import cyclo as _k

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "ZETA",
    "SQRT2",
    "SQRT3",
    "INV_SQRT2",
    "INV_SQRT3",
    "named_constants",
    "as_scalar",
]

DEGREE = 8
# Galois group of Q(zeta_24)/Q: z -> z^k for k coprime to 24
_GALOIS = (1, 5, 7, 11, 13, 17, 19, 23)


class Scalar:
    """Immutable element of Q(zeta_24) in canonical (reduced) form."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, nums=None, den=1):
        if nums is None:
            nums = (0,) * DEGREE
        if len(nums) > DEGREE:
            nums = _k.reduce_poly(list(nums))
        elif len(nums) < DEGREE:
            nums = list(nums) + [0] * (DEGREE - len(nums))
        if den == 0:
            raise ZeroDivisionError("Scalar denominator is zero")
        self._n, self._d = _k.normalize([int(x) for x in nums], int(den))
        self._hash = None

    @classmethod
    def _raw(cls, nums, den):
        # caller guarantees canonical form
        s = object.__new__(cls)
        s._n = nums
        s._d = den
        s._hash = None
        return s

    @classmethod
    def from_rational(cls, q) -> Scalar:
        q = Fraction(q)
        return cls._raw((q.numerator,) + (0,) * (DEGREE - 1), q.denominator)

    @classmethod
    def from_coords(cls, coords) -> Scalar:
        """From rational coordinates on 1, z, ..., z^7 (longer inputs are reduced)."""
        qs = [Fraction(c) for c in coords]
        den = 1
        for q in qs:
            den = den * q.denominator // gcd(den, q.denominator)
        return cls([q.numerator * (den // q.denominator) for q in qs], den)

    @classmethod
    def zeta_power(cls, k: int) -> Scalar:
        return _zeta_pow(k % 24)

    # -- coordinates ---------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """The 8 rational coordinates on 1, z, ..., z^7."""
        return tuple(Fraction(x, self._d) for x in self._n)

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not any(self._n[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._n[0], self._d)

    def galois(self, k: int) -> Scalar:
        """Apply the automorphism z -> z^k (k coprime to 24)."""
        if k % 24 not in _GALOIS:
            raise ValueError(f"z -> z^{k} is not an automorphism")
        acc = [0] * DEGREE
        for j, x in enumerate(self._n):
            if x:
                p = _zeta_pow((j * k) % 24)._n
                for t in range(DEGREE):
                    acc[t] += x * p[t]
        return Scalar(acc, self._d)

    def conjugate(self) -> Scalar:
        """Complex conjugation, i.e. z -> z^23."""
        return self.galois(23)

    def norm(self) -> Fraction:
        """Field norm down to Q."""
        acc = self
        for k in _GALOIS[1:]:
            acc = acc * self.galois(k)
        return acc.to_fraction()

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        if self.is_rational():
            return Scalar._raw(
                (self._d if self._n[0] > 0 else -self._d,) + (0,) * (DEGREE - 1),
                abs(self._n[0]),
            )
        # a^-1 = (product of the other conjugates) / N(a)
        others = ONE
        for k in _GALOIS[1:]:
            others = others * self.galois(k)
        n = (self * others).to_fraction()
        return others * Scalar.from_rational(1 / n)

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / 24)
        return sum(x * z**j for j, x in enumerate(self._n)) / self._d

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._raw(*_k.add(self._n, self._d, other._n, other._d))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(tuple(-x for x in self._n), self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar._raw(*_k.mul(self._n, self._d, other._n, other._d))
        if isinstance(other, int):
            return Scalar._raw(*_k.scale(self._n, self._d, other, 1))
        if isinstance(other, Rational):
            return Scalar._raw(
                *_k.scale(self._n, self._d, other.numerator, other.denominator)
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        acc = ONE
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._d == other._d and self._n == other._n
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._d == other._d and self._n == other._n

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._n[0], self._d))
            else:
                self._hash = hash((self._n, self._d))
        return self._hash

    def __bool__(self):
        return any(self._n)

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        from .parsing import format_scalar

        return format_scalar(self)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar._raw((x,) + (0,) * (DEGREE - 1), 1)
    if isinstance(x, Rational):
        return Scalar.from_rational(x)
    return None


def as_scalar(x) -> Scalar:
    s = _coerce(x)
    if s is None:
        raise TypeError(f"cannot interpret {x!r} as a Scalar")
    return s


@lru_cache(maxsize=None)
def _zeta_pow(k: int) -> Scalar:
    c = [0] * 24
    c[k] = 1
    # z^12 = -1 folds the upper half; reduce_poly handles degrees 8..14
    for j in range(23, 11, -1):
        if c[j]:
            c[j - 12] -= c[j]
            c[j] = 0
    return Scalar(_k.reduce_poly(c[:15]))


ZERO = Scalar()
ONE = Scalar.from_rational(1)
ZETA = Scalar.zeta_power(1)
I = Scalar.zeta_power(6)
# sqrt2 = z8 + z8^-1 with z8 = z^3;  sqrt3 = z12 + z12^-1 with z12 = z^2
SQRT2 = Scalar.zeta_power(3) + Scalar.zeta_power(21)
SQRT3 = Scalar.zeta_power(2) + Scalar.zeta_power(22)
INV_SQRT2 = SQRT2 * Fraction(1, 2)
INV_SQRT3 = SQRT3 * Fraction(1, 3)


def named_constants() -> dict[str, Scalar]:
    return {
        "I": I,
        "SQRT2": SQRT2,
        "SQRT3": SQRT3,
        "INV_I": -I,
        "INV_SQRT2": INV_SQRT2,
        "INV_SQRT3": INV_SQRT3,
    }
