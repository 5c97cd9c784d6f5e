"""Euclidean-domain abstraction and the reduced-fraction type over it.

A concrete domain (see :mod:`recip.instances`) supplies element arithmetic
through ordinary Python operators plus the handful of hooks declared on
:class:`EuclideanDomain`: division with remainder, the Euclidean function,
unit detection and unit normalization.  Everything else here (gcd, fraction
reduction, :func:`power_gap`) is written once against those hooks.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Iterator, NamedTuple


class RecipError(Exception):
    """Base class for mathematical errors raised by this package."""


class ZeroDivisorError(RecipError, ZeroDivisionError):
    pass


class DomainError(RecipError, ValueError):
    pass


class DivisionResult(NamedTuple):
    quotient: Any
    remainder: Any


class EuclideanDomain(ABC):
    """A Euclidean domain instance.

    Elements are plain values supporting ``+ - *`` and unary minus.  Handles
    are immutable; build them with :func:`recip.instances.make_domain` so that
    equal descriptors share one handle.
    """

    selector: str
    zero: Any
    one: Any

    # -- hooks -------------------------------------------------------------

    @abstractmethod
    def _divmod(self, b, a) -> DivisionResult:
        """Return (q, r) with ``b == q*a + r``; ``a`` is nonzero."""

    @abstractmethod
    def _value(self, a) -> int:
        """Euclidean function on a nonzero element."""

    @abstractmethod
    def unit_inverse(self, a):
        """Return the inverse of ``a`` in the domain, or None if ``a`` is not a unit."""

    @abstractmethod
    def normal_unit(self, a):
        """Return the unit ``u`` with ``a*u`` in canonical associate form."""

    @abstractmethod
    def sort_key(self, a) -> tuple:
        """Total order used for enumeration: Euclidean value, then encoding."""

    @abstractmethod
    def convert(self, value):
        """Coerce a Python value (int, etc.) into an element of this domain."""

    def units(self) -> list | None:
        """The unit group as an explicit list, or None when it is infinite."""
        return None

    @abstractmethod
    def minimal_nonunit(self):
        ...

    def enumerate_elements(self, bound: int) -> Iterator:
        raise DomainError("instance not finitely enumerable per Euclidean value")

    @property
    def enumerable(self) -> bool:
        return False

    @property
    def is_polynomial(self) -> bool:
        return False

    # -- derived operations ------------------------------------------------

    def divmod(self, b, a) -> DivisionResult:
        """Division with remainder: ``b = q*a + r`` with ``r == 0`` or ``f(r) < f(a)``.

        Argument order follows the builtin :func:`divmod` (dividend first).
        """
        a, b = self.convert(a), self.convert(b)
        if a == self.zero:
            raise ZeroDivisorError("division by zero element")
        return self._divmod(b, a)

    def euclidean_value(self, a) -> int:
        a = self.convert(a)
        if a == self.zero:
            raise DomainError("Euclidean function is undefined at zero")
        return self._value(a)

    f = euclidean_value

    def is_unit(self, a) -> bool:
        a = self.convert(a)
        return a != self.zero and self.unit_inverse(a) is not None

    def gcd(self, a, b):
        while b != self.zero:
            a, b = b, self._divmod(a, b).remainder
        return a

    def exact_div(self, b, a):
        q, r = self.divmod(b, a)
        if r != self.zero:
            raise DomainError(f"{a} does not divide {b}")
        return q

    def reduce(self, n, d) -> Fraction:
        """The reduced, unit-normalized fraction equal to ``n/d``."""
        n, d = self.convert(n), self.convert(d)
        if d == self.zero:
            raise ZeroDivisorError("division by zero element")
        if n == self.zero:
            return Fraction(self.zero, self.one, self)
        g = self.gcd(n, d)
        n, d = self.exact_div(n, g), self.exact_div(d, g)
        u = self.normal_unit(d)
        return Fraction(n * u, d * u, self)

    def frac(self, n, d=None) -> Fraction:
        return self.reduce(n, self.one if d is None else d)

    def power_gap(self, a, b, c) -> int:
        """Least ``n >= 0`` with ``f(a**n * b) > f(c)``, for ``a`` a nonzero nonunit."""
        a, b, c = self.convert(a), self.convert(b), self.convert(c)
        if a == self.zero or self.is_unit(a):
            raise DomainError("power_gap needs a nonzero nonunit base")
        target = self.euclidean_value(c)
        n, x = 0, b
        while self.euclidean_value(x) <= target:
            x = x * a
            n += 1
        return n

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"<{type(self).__name__} {self.selector}>"


class Fraction:
    """An element of Frac(D) kept as a reduced, unit-normalized pair.

    Build through :meth:`EuclideanDomain.reduce`; the constructor trusts its
    arguments.  Equality is syntactic on the canonical pair.
    """

    __slots__ = ("num", "den", "domain")

    def __init__(self, num, den, domain: EuclideanDomain):
        self.num = num
        self.den = den
        self.domain = domain

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError("Fraction is immutable")
        object.__setattr__(self, name, value)

    def _coerce(self, other) -> Fraction:
        if isinstance(other, Fraction):
            if other.domain is not self.domain:
                raise DomainError("fractions over different domains")
            return other
        return self.domain.frac(other)

    def __add__(self, other):
        other = self._coerce(other)
        return self.domain.reduce(self.num * other.den + other.num * self.den,
                                  self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Fraction(-self.num, self.den, self.domain)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return self.domain.reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> Fraction:
        if self.is_zero():
            raise ZeroDivisorError("division by zero element")
        return self.domain.reduce(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return self.num == self.domain.zero

    def __eq__(self, other):
        if isinstance(other, Fraction):
            return (self.domain is other.domain and self.num == other.num
                    and self.den == other.den)
        return NotImplemented

    def __hash__(self):
        return hash((self.domain.selector, self.num, self.den))

    def __str__(self):
        fmt = self.domain.format
        if self.den == self.domain.one:
            return fmt(self.num)
        return f"({fmt(self.num)})/({fmt(self.den)})"

    def __repr__(self):
        return f"Fraction({self}, {self.domain.selector})"
