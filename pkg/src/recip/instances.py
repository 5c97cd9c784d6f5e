"""Concrete Euclidean domains: Z, Z[i], F_p[x] and Q[x].

Integers are plain Python ints.  Gaussian integers and polynomials get small
immutable value classes with operator overloading so the generic algorithms
in :mod:`recip.domain` can treat every instance alike.
"""
from __future__ import annotations

import fractions
import functools
import itertools
from dataclasses import dataclass
from typing import Iterator

import gmpy2

from .domain import DivisionResult, DomainError, EuclideanDomain, ZeroDivisorError

SYMBOLIC_UNITS = "coefficient-field nonzero elements"


# ---------------------------------------------------------------------------
# Gaussian integers


def _round_half_to_zero(x: int, n: int) -> int:
    """Nearest integer to x/n (n > 0), ties broken toward zero."""
    q, rem = divmod(x, n)
    twice = 2 * rem
    if twice > n or (twice == n and q < 0):
        return q + 1
    return q


class GaussInt:
    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussInt is immutable")

    @classmethod
    def _lift(cls, other):
        if isinstance(other, GaussInt):
            return other
        if isinstance(other, int):
            return cls(other, 0)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussInt(-self.re, -self.im)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return GaussInt(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __divmod__(self, other):
        other = self._lift(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisorError("division by zero element")
        t = self * other.conjugate()
        q = GaussInt(_round_half_to_zero(t.re, n), _round_half_to_zero(t.im, n))
        return q, self - q * other

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{self.re}{sign}{im}"

    def __repr__(self):
        return f"GaussInt({self.re}, {self.im})"


# ---------------------------------------------------------------------------
# Coefficient fields and polynomials


class PrimeField:
    """F_p with elements stored as ints in ``range(p)``."""

    def __init__(self, p: int):
        self.p = p
        self.name = f"Fp:{p}"

    def __call__(self, c) -> int:
        if isinstance(c, fractions.Fraction):
            if c.denominator % self.p == 0:
                raise ZeroDivisorError(f"{c.denominator} is zero in F_{self.p}")
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c):
        return pow(c, -1, self.p)

    def elements(self) -> list[int]:
        return list(range(self.p))

    def format(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class RationalField:
    name = "Q"

    def __call__(self, c) -> fractions.Fraction:
        return fractions.Fraction(c)

    def inv(self, c):
        return 1 / c

    def format(self, c) -> str:
        return str(c)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


class Poly:
    """Univariate polynomial, coefficients lowest degree first.

    The coefficient tuple never ends in a zero; the zero polynomial is ``()``.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple, field) -> Poly:
        obj = object.__new__(cls)
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(obj, "coeffs", tuple(cs))
        object.__setattr__(obj, "field", field)
        return obj

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise DomainError("polynomials over different coefficient fields")
            return other
        if isinstance(other, (int, fractions.Fraction)):
            return Poly([other], self.field)
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        F = self.field
        return Poly._raw(tuple(F(a + b) for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=0)), F)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(self.field(-c) for c in self.coeffs), self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly._raw((), self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        F = self.field
        return Poly._raw(tuple(F(c) for c in out), F)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly._raw((self.field(1),), self.field)
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            raise ZeroDivisorError("division by zero element")
        F = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly._raw((), F), self
        quot = [0] * (dq + 1)
        inv_lead = F.inv(other.lead)
        m = len(other.coeffs) - 1
        for k in range(dq, -1, -1):
            c = F(rem[k + m] * inv_lead)
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = F(rem[k + j] - c * b)
        return Poly._raw(tuple(quot), F), Poly._raw(tuple(rem[:m]), F)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, fractions.Fraction)):
            return self.coeffs == Poly([other], self.field).coeffs
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            mag = -c if neg else c
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(mag)
            if mono and mag == 1:
                coef = ""
            elif mono and "/" in coef:
                coef = f"({coef})"
            term = coef + mono
            if not parts:
                parts.append(("-" if neg else "") + term)
            else:
                parts.append(("-" if neg else "+") + term)
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self}, {self.field.name})"


# ---------------------------------------------------------------------------
# Domain handles


class Integers(EuclideanDomain):
    """Z with f = absolute value and least nonnegative remainders."""

    selector = "z"
    zero = 0
    one = 1

    def _divmod(self, b, a):
        r = b % abs(a)
        return DivisionResult((b - r) // a, r)

    def _value(self, a):
        return abs(a)

    def unit_inverse(self, a):
        return a if a in (1, -1) else None

    def normal_unit(self, a):
        return -1 if a < 0 else 1

    def sort_key(self, a):
        return (abs(a), a)

    def convert(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, fractions.Fraction) and value.denominator == 1:
                return int(value)
            raise DomainError(f"not an integer: {value!r}")
        return value

    def units(self):
        return [1, -1]

    def minimal_nonunit(self):
        return 2

    @property
    def enumerable(self):
        return True

    def enumerate_elements(self, bound):
        if bound < 1:
            raise DomainError("bound must be at least f(1) = 1")
        for n in range(1, bound + 1):
            yield -n
            yield n


class GaussianIntegers(EuclideanDomain):
    """Z[i] with f = norm; quotients round componentwise, ties toward zero."""

    selector = "zi"
    zero = GaussInt(0, 0)
    one = GaussInt(1, 0)
    _UNITS = (GaussInt(1, 0), GaussInt(0, 1), GaussInt(-1, 0), GaussInt(0, -1))

    def _divmod(self, b, a):
        return DivisionResult(*divmod(b, a))

    def _value(self, a):
        return a.norm()

    def unit_inverse(self, a):
        return a.conjugate() if a.norm() == 1 else None

    def normal_unit(self, a):
        for u in self._UNITS:
            z = a * u
            if z.re > 0 and z.im >= 0:
                return u
        raise ZeroDivisorError("zero has no associate class")

    def sort_key(self, a):
        return (a.norm(), a.re, a.im)

    def convert(self, value):
        if isinstance(value, GaussInt):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return GaussInt(value, 0)
        if isinstance(value, complex) and value.real.is_integer() and value.imag.is_integer():
            return GaussInt(int(value.real), int(value.imag))
        raise DomainError(f"not a Gaussian integer: {value!r}")

    def units(self):
        return list(self._UNITS)

    def minimal_nonunit(self):
        return GaussInt(1, 1)

    @property
    def enumerable(self):
        return True

    def enumerate_elements(self, bound):
        if bound < 1:
            raise DomainError("bound must be at least f(1) = 1")
        r = int(gmpy2.isqrt(bound))
        elems = [GaussInt(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1)
                 if 0 < a * a + b * b <= bound]
        yield from sorted(elems, key=self.sort_key)


class PolynomialRing(EuclideanDomain):
    """k[x] over k = F_p or Q, with f = degree."""

    def __init__(self, field):
        self.field = field
        self.selector = "qx" if field == QQ else f"fp:{field.p}"
        self.zero = Poly((), field)
        self.one = Poly((1,), field)
        self.x = Poly((0, 1), field)

    @property
    def is_polynomial(self):
        return True

    def _divmod(self, b, a):
        return DivisionResult(*divmod(b, a))

    def _value(self, a):
        return a.degree

    def unit_inverse(self, a):
        if a.degree == 0:
            return Poly((self.field.inv(a.lead),), self.field)
        return None

    def normal_unit(self, a):
        return Poly((self.field.inv(a.lead),), self.field)

    def sort_key(self, a):
        return (a.degree, a.coeffs)

    def convert(self, value):
        if isinstance(value, Poly):
            if value.field != self.field:
                raise DomainError("polynomial over the wrong coefficient field")
            return value
        if isinstance(value, (int, fractions.Fraction)) and not isinstance(value, bool):
            return Poly((value,), self.field)
        if isinstance(value, (list, tuple)):
            return Poly(value, self.field)
        raise DomainError(f"not a polynomial: {value!r}")

    def poly(self, coeffs) -> Poly:
        return Poly(coeffs, self.field)

    def units(self):
        if self.field == QQ:
            return None
        return [Poly((c,), self.field) for c in range(1, self.field.p)]

    def minimal_nonunit(self):
        return self.x

    @property
    def enumerable(self):
        return self.field != QQ

    def enumerate_elements(self, bound):
        if self.field == QQ:
            raise DomainError("instance not finitely enumerable per Euclidean value")
        if bound < 0:
            raise DomainError("bound must be at least f(1) = 0")
        p = self.field.p
        for deg in range(bound + 1):
            # lexicographic on the full coefficient tuple, lowest degree first
            tuples = sorted(low + (lead,) for low in itertools.product(range(p), repeat=deg)
                            for lead in range(1, p))
            for t in tuples:
                yield Poly._raw(t, self.field)


# ---------------------------------------------------------------------------
# Descriptors


@dataclass(frozen=True)
class DomainDescriptor:
    kind: str  # "Z" | "GaussianZ" | "PolyOverFp" | "PolyOverQ"
    p: int | None = None

    @property
    def unit_group(self):
        if self.kind == "Z":
            return [1, -1]
        if self.kind == "GaussianZ":
            return list(GaussianIntegers._UNITS)
        if self.kind == "PolyOverFp":
            return list(range(1, self.p))
        return SYMBOLIC_UNITS

    @classmethod
    def from_selector(cls, selector: str) -> DomainDescriptor:
        s = selector.strip().lower()
        if s == "z":
            return cls("Z")
        if s == "zi":
            return cls("GaussianZ")
        if s == "qx":
            return cls("PolyOverQ")
        if s.startswith("fp:"):
            try:
                p = int(s[3:])
            except ValueError:
                raise DomainError(f"bad modulus in domain selector {selector!r}") from None
            return cls("PolyOverFp", p)
        raise DomainError(f"unknown domain selector {selector!r}")


@functools.cache
def make_domain(descriptor: DomainDescriptor | str) -> EuclideanDomain:
    """Return the shared handle for a descriptor or selector string."""
    if isinstance(descriptor, str):
        return make_domain(DomainDescriptor.from_selector(descriptor))
    if descriptor.kind == "Z":
        return Integers()
    if descriptor.kind == "GaussianZ":
        return GaussianIntegers()
    if descriptor.kind == "PolyOverQ":
        return PolynomialRing(QQ)
    if descriptor.kind == "PolyOverFp":
        p = descriptor.p
        if p is None or p < 2 or not gmpy2.is_prime(p):
            raise DomainError("modulus must be prime")
        return PolynomialRing(PrimeField(p))
    raise DomainError(f"unknown domain kind {descriptor.kind!r}")


def minimal_nonunit(domain: EuclideanDomain):
    return domain.minimal_nonunit()


def enumerate_elements(domain: EuclideanDomain, bound: int) -> Iterator:
    return domain.enumerate_elements(bound)
