"""Unit-fraction decompositions and their verifier.

``euclid_decompose`` works in any instance: it repeatedly divides the
denominator by the numerator and peels off ``1/q``, leaving ``r/(-b*q)``, whose
numerator has strictly smaller Euclidean value.  The Z-only helpers
(greedy, integer expansion, distinctification) produce distinct positive
denominators where the Euclidean recursion may emit repeats or signs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from math import gcd
from typing import NamedTuple

from .domain import DomainError, EuclideanDomain, Fraction, RecipError
from .instances import Integers


@dataclass(frozen=True)
class Decomposition:
    """A claim ``target == sum(1/d for d in denominators)``."""

    domain: EuclideanDomain
    target: Fraction
    denominators: tuple
    distinct: bool
    method: str = "euclid"


class VerifyResult(NamedTuple):
    valid: bool
    distinct: bool
    sum: Fraction | None
    reason: str | None = None


class TerminationError(RecipError, AssertionError):
    """The Euclidean value of the running numerator failed to decrease."""


def _all_distinct(denominators) -> bool:
    return len(set(denominators)) == len(denominators)


def _make(domain, target, dens, method) -> Decomposition:
    dens = tuple(dens)
    return Decomposition(domain, target, dens, _all_distinct(dens), method)


def euclid_decompose(alpha: Fraction, trace: list | None = None) -> Decomposition:
    """Decompose ``alpha = a/b`` with ``f(a) <= f(b)`` into unit fractions.

    If ``trace`` is given, the Euclidean value of the numerator at every step
    is appended to it.
    """
    D = alpha.domain
    if alpha.is_zero():
        return _make(D, alpha, (), "euclid")
    a, b = alpha.num, alpha.den
    if D.f(a) > D.f(b):
        raise DomainError("not guaranteed Egyptian: use bonaccian_split")

    dens = []
    last = None
    while True:
        fa = D.f(a)
        if last is not None and fa >= last:
            raise TerminationError(f"Euclidean value did not decrease: {last} -> {fa}")
        last = fa
        if trace is not None:
            trace.append(fa)
        inv = D.unit_inverse(a)
        if inv is not None:
            dens.append(inv * b)
            break
        q, r = D.divmod(b, a)
        dens.append(q)
        if r == D.zero:
            break
        rest = D.reduce(r, -(b * q))
        a, b = rest.num, rest.den
    return _make(D, alpha, dens, "euclid")


def _ceil_div(n: int, d: int) -> int:
    return -(-n // d)


def _require_z(alpha: Fraction):
    if not isinstance(alpha.domain, Integers):
        raise DomainError("operation is defined over Z only")


def _greedy(a: int, b: int, floor: int = 1) -> list[int]:
    """Greedy expansion of a/b in (0, 1), every denominator >= ``floor``."""
    dens = []
    while a:
        c = max(_ceil_div(b, a), floor)
        dens.append(c)
        a, b = a * c - b, b * c
        g = gcd(a, b)
        a, b = a // g, b // g
        floor = c + 1
    return dens


def greedy_decompose_z(alpha: Fraction) -> Decomposition:
    """Fibonacci-Sylvester greedy expansion of a rational in (0, 1)."""
    _require_z(alpha)
    a, b = alpha.num, alpha.den
    if not 0 < a < b:
        raise DomainError("use integer_expand first")
    return _make(alpha.domain, alpha, _greedy(a, b), "greedy")


def integer_expand(alpha: Fraction) -> Decomposition:
    """Distinct expansion of a rational ``alpha >= 1``.

    Takes 1/1, 1/2, ... while the remainder is at least 1, then finishes with a
    greedy expansion whose denominators exceed every one already used.  The
    number of terms grows like ``exp(alpha)``.
    """
    _require_z(alpha)
    a, b = alpha.num, alpha.den
    if a < b:
        raise DomainError("integer_expand needs alpha >= 1")
    dens = []
    n = 0
    while a >= b:
        n += 1
        dens.append(n)
        a, b = a * n - b, b * n
        g = gcd(a, b)
        a, b = a // g, b // g
    if a:
        dens.extend(_greedy(a, b, floor=n + 1))
    return _make(alpha.domain, alpha, dens, "integer+greedy")


def expand_z(alpha: Fraction) -> Decomposition:
    """Distinct expansion of any rational, negating denominators for alpha < 0."""
    _require_z(alpha)
    Z = alpha.domain
    if alpha.is_zero():
        return _make(Z, alpha, (), "greedy")
    sign = -1 if alpha.num < 0 else 1
    mag = Z.reduce(abs(alpha.num), alpha.den)
    d = integer_expand(mag) if mag.num >= mag.den else greedy_decompose_z(mag)
    return _make(Z, alpha, (sign * x for x in d.denominators), d.method)


def distinctify_z(d: Decomposition) -> Decomposition:
    """Rewrite a Z decomposition so its denominators are pairwise distinct.

    Positive repeats use the splitting identity 1/n = 1/(n+1) + 1/(n(n+1)),
    always on the smallest repeated n; splitting terminates (Beeckmans 1993).
    If negative denominators repeat, the whole negative part is summed and
    re-expanded as one distinct expansion.  Zero-sum pairs 1/n + 1/(-n) are
    left alone: n and -n are distinct elements.
    """
    if not isinstance(d.domain, Integers):
        raise DomainError("distinctify is implemented over Z only")
    Z = d.domain
    if _all_distinct(d.denominators):
        return d if d.distinct else replace(d, distinct=True)
    pos = Counter(x for x in d.denominators if x > 0)
    neg = [x for x in d.denominators if x < 0]
    if len(set(neg)) != len(neg):
        total = sum((Z.reduce(1, x) for x in neg), Z.frac(0))
        neg = list(expand_z(total).denominators)

    while True:
        dup = [n for n, k in pos.items() if k > 1]
        if not dup:
            break
        n = min(dup)
        pos[n] -= 1
        pos[n + 1] += 1
        pos[n * (n + 1)] += 1

    dens = sorted(pos.elements()) + sorted(neg, reverse=True)
    return _make(Z, d.target, dens, "distinctify")


def verify(d: Decomposition) -> VerifyResult:
    """Recompute the sum of reciprocals exactly; stored flags are ignored."""
    D = d.domain
    dens = [D.convert(x) for x in d.denominators]
    if any(x == D.zero for x in dens):
        return VerifyResult(False, _all_distinct(dens), None, "zero denominator")
    # sum unreduced and compare by cross-multiplication; one gcd at most
    num, den = D.zero, D.one
    for x in dens:
        num, den = num * x + den, den * x
    distinct = _all_distinct(dens)
    target = d.target
    if num * target.den != target.num * den:
        total = D.reduce(num, den)
        return VerifyResult(False, distinct, total, f"sum {total} != target {target}")
    return VerifyResult(True, distinct, target)
