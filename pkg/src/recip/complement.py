"""Membership, valuation and classification for the reciprocal complement R(D).

R(D) is the subring of Frac(D) generated by the unit fractions 1/d.  For a
Euclidean domain it is either all of Frac(D) ("Egyptian" branch) or a DVR
whose uniformizer is 1/y for a nonunit y of least Euclidean value.  Over
k[x] that DVR is k[1/x] localized at 1/x, so membership is the degree test
``deg(num) <= deg(den)`` and the valuation is ``deg(den) - deg(num)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .decompose import Decomposition, euclid_decompose, expand_z, verify
from .domain import DomainError, EuclideanDomain, Fraction
from .instances import GaussianIntegers, GaussInt, Integers, make_domain

EGYPTIAN = "egyptian"
DVR = "dvr"


class SplitResult(NamedTuple):
    side: str  # "alpha" or "inverse"
    certificate: Decomposition


class Membership(NamedTuple):
    member: bool
    certificate: Decomposition | None = None
    reason: str | None = None


@dataclass(frozen=True)
class ValuationResult:
    value: int
    member: bool
    unit_part_certificate: tuple[Decomposition, Decomposition] | None = None


class UnitsFieldCheck(NamedTuple):
    is_field: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class Classification:
    domain: EuclideanDomain
    branch: str
    uniformizer_denominator: object | None
    units_field: UnitsFieldCheck
    residue_units: str | None = None

    @property
    def uniformizer(self) -> Fraction | None:
        if self.uniformizer_denominator is None:
            return None
        return self.domain.reduce(self.domain.one, self.uniformizer_denominator)


# ---------------------------------------------------------------------------


def _integral_part_gaussian(q: GaussInt) -> list:
    """Unit-fraction denominators summing to the Gaussian integer ``q``.

    ``q.re`` expands over Z; ``q.im * i`` uses i = 1/(-i), so each integer
    denominator m becomes -i*m.
    """
    Z = make_domain("z")
    dens = [GaussInt(m, 0) for m in expand_z(Z.frac(q.re)).denominators]
    dens += [GaussInt(0, -m) for m in expand_z(Z.frac(q.im)).denominators]
    return dens


def _egyptian_expand(alpha: Fraction) -> Decomposition:
    """Certificate for any alpha over Z or Z[i], including f(num) > f(den)."""
    D = alpha.domain
    if isinstance(D, Integers):
        return expand_z(alpha)
    if not isinstance(D, GaussianIntegers):
        raise DomainError(f"{D.selector} is not an Egyptian instance")
    q, r = D.divmod(alpha.num, alpha.den)
    dens = _integral_part_gaussian(q)
    if r != D.zero:
        dens += list(euclid_decompose(D.reduce(r, alpha.den)).denominators)
    dens = tuple(dens)
    return Decomposition(D, alpha, dens, len(set(dens)) == len(dens), "integer+euclid")


def bonaccian_split(alpha: Fraction) -> SplitResult:
    """Certify alpha or its inverse as a sum of unit fractions.

    The side whose numerator has the smaller Euclidean value is decomposed,
    alpha on ties.  Over Z, alpha itself is always certified.
    """
    if alpha.is_zero():
        raise DomainError("bonaccian_split needs a nonzero element")
    D = alpha.domain
    if D.f(alpha.num) <= D.f(alpha.den):
        side, cert = "alpha", euclid_decompose(alpha)
    elif isinstance(D, Integers):
        side, cert = "alpha", expand_z(alpha)
    else:
        side, cert = "inverse", euclid_decompose(alpha.inverse())
    if not verify(cert).valid:
        raise AssertionError(f"certificate failed to verify for {alpha}")
    return SplitResult(side, cert)


def is_in_R(alpha: Fraction) -> Membership:
    D = alpha.domain
    if alpha.is_zero():
        return Membership(True, Decomposition(D, alpha, (), True, "euclid"))
    if not D.is_polynomial:
        if D.f(alpha.num) <= D.f(alpha.den):
            return Membership(True, euclid_decompose(alpha))
        return Membership(True, _egyptian_expand(alpha))
    if D.f(alpha.num) <= D.f(alpha.den):
        return Membership(True, euclid_decompose(alpha))
    return Membership(False, reason=(
        f"deg(num) = {D.f(alpha.num)} > deg(den) = {D.f(alpha.den)}: "
        "negative valuation at 1/x"))


def valuation(alpha: Fraction, certify: bool = False) -> ValuationResult:
    """Valuation of alpha in the DVR R(k[x]), with uniformizer 1/x.

    With ``certify``, also returns decompositions of the unit part
    u = alpha * x**v and of its inverse.
    """
    D = alpha.domain
    if not D.is_polynomial:
        raise DomainError("valuation undefined: R(D) is a field")
    if alpha.is_zero():
        raise DomainError("valuation of zero is undefined")
    v = D.f(alpha.den) - D.f(alpha.num)
    pair = None
    if certify:
        u = alpha * D.frac(D.x ** v) if v >= 0 else alpha / D.frac(D.x ** -v)
        pair = (euclid_decompose(u), euclid_decompose(u.inverse()))
    return ValuationResult(v, v >= 0, pair)


def units_field_check(domain: EuclideanDomain) -> UnitsFieldCheck:
    """Is units(D) + {0} closed under addition and negation?

    Finite unit groups are checked exhaustively; Q[x] is answered from its
    coefficient field.
    """
    units = domain.units()
    if units is None:
        return UnitsFieldCheck(True, None)
    closed = set(units) | {domain.zero}
    for u1 in units:
        if -u1 not in closed:
            return UnitsFieldCheck(False, (u1, u1))
        for u2 in units:
            if u1 + u2 not in closed:
                return UnitsFieldCheck(False, (u1, u2))
    return UnitsFieldCheck(True, None)


def classify(domain: EuclideanDomain) -> Classification:
    check = units_field_check(domain)
    if not check.is_field:
        return Classification(domain, EGYPTIAN, None, check)
    if domain.is_polynomial:
        residue = "Q" if domain.selector == "qx" else f"F_{domain.field.p}"
        return Classification(domain, DVR, domain.minimal_nonunit(), check, residue)
    # no shipped instance reaches this: units form a field but D is not k[x]
    raise DomainError(f"no classification rule for {domain.selector}")


class IntersectionReport(NamedTuple):
    passed: bool
    checked: int
    members: list
    counterexample: object | None = None


def d_intersect_R_check(domain: EuclideanDomain, bound: int) -> IntersectionReport:
    """Check that the elements of D lying in R are exactly the units of D."""
    if classify(domain).branch == EGYPTIAN:
        raise DomainError("statement vacuous: D is contained in R")
    members, checked = [], 0
    for d in domain.enumerate_elements(bound):
        checked += 1
        m = is_in_R(domain.frac(d))
        if m.member:
            members.append(d)
            if not verify(m.certificate).valid:
                return IntersectionReport(False, checked, members, d)
        if m.member != domain.is_unit(d):
            return IntersectionReport(False, checked, members, d)
    return IntersectionReport(True, checked, members)
