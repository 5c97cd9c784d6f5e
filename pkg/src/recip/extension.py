"""Certificates that reciprocals of Q[x] polynomials lie in R(Z[x]).

For nonzero g in Q[x], pick d in Z with d*g in Z[x] and write d as a sum of
unit fractions 1/c_i over Z.  Then 1/g = d/(d*g) = sum 1/(c_i*d*g), a sum of
unit fractions with denominators in Z[x].
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .decompose import Decomposition, integer_expand
from .domain import DomainError
from .instances import Poly, make_domain

# Largest clearing element expanded with distinct denominators.  A distinct
# expansion of the integer d needs about exp(d) terms and its greedy tail
# grows doubly exponentially; above this bound d is written as d copies of 1/1.
DISTINCT_LIMIT = 4


@dataclass(frozen=True)
class ExtensionCertificate:
    g: Poly
    clearing_element: int
    d_decomposition: Decomposition
    final_denominators: tuple


def _qx():
    return make_domain("qx")


def reciprocal_in_DX(g) -> ExtensionCertificate:
    Q = _qx()
    g = Q.convert(g)
    if g == Q.zero:
        raise DomainError("g must be nonzero")
    d = lcm(*(c.denominator for c in g.coeffs))
    Z = make_domain("z")
    if d <= DISTINCT_LIMIT:
        dec = integer_expand(Z.frac(d))
    else:
        dec = Decomposition(Z, Z.frac(d), (1,) * d, d == 1, "units")
    dg = g * d
    final = tuple(dg * c for c in dec.denominators)
    for h in final:
        if any(c.denominator != 1 for c in h.coeffs):
            raise AssertionError(f"{h} is not in Z[x]")
    return ExtensionCertificate(g, d, dec, final)


def verify_extension(cert: ExtensionCertificate) -> bool:
    """Sum 1/h over the final denominators in Q(x) and compare with 1/g."""
    Q = _qx()
    if cert.g == Q.zero or any(Q.convert(h) == Q.zero for h in cert.final_denominators):
        return False
    if any(c.denominator != 1 for h in cert.final_denominators for c in h.coeffs):
        return False
    total = Q.frac(0)
    for h in cert.final_denominators:
        total = total + Q.reduce(Q.one, h)
    return total == Q.reduce(Q.one, cert.g)
