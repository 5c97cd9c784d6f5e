"""Independent summation oracles.

None of these touch recip's gcd, reduction or Fraction type: integers go
through fractions.Fraction, Gaussian rationals through pairs of
fractions.Fraction, and polynomials through sympy with a cross-multiplied
identity check.
"""
from fractions import Fraction as Q
from functools import reduce
from operator import mul

import sympy as sp

X = sp.Symbol("x")


def z_sum(dens):
    return sum((Q(1, int(d)) for d in dens), Q(0))


def gauss(re, im=0):
    return (Q(re), Q(im))


def gauss_recip(d):
    n = d.re * d.re + d.im * d.im
    return (Q(d.re, n), Q(-d.im, n))


def gauss_div(a, b):
    """a/b for GaussInt a, b as a pair of rationals."""
    n = b.re * b.re + b.im * b.im
    re = a.re * b.re + a.im * b.im
    im = a.im * b.re - a.re * b.im
    return (Q(re, n), Q(im, n))


def gauss_sum(dens):
    re, im = Q(0), Q(0)
    for d in dens:
        r, i = gauss_recip(d)
        re += r
        im += i
    return (re, im)


def to_sympy(poly):
    field = poly.field
    coeffs = list(reversed(poly.coeffs)) or [0]
    if field.name == "Q":
        return sp.Poly.from_list([sp.Rational(c.numerator, c.denominator) for c in coeffs],
                                 X, domain="QQ")
    return sp.Poly.from_list([int(c) for c in coeffs], X, modulus=field.p)


def poly_sum_equals(dens, num, den):
    """Check sum(1/d) == num/den by clearing all denominators in sympy."""
    if not dens:
        return to_sympy(num).is_zero
    ds = [to_sympy(d) for d in dens]
    total_den = reduce(mul, ds)
    total_num = None
    for i in range(len(ds)):
        term = reduce(mul, ds[:i] + ds[i + 1:], ds[0].one)
        total_num = term if total_num is None else total_num + term
    return total_num * to_sympy(den) == to_sympy(num) * total_den


def sums_to(domain, dens, target):
    """Dispatch on the domain selector."""
    sel = domain.selector
    if sel == "z":
        return z_sum(dens) == Q(target.num, target.den)
    if sel == "zi":
        return gauss_sum(dens) == gauss_div(target.num, target.den)
    return poly_sum_equals(list(dens), target.num, target.den)
