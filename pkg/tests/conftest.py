import fractions
import random

import pytest

from recip.instances import GaussInt, Poly, make_domain

SELECTORS = ["z", "zi", "fp:2", "fp:5", "qx"]


def random_element(D, rng, size, nonzero=True):
    """Random element with Euclidean value roughly up to ``size``."""
    while True:
        if D.selector == "z":
            a = rng.randint(-size, size)
        elif D.selector == "zi":
            r = int(size ** 0.5) + 1
            a = GaussInt(rng.randint(-r, r), rng.randint(-r, r))
        elif D.selector == "qx":
            deg = rng.randint(0, size)
            a = Poly([fractions.Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                      for _ in range(deg + 1)], D.field)
        else:
            deg = rng.randint(0, size)
            a = Poly([rng.randrange(D.field.p) for _ in range(deg + 1)], D.field)
        if not nonzero or a != D.zero:
            return a


def random_fraction(D, rng, size, lower=False):
    """Random nonzero reduced fraction; with ``lower``, f(num) <= f(den)."""
    while True:
        a = random_element(D, rng, size)
        b = random_element(D, rng, size)
        alpha = D.reduce(a, b)
        if lower and D.f(alpha.num) > D.f(alpha.den):
            alpha = alpha.inverse()
        return alpha


def bounded_fraction(D, rng, limit=3):
    """Nonzero fraction over Z or Z[i] with |alpha| at most about ``limit``.

    A distinct expansion of alpha needs about exp(|alpha|) terms, so samples
    that must go through integer expansion stay small in magnitude.
    """
    while True:
        b = random_element(D, rng, 10**4)
        if D.selector == "z":
            a = rng.randint(-limit * abs(b), limit * abs(b))
        else:
            a = GaussInt(rng.randint(-limit, limit), rng.randint(-limit, limit)) * b
            a = a + random_element(D, rng, b.norm() // 4 + 1, nonzero=False)
        if a != D.zero:
            return D.reduce(a, b)


# Euclidean-value scale of random samples per instance
SIZES = {"z": 10**6, "zi": 10**6, "fp:2": 8, "fp:5": 6, "qx": 4}


@pytest.fixture(params=SELECTORS)
def domain(request):
    return make_domain(request.param)


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
