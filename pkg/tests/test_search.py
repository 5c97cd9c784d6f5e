import itertools

import pytest

from recip.decompose import euclid_decompose, verify
from recip.domain import DomainError
from recip.instances import make_domain
from recip.search import (BOUNDED_NONMEMBER, MEMBER, SearchBudgetExceeded, SearchSpec,
                          cross_check, exhaustive_search)

Z = make_domain("z")
F2 = make_domain("fp:2")
F3 = make_domain("fp:3")
F5 = make_domain("fp:5")
x = F2.x


def test_x_not_found_over_f2():
    res = exhaustive_search(SearchSpec(F2.frac(x), 3, 4))
    assert res.found is None
    assert res.verdict == BOUNDED_NONMEMBER
    # multisets of size 1..4 drawn from the 15 nonzero polynomials of degree <= 3
    assert res.states_explored == sum(len(list(itertools.combinations_with_replacement(
        range(15), k))) for k in range(1, 5)) == 3875


def test_finds_euclid_certificate():
    target = F2.reduce(x + 1, x)
    res = exhaustive_search(SearchSpec(target, 1, 2))
    assert res.found.denominators == (F2.one, x)
    assert res.verdict == MEMBER
    assert res.found.denominators == euclid_decompose(target).denominators


def test_z_one_multisets_and_sets():
    res = exhaustive_search(SearchSpec(Z.frac(1), 2, 2))
    assert res.found.denominators in ((1,), (2, 2))
    res = exhaustive_search(SearchSpec(Z.frac(1), 2, 2, multiset_allowed=False))
    assert res.found.denominators == (1,)


def test_multiset_only_solution():
    # over Z denominators may be negative: 2/3 = 1/1 + 1/(-3)
    res = exhaustive_search(SearchSpec(Z.frac(2, 3), 3, 2))
    assert verify(res.found).valid
    assert sorted(res.found.denominators) == [-3, 1]
    # 2/5 = 1/5 + 1/5, while 1/3 + 1/15 and 1/2 - 1/10 leave the range |d| <= 5
    res = exhaustive_search(SearchSpec(Z.frac(2, 5), 5, 2))
    assert res.found.denominators == (5, 5)
    res_sets = exhaustive_search(SearchSpec(Z.frac(2, 5), 5, 2, multiset_allowed=False))
    assert res_sets.found is None


def test_deterministic():
    spec = SearchSpec(F3.frac(F3.x), 2, 3)
    assert exhaustive_search(spec) == exhaustive_search(spec)


def test_planted_certificates_are_found(rng):
    pool = list(F3.enumerate_elements(1))
    for _ in range(30):
        k = rng.randint(1, 3)
        dens = [rng.choice(pool) for _ in range(k)]
        target = sum((F3.reduce(1, d) for d in dens), F3.frac(0))
        res = exhaustive_search(SearchSpec(target, 1, 3))
        assert res.found is not None
        assert verify(res.found).valid
        assert len(res.found.denominators) <= k


def test_budget_and_errors():
    with pytest.raises(SearchBudgetExceeded):
        exhaustive_search(SearchSpec(F2.frac(x), 3, 4), max_states=100)
    with pytest.raises(DomainError, match="not finitely enumerable"):
        Q = make_domain("qx")
        exhaustive_search(SearchSpec(Q.frac(Q.x), 1, 2))
    with pytest.raises(DomainError):
        SearchSpec(Z.frac(1), 1, 0)


@pytest.mark.parametrize("sel,bound,terms", [("fp:2", 2, 3), ("z", 3, 4), ("fp:5", 1, 2)])
def test_cross_check(sel, bound, terms):
    rep = cross_check(make_domain(sel), bound, terms)
    assert rep.ok, rep.hard_failures
    assert rep.fractions == rep.certified + rep.bounded_consistent
    if sel == "z":
        assert rep.bounded_consistent == 0
    else:
        assert rep.bounded_consistent > 0
