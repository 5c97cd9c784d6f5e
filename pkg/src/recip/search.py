"""Bounded brute-force search for unit-fraction representations.

Independent of the analytic membership tests: it only enumerates candidate
denominators and adds reciprocals.  A negative answer means "nothing within
these bounds", never a proof of non-membership.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .complement import is_in_R
from .decompose import Decomposition, verify
from .domain import DomainError, EuclideanDomain, Fraction, RecipError

MEMBER = "member"
BOUNDED_NONMEMBER = "bounded-consistent-nonmember"


class SearchBudgetExceeded(RecipError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    target: Fraction
    max_value: int
    max_terms: int
    multiset_allowed: bool = True

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")

    @property
    def domain(self) -> EuclideanDomain:
        return self.target.domain


class SearchResult(NamedTuple):
    found: Decomposition | None
    states_explored: int

    @property
    def verdict(self) -> str:
        return MEMBER if self.found is not None else BOUNDED_NONMEMBER


def exhaustive_search(spec: SearchSpec, max_states: int | None = None) -> SearchResult:
    """Iterative deepening over multisets (or sets) of admissible denominators.

    Candidates come from ``enumerate_elements`` and combinations are visited in
    lexicographic order of that list, so the first hit is the smallest
    certificate in the canonical order.  Each complete candidate counts as one
    state.
    """
    D = spec.domain
    if not D.enumerable:
        raise DomainError("instance not finitely enumerable per Euclidean value")
    pool = list(D.enumerate_elements(spec.max_value))
    recips = [D.reduce(D.one, d) for d in pool]
    combos = (itertools.combinations_with_replacement if spec.multiset_allowed
              else itertools.combinations)
    states = 0
    zero = D.frac(0)
    for k in range(1, spec.max_terms + 1):
        for idx in combos(range(len(pool)), k):
            states += 1
            if max_states is not None and states > max_states:
                raise SearchBudgetExceeded(f"search exceeded {max_states} states")
            total = zero
            for i in idx:
                total = total + recips[i]
            if total == spec.target:
                dens = tuple(pool[i] for i in idx)
                cert = Decomposition(D, spec.target, dens, len(set(idx)) == len(idx),
                                     "search")
                return SearchResult(cert, states)
    return SearchResult(None, states)


@dataclass
class CrossCheckReport:
    domain: str
    bound: int
    max_terms: int
    fractions: int = 0
    certified: int = 0
    bounded_consistent: int = 0
    hard_failures: list = None

    def __post_init__(self):
        if self.hard_failures is None:
            self.hard_failures = []

    @property
    def ok(self) -> bool:
        return not self.hard_failures


def _fractions_up_to(D: EuclideanDomain, bound: int):
    elems = list(D.enumerate_elements(bound))
    seen = set()
    for a in elems:
        for b in elems:
            alpha = D.reduce(a, b)
            if alpha not in seen:
                seen.add(alpha)
                yield alpha


def cross_check(domain: EuclideanDomain, bound: int, max_terms: int,
                max_states: int | None = None) -> CrossCheckReport:
    """Compare ``is_in_R`` against certificates and bounded search.

    Members must carry a certificate that verifies.  Non-members are searched
    with denominators of Euclidean value up to ``bound``; a hit would
    contradict the analytic answer and counts as a hard failure, a miss is
    recorded as bounded-consistent.
    """
    report = CrossCheckReport(domain.selector, bound, max_terms)
    for alpha in _fractions_up_to(domain, bound):
        report.fractions += 1
        m = is_in_R(alpha)
        if m.member:
            if m.certificate is None or not verify(m.certificate).valid:
                report.hard_failures.append((str(alpha), "certificate does not verify"))
            else:
                report.certified += 1
            continue
        res = exhaustive_search(SearchSpec(alpha, bound, max_terms), max_states)
        if res.found is not None:
            report.hard_failures.append(
                (str(alpha), f"search found {[str(d) for d in res.found.denominators]}"))
        else:
            report.bounded_consistent += 1
    return report
