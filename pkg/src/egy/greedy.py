"""Greedy n-term Egyptian underapproximation.

At each step the largest unit fraction *strictly* below the remaining gap is
taken: m_k = floor(1/gap) + 1.  The "+1" keeps the approximation strict even
when the reciprocal gap is an integer, and it forces the denominators to be
strictly increasing (after choosing m_k the gap drops below
1/(m_k(m_k - 1))).
"""

from __future__ import annotations

from fractions import Fraction

from .rational import EgyptianRep, rep_value

# Greedy denominators grow doubly exponentially (43 -> 1807 -> 3263443 ...);
# the cap guards against adversarial term counts, not memory-per-term.
DEFAULT_MAX_TERMS = 12


def greedy_underapprox(x: Fraction, n: int, max_terms: int = DEFAULT_MAX_TERMS) -> EgyptianRep:
    """First n greedy denominators for x > 0."""
    if x <= 0:
        raise ValueError(f"greedy_underapprox() needs x > 0, got {x}")
    if n < 0:
        raise ValueError(f"greedy_underapprox() needs n >= 0, got {n}")
    if n > max_terms:
        raise ValueError(f"n={n} exceeds the term limit {max_terms}")
    denoms = []
    gap = Fraction(x)
    prev = 0
    for _ in range(n):
        # floor(1/gap) + 1; gap > 0 is invariant because 1/m < gap strictly.
        # While gap > 1 the natural choice repeats m = 1, so distinctness has
        # to be forced; once gap <= 1 the recursion is self-increasing.
        m = max(gap.denominator // gap.numerator + 1, prev + 1)
        denoms.append(m)
        gap -= Fraction(1, m)
        prev = m
    return EgyptianRep(tuple(denoms))


def greedy_value(x: Fraction, n: int, max_terms: int = DEFAULT_MAX_TERMS) -> Fraction:
    return rep_value(greedy_underapprox(x, n, max_terms))


def greedy_gap(x: Fraction, n: int, max_terms: int = DEFAULT_MAX_TERMS) -> Fraction:
    """x minus its greedy n-term value; strictly positive."""
    return x - greedy_value(x, n, max_terms)
