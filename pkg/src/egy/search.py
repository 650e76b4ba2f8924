"""Exact combinatorial search over Egyptian sums.

Three engines:

* ``best_underapprox`` -- branch-and-bound for the largest n-term sum of
  distinct unit fractions strictly below x.  The incumbent starts at the
  greedy value (always feasible, always strict) and is refreshed with a
  greedy completion whenever a node's partial sum passes it, which keeps
  every branching range finite.  The bottom two levels are closed form: for
  a fixed next-to-last denominator the best last one is
  floor(1/gap) + 1, so the two-term completion is a single linear scan
  (delegated to the kernel backend).

* ``has_representation`` -- bounded exhaustive search for an exact j-term
  representation, classic m <= j/remainder pruning.

* ``next_point_above`` -- the smallest j-term Egyptian sum above a value,
  minimized over j <= n; this is the right endpoint of the partition cell
  whose left endpoint is the given value.

Everything is deterministic and single-threaded; exceeding the node budget
raises, it never degrades to an approximate answer.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _kernels
from .greedy import DEFAULT_MAX_TERMS, greedy_underapprox
from .rational import ZERO, EgyptianRep, harmonic, rep_value, sum_exact

DEFAULT_NODE_BUDGET = 10_000_000


class ResourceLimitError(RuntimeError):
    """A configured search budget was exhausted before the exact answer."""


class NodeBudgetExceeded(ResourceLimitError):
    pass


class ShorterRepresentationError(ValueError):
    """q was expected to need exactly n terms but a shorter witness exists."""

    def __init__(self, q: Fraction, terms: int, witness: EgyptianRep):
        super().__init__(f"{q} already has the {terms}-term representation {witness.denominators}")
        self.q = q
        self.terms = terms
        self.witness = witness


def default_node_budget() -> int:
    env = os.environ.get("EGY_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise NodeBudgetExceeded("search node budget exhausted")


def _floor_recip(value: Fraction) -> int:
    """floor(1/value) for value > 0."""
    return value.denominator // value.numerator


def _greedy_completion(x: Fraction, p: Fraction, m_last: int, r: int) -> list[int]:
    """Greedy r-term extension below x with denominators > m_last."""
    out = []
    gap = x - p
    last = m_last
    for _ in range(r):
        m = max(last + 1, _floor_recip(gap) + 1)
        out.append(m)
        gap -= Fraction(1, m)
        last = m
    return out


def best_underapprox(
    x: Fraction,
    n: int,
    node_budget: int | None = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> tuple[Fraction, EgyptianRep]:
    """Maximum n-term Egyptian sum strictly below x, with its witness.

    Among denominator tuples attaining the optimum, the lexicographically
    smallest is returned (depth-first ascending exploration visits tuples in
    lexicographic order, and tying subtrees are only pruned once they can no
    longer improve the witness).
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"best_underapprox() needs x > 0, got {x}")
    if n < 0:
        raise ValueError(f"best_underapprox() needs n >= 0, got {n}")
    if n == 0:
        return ZERO, EgyptianRep(())
    if n > max_terms:
        raise ValueError(f"n={n} exceeds the term limit {max_terms}")
    hn = harmonic(n)
    if x > hn:
        return hn, EgyptianRep(tuple(range(1, n + 1)))
    if n == 1:
        m = _floor_recip(x) + 1
        return Fraction(1, m), EgyptianRep((m,))

    budget = _Budget(node_budget if node_budget is not None else default_node_budget())
    g = greedy_underapprox(x, n, max_terms)
    inc_rep = list(g.denominators)
    inc_val = rep_value(g)

    def visit(p: Fraction, k: int, m_last: int, prefix: list[int]) -> None:
        nonlocal inc_val, inc_rep
        budget.spend()
        r = n - k
        if inc_val <= p:
            comp = _greedy_completion(x, p, m_last, r)
            inc_rep = prefix + comp
            inc_val = p + sum_exact(Fraction(1, m) for m in comp)
        if r == 2:
            rem = x - p
            thr = inc_val - p
            allow_equal = prefix <= inc_rep[:k]
            found, bn, bd, a, b, iters = _kernels.two_term_max_below(
                rem.numerator, rem.denominator, m_last + 1,
                thr.numerator, thr.denominator, allow_equal,
                budget.left,  # abort mid-scan once the budget is gone
            )
            budget.spend(iters)
            if found:
                cand = p + Fraction(bn, bd)
                if cand > inc_val:
                    inc_val = cand
                    inc_rep = prefix + [a, b]
                elif cand == inc_val:
                    new_rep = prefix + [a, b]
                    if new_rep < inc_rep:
                        inc_rep = new_rep
            return
        m = max(m_last + 1, _floor_recip(x - p) + 1)
        # densest possible completion from m uses consecutive denominators
        run = sum_exact(Fraction(1, m + t) for t in range(r))
        while True:
            reach = p + run
            if reach < inc_val:
                break
            if reach == inc_val and prefix + [m] > inc_rep[: k + 1]:
                break
            visit(p + Fraction(1, m), k + 1, m, prefix + [m])
            run += Fraction(1, m + r) - Fraction(1, m)
            m += 1
            budget.spend()

    visit(ZERO, 0, 0, [])
    return inc_val, EgyptianRep(tuple(inc_rep))


def has_representation(
    q: Fraction, j: int, max_denom: int | None = None
) -> EgyptianRep | None:
    """A j-term representation of q with denominators <= max_denom, if any.

    Exhaustive: at each step 1/m <= remainder forces m >= ceil(1/rem) and
    the j' remaining terms must cover the remainder, so m <= j'/rem.
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"has_representation() needs q > 0, got {q}")
    if j < 1:
        raise ValueError(f"has_representation() needs j >= 1, got {j}")

    def rec(rem: Fraction, terms: int, m_lo: int) -> list[int] | None:
        if terms == 0:
            return [] if rem == 0 else None
        if rem <= 0:
            return None
        lo = max(m_lo, -((-rem.denominator) // rem.numerator))
        hi = (terms * rem.denominator) // rem.numerator
        if max_denom is not None and hi > max_denom:
            hi = max_denom
        for m in range(lo, hi + 1):
            sub = rec(rem - Fraction(1, m), terms - 1, m + 1)
            if sub is not None:
                return [m] + sub
        return None

    res = rec(q, j, 1)
    return EgyptianRep(tuple(res)) if res is not None else None


def _min_jterm_above(
    q: Fraction, j: int, cutoff: Fraction, budget: _Budget
) -> Fraction | None:
    """Minimal j-term Egyptian sum in (q, cutoff], or None.

    Only prefixes strictly below q are explored: a sum whose proper prefix
    already exceeds q is beaten by that prefix, which a shorter-j search
    covers.  For the last term the minimizing denominator is closed form
    (the largest m with 1/m > q - partial).
    """
    best: Fraction | None = None

    def rec(p: Fraction, k: int, m_last: int) -> None:
        nonlocal best
        budget.spend()
        gap = q - p  # > 0
        r = j - k
        if r == 1:
            m = _floor_recip(gap)
            if gap.denominator % gap.numerator == 0:
                m -= 1  # need 1/m strictly above the gap
            if m <= m_last:
                return
            cand = p + Fraction(1, m)
            hi = cutoff if best is None else best
            if cand <= hi:
                best = cand
            return
        m = max(m_last + 1, _floor_recip(gap) + 1)
        run = sum_exact(Fraction(1, m + t) for t in range(r))
        while True:
            if p + run <= q:
                break  # even consecutive denominators cannot climb past q
            hi = cutoff if best is None else best
            if p + Fraction(1, m) < hi:
                rec(p + Fraction(1, m), k + 1, m)
            run += Fraction(1, m + r) - Fraction(1, m)
            m += 1
            budget.spend()

    rec(ZERO, 0, 0)
    return best


def next_point_above(
    q: Fraction,
    n: int,
    node_budget: int | None = None,
    check: bool = True,
) -> Fraction:
    """Smallest j-term Egyptian sum above q over 1 <= j <= n.

    q must be an attainable best value at level n: it has an n-term
    representation and no shorter one (a value with a shorter representation
    is a limit from above of n-term sums and never a best value).
    """
    q = Fraction(q)
    if q <= 0:
        # There is no minimal Egyptian sum above 0; 0 is only a best value
        # at level 0, where every point belongs to the single cell (0, inf).
        raise ValueError(f"next_point_above() needs q > 0, got {q}")
    if n < 1:
        raise ValueError(f"next_point_above() needs n >= 1, got {n}")
    if check:
        for jj in range(1, n):
            witness = has_representation(q, jj)
            if witness is not None:
                raise ShorterRepresentationError(q, jj, witness)
        if has_representation(q, n) is None:
            raise ValueError(f"{q} has no {n}-term representation")
    budget = _Budget(node_budget if node_budget is not None else default_node_budget())
    window = Fraction(1, n * (n + 1))
    while True:
        # the cell-length bound guarantees a point within the first window
        best: Fraction | None = None
        for j in range(1, n + 1):
            cand = _min_jterm_above(q, j, best if best is not None else q + window, budget)
            if cand is not None and (best is None or cand < best):
                best = cand
        if best is not None:
            return best
        window *= 2
