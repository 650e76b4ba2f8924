"""Interval partitions induced by best n-term underapproximations.

For each level n, the positive reals split into countably many half-open
cells (q, r] on which the best n-term underapproximation is the constant q,
plus the single unbounded cell (H_n, inf).  Bounded cells are no longer than
1/(n(n+1)).

Also provides the "regular" numbers used in the density argument behind that
length bound: sums whose first l denominators are 1..l and whose remaining
denominators m satisfy m_{k+1} >= (m_k - 1) m_k + 1 (each tail term at most
the gap its predecessor left behind).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import ZERO, EgyptianRep, format_rational, harmonic
from .search import best_underapprox, next_point_above


@dataclass(frozen=True)
class Cell:
    """One partition cell (lower, upper]; upper is None for (H_n, inf)."""

    level: int
    lower: Fraction
    upper: Fraction | None
    best_rep: EgyptianRep | None

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"cell level must be >= 1, got {self.level}")
        if self.lower < 0:
            raise ValueError(f"cell lower endpoint must be >= 0, got {self.lower}")
        if self.upper is not None:
            if self.lower >= self.upper:
                raise ValueError(f"empty cell ({self.lower}, {self.upper}]")
            cap = Fraction(1, self.level * (self.level + 1))
            if self.upper - self.lower > cap:
                raise ValueError(
                    f"bounded level-{self.level} cell longer than {cap}: "
                    f"({self.lower}, {self.upper}]"
                )

    def length(self) -> Fraction | None:
        """None for the unbounded cell."""
        if self.upper is None:
            return None
        return self.upper - self.lower

    def contains(self, x: Fraction) -> bool:
        if self.upper is None:
            return x > self.lower
        return self.lower < x <= self.upper


def cell_of(x: Fraction, n: int, node_budget: int | None = None) -> Cell:
    """The unique level-n cell containing x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"cell_of() needs x > 0, got {x}")
    if n < 1:
        raise ValueError(f"cell_of() needs n >= 1, got {n}")
    hn = harmonic(n)
    if x > hn:
        return Cell(level=n, lower=hn, upper=None, best_rep=None)
    lower, rep = best_underapprox(x, n, node_budget)
    upper = next_point_above(lower, n, node_budget, check=False)
    return Cell(level=n, lower=lower, upper=upper, best_rep=rep)


def cells_in_window(
    a: Fraction,
    b: Fraction,
    n: int,
    max_cells: int = 10_000,
    node_budget: int | None = None,
) -> tuple[list[Cell], Fraction]:
    """Cells tiling (a, b] right to left, and the uncovered left remainder.

    Cell left endpoints accumulate at limit points from the left, so the walk
    starts at b and may stop early (max_cells); the stretch (a, last.lower]
    still uncovered is returned exactly.  The first cell is clipped at b and
    the last at a, so uncovered + sum of lengths == b - a always holds.
    """
    a, b = Fraction(a), Fraction(b)
    if not 0 < a < b <= harmonic(n):
        raise ValueError(f"need 0 < a < b <= harmonic({n}), got a={a}, b={b}")
    if max_cells < 0:
        raise ValueError(f"max_cells must be >= 0, got {max_cells}")
    cells: list[Cell] = []
    cursor = b
    while len(cells) < max_cells and cursor > a:
        cell = cell_of(cursor, n, node_budget)
        # cursor is in (cell.lower, cell.upper]; clip the first emitted cell
        # at b (later cursors are exact cell endpoints, so this is a no-op)
        # and the last one at a, so the emitted pieces tile (max(a, lower), b].
        lower = cell.lower if cell.lower > a else a
        cells.append(Cell(level=n, lower=lower, upper=cursor, best_rep=cell.best_rep))
        cursor = cell.lower
    uncovered = cursor - a if cursor > a else ZERO
    return cells, uncovered


def refinement_check(x: Fraction, n: int, node_budget: int | None = None) -> bool:
    """Whether the level-n cell of x nests inside the level-(n-1) cell."""
    if n < 2:
        raise ValueError(f"refinement_check() needs n >= 2, got {n}")
    fine = cell_of(x, n, node_budget)
    coarse = cell_of(x, n - 1, node_budget)
    if fine.lower < coarse.lower:
        return False
    if coarse.upper is None:
        return True
    return fine.upper is not None and fine.upper <= coarse.upper


def _sylvester_maxtail(m: int, r: int) -> Fraction:
    """Largest constrained r-term tail starting at denominator >= m.

    The constraint m_{k+1} >= (m_k - 1) m_k + 1 makes the densest tail the
    chain of equalities from m itself.
    """
    total = ZERO
    for _ in range(r):
        total += Fraction(1, m)
        m = (m - 1) * m + 1
    return total


def _largest_feasible(need: Fraction, low: int, r: int) -> int:
    """Largest m >= low with _sylvester_maxtail(m, r) >= need.

    Caller guarantees feasibility at low; the reach is strictly decreasing
    in m and tends to 0, so the bracket-and-bisect below terminates.
    """
    hi = low * 2
    while _sylvester_maxtail(hi, r) >= need:
        hi *= 2
    lo = low
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sylvester_maxtail(mid, r) >= need:
            lo = mid
        else:
            hi = mid
    return lo


def _regular_descend(x: Fraction, hi: Fraction, r: int, low: int, p: Fraction) -> Fraction | None:
    """A regular value in [x, hi] with r constrained terms appended to p.

    Greedy descent: take the largest feasible denominator while still below
    x, then finish with a sparse chain once x is passed.  Returns None when
    the branch cannot reach x or the canonical completion escapes hi.
    """
    while r > 0:
        if p >= x:
            rem = hi - p
            if rem <= 0:
                return None
            # a chain starting at m sums below 1/(m-1), so m-1 >= 1/rem keeps
            # the whole completion inside the window
            m = max(low, -((-rem.denominator) // rem.numerator) + 1)
            while r > 0:
                p += Fraction(1, m)
                m = (m - 1) * m + 1
                r -= 1
            return p
        need = x - p
        if r == 1:
            m = need.denominator // need.numerator  # largest m with 1/m >= need
            if m < low:
                return None
            return p + Fraction(1, m)
        if _sylvester_maxtail(low, r) < need:
            return None
        m = _largest_feasible(need, low, r)
        p += Fraction(1, m)
        low = (m - 1) * m + 1
        r -= 1
    return p if p >= x else None


def next_regular_above(x: Fraction, n: int) -> Fraction:
    """A smallest-possible regular n-term value >= x, within x + 1/(n(n+1)).

    Candidates are built per prefix length l (denominators 1..l, then n-l
    constrained terms); the infimum of regular values >= x is not always
    attained (tails can shrink toward a limit), so the canonical greedy
    descent value per branch is used.  The returned value always satisfies
    the 1/(n(n+1)) density bound.
    """
    x = Fraction(x)
    if n < 1:
        raise ValueError(f"next_regular_above() needs n >= 1, got {n}")
    hn = harmonic(n)
    if not 0 < x <= hn:
        raise ValueError(f"need 0 < x <= harmonic({n}), got {x}")
    window_hi = x + Fraction(1, n * (n + 1))
    best = hn  # the l = n regular value; >= x by the precondition
    prefix = ZERO
    for l in range(n):
        if l:
            prefix += Fraction(1, l)
        # first free denominator >= 2 always: taking 1 at l = 0 is exactly
        # the l = 1 branch, and m = 1 degenerates the chain recurrence
        cand = _regular_descend(x, window_hi, n - l, max(l + 1, 2), prefix)
        if cand is not None and cand < best:
            best = cand
    return best


def cells_to_csv(cells: list[Cell]) -> str:
    """CSV dump: level, lower, upper, length, best_rep (space-separated)."""
    lines = ["level,lower,upper,length,best_rep"]
    for c in cells:
        upper = "+inf" if c.upper is None else format_rational(c.upper)
        length = "" if c.upper is None else format_rational(c.upper - c.lower)
        rep = "" if c.best_rep is None else " ".join(str(m) for m in c.best_rep)
        lines.append(f"{c.level},{format_rational(c.lower)},{upper},{length},{rep}")
    return "\n".join(lines) + "\n"
