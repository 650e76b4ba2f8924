"""Chain verification, sampled chain density, and the per-cell decay bound.

A point x is "chained" from level n0 through t when its best values at the
consecutive levels differ by unit fractions with strictly increasing
denominators and the level-n0 value has an n0-term representation whose
denominators all precede them.  That is equivalent to one increasing
denominator sequence realizing every best value in the range.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .lemma1 import nongreedy_two_term_measure
from .partition import Cell
from .rational import ZERO, ONE, EgyptianRep, format_rational, harmonic, sum_exact
from .search import ResourceLimitError, best_underapprox, has_representation

# 99% two-sided normal quantile, fixed rational constant
WILSON_Z99 = Fraction(2575829303549, 10**12)


@dataclass(frozen=True)
class ChainReport:
    x: Fraction
    n0: int
    t: int
    best_values: tuple[Fraction, ...]
    diffs: tuple[Fraction, ...]
    verdict: bool
    failure_level: int | None
    base_rep: EgyptianRep | None

    def to_dict(self) -> dict:
        return {
            "x": format_rational(self.x),
            "n0": self.n0,
            "t": self.t,
            "best_values": [format_rational(v) for v in self.best_values],
            "diffs": [format_rational(d) for d in self.diffs],
            "verdict": "pass" if self.verdict else "fail",
            "failure_level": self.failure_level,
            "base_rep": None if self.base_rep is None else list(self.base_rep),
        }


@dataclass(frozen=True)
class MeasureEnclosure:
    """Certified lower <= true measure <= upper."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper:
            raise ValueError(f"invalid enclosure [{self.lower}, {self.upper}]")


def chain_check(
    x: Fraction,
    n0: int,
    t: int,
    stop_on_failure: bool = False,
    node_budget: int | None = None,
) -> ChainReport:
    """Verify the chain property for x across levels n0..t.

    Passing requires every consecutive best-value difference to be a unit
    fraction, their denominators strictly increasing, and the level-n0 value
    to have an n0-term representation with all denominators below the first
    difference denominator.  Failure is monotone in t, so stop_on_failure
    may cut the level loop at the first bad difference.
    """
    x = Fraction(x)
    if not 0 <= n0 < t:
        raise ValueError(f"need 0 <= n0 < t, got n0={n0}, t={t}")
    if x <= 0:
        raise ValueError(f"chain_check() needs x > 0, got {x}")
    if n0 >= 1 and x > harmonic(n0):
        raise ValueError(f"chain_check() needs x <= harmonic({n0}), got {x}")
    values: list[Fraction] = []
    diffs: list[Fraction] = []
    verdict = True
    failure: int | None = None
    last_denom = 0
    for level in range(n0, t + 1):
        value, _ = best_underapprox(x, level, node_budget)
        values.append(value)
        if level > n0:
            diff = value - values[-2]
            diffs.append(diff)
            if diff.numerator == 1 and diff.denominator > last_denom:
                last_denom = diff.denominator
            else:
                verdict = False
                if failure is None:
                    failure = level
                if stop_on_failure:
                    break
    base_rep: EgyptianRep | None = None
    if verdict:
        if n0 == 0:
            base_rep = EgyptianRep(())
        else:
            base_rep = has_representation(values[0], n0, diffs[0].denominator - 1)
            if base_rep is None:
                verdict = False
                failure = n0
    return ChainReport(
        x=x,
        n0=n0,
        t=t,
        best_values=tuple(values),
        diffs=tuple(diffs),
        verdict=verdict,
        failure_level=failure,
        base_rep=base_rep,
    )


def _sqrt_upper(v: Fraction) -> Fraction:
    """A rational >= sqrt(v) for v >= 0."""
    prod = v.numerator * v.denominator
    root = math.isqrt(prod)
    if root * root == prod:
        return Fraction(root, v.denominator)
    return Fraction(root + 1, v.denominator)


def wilson_interval(successes: int, trials: int, z: Fraction = WILSON_Z99) -> tuple[Fraction, Fraction]:
    """Wilson score interval, outward-rounded to exact rationals."""
    if trials < 1:
        raise ValueError(f"wilson_interval() needs trials >= 1, got {trials}")
    if not 0 <= successes <= trials:
        raise ValueError(f"need 0 <= successes <= trials, got {successes}/{trials}")
    p = Fraction(successes, trials)
    z2 = z * z
    denom = 1 + z2 / trials
    center = p + z2 / (2 * trials)
    spread = z * _sqrt_upper(p * (1 - p) / trials + z2 / (4 * trials * trials))
    lo = (center - spread) / denom
    hi = (center + spread) / denom
    return max(ZERO, lo), min(ONE, hi)


@dataclass(frozen=True)
class SampleReport:
    s: int
    t: int
    count: int
    seed: int
    bits: int
    passes: int
    fails: int
    undecided: int
    fraction: Fraction
    wilson_low: Fraction
    wilson_high: Fraction
    rows: tuple[tuple[Fraction, str, int | None], ...]

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "count": self.count,
            "seed": self.seed,
            "bits": self.bits,
            "passes": self.passes,
            "fails": self.fails,
            "undecided": self.undecided,
            "fraction": format_rational(self.fraction),
            "wilson_99_interval": [
                format_rational(self.wilson_low),
                format_rational(self.wilson_high),
            ],
        }

    def to_csv(self) -> str:
        lines = ["x,verdict,failure_level"]
        for x, verdict, failure in self.rows:
            lines.append(
                f"{format_rational(x)},{verdict},{'' if failure is None else failure}"
            )
        return "\n".join(lines) + "\n"


def sample_chain_density(
    s: int,
    t: int,
    count: int,
    seed: int,
    bits: int,
    node_budget: int | None = None,
) -> SampleReport:
    """Chain-pass fraction over seeded dyadic samples from (0, harmonic(s)].

    Samples are c / 2^bits with c drawn uniformly from
    [1, floor(harmonic(s) * 2^bits)] by random.Random(seed).randrange, one
    draw per sample in order.  Samples whose solver budget runs out are
    counted as undecided and excluded from the fraction.
    """
    if s < 1:
        raise ValueError(f"sample_chain_density() needs s >= 1, got {s}")
    if t <= s:
        raise ValueError(f"sample_chain_density() needs t > s, got s={s}, t={t}")
    if count < 1:
        raise ValueError(f"sample_chain_density() needs count >= 1, got {count}")
    if bits < 16:
        raise ValueError(f"sample_chain_density() needs bits >= 16, got {bits}")
    hs = harmonic(s)
    scale = 1 << bits
    top = (hs.numerator * scale) // hs.denominator
    rng = random.Random(seed)
    passes = fails = undecided = 0
    rows: list[tuple[Fraction, str, int | None]] = []
    for _ in range(count):
        x = Fraction(rng.randrange(1, top + 1), scale)
        try:
            report = chain_check(x, s, t, stop_on_failure=True, node_budget=node_budget)
        except ResourceLimitError:
            undecided += 1
            rows.append((x, "undecided", None))
            continue
        if report.verdict:
            passes += 1
            rows.append((x, "pass", None))
        else:
            fails += 1
            rows.append((x, "fail", report.failure_level))
    decided = passes + fails
    if decided:
        fraction = Fraction(passes, decided)
        low, high = wilson_interval(passes, decided)
    else:
        fraction, low, high = ZERO, ZERO, ONE
    return SampleReport(
        s=s,
        t=t,
        count=count,
        seed=seed,
        bits=bits,
        passes=passes,
        fails=fails,
        undecided=undecided,
        fraction=fraction,
        wilson_low=low,
        wilson_high=high,
        rows=tuple(rows),
    )


@dataclass(frozen=True)
class DecayReport:
    cell_lower: Fraction
    cell_upper: Fraction
    level: int
    i0: int
    i_max: int
    slice_bound: str
    enclosure: MeasureEnclosure
    ratio: Fraction
    note: str | None

    def to_dict(self) -> dict:
        return {
            "cell": [format_rational(self.cell_lower), format_rational(self.cell_upper)],
            "level": self.level,
            "i0": self.i0,
            "i_max": self.i_max,
            "slice_bound": self.slice_bound,
            "enclosure": [
                format_rational(self.enclosure.lower),
                format_rational(self.enclosure.upper),
            ],
            "ratio": format_rational(self.ratio),
            "note": self.note,
        }


def cell_decay_bound(cell: Cell, i_max: int, slice_bound: str = "lemma") -> DecayReport:
    """Upper enclosure on the chain survivors of a bounded cell (q, r].

    Survivors through two more levels must, within each slice
    I_i = q + (1/i, 1/(i-1)], have y - q best-approximated greedily by two
    terms; the certified non-greedy measure of each slice is subtracted.
    The decomposition is:

      exceptional left part  r - q - 1/i0   (i0 smallest with 1/i0 < r - q)
      + sum over i0 < i <= i_max of (|I_i| - certified non-greedy part)
      + 1/i_max              (slices beyond i_max counted as surviving).

    slice_bound picks the certificate: "exact" runs the full competitor
    enumeration per slice (only viable for small i ranges); "lemma" uses the
    verified one-permille lower bound for slices with i >= 1000 (and nothing
    below), which telescopes to a closed form and scales to i_max ~ 10^7.
    """
    if cell.upper is None:
        raise ValueError("cell_decay_bound() needs a bounded cell")
    if slice_bound not in ("lemma", "exact"):
        raise ValueError(f"slice_bound must be 'lemma' or 'exact', got {slice_bound!r}")
    length = cell.upper - cell.lower
    # smallest i0 with 1/i0 < length
    i0 = length.denominator // length.numerator + 1
    note = None
    if i_max <= i0:
        note = "i_max <= i0: tail dominates, the bound is vacuous"
        enclosure = MeasureEnclosure(ZERO, length)
        ratio = ONE
        return DecayReport(
            cell_lower=cell.lower,
            cell_upper=cell.upper,
            level=cell.level,
            i0=i0,
            i_max=i_max,
            slice_bound=slice_bound,
            enclosure=enclosure,
            ratio=ratio,
            note=note,
        )
    exceptional = length - Fraction(1, i0)
    slices_total = Fraction(1, i0) - Fraction(1, i_max)  # sum of |I_i|
    if slice_bound == "exact":
        certified = sum_exact(
            nongreedy_two_term_measure(i) for i in range(i0 + 1, i_max + 1)
        )
    else:
        start = max(i0 + 1, 1000)
        if start <= i_max:
            # sum of |I_i| over i >= start telescopes to 1/(start-1) - 1/i_max
            covered = Fraction(1, start - 1) - Fraction(1, i_max)
            certified = covered / 1000
        else:
            certified = ZERO
            note = "no slice reaches i >= 1000; lemma bound certifies nothing"
    upper = exceptional + (slices_total - certified) + Fraction(1, i_max)
    if upper > length:
        upper = length
    enclosure = MeasureEnclosure(ZERO, upper)
    return DecayReport(
        cell_lower=cell.lower,
        cell_upper=cell.upper,
        level=cell.level,
        i0=i0,
        i_max=i_max,
        slice_bound=slice_bound,
        enclosure=enclosure,
        ratio=upper / length,
        note=note,
    )
