"""Exact rational arithmetic and Egyptian fraction representations.

Every quantity in this package is an exact ``fractions.Fraction`` -- there is
no floating point anywhere.  This module adds the handful of primitives the
rest of the code is built on: harmonic numbers, the representation type for
sums of distinct unit fractions, string (de)serialization in ``p/q`` form,
and a balanced exact summation helper for the certificate modules, which add
up to a few hundred thousand fractions with large pairwise-coprime
denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

try:
    from gmpy2 import mpq as _mpq

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    _mpq = None
    _HAVE_GMPY2 = False

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact reduced fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    """Serialize reduced with positive denominator; integers print as "p"."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def harmonic(n: int) -> Fraction:
    """n-th harmonic number 1 + 1/2 + ... + 1/n; harmonic(0) == 0."""
    if n < 0:
        raise ValueError(f"harmonic() needs n >= 0, got {n}")
    return sum_exact(Fraction(1, k) for k in range(1, n + 1))


@dataclass(frozen=True)
class EgyptianRep:
    """A sum of distinct unit fractions 1/m_1 + ... + 1/m_n, m_1 < ... < m_n.

    The empty tuple is the unique 0-term representation, with value 0.
    """

    denominators: tuple[int, ...]

    def __post_init__(self) -> None:
        prev = 0
        for m in self.denominators:
            if m <= prev:
                raise ValueError(
                    f"denominators must be strictly increasing positive integers, got {self.denominators}"
                )
            prev = m

    def __len__(self) -> int:
        return len(self.denominators)

    def __iter__(self):
        return iter(self.denominators)

    def value(self) -> Fraction:
        return rep_value(self)


def make_rep(denominators: Sequence[int]) -> EgyptianRep:
    return EgyptianRep(tuple(int(m) for m in denominators))


def rep_value(rep: EgyptianRep) -> Fraction:
    """Exact value of the representation; 0 for the empty one."""
    return sum_exact(Fraction(1, m) for m in rep.denominators)


def sum_exact(values: Iterable[Fraction]) -> Fraction:
    """Exact sum, pairwise-balanced so huge denominators multiply log-depth.

    Uses gmpy2.mpq internally when available; the result is always a
    Fraction.  Sequential Fraction addition is quadratic in the size of the
    accumulated denominator, which matters for the Lemma-1 sums.
    """
    items = list(values)
    if not items:
        return ZERO
    if _HAVE_GMPY2:
        items = [_mpq(v.numerator, v.denominator) for v in items]
    while len(items) > 1:
        nxt = [items[i] + items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    total = items[0]
    if _HAVE_GMPY2:
        return Fraction(int(total.numerator), int(total.denominator))
    return total
