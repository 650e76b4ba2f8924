import random
from fractions import Fraction

import pytest


@pytest.fixture
def rng():
    return random.Random(0xE617)


def random_rational(rng, max_den=360, lo=Fraction(0), hi=Fraction(2)):
    """A random reduced fraction in (lo, hi] with denominator <= max_den."""
    while True:
        den = rng.randrange(2, max_den + 1)
        num = rng.randrange(1, 2 * den + 1)
        x = Fraction(num, den)
        if lo < x <= hi:
            return x
