import random
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from skewprim import coeff
from skewprim.pairing import PairingContext

settings.register_profile(
    "default", deadline=None, max_examples=30,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")


def random_cyclotomic_context(rng: random.Random, n: int, conforming: bool = True,
                              max_order: int = 8) -> PairingContext:
    """Pairings that are roots of unity, sometimes scaled by a small rational.

    With ``conforming`` the entry p[2][1] is solved for so that the product of
    all off-diagonal pairings is 1.  Small root orders make degenerate
    (non-generic) products common, which is what exercises the solvers.
    """
    m = rng.randint(1, max_order)
    F = coeff.cyclotomic(m)
    z = F.gen
    p = [[F.one] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = z ** rng.randrange(m)
            if rng.random() < 0.25:
                v = v * F(Fraction(rng.choice([2, 3, -1, -2]), rng.choice([1, 1, 3])))
            p[i][j] = v
    if conforming and n >= 2:
        prod = F.one
        for i in range(n):
            for j in range(n):
                if i != j and (i, j) != (1, 0):
                    prod = prod * p[i][j]
        p[1][0] = prod.inv()
    return PairingContext(F, tuple(map(tuple, p)))


@st.composite
def cyclotomic_contexts(draw, n: int, conforming: bool = True):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_cyclotomic_context(random.Random(seed), n, conforming)


def small_rationals():
    return st.fractions(min_value=-5, max_value=5, max_denominator=4)


def nonzero_rationals():
    return small_rationals().filter(lambda f: f != 0)
