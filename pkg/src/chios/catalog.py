"""Ready-made instances: the six-point plane configuration and friends."""

from fractions import Fraction as F

from . import linalg
from .realization import VectorConfig

# p1..p6 in the affine plane z = 1; lines 123, 145, 256, 346
FIGURE1_VECTORS = (
    (0, 0, 1),
    (0, F(1, 2), 1),
    (0, 1, 1),
    (F(1, 2), 0, 1),
    (1, 0, 1),
    (F(1, 3), F(1, 3), 1),
)

FIGURE1_CIRCUITS = (
    (1, 2, 3), (1, 4, 5), (2, 5, 6), (3, 4, 6),
    (1, 2, 4, 6), (1, 3, 5, 6), (2, 3, 4, 5),
)

# second diagonal basis of A_3: 125 is read as the word (1, 5, 2)
B3_WORDS = ((1, 2, 4), (1, 5, 2), (1, 3, 4), (1, 3, 5), (1, 3, 6), (1, 5, 6))


def figure1():
    return VectorConfig(3, FIGURE1_VECTORS)


def random_rank3_config(rng, n, lo=-3, hi=3, affine=False):
    """Random integer configuration of n nonzero vectors spanning 3-space.

    ``rng`` is a ``random.Random``; with ``affine`` the last coordinate is 1.
    """
    while True:
        vs = []
        while len(vs) < n:
            v = [rng.randint(lo, hi) for _ in range(2 if affine else 3)]
            if affine:
                v.append(1)
            if any(v):
                vs.append(tuple(v))
        if linalg.rank([list(v) for v in vs]) == 3:
            return VectorConfig(3, vs)
