import random
from pathlib import Path

import pytest

from boundedforms.arrangement import Arrangement

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Shared fixtures: a generic triangle, three points on a line, and the
# nongeneric five-line arrangement with three lines through the origin.

TRI = Arrangement(2, [((1, 0), 0), ((0, 1), 0), ((1, 1), -1)])
PTS3 = Arrangement(1, [((1,), 0), ((1,), -1), ((1,), -2)])
FIG1 = Arrangement(
    2,
    [
        ((0, 1), -1),
        ((0, 1), 1),
        ((-1, 1), 0),
        ((1, 1), 0),
        ((1, 0), 0),
    ],
)

FIG1_PHI = [
    [3, -2, 1, 1],
    [-2, 3, 1, 1],
    [1, 1, 3, -2],
    [1, 1, -2, 3],
]


@pytest.fixture
def tri():
    return TRI


@pytest.fixture
def pts3():
    return PTS3


@pytest.fixture
def fig1():
    return FIG1


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def random_arrangement(rng, m, s, bound=5):
    """Arrangement with integer normal/offset entries in [-bound, bound]."""
    hyperplanes = []
    for _ in range(s):
        while True:
            normal = tuple(rng.randint(-bound, bound) for _ in range(m))
            if any(normal):
                break
        hyperplanes.append((normal, rng.randint(-bound, bound)))
    return Arrangement(m, hyperplanes)


def rng_for(name, seed=0):
    return random.Random(f"{name}:{seed}")
