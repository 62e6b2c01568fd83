import random

import pytest

from imago.groups import GL2, SL2, Cyclic, product
from imago.words import Word

# every group here has order <= 60
SMALL_GROUPS = [
    Cyclic(1), Cyclic(2), Cyclic(3), Cyclic(4), Cyclic(5), Cyclic(6), Cyclic(8),
    Cyclic(9), Cyclic(12), GL2.of(2), SL2.of(2), SL2.of(3), GL2.of(3), SL2.of(4),
    product(Cyclic(2), Cyclic(2)), product(Cyclic(3), GL2.of(2)),
    product(Cyclic(2), SL2.of(3)), product(Cyclic(2), Cyclic(2), Cyclic(3)),
]


def random_word(rng, n_gens=2, max_len=6, max_exp=3):
    syl = []
    for _ in range(rng.randint(0, max_len)):
        e = rng.choice([k for k in range(-max_exp, max_exp + 1) if k])
        syl.append((rng.randint(1, n_gens), e))
    return Word(tuple(syl))


def random_nonempty_word(rng, n_gens=2):
    while True:
        w = random_word(rng, n_gens)
        if w:
            return w


@pytest.fixture
def rng():
    return random.Random(20261016)
