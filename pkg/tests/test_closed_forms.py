import itertools
from fractions import Fraction
from math import gcd

import pytest

from imago.closed_forms import (
    abelian_power_ratio, admissible_exponents, commutator_cyclic_ratio, engel_sl2_conjectural_ratio,
    gl2_power_image_size, gl2_power_ratio, multiplicative_order,
)
from imago.errors import PreconditionError
from imago.groups import GL2, SL2, Cyclic, product
from imago.image import ratio
from imago.words import Word, engel, power_word


def _plain_abelian_ratio(a, k, t):
    # image of sum(a_i x_i) on Z/k, counted by brute force over Z/k^n
    img = {sum(ai * xi for ai, xi in zip(a, xs)) % k for xs in itertools.product(range(k), repeat=len(a))}
    return Fraction(len(img), k) ** t


def test_commutator_cyclic_ratio():
    assert commutator_cyclic_ratio(5) == Fraction(1, 5)
    assert commutator_cyclic_ratio(1) == 1
    assert ratio(engel(2), Cyclic(9)).ratio == Fraction(1, 9)
    with pytest.raises(ValueError):
        commutator_cyclic_ratio(0)


@pytest.mark.parametrize("n", range(1, 13))
def test_commutator_cyclic_ratio_oracle(n):
    for i in (1, 2):
        assert ratio(engel(i), Cyclic(n)).ratio == commutator_cyclic_ratio(n)


def test_abelian_power_ratio_examples():
    assert abelian_power_ratio((2, 2), 4, 1) == Fraction(1, 2)
    assert abelian_power_ratio((2,), 2, 3) == Fraction(1, 8)
    assert abelian_power_ratio((3, 6), 9, 1) == Fraction(1, 3)
    with pytest.raises(ValueError):
        abelian_power_ratio((0, 0), 4, 1)
    with pytest.raises(ValueError):
        abelian_power_ratio((1,), 0, 1)


def test_abelian_power_ratio_plain_oracle():
    for n in (1, 2):
        for a in itertools.product(range(-3, 4), repeat=n):
            if not any(a):
                continue
            for k in range(1, 13):
                for t in (1, 2):
                    assert abelian_power_ratio(a, k, t) == _plain_abelian_ratio(a, k, t)


def test_abelian_power_ratio_engine_sample():
    for a, k, t in [((2, 2), 4, 1), ((3, -3), 6, 2), ((2,), 12, 2), ((-2, 3), 7, 1)]:
        w = Word(tuple((i + 1, e) for i, e in enumerate(a)))
        assert ratio(w, product(*[Cyclic(k)] * t)).ratio == abelian_power_ratio(a, k, t)


def test_literal_one_over_k_to_the_t_regime():
    # 1/k^t is right exactly when k divides gcd(a)
    for a in [(2, 2), (4, -2), (6,), (3, 3)]:
        g = gcd(*a)
        for k in range(1, 13):
            for t in (1, 2):
                literal = Fraction(1, k**t)
                assert (abelian_power_ratio(a, k, t) == literal) == (g % k == 0)


def test_gl2_power_examples():
    assert gl2_power_image_size(2, 2) == 3
    assert gl2_power_image_size(4, 2) == 135
    assert gl2_power_ratio(2, 2) == Fraction(1, 2)
    assert gl2_power_ratio(4, 4) == Fraction(3, 4)
    assert gl2_power_ratio(3, 3) == Fraction(2, 3)


@pytest.mark.parametrize("q,M", [(3, 2), (2, 3), (5, 10), (6, 2), (4, 6)])
def test_gl2_power_preconditions(q, M):
    with pytest.raises(PreconditionError):
        gl2_power_ratio(q, M)
    with pytest.raises(PreconditionError):
        gl2_power_image_size(q, M)


def test_gl2_precondition_message_names_the_failure():
    with pytest.raises(PreconditionError, match="does not divide"):
        gl2_power_ratio(3, 2)
    with pytest.raises(PreconditionError, match="gcd"):
        gl2_power_ratio(2, 6)


@pytest.mark.parametrize("q,M", [(2, 2), (2, 4), (4, 2), (4, 4), (3, 3), (5, 5), (8, 2), (2, 20)])
def test_gl2_power_oracle(q, M):
    r = ratio(power_word(M), GL2.of(q))
    assert r.ratio == gl2_power_ratio(q, M)
    assert r.image_size == gl2_power_image_size(q, M)


def test_gl2_power_fails_outside_hypotheses():
    # q = 3, M = 2: p does not divide M, and the oracle differs from 1 - 1/q
    assert ratio(power_word(2), GL2.of(3)).ratio != Fraction(2, 3)


def test_multiplicative_order():
    assert multiplicative_order(4, 5) == 2
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(1, 9) == 1
    with pytest.raises(ValueError):
        multiplicative_order(3, 9)


def test_admissible_exponents_m20():
    rep = admissible_exponents(20, 3)
    assert rep.p1 == 2 and rep.prime_factorization == [(2, 2), (5, 1)]
    assert rep.b_list == [2] and rep.b == 2
    assert rep.admissible_r == [1, 3, 5]


def test_admissible_exponents_power_of_two():
    for a in range(1, 8):
        rep = admissible_exponents(2**a, 6)
        assert rep.admissible_r == [1, 2, 3, 4, 5, 6]
        assert rep.b_list == [] and rep.b == 1


@pytest.mark.parametrize("M", [6, 12, 18, 1, 0])
def test_admissible_exponents_rejects(M):
    with pytest.raises(PreconditionError):
        admissible_exponents(M, 3)


@pytest.mark.parametrize("M", [5, 7, 9, 10, 14, 15, 20, 21, 35, 45, 55, 77, 105, 110, 1001, 4 * 5 * 7 * 11])
def test_admissible_exponents_invariants(M):
    rep = admissible_exponents(M, 8)
    assert all(b > 1 for b in rep.b_list)
    for r in rep.admissible_r:
        assert gcd(rep.p1 ** (2 * r) - 1, M) == 1
    # exponents skipped are exactly those some b_i divides
    top = rep.admissible_r[-1]
    skipped = [r for r in range(1, top) if r not in rep.admissible_r]
    assert all(any(r % b == 0 for b in rep.b_list) for r in skipped)
    assert all(not any(r % b == 0 for b in rep.b_list) for r in rep.admissible_r)


def test_admissible_field_sizes_give_closed_form():
    rep = admissible_exponents(20, 2)
    for r in rep.admissible_r[:1]:
        q = 2**r
        assert ratio(power_word(20), GL2.of(q)).ratio == 1 - Fraction(1, q)


def test_engel_conjectural():
    c = engel_sl2_conjectural_ratio(1, 5)
    assert c.value == Fraction(119, 120) and c.conjectural
    assert engel_sl2_conjectural_ratio(1, 2).value == Fraction(5, 6)
    assert ratio(engel(1), SL2.of(2)).ratio == Fraction(1, 2)
    with pytest.raises(ValueError):
        engel_sl2_conjectural_ratio(0, 5)
