import random
import time
from fractions import Fraction

import pytest

from imago.errors import ImagoError, PreconditionError
from imago.groups import Cyclic, format_group_spec, group_order, parse_group_spec
from imago.image import ratio
from imago.planner import RatioPlan, approximate, closed_form_ratio, plan_ratio, plan_steps, realize
from imago.words import power_word

EPS = Fraction(1, 10**4)


def _random_targets(n, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        den = rng.randint(2, 10**6)
        num = rng.randint(1, den - 1)
        out.append(Fraction(num, den))
    return out


def test_approximate_examples():
    p = approximate(Fraction(1, 2), Fraction(1, 10))
    assert (p.m, p.field_sizes, p.achieved, p.exact) == (1, (), Fraction(1, 2), True)
    for eps in (Fraction(1, 2), Fraction(1, 10**9)):
        p = approximate(Fraction(3, 8), eps)
        assert (p.m, p.field_sizes, p.achieved, p.exact, p.error) == (1, (2,), Fraction(3, 8), True, 0)
    p = approximate(Fraction(3, 10), Fraction(1, 1000))
    assert p.m == 1 and p.field_sizes == (2, 3, 4, 6, 7)
    assert p.error < Fraction(1, 1000) and not p.exact
    assert abs(float(p.achieved) - 0.3004450) < 1e-7


def test_plan_ratio_examples():
    def mk(m, sizes):
        return RatioPlan(m, tuple(sizes), Fraction(0), Fraction(0), Fraction(0), False)

    assert plan_ratio(mk(1, [])) == Fraction(1, 2)
    assert plan_ratio(mk(1, [2])) == Fraction(3, 8)
    assert plan_ratio(mk(0, [1])) == Fraction(1, 2)


def test_plan_steps_residuals_and_monotonicity():
    for c in _random_targets(30, seed=3):
        prev = None
        for i, step in zip(range(40), plan_steps(c)):
            assert Fraction(1, 2) <= step.residual < 1
            assert step.partial >= c
            if prev is not None:
                assert step.partial < prev
            prev = step.partial
            if step.exact:
                assert step.partial == c
                break


def test_random_targets():
    for c in _random_targets(100):
        t0 = time.perf_counter()
        p = approximate(c, EPS)
        assert time.perf_counter() - t0 < 0.01
        assert isinstance(p.achieved, Fraction)
        assert p.achieved == plan_ratio(p)
        assert p.achieved >= c and p.error == p.achieved - c <= EPS
        assert p.m + len(p.field_sizes) <= 64
        if p.exact:
            assert p.error == 0


@pytest.mark.parametrize("j", range(1, 21))
def test_dyadic_targets_are_exact(j):
    p = approximate(Fraction(1, 2**j), EPS)
    assert p.exact and p.field_sizes == () and p.m == j


def test_exact_hits_on_representable_targets():
    c = Fraction(1, 4) * Fraction(7, 8) * Fraction(3, 4)
    p = approximate(c, Fraction(1, 10**12))
    assert p.exact and p.achieved == c


def test_realize_examples():
    spec = realize(approximate(Fraction(3, 8), EPS), 2)
    assert format_group_spec(spec) == "C2 x GL2(4)"
    assert group_order(spec) == 360
    empty = RatioPlan(0, (), Fraction(1), Fraction(1), Fraction(0), True)
    assert realize(empty) == Cyclic(1)
    assert plan_ratio(empty) == 1
    p = RatioPlan(2, (3,), Fraction(7, 32), Fraction(7, 32), Fraction(0), True)
    spec = realize(p, 4)
    assert format_group_spec(spec) == "C2^2 x GL2(8)"
    assert closed_form_ratio(spec, 4) == Fraction(7, 32)


@pytest.mark.parametrize("M", [3, 6, 1, 0, 12])
def test_realize_rejects_non_powers_of_two(M):
    with pytest.raises(PreconditionError):
        realize(approximate(Fraction(3, 8), EPS), M)


def test_closed_form_ratio_rejects_foreign_factors():
    with pytest.raises(ValueError):
        closed_form_ratio(parse_group_spec("C3 x GL2(4)"), 2)


def test_round_trip_by_brute_force():
    targets = [Fraction(3, 8), Fraction(21, 64), Fraction(7, 16), Fraction(1, 3), Fraction(5, 8), Fraction(9, 10)]
    checked = 0
    for c in targets:
        for eps in (Fraction(1, 10), Fraction(1, 100)):
            p = approximate(c, eps)
            for M in (2, 4):
                spec = realize(p, M)
                assert closed_form_ratio(spec, M) == p.achieved
                if group_order(spec) <= 10**5:
                    assert ratio(power_word(M), spec).ratio == p.achieved
                    checked += 1
    assert checked >= 10


@pytest.mark.parametrize("c", [0, 1, Fraction(3, 2), -1])
def test_target_out_of_range(c):
    with pytest.raises(ValueError):
        approximate(c, EPS)


def test_bad_epsilon_and_iteration_cap():
    with pytest.raises(ValueError):
        approximate(Fraction(1, 3), 0)
    with pytest.raises(ImagoError):
        approximate(Fraction(1, 3), Fraction(1, 10**30), max_iterations=3)
