"""Realizing a target image ratio for x^(2^a) by a concrete finite group.

Ratios of x^M (M a power of two) multiply over direct products.  Z/2 has
ratio 1/2 and GL2(2^s) has ratio 1 - 2^-s, so any product

    2^-m * (1 - 2^-s_1) * ... * (1 - 2^-s_k)

is attained by C2^m x GL2(2^s_1) x ... x GL2(2^s_k).  ``approximate`` picks m
and the s_i greedily so that the product approaches the target from above.
All arithmetic is on Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import gl2_power_ratio
from .errors import ImagoError, PreconditionError
from .groups import GL2, Cyclic, Product, product

__all__ = [
    "PlanStep",
    "RatioPlan",
    "approximate",
    "closed_form_ratio",
    "plan_ratio",
    "plan_steps",
    "realize",
]

MAX_ITERATIONS = 10_000


@dataclass(frozen=True)
class RatioPlan:
    m: int
    field_sizes: tuple
    achieved: Fraction
    target: Fraction
    error: Fraction
    exact: bool


@dataclass(frozen=True)
class PlanStep:
    residual: Fraction
    n: int
    size: int
    partial: Fraction
    exact: bool


def _check_target(c):
    c = Fraction(c)
    if not 0 < c < 1:
        raise ValueError(f"target must lie in (0, 1), got {c}")
    return c


def _scale(c):
    m, d = 0, c
    while d < Fraction(1, 2):
        d *= 2
        m += 1
    return m, d


def _interval_index(res):
    """The n >= 1 with 1 - 2^-n <= res < 1 - 2^-(n+1), for res in [1/2, 1)."""
    gap = 1 - res
    return (gap.denominator // gap.numerator).bit_length() - 1


def plan_steps(c):
    """Yield the greedy factors for target c, one PlanStep per factor.

    Infinite unless some residual lands exactly on 1 - 2^-n.  ``partial`` is
    2^-m times the product of the factors chosen so far.
    """
    c = _check_target(c)
    m, d = _scale(c)
    if d == Fraction(1, 2):
        return
    scale = Fraction(1, 2**m)
    prod_v = Fraction(1)
    while True:
        res = d / prod_v
        if not Fraction(1, 2) <= res < 1:
            raise AssertionError(f"residual {res} left [1/2, 1)")
        n = _interval_index(res)
        u = 1 - Fraction(1, 2**n)
        if res == u:
            yield PlanStep(res, n, n, c, True)
            return
        prod_v *= 1 - Fraction(1, 2 ** (n + 1))
        yield PlanStep(res, n, n + 1, scale * prod_v, False)


def approximate(c, epsilon, max_iterations=MAX_ITERATIONS):
    """Plan with |achieved - c| <= epsilon and achieved >= c."""
    c = _check_target(c)
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    m, d = _scale(c)
    if d == Fraction(1, 2):
        return RatioPlan(m + 1, (), c, c, Fraction(0), True)
    sizes = []
    for i, step in enumerate(plan_steps(c)):
        if i >= max_iterations:
            break
        sizes.append(step.size)
        err = step.partial - c
        if step.exact or err <= epsilon:
            return RatioPlan(m, tuple(sizes), step.partial, c, err, step.exact)
    raise ImagoError(f"no plan within {max_iterations} factors for epsilon = {epsilon}")


def plan_ratio(plan):
    r = Fraction(1, 2**plan.m)
    for s in plan.field_sizes:
        r *= 1 - Fraction(1, 2**s)
    return r


def _power_of_two_exponent(M):
    if not isinstance(M, int) or M < 2 or M & (M - 1):
        raise PreconditionError(f"M must be 2^a with a >= 1, got {M}")
    return M.bit_length() - 1


def realize(plan, M=2):
    """The group C2^m x GL2(2^s_1) x ... realizing ``plan`` for the word x^M."""
    _power_of_two_exponent(M)
    factors = [Cyclic(2)] * plan.m + [GL2(2, s) for s in plan.field_sizes]
    if not factors:
        return Cyclic(1)
    return product(*factors)


def closed_form_ratio(spec, M):
    """Ratio of x^M on a realized group, from the per-factor formulas."""
    _power_of_two_exponent(M)
    factors = spec.factors if isinstance(spec, Product) else (spec,)
    r = Fraction(1)
    for f in factors:
        if isinstance(f, Cyclic) and f.n in (1, 2):
            r *= Fraction(1, f.n)
        elif isinstance(f, GL2):
            r *= gl2_power_ratio(f.q, M)
        else:
            raise ValueError(f"{f} is not a factor produced by realize()")
    return r
