"""Closed-form image ratios and the number theory behind admissible field sizes.

Each formula here has a brute-force counterpart in ``imago.image``; the test
suite pairs them.  Formulas refuse inputs outside their hypotheses instead of
quietly falling back to enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import sympy

from .errors import PreconditionError
from .fields import prime_power

__all__ = [
    "AdmissibilityReport",
    "ConjecturalRatio",
    "abelian_power_ratio",
    "admissible_exponents",
    "commutator_cyclic_ratio",
    "engel_sl2_conjectural_ratio",
    "gl2_power_image_size",
    "gl2_power_ratio",
    "multiplicative_order",
]


def commutator_cyclic_ratio(n):
    """Ratio of any commutator-subgroup word on Z/n: the image is {0}."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Fraction(1, n)


def abelian_power_ratio(exponents, k, t):
    """Ratio on (Z/k)^t of a word with the given abelianization.

    The word acts as a -> sum(a_i * x_i) on each factor, whose image is the
    subgroup generated by d = gcd(a_1, ..., a_n, k).  So the ratio is 1/d^t.
    """
    if k < 1 or t < 1:
        raise ValueError("k and t must be >= 1")
    exponents = list(exponents)
    if not any(exponents):
        raise ValueError("exponent vector must not be all zero")
    d = gcd(reduce(gcd, exponents), k)
    return Fraction(1, d**t)


def _gl2_hypotheses(q, M):
    pr = prime_power(q)
    if pr is None:
        raise PreconditionError(f"q = {q} is not a prime power")
    p, _ = pr
    if M < 1 or M % p:
        raise PreconditionError(f"p = {p} does not divide M = {M}")
    if gcd(q * q - 1, M) != 1:
        raise PreconditionError(f"gcd(q^2 - 1, M) = gcd({q * q - 1}, {M}) != 1")
    return p


def gl2_power_image_size(q, M):
    """|{g^M : g in GL2(q)}| when p | M and gcd(q^2 - 1, M) = 1.

    Under those hypotheses only the Jordan classes [[l, 1], [0, l]] are
    missed; there are q - 1 of them, each of size q^2 - 1.
    """
    _gl2_hypotheses(q, M)
    return (q * q - 1) * (q * q - q) - (q - 1) * (q * q - 1)


def gl2_power_ratio(q, M):
    _gl2_hypotheses(q, M)
    return 1 - Fraction(1, q)


def multiplicative_order(a, n):
    """Least b >= 1 with a^b = 1 (mod n), found by iteration."""
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    x, b = a % n, 1
    while x != 1 % n:
        x = (x * a) % n
        b += 1
    return b


@dataclass(frozen=True)
class AdmissibilityReport:
    M: int
    prime_factorization: list
    p1: int
    b_list: list
    b: int
    admissible_r: list = field(default_factory=list)


def admissible_exponents(M, count):
    """First ``count`` exponents r with gcd(p1^(2r) - 1, M) = 1, p1 the least prime of M.

    For each other prime p_i, b_i is the order of p1^2 modulo p_i, so p_i
    divides p1^(2r) - 1 exactly when b_i | r.  Admissibility is still checked
    directly with a gcd for every r returned.
    """
    if not isinstance(M, int) or M < 2:
        raise PreconditionError(f"M must be an integer >= 2, got {M}")
    if M % 6 == 0:
        raise PreconditionError(f"6 divides M = {M}; this case is excluded")
    if count < 0:
        raise ValueError("count must be >= 0")
    fac = sorted((int(p), int(t)) for p, t in sympy.factorint(M).items())
    p1 = fac[0][0]
    b_list = []
    for p, _ in fac[1:]:
        if (p1 * p1) % p == 1:
            raise AssertionError(f"p1^2 = 1 mod {p} cannot happen when 6 does not divide M")
        b_list.append(multiplicative_order(p1 * p1, p))
    b = lcm(*b_list) if b_list else 1
    rs = []
    r = 1
    while len(rs) < count:
        if gcd(p1 ** (2 * r) - 1, M) == 1:
            rs.append(r)
        r += 1
    return AdmissibilityReport(M, fac, p1, b_list, b, rs)


@dataclass(frozen=True)
class ConjecturalRatio:
    """A ratio that only holds for q beyond an unknown threshold q0(i)."""

    value: Fraction
    i: int
    q: int
    conjectural: bool = True
    note: str = "valid only for q >= q0(i); q0(i) is not known effectively"


def engel_sl2_conjectural_ratio(i, q):
    """|SL2(q) minus the identity| / |SL2(q)|, the large-q value for e_i."""
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"Engel index must be >= 1, got {i}")
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    n = q * (q * q - 1)
    return ConjecturalRatio(Fraction(n - 1, n), i, q)
