"""Exact arithmetic: prime-power fields F_q, 2x2 matrices over them, rationals.

Field elements are stored as an integer ``value`` whose base-p digits are the
coefficients of the residue polynomial, constant term first.  So in F_4 with
modulus t^2 + t + 1 the element t + 1 has coefficients (1, 1) and value 3.
Enumeration order of a field is the order of these values.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import sympy

__all__ = [
    "BigRatio",
    "FieldSpec",
    "FqElem",
    "Mat2",
    "make_field",
    "prime_power",
    "ratio_cmp",
    "ratio_mul",
    "ratio_sub",
]

BigRatio = Fraction

_LOG_TABLE_MAX = 1 << 16


# -- small polynomial helpers over Z/p, coefficient lists constant term first


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _trim(list(a))
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _monic_polys(p, deg):
    for code in range(p**deg):
        coeffs = []
        for _ in range(deg):
            code, c = divmod(code, p)
            coeffs.append(c)
        yield coeffs + [1]


def _is_irreducible(poly, p):
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for f in _monic_polys(p, d):
            if not _poly_mod(poly, f, p):
                return False
    return True


def prime_power(q):
    """Return (p, r) with q = p**r, or None if q is not a prime power."""
    if not isinstance(q, int) or q < 2:
        return None
    fac = sympy.factorint(q)
    if len(fac) != 1:
        return None
    ((p, r),) = fac.items()
    return int(p), int(r)


class FieldSpec:
    """The field F_{p^r} = (Z/p)[t] / (modulus)."""

    __slots__ = ("p", "r", "modulus", "q", "_hash")

    def __init__(self, p, r, modulus):
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree r")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "q", p**r)
        object.__setattr__(self, "_hash", hash((p, r, modulus)))

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.r, self.modulus) == (other.p, other.r, other.modulus)

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (FieldSpec, (self.p, self.r, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, r={self.r}, modulus={self.modulus})"

    def __len__(self):
        return self.q

    def __iter__(self):
        return (FqElem(self, v) for v in range(self.q))

    def __call__(self, x):
        """Coerce an integer (as a residue mod p) or a coefficient sequence."""
        if isinstance(x, FqElem):
            if x.field != self:
                raise ValueError("element belongs to a different field")
            return x
        if isinstance(x, int):
            return FqElem(self, x % self.p)
        coeffs = list(x)
        if len(coeffs) > self.r:
            raise ValueError("too many coefficients")
        value = 0
        for c in reversed(coeffs):
            value = value * self.p + (c % self.p)
        return FqElem(self, value)

    @property
    def zero(self):
        return FqElem(self, 0)

    @property
    def one(self):
        return FqElem(self, 1)

    def nonzero(self):
        return [FqElem(self, v) for v in range(1, self.q)]

    def coeffs(self, value):
        out = []
        for _ in range(self.r):
            value, c = divmod(value, self.p)
            out.append(c)
        return tuple(out)

    # -- raw arithmetic on encoded values

    def add_v(self, a, b):
        p = self.p
        if self.r == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * scale
            scale *= p
        return out

    def neg_v(self, a):
        p = self.p
        if self.r == 1:
            return (-a) % p
        if p == 2:
            return a
        out, scale = 0, 1
        while a:
            a, da = divmod(a, p)
            out += ((-da) % p) * scale
            scale *= p
        return out

    def mul_v(self, a, b):
        if self.r == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        tabs = _log_tables(self)
        if tabs is not None:
            exp, log = tabs
            return exp[(log[a] + log[b]) % (self.q - 1)]
        return self._mul_poly(a, b)

    def _mul_poly(self, a, b):
        p = self.p
        ca, cb = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.r - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        red = _poly_mod(prod, self.modulus, p)
        value = 0
        for c in reversed(red):
            value = value * p + c
        return value

    def inv_v(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.r == 1:
            return pow(a, -1, self.p)
        tabs = _log_tables(self)
        if tabs is not None:
            exp, log = tabs
            return exp[(-log[a]) % (self.q - 1)]
        return self.pow_v(a, self.q - 2)

    def pow_v(self, a, e):
        if e < 0:
            a, e = self.inv_v(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        # nonzero elements satisfy a^(q-1) = 1
        e %= self.q - 1
        result = 1
        while e:
            if e & 1:
                result = self.mul_v(result, a)
            a = self.mul_v(a, a)
            e >>= 1
        return result


@functools.lru_cache(maxsize=None)
def _log_tables(F):
    if F.q > _LOG_TABLE_MAX:
        return None
    n = F.q - 1
    for g in range(2, F.q):
        exp = [1] * n
        x = 1
        for i in range(1, n):
            x = F._mul_poly(x, g)
            if x == 1:
                break
            exp[i] = x
        else:
            log = [0] * F.q
            for i, v in enumerate(exp):
                log[v] = i
            return exp, log
    raise AssertionError("no primitive element found")


@functools.lru_cache(maxsize=None)
def field_arrays(F):
    """Dense (add, mul, neg, inv) lookup arrays indexed by element value.

    ``inv[0]`` is set to 0 and must not be used.  Intended for small q.
    """
    q = F.q
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(a, q):
            add[a, b] = add[b, a] = F.add_v(a, b)
            mul[a, b] = mul[b, a] = F.mul_v(a, b)
    neg = np.array([F.neg_v(a) for a in range(q)], dtype=np.int64)
    inv = np.array([0] + [F.inv_v(a) for a in range(1, q)], dtype=np.int64)
    return add, mul, neg, inv


@functools.lru_cache(maxsize=None)
def make_field(p, r=1):
    """Canonical model of F_{p^r}.

    The modulus is the monic irreducible of degree r whose low coefficients,
    read as a base-p integer, are smallest.  For r = 1 this is ``t``.
    """
    if not isinstance(p, int) or not isinstance(r, int):
        raise TypeError("p and r must be integers")
    if r < 1:
        raise ValueError(f"extension degree must be >= 1, got {r}")
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    for poly in _monic_polys(p, r):
        if r == 1 or _is_irreducible(poly, p):
            return FieldSpec(p, r, poly)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, slots=True, order=False)
class FqElem:
    field: FieldSpec
    value: int

    @property
    def coeffs(self):
        return self.field.coeffs(self.value)

    def _check(self, other):
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FqElem):
            return None
        if other.field != self.field:
            raise ValueError("field mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return FqElem(self.field, self.field.add_v(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FqElem(self.field, self.field.neg_v(self.value))

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return FqElem(self.field, self.field.mul_v(self.value, other.value))

    __rmul__ = __mul__

    def inv(self):
        return FqElem(self.field, self.field.inv_v(self.value))

    def __truediv__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, e):
        return FqElem(self.field, self.field.pow_v(self.value, e))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __lt__(self, other):
        return self.value < other.value

    def __repr__(self):
        return f"Fq{self.field.q}({self.value})"

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True, slots=True)
class Mat2:
    """Row-major 2x2 matrix [[a, b], [c, d]] over a finite field."""

    a: FqElem
    b: FqElem
    c: FqElem
    d: FqElem

    def __post_init__(self):
        F = self.a.field
        if not (self.b.field == F and self.c.field == F and self.d.field == F):
            raise ValueError("matrix entries must share one field")

    @classmethod
    def of(cls, field, rows):
        (a, b), (c, d) = rows
        return cls(field(a), field(b), field(c), field(d))

    @classmethod
    def identity(cls, field):
        return cls(field.one, field.zero, field.zero, field.one)

    @classmethod
    def zero(cls, field):
        z = field.zero
        return cls(z, z, z, z)

    @property
    def field(self):
        return self.a.field

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def values(self):
        return (self.a.value, self.b.value, self.c.value, self.d.value)

    def rows(self):
        return [[self.a.value, self.b.value], [self.c.value, self.d.value]]

    def __mul__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        F = self.field
        if o.field != F:
            raise ValueError("field mismatch")
        mul, add = F.mul_v, F.add_v
        a, b, c, d = self.values()
        e, f, g, h = o.values()
        return Mat2(
            FqElem(F, add(mul(a, e), mul(b, g))),
            FqElem(F, add(mul(a, f), mul(b, h))),
            FqElem(F, add(mul(c, e), mul(d, g))),
            FqElem(F, add(mul(c, f), mul(d, h))),
        )

    def __add__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o):
        return self + (-o)

    def scale(self, s):
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def is_scalar(self):
        return not self.b and not self.c and self.a == self.d

    def inv(self):
        det = self.det()
        if not det:
            raise ZeroDivisionError("singular matrix has no inverse")
        s = det.inv()
        return Mat2(s * self.d, -(s * self.b), -(s * self.c), s * self.a)

    def __pow__(self, e):
        base = self
        if e < 0:
            base, e = self.inv(), -e
        result = Mat2.identity(self.field)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return f"Mat2({self.rows()})"


def ratio_mul(a, b):
    return Fraction(a) * Fraction(b)


def ratio_sub(a, b):
    return Fraction(a) - Fraction(b)


def ratio_cmp(a, b):
    """Exact three-way comparison by cross-multiplication: -1, 0 or 1."""
    a, b = Fraction(a), Fraction(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return (lhs > rhs) - (lhs < rhs)
