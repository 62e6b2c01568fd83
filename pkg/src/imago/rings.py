"""Finite rings and noncommutative polynomial maps on them.

Rings: Z/n (``Z<n>``), the full 2x2 matrix ring over F_q (``M2(<q>)``) and
direct products, written like group specs, e.g. ``"Z4^2 x M2(2)"``.

Polynomials have integer coefficients, no constant term, and noncommuting
variables x1, x2, ... (aliases x, y)::

    poly := ["+"|"-"] term { ("+"|"-") term }
    term := [int ["*"]] factor { ["*"] factor }
    factor := var ["^" int>=1]
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .config import DEFAULT_LIMITS
from .errors import CapExceeded, ParseError
from .fields import Mat2, make_field, prime_power
from .image import ImageReport

__all__ = [
    "Mat2Ring",
    "NCPoly",
    "RingProduct",
    "ZmodN",
    "format_poly",
    "format_ring_spec",
    "get_ring",
    "gl2ring_square_closed_forms",
    "parse_poly",
    "parse_ring_spec",
    "poly_evaluate",
    "poly_image",
    "poly_image_ratio",
    "ring_product",
]


# ---------------------------------------------------------------- specs


@dataclass(frozen=True)
class ZmodN:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"modulus must be >= 1, got {self.n}")

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Mat2Ring:
    p: int
    r: int = 1

    def __post_init__(self):
        if self.r < 1 or prime_power(self.p) != (self.p, 1):
            raise ValueError(f"({self.p}, {self.r}) does not describe a prime power")

    @classmethod
    def of(cls, q):
        pr = prime_power(q)
        if pr is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(*pr)

    @property
    def q(self):
        return self.p**self.r

    def __str__(self):
        return f"M2({self.q})"


@dataclass(frozen=True)
class RingProduct:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")

    def __str__(self):
        return format_ring_spec(self)


def ring_product(*specs):
    flat = []
    for s in specs:
        flat.extend(s.factors if isinstance(s, RingProduct) else [s])
    if not flat:
        raise ValueError("a product needs at least one factor")
    return flat[0] if len(flat) == 1 else RingProduct(tuple(flat))


def format_ring_spec(spec):
    if not isinstance(spec, RingProduct):
        return str(spec)
    parts = []
    for f, run in itertools.groupby(spec.factors):
        k = len(list(run))
        parts.append(str(f) if k == 1 else f"{f}^{k}")
    return " x ".join(parts)


_RING_ATOM = re.compile(r"\s*(?:M2\s*\(\s*(?P<q>\d+)\s*\)|Z\s*(?P<n>\d+))\s*")
_POW = re.compile(r"\^\s*(\d+)\s*")


def parse_ring_spec(text):
    pos, factors = 0, []
    while True:
        m = _RING_ATOM.match(text, pos)
        if m is None:
            raise ParseError("expected Z<n> or M2(<q>)", text, pos)
        try:
            atom = Mat2Ring.of(int(m.group("q"))) if m.group("q") else ZmodN(int(m.group("n")))
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start()) from None
        pos = m.end()
        k = 1
        km = _POW.match(text, pos)
        if km:
            k = int(km.group(1))
            if k < 1:
                raise ParseError("expected a positive integer exponent", text, pos)
            pos = km.end()
        elif pos < len(text) and text[pos] == "^":
            raise ParseError("expected a positive integer exponent", text, pos + 1)
        factors.extend([atom] * k)
        if pos == len(text):
            return ring_product(*factors)
        if text[pos] != "x":
            raise ParseError("expected 'x' between factors", text, pos)
        pos += 1


# ---------------------------------------------------------------- runtime


class ZmodNRing:
    def __init__(self, spec):
        self.spec = spec
        self.size = spec.n
        self.zero = 0
        self.one = 1 % spec.n

    def elements(self):
        return list(range(self.size))

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.size

    def add(self, x, y):
        return (x + y) % self.size

    def neg(self, x):
        return (-x) % self.size

    def mul(self, x, y):
        return (x * y) % self.size


class MatrixRing:
    def __init__(self, spec):
        self.spec = spec
        self.field = F = make_field(spec.p, spec.r)
        self.size = spec.q**4
        self.zero = Mat2.zero(F)
        self.one = Mat2.identity(F)

    def elements(self):
        F = self.field
        return [Mat2(*t) for t in itertools.product(list(F), repeat=4)]

    def contains(self, x):
        return isinstance(x, Mat2) and x.field == self.field

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y


class ProductRing:
    def __init__(self, spec, limits):
        self.spec = spec
        self.parts = [get_ring(f, limits) for f in spec.factors]
        self.size = prod(r.size for r in self.parts)
        self.zero = tuple(r.zero for r in self.parts)
        self.one = tuple(r.one for r in self.parts)

    def elements(self):
        return list(itertools.product(*(r.elements() for r in self.parts)))

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == len(self.parts)
            and all(r.contains(y) for r, y in zip(self.parts, x))
        )

    def add(self, x, y):
        return tuple(r.add(a, b) for r, a, b in zip(self.parts, x, y))

    def neg(self, x):
        return tuple(r.neg(a) for r, a in zip(self.parts, x))

    def mul(self, x, y):
        return tuple(r.mul(a, b) for r, a, b in zip(self.parts, x, y))


def _from_int(ring, c):
    """c * 1 by repeated doubling; the characteristic does the reduction."""
    neg = c < 0
    c = abs(c)
    acc, base = ring.zero, ring.one
    while c:
        if c & 1:
            acc = ring.add(acc, base)
        c >>= 1
        if c:
            base = ring.add(base, base)
    return ring.neg(acc) if neg else acc


def _pow(ring, x, k):
    result = None
    while k:
        if k & 1:
            result = x if result is None else ring.mul(result, x)
        k >>= 1
        if k:
            x = ring.mul(x, x)
    return result


@functools.lru_cache(maxsize=64)
def get_ring(spec, limits=DEFAULT_LIMITS):
    if isinstance(spec, str):
        spec = parse_ring_spec(spec)
    if isinstance(spec, ZmodN):
        return ZmodNRing(spec)
    if isinstance(spec, Mat2Ring):
        return MatrixRing(spec)
    if isinstance(spec, RingProduct):
        return ProductRing(spec, limits)
    raise TypeError(f"not a ring spec: {spec!r}")


def enumerate_ring(spec, limits=DEFAULT_LIMITS):
    ring = get_ring(spec, limits)
    if ring.size > limits.enumeration_cap:
        raise CapExceeded(f"enumerating {format_ring_spec(ring.spec)}", ring.size, limits.enumeration_cap)
    return ring.elements()


# ---------------------------------------------------------------- polynomials


def _merge_monomial(mono):
    out = []
    for v, k in mono:
        if k < 1:
            raise ValueError(f"variable powers must be >= 1, got {k}")
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + k)
        else:
            out.append((v, k))
    return tuple(out)


@dataclass(frozen=True)
class NCPoly:
    terms: tuple = ()

    def __post_init__(self):
        combined = {}
        for coeff, mono in self.terms:
            mono = _merge_monomial((int(v), int(k)) for v, k in mono)
            if not mono:
                raise ValueError("constant terms are not allowed")
            if any(v < 1 for v, _ in mono):
                raise ValueError("variable index must be >= 1")
            combined[mono] = combined.get(mono, 0) + int(coeff)
        object.__setattr__(
            self, "terms", tuple((c, m) for m, c in combined.items() if c != 0)
        )

    @classmethod
    def power(cls, k, var=1):
        return cls(((1, ((var, k),)),))

    def variables(self):
        return sorted({v for _, mono in self.terms for v, _ in mono})

    def __str__(self):
        return format_poly(self)


def format_poly(poly):
    if not poly.terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(poly.terms):
        body = "*".join(f"x{v}" if k == 1 else f"x{v}^{k}" for v, k in mono)
        mag = abs(c)
        text = body if mag == 1 else f"{mag}*{body}"
        if i == 0:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(out)


_POLY_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d*|y)|(?P<op>[-+*^]))")


def parse_poly(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _POLY_TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    i = 0
    terms = []
    sign = 1
    if tokens[0][0] == "op" and tokens[0][1] in "+-":
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    while True:
        coeff = 1
        kind, val, at = tokens[i]
        if kind == "int":
            coeff = int(val)
            i += 1
            if tokens[i][:2] == ("op", "*"):
                i += 1
        mono = []
        while tokens[i][0] == "var":
            name, vat = tokens[i][1], tokens[i][2]
            if name in ("x", "y"):
                var = 1 if name == "x" else 2
            else:
                var = int(name[1:])
                if var < 1:
                    raise ParseError("variable index must be >= 1", text, vat)
            i += 1
            k = 1
            if tokens[i][:2] == ("op", "^"):
                i += 1
                if tokens[i][0] != "int" or int(tokens[i][1]) < 1:
                    raise ParseError("expected a positive integer power", text, tokens[i][2])
                k = int(tokens[i][1])
                i += 1
            mono.append((var, k))
            if tokens[i][:2] == ("op", "*"):
                i += 1
                if tokens[i][0] != "var":
                    raise ParseError("expected a variable after '*'", text, tokens[i][2])
        if not mono:
            if kind == "int":
                raise ParseError("constant terms are not allowed", text, at)
            raise ParseError("expected a term", text, tokens[i][2])
        terms.append((sign * coeff, tuple(mono)))
        kind, val, at = tokens[i]
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise ParseError(f"unexpected {val!r}", text, at)
    return NCPoly(tuple(terms))


def poly_evaluate(poly, assignment, ring):
    """Evaluate with noncommutative multiplication in monomial order."""
    if isinstance(assignment, dict):
        lookup = assignment
    else:
        lookup = {i + 1: x for i, x in enumerate(assignment)}
    for v in poly.variables():
        if v not in lookup:
            raise ValueError(f"no value assigned to x{v}")
        if not ring.contains(lookup[v]):
            raise ValueError(f"value for x{v} is not an element of {ring.spec}")
    return _eval_raw(poly, ring, lookup)


def _eval_raw(poly, ring, lookup):
    total = ring.zero
    for coeff, mono in poly.terms:
        term = None
        for v, k in mono:
            f = _pow(ring, lookup[v], k)
            term = f if term is None else ring.mul(term, f)
        total = ring.add(total, ring.mul(_from_int(ring, coeff), term))
    return total


def poly_image(poly, spec, limits=DEFAULT_LIMITS):
    ring = get_ring(spec, limits)
    elems = enumerate_ring(ring.spec, limits)
    vars_ = poly.variables()
    need = ring.size ** len(vars_)
    if need > limits.work_cap:
        raise CapExceeded(f"image of {format_poly(poly)} on {ring.spec}", need, limits.work_cap)
    out = set()
    for values in itertools.product(elems, repeat=len(vars_)):
        out.add(_eval_raw(poly, ring, dict(zip(vars_, values))))
    return frozenset(out)


def poly_image_ratio(poly, spec, limits=DEFAULT_LIMITS):
    ring = get_ring(spec, limits)
    size = len(poly_image(poly, ring.spec, limits))
    return ImageReport(ring.spec, poly, ring.size, size, Fraction(size, ring.size), "naive")


def gl2ring_square_closed_forms(r):
    """(stated value 1 - 2^-r, Jordan-class count value) for x^2 on M2(2^r).

    The second excludes all q Jordan classes [[l, 1], [0, l]], l in F_q,
    each of size q^2 - 1, from the q^4 matrices: 1 - (q^2 - 1)/q^3.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    q = 2**r
    return 1 - Fraction(1, q), 1 - Fraction((q * q - 1) * q, q**4)
