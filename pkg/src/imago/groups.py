"""Finite groups: cyclic groups, GL2(q), SL2(q) and direct products.

A ``GroupSpec`` is a small immutable description; ``get_group`` turns it into
a runtime object that can enumerate, multiply and classify elements.  Every
runtime group numbers its elements 0..order-1 in enumeration order (id 0 is
the identity).  Groups whose elements can be multiplied on whole numpy arrays
of ids ("fast" groups) are what the image engine's inner loop runs on:

* cyclic groups, always;
* GL2/SL2 when the order is within ``Limits.table_cap`` (a dense
  multiplication table is built once);
* products of fast groups, with ids in mixed radix and arithmetic done
  factor by factor.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass
from math import prod

import numpy as np

from .config import DEFAULT_LIMITS
from .errors import CapExceeded, ParseError
from .fields import FqElem, Mat2, field_arrays, make_field, prime_power

__all__ = [
    "GL2",
    "SL2",
    "ConjClass",
    "Cyclic",
    "Product",
    "conjugacy_classes_bruteforce",
    "enumerate_group",
    "format_group_spec",
    "get_group",
    "gl2_class_reps",
    "group_order",
    "parse_group_spec",
    "product",
]

_MAX_FAST_ORDER = 1 << 62


# ---------------------------------------------------------------- specs


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"cyclic group order must be >= 1, got {self.n}")

    def __str__(self):
        return f"C{self.n}"


def _check_prime_power(p, r):
    if r < 1 or prime_power(p) != (p, 1):
        raise ValueError(f"({p}, {r}) does not describe a prime power")


@dataclass(frozen=True)
class GL2:
    p: int
    r: int = 1

    def __post_init__(self):
        _check_prime_power(self.p, self.r)

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
        return f"GL2({self.q})"


@dataclass(frozen=True)
class SL2:
    p: int
    r: int = 1

    def __post_init__(self):
        _check_prime_power(self.p, self.r)

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
        return f"SL2({self.q})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")
        if any(isinstance(f, Product) for f in self.factors):
            raise ValueError("use product() to build nested products")

    def __str__(self):
        return format_group_spec(self)


def product(*specs):
    """Direct product, flattened; a single factor is returned unchanged."""
    flat = []
    for s in specs:
        flat.extend(s.factors if isinstance(s, Product) else [s])
    if not flat:
        raise ValueError("a product needs at least one factor")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def format_group_spec(spec):
    """Canonical text form; runs of equal factors are written ``F^k``."""
    if not isinstance(spec, Product):
        return str(spec)
    parts = []
    for f, run in itertools.groupby(spec.factors):
        k = len(list(run))
        parts.append(str(f) if k == 1 else f"{f}^{k}")
    return " x ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<mat>GL2|SL2)\s*\(\s*(?P<q>\d+)\s*\)|C\s*(?P<n>\d+))")


def parse_group_spec(text):
    """Parse e.g. ``"C2^3 x GL2(4)"``."""
    pos = 0
    factors = []

    def skip_ws(i):
        while i < len(text) and text[i].isspace():
            i += 1
        return i

    while True:
        pos = skip_ws(pos)
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("expected C<n>, GL2(<q>) or SL2(<q>)", text, pos)
        try:
            if m.group("mat"):
                q = int(m.group("q"))
                cls = GL2 if m.group("mat") == "GL2" else SL2
                atom = cls.of(q)
            else:
                atom = Cyclic(int(m.group("n")))
        except ValueError as exc:
            raise ParseError(str(exc), text, m.start()) from None
        pos = skip_ws(m.end())
        k = 1
        if pos < len(text) and text[pos] == "^":
            pos = skip_ws(pos + 1)
            km = re.compile(r"\d+").match(text, pos)
            if km is None or int(km.group()) < 1:
                raise ParseError("expected a positive integer exponent", text, pos)
            k = int(km.group())
            pos = skip_ws(km.end())
        factors.extend([atom] * k)
        if pos == len(text):
            break
        if text[pos] != "x":
            raise ParseError("expected 'x' between factors", text, pos)
        pos += 1
    return product(*factors)


def group_order(spec):
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, GL2):
        q = spec.q
        return (q * q - 1) * (q * q - q)
    if isinstance(spec, SL2):
        q = spec.q
        return q * (q * q - 1)
    if isinstance(spec, Product):
        return prod(group_order(f) for f in spec.factors)
    raise TypeError(f"not a group spec: {spec!r}")


# ---------------------------------------------------------------- classes


@dataclass(frozen=True)
class ConjClass:
    rep: object
    size: int
    family: str | None = None


def _has_root(F, alpha, beta):
    # root of t^2 - alpha t + beta
    for t in range(F.q):
        v = F.add_v(F.add_v(F.mul_v(t, t), F.neg_v(F.mul_v(alpha, t))), beta)
        if v == 0:
            return True
    return False


@functools.lru_cache(maxsize=None)
def _gl2_class_reps(q, include_singular):
    p, r = prime_power(q)
    F = make_field(p, r)
    zero, one = F.zero, F.one
    lams = list(F) if include_singular else F.nonzero()
    out = []
    for lam in lams:
        out.append(ConjClass(Mat2(lam, zero, zero, lam), 1, "central"))
    for i, lam in enumerate(lams):
        for mu in lams[i + 1 :]:
            out.append(ConjClass(Mat2(lam, zero, zero, mu), q * (q + 1), "split"))
    for lam in lams:
        out.append(ConjClass(Mat2(lam, one, zero, lam), q * q - 1, "jordan"))
    for alpha in range(q):
        for beta in range(1, q):
            if not _has_root(F, alpha, beta):
                # companion matrix with characteristic polynomial t^2 - alpha t + beta
                rep = Mat2(zero, -FqElem(F, beta), one, FqElem(F, alpha))
                out.append(ConjClass(rep, q * q - q, "irreducible"))
    return tuple(out)


def gl2_class_reps(q, include_singular=False):
    """Conjugacy class representatives of GL2(q) in four families.

    With ``include_singular`` the eigenvalue 0 is allowed too, which gives the
    orbits of GL2(q) acting by conjugation on the full matrix ring.
    """
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    return list(_gl2_class_reps(q, bool(include_singular)))


def gl2_class_key(m):
    """Complete conjugacy invariant for 2x2 matrices: (trace, det, scalar?)."""
    return (m.trace().value, m.det().value, m.is_scalar())


# ---------------------------------------------------------------- runtime


class _Group:
    spec = None
    order = 0
    fast = False

    def __init__(self, limits):
        self.limits = limits

    def __repr__(self):
        return f"<group {format_group_spec(self.spec)}>"

    def check_enumerable(self):
        cap = self.limits.enumeration_cap
        if self.order > cap:
            raise CapExceeded(f"enumerating {format_group_spec(self.spec)}", self.order, cap)

    def pow(self, x, e):
        e %= self.order
        result = self.identity
        while e:
            if e & 1:
                result = self.mul(result, x)
            e >>= 1
            if e:
                x = self.mul(x, x)
        return result

    def conj(self, h, x):
        return self.mul(self.mul(h, x), self.inv(h))

    def pow_ids(self, a, e):
        e %= self.order
        result = np.zeros_like(a)
        while e:
            if e & 1:
                result = self.mul_ids(result, a)
            e >>= 1
            if e:
                a = self.mul_ids(a, a)
        return result

    # default conjugacy data: every element its own class (always correct)
    def class_key(self, x):
        return x

    def class_labels(self):
        return np.arange(self.order, dtype=np.int64)

    def class_rep_ids(self):
        return np.arange(self.order, dtype=np.int64)

    def class_reps(self):
        return self.elements()


class CyclicGroup(_Group):
    """Z/n written additively on residues 0..n-1; ids are the residues."""

    fast = True

    def __init__(self, spec, limits):
        super().__init__(limits)
        self.spec = spec
        self.order = spec.n
        self.identity = 0

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.order

    def elements(self):
        self.check_enumerable()
        return list(range(self.order))

    def index(self, x):
        return x

    def element(self, i):
        return int(i)

    def mul(self, x, y):
        return (x + y) % self.order

    def inv(self, x):
        return (-x) % self.order

    def pow(self, x, e):
        return (x * e) % self.order

    def mul_ids(self, a, b):
        return (a + b) % self.order

    def inv_ids(self, a):
        return (-a) % self.order

    def pow_ids(self, a, e):
        return (a * (e % self.order)) % self.order

    def conj(self, h, x):
        return x


class MatrixGroup(_Group):
    """GL2(q) or SL2(q) on ``Mat2`` elements."""

    def __init__(self, spec, limits):
        super().__init__(limits)
        self.spec = spec
        self.special = isinstance(spec, SL2)
        self.field = make_field(spec.p, spec.r)
        self.q = spec.q
        self.order = group_order(spec)
        self.identity = Mat2.identity(self.field)
        self.fast = self.order <= limits.table_cap

    def contains(self, x):
        if not isinstance(x, Mat2) or x.field != self.field:
            return False
        det = x.det().value
        return det == 1 if self.special else det != 0

    @functools.cached_property
    def _elements(self):
        self.check_enumerable()
        F = self.field
        q = self.q
        ident = self.identity
        out = [ident]
        mul, add, neg = F.mul_v, F.add_v, F.neg_v
        for a, b, c, d in itertools.product(range(q), repeat=4):
            det = add(mul(a, d), neg(mul(b, c)))
            if (det == 1 if self.special else det != 0):
                m = Mat2(FqElem(F, a), FqElem(F, b), FqElem(F, c), FqElem(F, d))
                if m != ident:
                    out.append(m)
        return out

    def elements(self):
        return list(self._elements)

    @functools.cached_property
    def _index(self):
        return {m: i for i, m in enumerate(self._elements)}

    def index(self, x):
        return self._index[x]

    def element(self, i):
        return self._elements[int(i)]

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return x.inv()

    def pow(self, x, e):
        return x ** (e % self.order)

    @functools.cached_property
    def _codes(self):
        q = self.q
        vals = np.array([m.values() for m in self._elements], dtype=np.int64)
        codes = ((vals[:, 0] * q + vals[:, 1]) * q + vals[:, 2]) * q + vals[:, 3]
        lookup = np.full(q**4, -1, dtype=np.int64)
        lookup[codes] = np.arange(len(codes))
        return vals, lookup

    @functools.cached_property
    def table(self):
        """Dense multiplication table: table[i, j] = id of element_i * element_j."""
        if not self.fast:
            raise CapExceeded("multiplication table", self.order, self.limits.table_cap)
        q = self.q
        add, mul, _, _ = field_arrays(self.field)
        vals, lookup = self._codes
        n = len(vals)
        table = np.empty((n, n), dtype=np.int32)
        step = max(1, (1 << 21) // n)
        for lo in range(0, n, step):
            a, b, c, d = (vals[lo : lo + step, k][:, None] for k in range(4))
            e, f, g, h = (vals[None, :, k] for k in range(4))
            r00 = add[mul[a, e], mul[b, g]]
            r01 = add[mul[a, f], mul[b, h]]
            r10 = add[mul[c, e], mul[d, g]]
            r11 = add[mul[c, f], mul[d, h]]
            table[lo : lo + step] = lookup[((r00 * q + r01) * q + r10) * q + r11]
        return table

    @functools.cached_property
    def inverse_ids(self):
        return np.argmax(self.table == 0, axis=1).astype(np.int64)

    def mul_ids(self, a, b):
        return self.table[a, b].astype(np.int64)

    def inv_ids(self, a):
        return self.inverse_ids[a]

    # conjugacy data

    def class_key(self, x):
        if self.special:
            if self.fast:
                return int(self._labels[self.index(x)])
            return x
        return gl2_class_key(x)

    @functools.cached_property
    def _labels(self):
        if self.special:
            return _orbit_labels(self)
        keys = {}
        return np.array(
            [keys.setdefault(gl2_class_key(m), len(keys)) for m in self._elements],
            dtype=np.int64,
        )

    def class_labels(self):
        if self.special and not self.fast:
            return super().class_labels()
        return self._labels

    def class_rep_ids(self):
        if self.special and not self.fast:
            return super().class_rep_ids()
        _, first = np.unique(self._labels, return_index=True)
        return np.sort(first).astype(np.int64)

    def class_reps(self):
        if self.special and not self.fast:
            return self.elements()
        if not self.special:
            return [c.rep for c in gl2_class_reps(self.q)]
        return [self._elements[i] for i in self.class_rep_ids()]


class ProductGroup(_Group):
    """Direct product; elements are tuples, ids are mixed radix (last factor fastest)."""

    def __init__(self, spec, limits):
        super().__init__(limits)
        self.spec = spec
        self.parts = [get_group(f, limits) for f in spec.factors]
        self.order = prod(g.order for g in self.parts)
        self.identity = tuple(g.identity for g in self.parts)
        self.radices = [g.order for g in self.parts]
        strides = []
        s = 1
        for n in reversed(self.radices):
            strides.append(s)
            s *= n
        self.strides = strides[::-1]
        self.fast = all(g.fast for g in self.parts) and self.order < _MAX_FAST_ORDER

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == len(self.parts)
            and all(g.contains(y) for g, y in zip(self.parts, x))
        )

    def elements(self):
        self.check_enumerable()
        return list(itertools.product(*(g.elements() for g in self.parts)))

    def index(self, x):
        return sum(g.index(y) * s for g, y, s in zip(self.parts, x, self.strides))

    def element(self, i):
        i = int(i)
        return tuple(g.element((i // s) % n) for g, s, n in zip(self.parts, self.strides, self.radices))

    def mul(self, x, y):
        return tuple(g.mul(a, b) for g, a, b in zip(self.parts, x, y))

    def inv(self, x):
        return tuple(g.inv(a) for g, a in zip(self.parts, x))

    def pow(self, x, e):
        return tuple(g.pow(a, e) for g, a in zip(self.parts, x))

    def _digits(self, a):
        return [(a // s) % n for s, n in zip(self.strides, self.radices)]

    def _combine(self, digits):
        out = np.zeros_like(digits[0])
        for d, s in zip(digits, self.strides):
            out += d * s
        return out

    def mul_ids(self, a, b):
        da, db = self._digits(a), self._digits(b)
        return self._combine([g.mul_ids(x, y) for g, x, y in zip(self.parts, da, db)])

    def inv_ids(self, a):
        return self._combine([g.inv_ids(x) for g, x in zip(self.parts, self._digits(a))])

    def pow_ids(self, a, e):
        return self._combine([g.pow_ids(x, e) for g, x in zip(self.parts, self._digits(a))])

    def class_key(self, x):
        return tuple(g.class_key(y) for g, y in zip(self.parts, x))

    def class_labels(self):
        labels = np.zeros(self.order, dtype=np.int64)
        ids = np.arange(self.order, dtype=np.int64)
        scale = 1
        for g, d in reversed(list(zip(self.parts, self._digits(ids)))):
            lab = g.class_labels()
            labels += lab[d] * scale
            scale *= int(lab.max()) + 1
        return labels

    def class_rep_ids(self):
        reps = [g.class_rep_ids() for g in self.parts]
        grids = np.meshgrid(*reps, indexing="ij")
        return np.sort(self._combine([x.ravel() for x in grids]))

    def class_reps(self):
        return list(itertools.product(*(g.class_reps() for g in self.parts)))


def _orbit_labels(g):
    """Label every element id by its conjugacy class, by orbit closure."""
    n = g.order
    labels = np.full(n, -1, dtype=np.int64)
    everything = np.arange(n, dtype=np.int64)
    inverses = g.inv_ids(everything)
    label = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        orbit = g.mul_ids(g.mul_ids(everything, np.full(n, x, dtype=np.int64)), inverses)
        labels[orbit] = label
        label += 1
    return labels


@functools.lru_cache(maxsize=128)
def get_group(spec, limits=DEFAULT_LIMITS):
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, Cyclic):
        return CyclicGroup(spec, limits)
    if isinstance(spec, (GL2, SL2)):
        return MatrixGroup(spec, limits)
    if isinstance(spec, Product):
        return ProductGroup(spec, limits)
    raise TypeError(f"not a group spec: {spec!r}")


def enumerate_group(spec, limits=DEFAULT_LIMITS):
    """All elements in the canonical order; the identity comes first."""
    return get_group(spec, limits).elements()


def conjugacy_classes_bruteforce(spec, limits=DEFAULT_LIMITS):
    """Partition a group into conjugacy classes by exhaustive conjugation.

    Classes are listed in order of their first element in enumeration order.
    The representative is that first element.
    """
    g = get_group(spec, limits)
    if g.order > limits.oracle_cap:
        raise CapExceeded(f"classifying {format_group_spec(g.spec)}", g.order, limits.oracle_cap)
    if g.fast:
        everything = np.arange(g.order, dtype=np.int64)
        inverses = g.inv_ids(everything)
        seen = np.zeros(g.order, dtype=bool)
        out = []
        for x in range(g.order):
            if seen[x]:
                continue
            orbit = np.unique(g.mul_ids(g.mul_ids(everything, np.full(g.order, x)), inverses))
            seen[orbit] = True
            out.append(ConjClass(g.element(x), len(orbit)))
        return out
    elems = g.elements()
    seen = set()
    out = []
    for x in elems:
        if x in seen:
            continue
        orbit = {g.conj(h, x) for h in elems}
        seen |= orbit
        out.append(ConjClass(x, len(orbit)))
    return out
