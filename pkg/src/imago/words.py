"""Free-group words in reduced normal form.

A word is a tuple of syllables ``(generator, exponent)`` with generators
numbered from 1, nonzero exponents, and no two adjacent syllables on the same
generator.  Every constructor reduces, so equal group elements of the free
group are equal ``Word`` values.

Text syntax::

    word := term { ("*" | whitespace) term }
    term := atom [ "^" int ]
    atom := gen | "[" word "," word "]" | "(" word ")" | "1"
    gen  := "x" digits | "x" | "y"

``x`` and ``y`` are aliases for ``x1`` and ``x2``; ``[u,v]`` is u v u^-1 v^-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "Word",
    "abelianize",
    "commutator",
    "concat",
    "engel",
    "evaluate",
    "format_word",
    "invert",
    "parse_word",
    "power_word",
]


def _reduce(syllables):
    stack = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            e = stack[-1][1] + exp
            stack.pop()
            if e:
                stack.append((gen, e))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    syllables: tuple = ()

    def __post_init__(self):
        syl = tuple((int(g), int(e)) for g, e in self.syllables)
        for g, _ in syl:
            if g < 1:
                raise ValueError(f"generator index must be >= 1, got {g}")
        object.__setattr__(self, "syllables", _reduce(syl))

    @classmethod
    def gen(cls, i, exp=1):
        return cls(((i, exp),))

    def __mul__(self, other):
        return concat(self, other)

    def __invert__(self):
        return invert(self)

    def __pow__(self, k):
        base = self if k >= 0 else invert(self)
        return Word(base.syllables * abs(k))

    def __len__(self):
        return len(self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def generators(self):
        return sorted({g for g, _ in self.syllables})

    def __str__(self):
        return format_word(self)


def concat(*words):
    out = []
    for w in words:
        out.extend(w.syllables)
    return Word(tuple(out))


def invert(w):
    return Word(tuple((g, -e) for g, e in reversed(w.syllables)))


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1."""
    return concat(u, v, invert(u), invert(v))


def engel(i):
    """The Engel word e_i: e_1 = [x, y], e_i = [e_{i-1}, y]."""
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"Engel index must be >= 1, got {i}")
    x, y = Word.gen(1), Word.gen(2)
    w = commutator(x, y)
    for _ in range(i - 1):
        w = commutator(w, y)
    return w


def power_word(M):
    if not isinstance(M, int) or M < 1:
        raise ValueError(f"power must be >= 1, got {M}")
    return Word.gen(1, M)


def abelianize(w, n=None):
    """Total exponent of each generator, as a tuple indexed from generator 1.

    ``n`` pads (or checks) the length; by default it is the largest generator
    used.  The word lies in the commutator subgroup iff the result is all zero.
    """
    top = max((g for g, _ in w.syllables), default=0)
    if n is None:
        n = top
    elif n < top:
        raise ValueError(f"word uses generator {top} but n = {n}")
    out = [0] * n
    for g, e in w.syllables:
        out[g - 1] += e
    return tuple(out)


def format_word(w):
    if not w.syllables:
        return "1"
    return "*".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in w.syllables)


class _WordParser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        return ParseError(msg, self.text, self.pos if pos is None else pos)

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self):
        if not self.text.strip():
            return Word()
        w = self.word()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return w

    def word(self):
        terms = [self.term()]
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                terms.append(self.term())
            elif c and c not in ",)]":
                terms.append(self.term())
            else:
                return concat(*terms)

    def term(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return base ** self.integer()
        return base

    def integer(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer exponent", start)
        return int(self.text[start : self.pos])

    def atom(self):
        c = self.peek()
        start = self.pos
        if c == "^":
            raise self.error("exponent on empty atom")
        if c == "x":
            self.pos += 1
            d0 = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == d0:
                return Word.gen(1)
            idx = int(self.text[d0 : self.pos])
            if idx < 1:
                raise self.error("generator index must be >= 1", start)
            return Word.gen(idx)
        if c == "y":
            self.pos += 1
            return Word.gen(2)
        if c == "1":
            self.pos += 1
            return Word()
        if c == "(":
            self.pos += 1
            if self.peek() == ")":
                raise self.error("empty parentheses")
            w = self.word()
            self.expect(")")
            return w
        if c == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return commutator(u, v)
        if not c:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {c!r}")

    def expect(self, ch):
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1


def parse_word(text):
    return _WordParser(text).parse()


def evaluate(w, assignment, group):
    """Evaluate ``w`` in a runtime group (see ``imago.groups.get_group``).

    ``assignment`` is either a sequence (generator i gets ``assignment[i-1]``)
    or a mapping from generator index to element.
    """
    if isinstance(assignment, dict):
        lookup = assignment
    else:
        lookup = {i + 1: x for i, x in enumerate(assignment)}
    for g in w.generators():
        if g not in lookup:
            raise ValueError(f"no value assigned to generator x{g}")
        if not group.contains(lookup[g]):
            raise ValueError(f"value for x{g} is not an element of {group.spec}")
    result = group.identity
    for g, e in w.syllables:
        result = group.mul(result, group.pow(lookup[g], e))
    return result
