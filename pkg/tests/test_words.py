import random

import pytest
from hypothesis import given, strategies as st

from imago.errors import ParseError
from imago.fields import Mat2, make_field
from imago.groups import GL2, Cyclic, get_group
from imago.words import (
    Word, abelianize, commutator, concat, engel, evaluate, format_word, invert, parse_word, power_word,
)

from conftest import SMALL_GROUPS, random_word

syllable = st.tuples(st.integers(1, 4), st.integers(-4, 4))
raw_words = st.lists(syllable, max_size=12)


def test_parse_examples():
    assert parse_word("[x1,x2]").syllables == ((1, 1), (2, 1), (1, -1), (2, -1))
    assert parse_word("x1^2 * x1^-2") == Word()
    assert parse_word("x1^3 * x2^0 * x1^-1").syllables == ((1, 2),)


def test_parse_aliases_and_juxtaposition():
    assert parse_word("[x,y]") == parse_word("x y x^-1 y^-1") == parse_word("xyx^-1y^-1")
    assert parse_word("x10") == Word.gen(10)
    assert parse_word("(x y)^2") == parse_word("x*y*x*y")
    assert parse_word("(x y)^-1") == parse_word("y^-1 x^-1")
    assert parse_word("x^+3") == Word.gen(1, 3)
    assert parse_word("1") == parse_word("") == Word()
    assert parse_word("[[x,y],y]") == engel(2)


@pytest.mark.parametrize("text", ["^2", "x^", "x1 + x2", "[x,y", "(x", "x0", "()", "x^y", "[x]", "x)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_algebra_examples():
    assert invert(Word(((1, 1), (2, -3)))).syllables == ((2, 3), (1, -1))
    x = Word.gen(1)
    assert commutator(x, x) == Word()
    assert concat(Word(((1, 1),)), Word(((1, -1),))) == Word()


def test_engel_words():
    assert engel(1).syllables == ((1, 1), (2, 1), (1, -1), (2, -1))
    # [e1, y] = (x y x^-1 y^-1) y (y x y^-1 x^-1) y^-1, reduced by hand
    assert engel(2).syllables == ((1, 1), (2, 1), (1, -1), (2, 1), (1, 1), (2, -1), (1, -1), (2, -1))
    for i in range(1, 6):
        assert abelianize(engel(i)) == (0, 0)
        assert set(engel(i).generators()) == {1, 2}
    with pytest.raises(ValueError):
        engel(0)


def test_engel_matches_nested_commutators_in_gl2_3():
    g = get_group(GL2.of(3))
    elems = g.elements()

    def comm(a, b):
        return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))

    rng = random.Random(3)
    for _ in range(100):
        a, b = rng.choice(elems), rng.choice(elems)
        expected = comm(a, b)
        for i in range(1, 4):
            assert evaluate(engel(i), (a, b), g) == expected
            expected = comm(expected, b)


def test_power_word():
    assert power_word(2).syllables == ((1, 2),)
    assert power_word(8).syllables == ((1, 8),)
    with pytest.raises(ValueError):
        power_word(0)
    assert power_word(2**100).syllables == ((1, 2**100),)


def test_abelianize_examples():
    assert abelianize(parse_word("x1^2 x2^2")) == (2, 2)
    assert abelianize(Word(), 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        abelianize(parse_word("x3"), 2)


@given(raw_words, raw_words)
def test_abelianize_is_a_homomorphism(a, b):
    u, v = Word(tuple(a)), Word(tuple(b))
    n = 4
    lhs = abelianize(concat(u, v), n)
    rhs = tuple(x + y for x, y in zip(abelianize(u, n), abelianize(v, n)))
    assert lhs == rhs


@given(raw_words)
def test_words_are_reduced(a):
    w = Word(tuple(a))
    for (g1, e1), (g2, _) in zip(w.syllables, w.syllables[1:]):
        assert g1 != g2
    assert all(e != 0 for _, e in w.syllables)
    assert Word(w.syllables) == w


@given(raw_words, raw_words, raw_words)
def test_reduction_is_confluent(a, b, c):
    u, v, w = (Word(tuple(x)) for x in (a, b, c))
    assert concat(concat(u, v), w) == concat(u, concat(v, w)) == Word(tuple(a + b + c))
    assert concat(u, invert(u)) == Word()


def test_format_parse_round_trip_1000(rng):
    for _ in range(1000):
        w = random_word(rng, n_gens=5, max_len=10, max_exp=9)
        assert parse_word(format_word(w)) == w


def test_format_canonical():
    assert format_word(Word()) == "1"
    assert format_word(parse_word("x y^-2")) == "x1*x2^-2"


# -- evaluation

def _mat_mul2(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) % 2 for j in range(2)] for i in range(2)]


def _mat_inv2(a):
    # over F2 the inverse of [[a,b],[c,d]] with det 1 is [[d,b],[c,a]]
    return [[a[1][1], a[0][1]], [a[1][0], a[0][0]]]


def test_evaluate_commutator_by_hand():
    F = make_field(2)
    g = get_group(GL2.of(2))
    A, B = [[0, 1], [1, 0]], [[1, 1], [0, 1]]
    expected = _mat_mul2(_mat_mul2(A, B), _mat_mul2(_mat_inv2(A), _mat_inv2(B)))
    got = evaluate(engel(1), (Mat2.of(F, A), Mat2.of(F, B)), g)
    assert got.rows() == expected
    assert got ** 3 == g.identity and got != g.identity


def test_evaluate_trivial_cases():
    g = get_group(GL2.of(3))
    for x in g.elements()[:20]:
        assert evaluate(engel(1), (x, x), g) == g.identity
    assert evaluate(power_word(7), [g.identity], g) == g.identity
    assert evaluate(Word(), [], g) == g.identity


def test_evaluate_errors():
    g = get_group(Cyclic(5))
    with pytest.raises(ValueError):
        evaluate(engel(1), [1], g)
    with pytest.raises(ValueError):
        evaluate(power_word(2), [7], g)
    assert evaluate(parse_word("x3^2"), {3: 2}, g) == 4


def test_evaluation_is_conjugation_equivariant(rng):
    for spec in SMALL_GROUPS:
        g = get_group(spec)
        elems = g.elements()
        for _ in range(10):
            w = random_word(rng)
            t = [rng.choice(elems), rng.choice(elems)]
            h = rng.choice(elems)
            lhs = evaluate(w, [g.conj(h, x) for x in t], g)
            assert lhs == g.conj(h, evaluate(w, t, g))


def test_evaluation_on_cyclic_factors_through_abelianization(rng):
    for n in (2, 5, 6, 12):
        g = get_group(Cyclic(n))
        for _ in range(30):
            w = random_word(rng, n_gens=3)
            t = [rng.randrange(n) for _ in range(3)]
            a = abelianize(w, 3)
            assert evaluate(w, t, g) == sum(ai * ti for ai, ti in zip(a, t)) % n
