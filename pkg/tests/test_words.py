import pytest
from hypothesis import given, settings, strategies as st

from freemoments import words
from freemoments.words import Letter, h_power_of, multiply, parse, reduce, render, sphere_words

letters1 = st.lists(st.integers(0, 3), max_size=14)
letters_any = st.lists(st.integers(0, 7), max_size=14)


def test_letter_order_and_inverse():
    assert [l.name for l in sorted(Letter)] == list("aAbBcCdD")
    for l in Letter:
        assert l.inverse.inverse == l
        assert l.inverse.sign == -l.sign
    assert Letter.a.base == "a" and Letter.D.base == "d"
    assert Letter.b.factor == 1 and Letter.C.factor == 2


def test_reduce_examples():
    assert reduce(parse("a") + parse("A")) == ()
    assert reduce([Letter.a, Letter.b, Letter.B, Letter.a]) == parse("aa")
    h = words.commutator(1)
    assert reduce(h + words.inverse(h)) == ()


def test_multiply_examples():
    assert multiply(parse("ab"), parse("Ba")) == parse("aa")
    w = parse("abAAb")
    assert multiply(w, words.inverse(w)) == ()
    hh = multiply(parse("abAB"), parse("abAB"))
    assert len(hh) == 8 and hh == reduce(parse("abAB") + parse("abAB"))


def test_render_parse():
    assert render(()) == "e"
    assert render(parse("abAB")) == "a b A B"
    assert parse("a b A B") == (0, 2, 1, 3)
    assert parse("e") == ()
    with pytest.raises(ValueError):
        parse("ax")


@settings(max_examples=1000)
@given(letters_any)
def test_reduce_idempotent(ls):
    w = reduce(ls)
    assert reduce(w) == w
    assert all(w[i] != w[i + 1] ^ 1 for i in range(len(w) - 1))
    assert reduce(w + words.inverse(w)) == ()


@settings(max_examples=1000)
@given(letters_any, letters_any, letters_any)
def test_multiply_associative(a, b, c):
    a, b, c = reduce(a), reduce(b), reduce(c)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, b) == reduce(a + b)


@given(letters_any, letters_any)
def test_multiply_length(a, b):
    a, b = reduce(a), reduce(b)
    p = multiply(a, b)
    assert (len(a) + len(b) - len(p)) % 2 == 0


def test_h_power_of():
    assert h_power_of(parse("abAB"), 1) == 1
    assert h_power_of(parse("cdCD"), 2) == 1
    assert h_power_of((), 1) == 0
    assert h_power_of(parse("ab"), 1) is None
    assert h_power_of(parse("aaaa"), 1) is None
    with pytest.raises(ValueError):
        h_power_of(parse("ac"), 1)
    with pytest.raises(ValueError):
        h_power_of(parse("cd"), 1)


@pytest.mark.parametrize("k", range(-4, 5))
@pytest.mark.parametrize("factor", [1, 2])
def test_h_powers_roundtrip(k, factor):
    h = words.commutator(factor)
    seq = (h if k >= 0 else words.inverse(h)) * abs(k)
    w = reduce(seq)
    assert h_power_of(w, factor) == k
    assert len(w) == 4 * abs(k)


def test_sphere_examples():
    assert set(sphere_words(1, 1)) == {parse(s) for s in "abAB"}
    assert len(list(sphere_words(2, 1))) == 12
    s3 = list(sphere_words(3, 1, first=Letter.b))
    assert len(s3) == 9 and all(w[0] == Letter.b for w in s3)
    assert list(sphere_words(0, 1)) == [()]


@pytest.mark.parametrize("n", range(1, 9))
def test_sphere_counts(n):
    ws = list(sphere_words(n, 1))
    assert len(ws) == 4 * 3 ** (n - 1) == len(set(ws))
    assert all(reduce(w) == w and len(w) == n for w in ws)


def test_sphere_counts_ambient():
    assert len(list(sphere_words(3, words.AMBIENT))) == 8 * 7 * 7


def test_sphere_constraint_outside_factor():
    with pytest.raises(ValueError):
        list(sphere_words(2, 1, first=Letter.c))
