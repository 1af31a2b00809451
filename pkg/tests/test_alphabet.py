import pytest
from hypothesis import given, strategies as st

from thomschur.alphabet import (Alphabet, DegreeOverflow, DiffArg, Letter, boxed, from_integer,
                                generic, letters_of, negate_letters, parse_diffarg, scale)
from thomschur.polyring import ParseError, parse_poly
from thomschur.schurcalc import complete_series
from thomschur.thom import probes_for

x = Letter.variable("x")


def test_from_integer():
    assert len(from_integer(2)) == 2 and all(a == Letter(1) for a in from_integer(2))
    assert len(from_integer(0)) == 0
    assert from_integer(1) == Alphabet([Letter(1)])
    with pytest.raises(ValueError):
        from_integer(-1)


def test_integer_versus_boxed():
    # S_i(2) = i + 1 but S_i([2]) = 2^i
    unboxed = complete_series(DiffArg(from_integer(2)), 5)
    box = complete_series(DiffArg(boxed(2)), 5)
    assert [unboxed[i] for i in range(6)] == list(range(1, 7))
    assert [box[i] for i in range(6)] == [2 ** i for i in range(6)]


def test_boxed_sum_of_variables():
    A = boxed("x1 + x2")
    assert len(A) == 1
    assert complete_series(DiffArg(A), 2)[2] == parse_poly("x1^2 + 2x1x2 + x2^2")
    zero = boxed(0)
    assert len(zero) == 1 and zero != Alphabet()


def test_scale():
    A = boxed(2) + boxed(3)
    assert scale(A, x) == boxed(2 * x) + boxed(3 * x)
    assert scale(A, 1) == A
    with pytest.raises(DegreeOverflow):
        scale(letters_of("x1"), Letter.variable("x2"))


def test_negate_letters():
    assert negate_letters(letters_of("x")) == Alphabet([-x])
    assert negate_letters(Alphabet()) == Alphabet()
    assert negate_letters(boxed(2) + boxed(3 * x)) == boxed(-2) + boxed(-3 * x)


def test_multiset_equality():
    assert boxed(2) + boxed(3) == boxed(3) + boxed(2)
    assert boxed(2) + boxed(2) != boxed(2)


def test_letter_degree_cap():
    with pytest.raises(DegreeOverflow):
        Letter.parse("x1x2")
    with pytest.raises(ValueError):
        Letter.parse("x/2")


def test_parse_probe_text():
    d = parse_diffarg("x - [2x1] - [2x2]")
    assert d.plus == letters_of("x")
    assert d.minus == boxed(2 * Letter.variable("x1")) + boxed(2 * Letter.variable("x2"))


def test_parse_integer_is_letter_count():
    d = parse_diffarg("2")
    assert d.plus == from_integer(2) and len(d.minus) == 0


@pytest.mark.parametrize("text", ["x - [", "x -", "[x1x2]", "x + + y", "X_2 ]"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_diffarg(text)


def test_named_alphabets_and_grouping():
    d = parse_diffarg("X_2 - ([2x1] + [2x2] + [x1 + x2])")
    assert d.plus == generic("x", 2)
    assert len(d.minus) == 3
    assert parse_diffarg("B_{3}").plus == generic("b", 3)
    assert parse_diffarg("-b1 + x") == DiffArg(letters_of("x"), letters_of("b1"))


@pytest.mark.parametrize("text", [
    "x - [2x1] - [2x2]", "2", "0", "-b1", "2 + x - 1 - [3x]", "X_2 - [2x1] - [2x2] - [x1 + x2]",
    "[0] - [-x + 4]",
])
def test_render_round_trip(text):
    d = parse_diffarg(text)
    assert parse_diffarg(d.render()) == d


def test_catalog_round_trip_and_cardinalities():
    for i, r in [(1, 1), (2, 3), (3, 1), (3, 2), (4, 1)]:
        for probe in probes_for(i, r):
            assert parse_diffarg(probe.arg.render()) == probe.arg
            if probe.name.startswith("A"):
                assert len(probe.arg.minus) == r
            elif probe.name.startswith("I22"):
                assert len(probe.arg.minus) == 2
            else:
                assert len(probe.arg.minus) == 3


letter_st = st.builds(
    lambda c, a, b: Letter(c, (("x1", a), ("x2", b))),
    st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
alphabet_st = st.lists(letter_st, max_size=5).map(Alphabet)


@given(alphabet_st)
def test_negate_involution(A):
    assert negate_letters(negate_letters(A)) == A


@given(alphabet_st, alphabet_st, st.integers(-3, 3))
def test_cardinalities(A, B, k):
    assert len(scale(A, k)) == len(A)
    assert len(A + B) == len(A) + len(B)


@given(st.integers(0, 6), st.integers(0, 6))
def test_from_integer_additive(m, n):
    assert from_integer(m + n) == from_integer(m) + from_integer(n)


@given(alphabet_st, alphabet_st)
def test_random_round_trip(A, B):
    d = DiffArg(A, B)
    assert parse_diffarg(d.render()) == d
