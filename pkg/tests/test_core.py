import pytest

from ambc_cells.core import (
    ParseError,
    ValidationError,
    Window,
    compositions_equal,
    content,
    dominates,
    format_tabloid,
    format_window,
    is_rsyt,
    is_ssyt,
    parse_tabloid,
    parse_window,
    partitions,
    reading_word,
    restrict,
    rsyt,
    shape,
)

W51 = "[8,1,19,14,16,2,25,13,10,27]"


def test_parse_total_window():
    w = parse_window(W51)
    assert w.n == 10 and w.is_total
    assert format_window(w) == W51


def test_parse_partial_window():
    w = parse_window("[_,1,_,_,_,2,_,_,10,_]")
    assert w.density() == 3
    assert w.positions() == (2, 6, 9)


@pytest.mark.parametrize("text", ["[1,∅,3]", "[1,null,3]", "[1, _ ,3]"])
def test_absent_synonyms(text):
    assert parse_window(text) == Window((1, None, 3))


def test_duplicate_residue_rejected():
    with pytest.raises(ValidationError):
        parse_window("[1,1,3]")


@pytest.mark.parametrize("text", ["1,2", "[1,x]", "[]", "[1,,2]"])
def test_malformed_rejected(text):
    with pytest.raises(ParseError):
        parse_window(text)


def test_periodic_extension():
    w = parse_window("[3,1,2]")
    assert w(4) == 6 and w(0) == -1 and w(-2) == 0


def test_reading_word():
    t = ((3, 6, 7, 9), (4, 8, 10), (1, 5), (2,))
    assert reading_word(t) == (2, 1, 5, 4, 8, 10, 3, 6, 7, 9)
    assert reading_word(((1, 2, 3),)) == (1, 2, 3)
    assert reading_word(((2,), (), (3, 5, 6), (1, 4))) == (1, 4, 3, 5, 6, 2)


def test_restrict():
    w = parse_window(W51)
    assert restrict(w, {2, 6, 9}) == parse_window("[_,1,_,_,_,2,_,_,10,_]")
    assert restrict(w, range(1, 11)) == w
    assert restrict(w, ()).is_empty


def test_restrict_composes():
    w = parse_window(W51)
    x, y = {1, 2, 5, 7}, {2, 3, 7}
    assert restrict(restrict(w, x), y) == restrict(w, x & y)


def test_compositions_equal_padding():
    assert compositions_equal((2, 1, 0), (2, 1))
    assert not compositions_equal((2, 1, 0), (2, 1), padded=True)
    assert compositions_equal((2, 0, 1, 1), (2, 0, 1, 1), padded=True)


def test_partitions_and_dominance():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert dominates((3, 1), (2, 2)) and not dominates((2, 2), (3, 1))


def test_rsyt_counts():
    assert len(list(rsyt((2, 1)))) == 3
    for t in rsyt((2, 2)):
        assert is_rsyt(t) and sorted(reading_word(t)) == [1, 2, 3, 4]


def test_tabloid_text():
    t = parse_tabloid("((1,3),∅,(2))")
    assert t == ((1, 3), (), (2,))
    assert shape(t) == (2, 0, 1)
    assert format_tabloid(t) == "((1,3),(),(2))"
    assert parse_tabloid("[[1,3],[2]]") == ((1, 3), (2,))


def test_content_and_ssyt():
    u = ((1, 1, 4), (3,))
    assert content(u) == (2, 0, 1, 1)
    assert is_ssyt(u)
    assert not is_ssyt(((1, 2), (1,)))
