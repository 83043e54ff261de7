import pytest

from ambc_cells.core import content, is_ssyt, rsyt, shape
from ambc_cells.tableaux import (
    DominanceViolated,
    ShapeMismatch,
    act,
    crystal_reflection,
    r_matrix,
    rsk,
    rsk_inverse,
    theta,
    to_two_row,
    upsilon_classes,
)


def test_two_row_array():
    assert to_two_row(((2,), (), (3, 5, 6), (1, 4))) == ((1, 1, 2, 2, 2, 4), (1, 4, 3, 5, 6, 2))
    assert to_two_row(((1, 2, 3),)) == ((1, 1, 1), (1, 2, 3))
    assert to_two_row(((2, 3), (1,), (4,))) == ((1, 2, 3, 3), (4, 1, 2, 3))


def test_rsk_examples():
    assert rsk(((2, 3), (1,), (4,))) == (((1, 2, 3), (4,)), ((1, 3, 3), (2,)))
    assert rsk(((1, 2, 3),)) == (((1, 2, 3),), ((1, 1, 1),))


@pytest.mark.parametrize("sh", [(2, 1, 1), (1, 0, 2), (3,), (1, 1, 1, 1)])
def test_rsk_bijective(sh):
    images = {}
    for t in rsyt(sh):
        p, q = rsk(t)
        assert content(q, len(sh)) == tuple(reversed(sh))
        assert rsk_inverse(p, q, len(sh)) == t
        images[(p, q)] = t
    assert len(images) == len(list(rsyt(sh)))


def test_rsk_inverse_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        rsk_inverse(((1, 2),), ((1,), (2,)))


def test_crystal_reflection():
    assert crystal_reflection(((1, 1, 2),), 1) == ((1, 2, 2),)
    u = ((1, 1, 2, 3), (2, 3))
    for i in (1, 2, 3):
        v = crystal_reflection(u, i)
        assert crystal_reflection(v, i) == u
        assert is_ssyt(v) and shape(v) == shape(u)
        c, d = list(content(u, 4)), list(content(v, 4))
        c[i - 1], c[i] = c[i], c[i - 1]
        assert c == d


def test_crystal_braid():
    u = ((1, 1, 2, 3), (2, 3), (4,))
    assert act(u, (1, 2, 1)) == act(u, (2, 1, 2))


def test_r_matrix():
    t = ((1, 4), (2, 3))
    assert r_matrix(t, 1) == t
    s = ((2,), (1, 3))
    r = r_matrix(s, 1)
    assert shape(r) == (2, 1)
    assert rsk(r) == (((1, 2), (3,)), ((1, 2), (2,)))
    assert r_matrix(r, 1) == s


def test_theta_chain():
    assert theta(((1, 3, 3), (2,)), (2, 0, 1, 1)) == ((1, 1, 4), (3,))
    assert theta(((1, 1, 4), (3,)), (1, 1, 1, 1)) == ((1, 2, 4), (3,))
    u = ((1, 1, 2), (2,))
    assert theta(u, (2, 2)) == u


def test_theta_strategies_agree():
    for t in rsyt((1, 1, 2)):
        u = rsk(t)[1]
        assert theta(u, (1, 1, 1, 1)) == theta(u, (1, 1, 1, 1), strategy="last")


def test_theta_dominance():
    with pytest.raises(DominanceViolated):
        theta(((1, 2),), (2,))


def test_upsilon_n4():
    classes = upsilon_classes(4)
    assert len(classes) == 24
    assert classes[(1, 2, 3, 6)] == sorted([((2, 3), (1,), (4,)), ((3,), (2,), (4,), (1,))])
    assert classes[(1, 4, 7, 9)] == [((4,), (1,), (2,), (3,))]
