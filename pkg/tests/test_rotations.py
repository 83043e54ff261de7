import pytest

from ambc_cells.ambc import find_channels, greene_kleitman, phi
from ambc_cells.core import Window, parse_window, restrict
from ambc_cells.rotations import (
    NotASubstream,
    NotProper,
    StarUndefined,
    diamond_complete,
    diamond_holds,
    ipr,
    is_proper_ipr,
    is_proper_pr,
    pr,
)

W = parse_window("[6,1,18,3,19,24,12,15,17,10]")
C1 = parse_window("[_,1,_,3,_,_,_,_,_,10]")
C2 = parse_window("[_,_,_,_,_,_,12,15,17,_]")
C2P = parse_window("[6,_,_,_,_,_,12,15,_,_]")


def test_pr_examples():
    assert pr(Window.identity(5), Window.identity(5)) == Window((2, 3, 4, 5, 6))
    assert pr(W, C2) == parse_window("[6,1,18,3,19,24,15,17,22,10]")


def test_ipr_examples():
    assert ipr(W, C1) == parse_window("[6,0,18,1,19,24,12,15,17,3]")
    assert ipr(Window((2, 3, 4, 5)), Window((2, 3, 4, 5))) == Window.identity(4)


def _moved(v, stream):
    return restrict(v, stream.positions())


@pytest.mark.parametrize("stream", [C1, C2, C2P, parse_window("[_,1,_,_,_,_,_,_,_,10]")])
def test_pr_ipr_inverse(stream):
    v = pr(W, stream)
    assert ipr(v, _moved(v, stream)) == W
    u = ipr(W, stream)
    assert pr(u, _moved(u, stream)) == W


def test_rotation_keeps_positions_and_residues():
    v = pr(W, C2)
    assert sorted(x % 10 for x in v.values()) == sorted(x % 10 for x in W.values())


def test_not_a_substream():
    with pytest.raises(NotASubstream):
        pr(W, parse_window("[_,2,_,_,_,_,_,_,_,_]"))


def test_properness():
    assert is_proper_pr(W, C2)
    assert not is_proper_pr(W, C1)
    assert is_proper_ipr(W, C1)
    assert not is_proper_pr(W, C2P) and not is_proper_ipr(W, C2P)
    single = parse_window("[_,_,18,_,19,24,_,_,_,_]")
    assert is_proper_pr(W, single) and is_proper_ipr(W, single)
    assert not is_proper_pr(W, parse_window("[_,1,_,_,_,_,_,_,_,10]"))


def test_improper_rotation_leaves_the_cell():
    lam = greene_kleitman(W)
    for c in find_channels(W):
        assert (greene_kleitman(pr(W, c)) == lam) == is_proper_pr(W, c)
        assert (greene_kleitman(ipr(W, c)) == lam) == is_proper_ipr(W, c)


def test_proper_rotation_moves_one_weight():
    t = phi(W)
    assert phi(pr(W, C2)) == t._replace(rho=(2, 4, 2, 0))
    assert phi(ipr(W, C1)) == t._replace(rho=(1, 3, 2, 0))


def test_diamond_example():
    d = diamond_complete(W, 7, 2)
    assert d.w_star == parse_window("[6,1,18,3,19,12,24,15,17,10]")
    assert d.w_tilde == parse_window("[6,1,18,3,19,24,15,17,22,10]")
    assert d.w_tilde_star == parse_window("[6,1,18,3,19,15,24,17,22,10]")
    assert d.s_star == parse_window("[_,_,_,_,_,12,_,15,17,_]")
    assert diamond_holds(d)


def test_diamond_omega_and_inverse():
    for q in (2, 3):
        assert diamond_holds(diamond_complete(W, 0, q, omega=True))
    for q in (1, 3):
        assert diamond_holds(diamond_complete(W, 0, q, inverse=True, omega=True), inverse=True)
        assert diamond_holds(diamond_complete(W, 7, q, inverse=True), inverse=True)


def test_diamond_errors():
    with pytest.raises(StarUndefined):
        diamond_complete(Window.identity(4), 2, 1)
    with pytest.raises(NotProper):
        diamond_complete(W, 7, 1)
