from ambc_cells.ambc import greene_kleitman
from ambc_cells.core import Window, parse_window
from ambc_cells.group import (
    compose,
    inverse,
    left_star,
    omega,
    omega_left,
    omega_right,
    right_star,
    rotate_R,
)

W3 = parse_window("[1,6,8,14,17,5,0,19,3,22]")


def test_compose_examples():
    assert compose(Window.identity(10), W3) == W3
    assert compose(omega(10), W3) == parse_window("[2,7,9,15,18,6,1,20,4,23]")
    assert compose(W3, inverse(omega(10))) == parse_window("[12,1,6,8,14,17,5,0,19,3]")


def test_omega_multiplication_matches_compose():
    assert omega_left(W3) == compose(omega(10), W3)
    assert omega_right(W3, -1) == compose(W3, inverse(omega(10)))


def test_inverse():
    assert inverse(Window.identity(4)) == Window.identity(4)
    assert inverse(omega(4)) == Window((0, 1, 2, 3))
    assert inverse(parse_window("[2,3,1]")) == parse_window("[3,1,2]")
    assert compose(W3, inverse(W3)) == Window.identity(10)


def test_rotate_R():
    assert rotate_R(Window.identity(5)) == Window.identity(5)
    assert rotate_R(parse_window("[2,3,1]")) == parse_window("[3,1,2]")
    w = parse_window("[8,1,19,14,16,2,25,13,10,27]")
    assert rotate_R(rotate_R(w)) == w


def test_right_star():
    assert right_star(W3, 10) == parse_window("[12,6,8,14,17,5,0,19,3,11]")
    w = parse_window("[6,1,18,3,19,24,12,15,17,10]")
    assert right_star(w, 6) == parse_window("[6,1,18,3,19,12,24,15,17,10]")
    assert right_star(Window.identity(5), 3) is None


def test_left_star():
    assert left_star(W3, 2) == parse_window("[1,6,8,14,17,5,0,19,2,23]")
    assert left_star(Window.identity(5), 1) is None


def test_stars_are_involutions():
    for i in range(1, 11):
        for star in (right_star, left_star):
            v = star(W3, i)
            if v is not None:
                assert star(v, i) == W3


def test_stars_and_shifts_keep_the_two_sided_cell():
    lam = greene_kleitman(W3)
    moved = [omega_left(W3), omega_right(W3)]
    moved += [v for i in range(1, 11) for v in (right_star(W3, i), left_star(W3, i)) if v is not None]
    assert moved
    assert all(greene_kleitman(v) == lam for v in moved)
