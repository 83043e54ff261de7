import pytest

from ambc_cells.ambc import phi
from ambc_cells.core import Window, parse_window
from ambc_cells.group import inverse, rotate_R
from ambc_cells.sign import (
    EmptyPending,
    SignState,
    build_w_TN,
    digamma_step,
    format_trace,
    sgn_p,
    sgn_q,
    sign_insert,
    sign_trace,
)


def test_digamma_bump():
    s = SignState(1, (17,), (1,), (13, 4, 20, 9, 24))
    assert digamma_step(s, 6) == SignState(2, (13,), (1,), (4, 20, 9, 24, 23))


def test_digamma_append():
    s = SignState(5, (4, 9), (1, 4), (24, 23, 19, 26))
    assert digamma_step(s, 6) == SignState(6, (4, 9, 24), (1, 4, 6), (23, 19, 26))
    assert digamma_step(SignState(0, (), (), (3,)), 3) == SignState(1, (3,), (1,), ())


def test_digamma_empty():
    with pytest.raises(EmptyPending):
        digamma_step(SignState(4, (1,), (1,), ()), 3)


def test_sign_insert_examples():
    assert sign_insert(parse_window("[17,13,4,20,9,24]")) == ((4, 9, 19, 26, 29, 36), (1, 4, 6, 9, 10, 12))
    assert sign_insert(Window.identity(5)) == ((1, 2, 3, 4, 5), (1, 2, 3, 4, 5))
    w = parse_window("[6,1,18,3,19,24,12,15,17,10]")
    assert sgn_p(w) == (1, 3, 10, 15, 16, 22, 27, 34, 38, 39)
    assert sgn_q(w) == (1, 3, 5, 6, 9, 12, 13, 14, 17, 18)


def test_trace_layout():
    lines = format_trace(sign_trace(parse_window("[17,13,4,20,9,24]"))).splitlines()
    assert lines[0] == "0|∅|∅|17,13,4,20,9,24"
    assert lines[-1] == "12|4,9,19,26,29,36|1,4,6,9,10,12|∅"


def test_blasiak_convention():
    w = parse_window("[17,13,4,20,9,24]")
    assert sign_insert(w, blasiak_convention=True) == sign_insert(rotate_R(inverse(w)))


def test_sign_p_shares_value_tableau():
    w = parse_window("[6,1,18,3,19,24,12,15,17,10]")
    assert phi(Window(sgn_p(w))).p == phi(w).p


def test_build_w_TN():
    t = ((3, 6, 7, 9), (4, 8, 10), (1, 5), (2,))
    w = build_w_TN(t, 10)
    assert w == parse_window("[102,1,307,204,103,308,309,205,310,206]")
    assert sgn_p(w) == (1, 103, 112, 206, 214, 215, 318, 319, 320, 327)
    assert build_w_TN(((1, 2, 3, 4),), 7) == Window.identity(4)


def test_build_w_TN_composition_shape():
    w = build_w_TN(((2,), (), (1, 3)), 3)
    assert w.is_total and w.n == 3
