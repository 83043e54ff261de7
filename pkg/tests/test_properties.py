from hypothesis import given, settings
from hypothesis import strategies as st

from ambc_cells.ambc import (
    canonical_channels,
    channel_distance,
    find_channels,
    greene_kleitman,
    greene_kleitman_bruteforce,
    phi,
    psi,
)
from ambc_cells.core import Window, content, format_window, is_ssyt, parse_window, restrict, shape
from ambc_cells.group import compose, inverse, right_star, rotate_R
from ambc_cells.rotations import ipr, pr
from ambc_cells.sign import sign_insert
from ambc_cells.tableaux import crystal_reflection, r_matrix, rsk, rsk_inverse

from .strategies import tabloids, windows

settings.register_profile("ci", max_examples=150, deadline=None)
settings.load_profile("ci")


@given(windows(partial=True))
def test_parse_format_roundtrip(w):
    assert parse_window(format_window(w)) == w


@given(windows(), st.sets(st.integers(1, 5)), st.sets(st.integers(1, 5)))
def test_restrict_intersection(w, x, y):
    assert restrict(restrict(w, x), y) == restrict(w, x & y)


@given(windows())
def test_inverse_and_rotation(w):
    assert compose(w, inverse(w)) == Window.identity(w.n)
    assert inverse(inverse(w)) == w
    assert rotate_R(rotate_R(w)) == w


@given(windows(max_n=6))
def test_psi_phi_roundtrip(w):
    assert psi(phi(w)) == w


@given(windows(max_n=6, partial=True))
def test_shape_is_greene_kleitman(w):
    assert greene_kleitman(w) == greene_kleitman_bruteforce(w)


@given(windows(max_n=5))
def test_star_keeps_two_sided_cell(w):
    lam = greene_kleitman(w)
    for i in range(1, w.n + 1):
        v = right_star(w, i)
        if v is not None:
            assert greene_kleitman(v) == lam
            assert right_star(v, i) == w


@given(windows(max_n=5))
def test_canonical_sequence_is_disjoint_and_sized(w):
    seq = canonical_channels(w)
    lam = greene_kleitman(w)
    assert len(seq) == lam.count(lam[0])
    used = [x for c in seq.channels for x in c.positions()]
    assert len(used) == len(set(used))


@given(windows(max_n=5))
def test_distance_symmetric_and_triangle(w):
    chans = find_channels(w)[:4]
    for a in chans:
        assert channel_distance(w, a, a) == 0
        for b in chans:
            assert channel_distance(w, a, b) == channel_distance(w, b, a)
            for c in chans:
                assert channel_distance(w, a, c) <= channel_distance(w, a, b) + channel_distance(w, b, c)


@given(windows(max_n=5), st.data())
def test_rotation_inverse_pair(w, data):
    chans = find_channels(w)
    c = data.draw(st.sampled_from(chans))
    v = pr(w, c)
    assert ipr(v, restrict(v, c.positions())) == w


@given(windows(max_n=5))
def test_sign_words_increase(w):
    p, q = sign_insert(w)
    assert len(p) == len(q) == w.n
    assert list(p) == sorted(set(p)) and list(q) == sorted(set(q))


@given(tabloids())
def test_rsk_roundtrip(t):
    p, q = rsk(t)
    assert shape(p) == shape(q)
    assert rsk_inverse(p, q, len(t)) == t


@given(tabloids(max_n=8), st.integers(1, 3))
def test_crystal_reflection_content(t, i):
    q = rsk(t)[1]
    v = crystal_reflection(q, i)
    assert is_ssyt(v) and crystal_reflection(v, i) == q
    length = max(len(t), i + 1)
    c = list(content(q, length))
    c[i - 1], c[i] = c[i], c[i - 1]
    assert list(content(v, length)) == c


@given(tabloids(max_rows=4), st.data())
def test_r_matrix_involution(t, data):
    if len(t) < 2:
        return
    i = data.draw(st.integers(1, len(t) - 1))
    r = r_matrix(t, i)
    assert r_matrix(r, i) == t
    assert rsk(r)[0] == rsk(t)[0]
