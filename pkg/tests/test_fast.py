"""Compiled kernels agree with the reference implementation."""

import random

import numpy as np
import pytest

from ambc_cells import ambc, fast
from ambc_cells.core import Window
from ambc_cells.rotations import ipr, pr


def random_windows(count, seed, max_n=6, partial=False):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        perm = rng.sample(range(1, n + 1), n)
        entries = [p + n * rng.randint(-3, 3) for p in perm]
        if partial:
            entries = [e if rng.random() < 0.7 else None for e in entries]
        out.append(Window(tuple(entries)))
    return out


@pytest.mark.parametrize("partial", [False, True])
def test_phi_matches(partial):
    for w in random_windows(300, 1, partial=partial):
        prow, qrow, rho, l = fast.phi(fast.to_array(w))
        assert fast.decode_triple(prow, qrow, rho, l) == ambc.phi(w)


def test_psi_matches_both_orders():
    for w in random_windows(300, 2):
        prow, qrow, rho, l = fast.phi(fast.to_array(w))
        assert fast.from_array(fast.psi(prow, qrow, rho, l)) == w
        assert fast.from_array(fast.psi(prow, qrow, rho, l, True)) == w


def test_gk_oracle_matches():
    for w in random_windows(200, 3, partial=True):
        parts = tuple(int(x) for x in fast.greene_kleitman_bruteforce(fast.to_array(w)) if x)
        assert parts == ambc.greene_kleitman_bruteforce(w)


def test_channels_and_distances_match():
    for w in random_windows(200, 4, partial=True):
        if w.is_empty:
            continue
        a = fast.to_array(w)
        seq = ambc.canonical_channels(w)
        picks, greedy, breaks, width = fast.canonical_channels(a)
        assert tuple(picks) == tuple(fast.mask_of(c.positions()) for c in seq.channels)
        assert tuple(greedy) == tuple(fast.mask_of(c.positions()) for c in seq.southwest)
        assert tuple(breaks) == seq.river_breaks
        chans = ambc.find_channels(w)
        for c in chans:
            for d in chans:
                got = fast.distance(a, fast.mask_of(c.positions()), fast.mask_of(d.positions()), width)
                assert got == ambc.channel_distance(w, c, d)


def test_rotations_match():
    for w in random_windows(200, 5):
        a = fast.to_array(w)
        for c in ambc.find_channels(w):
            m = fast.mask_of(c.positions())
            assert fast.from_array(fast.pr(a, m)) == pr(w, c)
            assert fast.from_array(fast.ipr(a, m)) == ipr(w, c)


def test_encode_roundtrip():
    t = ambc.phi(Window((6, 1, 18, 3, 19, 24, 12, 15, 17, 10)))
    prow, qrow, rho = fast.encode_triple(t, 10)
    assert fast.decode_triple(prow, qrow, rho, len(t.rho)) == t
    w = Window((6, 1, 18, 3, 19, 24, 12, 15, 17, 10))
    assert np.array_equal(fast.to_array(fast.from_array(fast.to_array(w))), fast.to_array(w))
