"""Partial rotations along streams and the diamond completion."""

from __future__ import annotations

from typing import NamedTuple, Optional

from .ambc import (
    AmbcError,
    canonical_channels,
    find_channels,
    is_stream,
    is_substream,
    ne_channel,
    rivers,
    sw_channel,
)
from .core import Window
from .group import omega_right, star_centered


class NotASubstream(AmbcError, ValueError):
    pass


class StarUndefined(AmbcError, ValueError):
    pass


class NotProper(AmbcError, ValueError):
    pass


def _check(w: Window, s: Window) -> tuple[int, ...]:
    if not (is_substream(s, w) and is_stream(s)) or s.is_empty:
        raise NotASubstream(f"{s} is not a nonempty stream inside {w}")
    return s.positions()


def pr(w: Window, s: Window) -> Window:
    """Send each ball of ``s`` to the value of the next ball along ``s``."""
    pos = _check(w, s)
    n = w.n
    entries = list(w.entries)
    for a, b in zip(pos, pos[1:]):
        entries[a - 1] = w[b]
    entries[pos[-1] - 1] = w[pos[0]] + n
    return Window(tuple(entries))


def ipr(w: Window, s: Window) -> Window:
    """Inverse of :func:`pr`."""
    pos = _check(w, s)
    n = w.n
    entries = list(w.entries)
    for a, b in zip(pos, pos[1:]):
        entries[b - 1] = w[a]
    entries[pos[0] - 1] = w[pos[-1]] - n
    return Window(tuple(entries))


def _river_of(w: Window, s: Window) -> Optional[list[Window]]:
    channels = find_channels(w)
    if s not in channels:
        return None
    for cls in rivers(w, channels):
        if s in cls:
            return cls
    return None


def is_proper_pr(w: Window, s: Window) -> bool:
    river = _river_of(w, s)
    return river is not None and ne_channel(w, river) == s


def is_proper_ipr(w: Window, s: Window) -> bool:
    river = _river_of(w, s)
    return river is not None and sw_channel(w, river) == s


class Diamond(NamedTuple):
    w_star: Window
    w_tilde: Window
    w_tilde_star: Window
    s_star: Window


def diamond_complete(
    w: Window, p: int, q: int, inverse: bool = False, omega: bool = False
) -> Diamond:
    """Complete a star move centered at ``p`` and a proper rotation on the ``q``-th canonical channel.

    ``inverse`` uses inverse rotations on southwest river channels, indexed
    along the greedy southwest picks; ``omega`` replaces the star move by right
    multiplication with the shift element (``p`` is then ignored).  ``q`` is
    1-based.
    """

    def picks(v: Window) -> tuple[Window, ...]:
        seq = canonical_channels(v)
        return seq.southwest if inverse else seq.channels

    seq = picks(w)
    if not 1 <= q <= len(seq):
        raise NotProper(f"{w} has no canonical channel {q}")
    s = seq[q - 1]
    if not (is_proper_ipr(w, s) if inverse else is_proper_pr(w, s)):
        raise NotProper(f"channel {q} of {w} is not proper")
    rot = ipr if inverse else pr

    def move(v: Window) -> Optional[Window]:
        return omega_right(v, 1) if omega else star_centered(v, p)

    w_star = move(w)
    if w_star is None:
        raise StarUndefined(f"no star move centered at {p} for {w}")
    w_tilde = rot(w, s)
    w_tilde_star = move(w_tilde)
    if w_tilde_star is None:
        raise StarUndefined(f"no star move centered at {p} for {w_tilde}")
    s_star = picks(w_star)[q - 1]
    return Diamond(w_star, w_tilde, w_tilde_star, s_star)


def diamond_holds(d: Diamond, inverse: bool = False) -> bool:
    """The completing rotation is proper and closes the square."""
    if inverse:
        return is_proper_ipr(d.w_star, d.s_star) and ipr(d.w_star, d.s_star) == d.w_tilde_star
    return is_proper_pr(d.w_star, d.s_star) and pr(d.w_star, d.s_star) == d.w_tilde_star
