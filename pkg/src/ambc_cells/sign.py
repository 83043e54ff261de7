"""Sign insertion and the representatives ``w_{T,N}`` of left cells."""

from __future__ import annotations

from bisect import bisect_right
from typing import NamedTuple, Sequence

from .core import AmbcError, Tabloid, Window, shape
from .group import inverse, rotate_R


class EmptyPending(AmbcError, ValueError):
    pass


class CapExceeded(AmbcError, RuntimeError):
    pass


class SignState(NamedTuple):
    step: int
    p: tuple[int, ...]
    q: tuple[int, ...]
    pending: tuple[int, ...]


def digamma_step(s: SignState, n: int) -> SignState:
    """Insert the head of the pending word into the row ``p``."""
    if not s.pending:
        raise EmptyPending("nothing left to insert")
    i = s.step + 1
    a, rest = s.pending[0], s.pending[1:]
    k = bisect_right(s.p, a)
    if k == len(s.p):
        return SignState(i, s.p + (a,), s.q + (i,), rest)
    b = s.p[k]
    return SignState(i, s.p[:k] + (a,) + s.p[k + 1 :], s.q, rest + (n + b,))


def sign_trace(w: Window) -> list[SignState]:
    """Every state from ``(0, (), (), window)`` to the empty pending word."""
    if not w.is_total:
        raise ValueError(f"{w} is not a total window")
    n = w.n
    state = SignState(0, (), (), tuple(w.entries))
    trace = [state]
    # each entry is appended once and bumped fewer than n times
    for _ in range(n * (n + 1)):
        if not state.pending:
            return trace
        state = digamma_step(state, n)
        trace.append(state)
    if state.pending:
        raise CapExceeded(f"sign insertion of {w} exceeded {n * (n + 1)} steps")
    return trace


def sign_insert(w: Window, blasiak_convention: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(sgn_P(w), sgn_Q(w))``.

    With ``blasiak_convention`` the window is first replaced by ``R(w^-1)``,
    which turns tail insertion on the other window convention into ours.
    """
    if blasiak_convention:
        w = rotate_R(inverse(w))
    last = sign_trace(w)[-1]
    return last.p, last.q


def sgn_p(w: Window) -> tuple[int, ...]:
    return sign_insert(w)[0]


def sgn_q(w: Window) -> tuple[int, ...]:
    return sign_insert(w)[1]


def format_trace(trace: Sequence[SignState]) -> str:
    """Rows ``i | P | Q | w`` with ``∅`` for empty words."""

    def word(xs: Sequence[int]) -> str:
        return ",".join(map(str, xs)) if xs else "∅"

    return "\n".join(f"{s.step}|{word(s.p)}|{word(s.q)}|{word(s.pending)}" for s in trace)


def build_w_TN(t: Tabloid, big_n: int) -> Window:
    """The element whose entries on row ``T_i`` are ``Nn(l-i) + L_i + 1, ..., Nn(l-i) + L_{i-1}``.

    ``t`` may have any composition shape, empty rows included.
    """
    lam = shape(t)
    n = sum(lam)
    l = len(lam)
    entries: list = [None] * n
    for i, row in enumerate(t, start=1):
        tail = sum(lam[i:])
        base = big_n * n * (l - i) + tail
        for j, x in enumerate(row, start=1):
            entries[x - 1] = base + j
    return Window(tuple(entries))
