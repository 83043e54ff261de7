"""Group law of the extended affine symmetric group on total windows."""

from __future__ import annotations

from typing import Optional

from .core import MismatchedPeriod, ValidationError, Window


def _require_total(w: Window) -> None:
    if not w.is_total:
        raise ValidationError(f"{w} is not a total window")


def omega(n: int) -> Window:
    """The shift element ``[2, 3, ..., n + 1]``."""
    return Window(tuple(range(2, n + 2)))


def compose(u: Window, v: Window) -> Window:
    """Window of ``u ∘ v``."""
    if u.n != v.n:
        raise MismatchedPeriod(f"periods differ: {u.n} != {v.n}")
    _require_total(u)
    _require_total(v)
    return Window(tuple(u(v[k]) for k in range(1, v.n + 1)))


def inverse(w: Window) -> Window:
    _require_total(w)
    n = w.n
    entries: list[Optional[int]] = [None] * n
    for x, y in w.balls():
        k, r = divmod(y - 1, n)
        entries[r] = x - k * n
    return Window(tuple(entries))


def rotate_R(w: Window) -> Window:
    """Conjugate by ``x -> n + 1 - x`` (rotate the ball diagram by 180 degrees)."""
    n = w.n
    return Window(
        tuple(None if w[n + 1 - i] is None else n + 1 - w[n + 1 - i] for i in range(1, n + 1))
    )


def _star_defined(w: Window, i: int) -> bool:
    a, b = w(i), w(i + 1)
    before, after = w(i - 1), w(i + 2)
    return (
        a < after < b
        or b < after < a
        or a < before < b
        or b < before < a
    )


def _swap(w: Window, i: int) -> Window:
    """Swap ``w(i + kn)`` and ``w(i + 1 + kn)`` for every ``k``."""
    n = w.n
    entries = list(w.entries)
    i = (i - 1) % n + 1
    j = i + 1
    a, b = w(i), w(j)
    entries[i - 1] = b
    jr = (j - 1) % n
    entries[jr] = a - (j - 1 - jr)
    return Window(tuple(entries))


def right_star(w: Window, i: int) -> Optional[Window]:
    """Right star operation for ``* ~ i``; ``None`` where it is not defined.

    ``i`` is read modulo ``n``; ``i = n`` swaps the entries at ``n`` and
    ``n + 1``.
    """
    _require_total(w)
    if w.n < 3:
        return None
    i = (i - 1) % w.n + 1
    if not _star_defined(w, i):
        return None
    return _swap(w, i)


def left_star(w: Window, i: int) -> Optional[Window]:
    """``w -> w^-1 -> (w^-1)* -> ((w^-1)*)^-1``."""
    v = right_star(inverse(w), i)
    return None if v is None else inverse(v)


def star_centered(w: Window, p: int) -> Optional[Window]:
    """The right star operation centered at ``p``.

    Swaps ``(p, p+1)`` when ``w(p-1)`` lies between ``w(p)`` and ``w(p+1)``,
    or ``(p-1, p)`` when ``w(p+1)`` lies between ``w(p-1)`` and ``w(p)``.
    At most one of the two can hold.
    """
    _require_total(w)
    if w.n < 3:
        return None
    before, here, after = w(p - 1), w(p), w(p + 1)
    if min(here, after) < before < max(here, after):
        return _swap(w, p)
    if min(before, here) < after < max(before, here):
        return _swap(w, p - 1)
    return None


def omega_left(w: Window, power: int = 1) -> Window:
    """``ω^power · w``: add ``power`` to every entry."""
    return Window(tuple(None if v is None else v + power for v in w.entries))


def omega_right(w: Window, power: int = 1) -> Window:
    """``w · ω^power``: entry ``k`` becomes ``w(k + power)``."""
    _require_total(w)
    return Window(tuple(w(k + power) for k in range(1, w.n + 1)))
