"""RSK on tabloids, crystal reflections, R-matrices and standardization."""

from __future__ import annotations

from bisect import bisect_right
from typing import NamedTuple, Optional, Sequence

from .core import AmbcError, Tabloid, content, dominates, pad, reading_word, shape


class ShapeMismatch(AmbcError, ValueError):
    pass


class DominanceViolated(AmbcError, ValueError):
    pass


class TwoRowArray(NamedTuple):
    top: tuple[int, ...]
    bottom: tuple[int, ...]


def to_two_row(t: Tabloid) -> TwoRowArray:
    """Row ``r`` of an ``l``-row tabloid is labelled ``l + 1 - r``; read bottom row first."""
    l = len(t)
    top = tuple(l - r for r in range(l - 1, -1, -1) for _ in t[r])
    return TwoRowArray(top, reading_word(t))


def _insert(rows: list[list[int]], x: int) -> int:
    """Row-insert ``x``; return the index of the row that grew."""
    for r, row in enumerate(rows):
        k = bisect_right(row, x)
        if k == len(row):
            row.append(x)
            return r
        row[k], x = x, row[k]
    rows.append([x])
    return len(rows) - 1


def rsk(t: Tabloid) -> tuple[Tabloid, Tabloid]:
    """``(RSK_P(T), RSK_Q(T))`` from row insertion of the two-row array."""
    top, bottom = to_two_row(t)
    p: list[list[int]] = []
    q: list[list[int]] = []
    for label, x in zip(top, bottom):
        r = _insert(p, x)
        if r == len(q):
            q.append([])
        q[r].append(label)
    return tuple(map(tuple, p)), tuple(map(tuple, q))


def rsk_inverse(p: Tabloid, q: Tabloid, length: Optional[int] = None) -> Tabloid:
    """The tabloid with the given RSK image.

    ``length`` is the number of rows, needed when leading rows are empty;
    it defaults to the largest letter of ``q``.
    """
    if shape(p) != shape(q):
        raise ShapeMismatch(f"{p} and {q} have different shapes")
    prows = [list(r) for r in p]
    qrows = [list(r) for r in q]
    letters = [x for r in q for x in r]
    l = max(letters, default=0) if length is None else length
    if letters and max(letters) > l:
        raise ShapeMismatch(f"{q} uses letters above {l}")
    rows: list[list[int]] = [[] for _ in range(l)]
    while any(qrows):
        # largest label, rightmost among ties
        r = max(
            (i for i, row in enumerate(qrows) if row),
            key=lambda i: (qrows[i][-1], len(qrows[i])),
        )
        label = qrows[r].pop()
        if not qrows[r]:
            qrows.pop(r)
        x = prows[r].pop()
        if not prows[r]:
            prows.pop(r)
        for above in range(r - 1, -1, -1):
            row = prows[above]
            k = bisect_right(row, x) - 1
            # largest entry smaller than x
            while row[k] > x:
                k -= 1
            row[k], x = x, row[k]
        rows[l - label].append(x)
    return tuple(tuple(sorted(r)) for r in rows)


def rsk_p(t: Tabloid) -> Tabloid:
    return rsk(t)[0]


def rsk_q(t: Tabloid) -> Tabloid:
    return rsk(t)[1]


def _refill(word: Sequence[int], sh: Sequence[int]) -> Tabloid:
    """Cut a reading word back into rows of shape ``sh`` (last row first)."""
    rows = []
    k = 0
    for length in reversed(sh):
        rows.append(tuple(word[k : k + length]))
        k += length
    return tuple(reversed(rows))


def crystal_reflection(u: Tabloid, i: int) -> Tabloid:
    """Swap the contents of ``i`` and ``i + 1`` by the bracketing rule on the reading word."""
    if i < 1:
        raise ValueError(f"reflection index must be positive, got {i}")
    word = list(reading_word(u))
    open_pos: list[int] = []
    paired = set()
    for k, x in enumerate(word):
        if x == i + 1:
            open_pos.append(k)
        elif x == i and open_pos:
            paired.add(open_pos.pop())
            paired.add(k)
    free = [k for k, x in enumerate(word) if x in (i, i + 1) and k not in paired]
    a = sum(word[k] == i for k in free)
    for m, k in enumerate(free):
        word[k] = i if m < len(free) - a else i + 1
    return _refill(word, shape(u))


def act(u: Tabloid, reflections: Sequence[int]) -> Tabloid:
    """Apply ``s_{i_1}`` first, then ``s_{i_2}``, and so on."""
    for i in reflections:
        u = crystal_reflection(u, i)
    return u


def r_matrix(t: Tabloid, i: int) -> Tabloid:
    """Combinatorial R-matrix: keep ``RSK_P``, reflect ``RSK_Q`` by ``s_{l-i}``."""
    l = len(t)
    if not 1 <= i < l:
        raise ValueError(f"row index {i} out of range for {l} rows")
    p, q = rsk(t)
    return rsk_inverse(p, crystal_reflection(q, l - i), l)


# -- standardization ----------------------------------------------------------


def _permute_to(u: Tabloid, current: list[int], target: Sequence[int]) -> Tabloid:
    """Rearrange the content from ``current`` to ``target`` with adjacent reflections."""
    current = list(current)
    for k in range(len(target)):
        m = next(j for j in range(k, len(current)) if current[j] == target[k])
        for j in range(m - 1, k - 1, -1):
            u = crystal_reflection(u, j + 1)
            current[j], current[j + 1] = current[j + 1], current[j]
    return u


def _raise_two(u: Tabloid) -> Tabloid:
    """Change the rightmost letter 1 in the reading word to 2."""
    word = list(reading_word(u))
    k = max(j for j, x in enumerate(word) if x == 1)
    word[k] = 2
    return _refill(word, shape(u))


def theta(
    u: Tabloid,
    beta: Sequence[int],
    alpha: Optional[Sequence[int]] = None,
    strategy: str = "first",
) -> Tabloid:
    """Standardization from content ``alpha`` (default: that of ``u``) to ``beta``.

    Sort to the partition, walk down the dominance order one box at a time
    (move the box from a part that is too long to the first part that is too
    short), then rearrange to ``beta``.  ``strategy="last"`` takes the box
    from the last long part before that short part instead; both are legal
    paths and must agree.
    """
    length = max(len(beta), len(alpha) if alpha is not None else 0, max(content(u), default=0))
    length = max(length, len(content(u)))
    a = list(pad(content(u, length), length))
    if alpha is not None and tuple(pad(alpha, length)) != tuple(a):
        raise ShapeMismatch(f"{u} does not have content {tuple(alpha)}")
    b = list(pad(beta, length))
    if sum(a) != sum(b) or not dominates(a, b):
        raise DominanceViolated(f"{tuple(a)} does not dominate {tuple(b)}")
    lam = sorted(a, reverse=True)
    mu = sorted(b, reverse=True)
    u = _permute_to(u, a, lam)
    cur = lam
    while cur != mu:
        j = next(k for k in range(length) if cur[k] < mu[k])
        if strategy == "first":
            i = next(k for k in range(j) if cur[k] > mu[k])
        elif strategy == "last":
            i = max(k for k in range(j) if cur[k] > mu[k])
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        front = [cur[i], cur[j]] + [x for k, x in enumerate(cur) if k not in (i, j)]
        u = _permute_to(u, cur, front)
        u = _raise_two(u)
        front[0] -= 1
        front[1] += 1
        nxt = list(cur)
        nxt[i] -= 1
        nxt[j] += 1
        u = _permute_to(u, front, nxt)
        cur = sorted(nxt, reverse=True)
        u = _permute_to(u, nxt, cur)
    return _permute_to(u, cur, b)


# -- sign-word classes --------------------------------------------------------


def upsilon_classes(n: int, rho_bound: int = 0) -> dict[tuple[int, ...], list[Tabloid]]:
    """Group every partition-shaped ``T`` by the sign words of elements with ``Q = T``.

    The elements used are ``psi(T, T, rho)`` for every dominant ``rho`` with
    entries in ``[-rho_bound, rho_bound]``; ``rho = 0`` is always dominant here.
    """
    from .ambc import AmbcTriple, dominant_weights, psi
    from .core import partitions, rsyt
    from .sign import sgn_q

    classes: dict[tuple[int, ...], list[Tabloid]] = {}
    for lam in partitions(n):
        for t in rsyt(lam):
            words = {sgn_q(psi(AmbcTriple(t, t, rho), n)) for rho in dominant_weights(t, t, rho_bound)}
            for word in sorted(words):
                classes.setdefault(word, []).append(t)
    return {word: sorted(ts) for word, ts in sorted(classes.items())}
