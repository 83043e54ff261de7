"""Affine matrix-ball construction.

Balls of a partial permutation ``w`` are the points ``(x, w(x))`` of its
periodic graph.  Everything periodic is computed on the quotient by the
diagonal translation ``(n, n)``: a ball is stored by its window position and
a label at ``(x + tn, w(x) + tn)`` is ``label(x) + t * increment``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional, Sequence

from .core import AmbcError, Tabloid, ValidationError, Window, is_partition, restrict, shape


class NotAChannel(AmbcError, ValueError):
    pass


class IncompatibleStream(AmbcError, ValueError):
    pass


class AbsentPosition(AmbcError, ValueError):
    pass


class ShapeMismatch(AmbcError, ValueError):
    pass


class IndexOutOfRange(AmbcError, ValueError):
    pass


class EntryNotFound(AmbcError, ValueError):
    pass


class NumberingDiverged(AmbcError, RuntimeError):
    pass


class AmbcTriple(NamedTuple):
    p: Tabloid
    q: Tabloid
    rho: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, ...]:
        return shape(self.p)

    def to_json(self) -> dict:
        return {"p": [list(r) for r in self.p], "q": [list(r) for r in self.q], "rho": list(self.rho)}

    @classmethod
    def from_json(cls, data: dict) -> "AmbcTriple":
        return cls(
            tuple(tuple(int(x) for x in r) for r in data["p"]),
            tuple(tuple(int(x) for x in r) for r in data["q"]),
            tuple(int(x) for x in data["rho"]),
        )


@dataclass(frozen=True)
class Numbering:
    """Periodic labelling of the balls of ``base``.

    ``labels`` maps present window positions to integers; the ball
    ``(x + tn, w(x) + tn)`` carries ``labels[x] + t * increment``.
    """

    base: Window
    labels: dict
    increment: int

    def label(self, x: int) -> int:
        n = self.base.n
        k, r = divmod(x - 1, n)
        return self.labels[r + 1] + k * self.increment

    def shifted(self, by: int) -> "Numbering":
        return Numbering(self.base, {x: d + by for x, d in self.labels.items()}, self.increment)

    def normalized(self) -> "Numbering":
        if not self.labels:
            return self
        return self.shifted(-min(self.labels.values()))

    def is_monotone(self) -> bool:
        """Check strict increase along paths on a three-period slab."""
        n = self.base.n
        balls = [
            (x + t * n, y + t * n, self.labels[x] + t * self.increment)
            for x, y in self.base.balls()
            for t in (-1, 0, 1)
        ]
        for xa, ya, da in balls:
            for xb, yb, db in balls:
                if xa < xb and ya < yb and not da < db:
                    return False
        return True


# -- Shi poset and Greene-Kleitman partition ----------------------------------


def shi_less(w: Window, i: int, j: int) -> bool:
    """``i <_P j`` in the Shi poset of ``w``."""
    wi, wj = w[i], w[j]
    if wi is None or wj is None:
        raise AbsentPosition(f"position {i if wi is None else j} is absent")
    return (i > j and wi < wj) or wj > wi + w.n


def greene_kleitman_bruteforce(w: Window) -> tuple[int, ...]:
    """Greene-Kleitman partition by exhaustive search (exponential in ``n``).

    A set is a union of ``k`` antichains exactly when its longest chain has
    at most ``k`` elements, so ``λ1 + ... + λk`` is the largest subset whose
    height is at most ``k``.
    """
    pos = w.positions()
    m = len(pos)
    less = [[shi_less(w, a, b) for b in pos] for a in pos]
    # topological order of the poset restricted to any subset: sort by a linear extension
    order = sorted(range(m), key=lambda a: sum(less[b][a] for b in range(m)))
    best = [0] * (m + 1)
    for mask in range(1 << m):
        members = [a for a in order if mask >> a & 1]
        height = {}
        h = 0
        for a in members:
            ha = 1 + max((height[b] for b in height if less[b][a]), default=0)
            height[a] = ha
            h = max(h, ha)
        size = len(members)
        for k in range(h, m + 1):
            if size > best[k]:
                best[k] = size
    parts = []
    for k in range(1, m + 1):
        part = best[k] - best[k - 1]
        if part == 0:
            break
        parts.append(part)
    return tuple(parts)


def greene_kleitman(w: Window) -> tuple[int, ...]:
    """Greene-Kleitman partition of the Shi poset, read off ``phi(w)``."""
    return shape(phi(w).p)


# -- streams and channels ------------------------------------------------------


def is_stream(s: Window) -> bool:
    """Present entries increase and wrap below the first entry plus ``n``."""
    vals = s.values()
    if not vals:
        return True
    return all(a < b for a, b in zip(vals, vals[1:])) and vals[-1] < vals[0] + s.n


def altitude(s: Window) -> int:
    n = s.n
    return sum((v - 1) // n for v in s.values())


def is_substream(s: Window, w: Window) -> bool:
    return s.n == w.n and all(v is None or w[i] == v for i, v in enumerate(s.entries, 1))


def _max_streams(w: Window) -> tuple[int, list[tuple[int, ...]]]:
    """Width of ``w`` and every stream of that density, as position tuples.

    For each choice of first position the problem is a longest increasing
    subsequence capped below ``w(first) + n``; ``longest[j]`` is the length of
    the best chain starting at index ``j``.
    """
    balls = w.balls()
    m = len(balls)
    if m == 0:
        return 0, []
    n = w.n
    found: list[tuple[int, ...]] = []
    width = 0
    for s in range(m):
        cap = balls[s][1] + n
        longest = [0] * m
        for j in range(m - 1, s - 1, -1):
            yj = balls[j][1]
            if j != s and not (balls[s][1] < yj < cap):
                continue
            longest[j] = 1 + max(
                (longest[k] for k in range(j + 1, m) if longest[k] and balls[k][1] > yj),
                default=0,
            )
        if longest[s] < width:
            continue
        if longest[s] > width:
            width = longest[s]
            found = []

        def extend(j: int, acc: tuple[int, ...]) -> None:
            if longest[j] == 1:
                found.append(acc)
                return
            yj = balls[j][1]
            for k in range(j + 1, m):
                if longest[k] == longest[j] - 1 and balls[k][1] > yj:
                    extend(k, acc + (balls[k][0],))

        extend(s, (balls[s][0],))
    return width, found


def width(w: Window) -> int:
    return _max_streams(w)[0]


def find_channels(w: Window) -> list[Window]:
    """All streams of maximal density contained in ``w``."""
    _, found = _max_streams(w)
    return [restrict(w, p) for p in sorted(found)]


def find_channels_bruteforce(w: Window) -> list[Window]:
    """Oracle for :func:`find_channels`: test every subset of positions."""
    pos = w.positions()
    for k in range(len(pos), 0, -1):
        hits = [restrict(w, c) for c in combinations(pos, k) if is_stream(restrict(w, c))]
        if hits:
            return sorted(hits, key=lambda c: c.positions())
    return []


def _ball_leq_sw(x: int, y: int, d: Window) -> bool:
    """Is ``(x, y)`` southwest of some ball of ``d``?"""
    n = d.n
    for xd, yd in d.balls():
        # need k with xd + kn <= x and yd + kn >= y
        if -((yd - y) // n) <= (x - xd) // n:
            return True
    return False


def sw_leq(c: Window, d: Window) -> bool:
    """``c <=_SW d``: every ball of ``c`` is southwest of a ball of ``d``."""
    return all(_ball_leq_sw(x, y, d) for x, y in c.balls())


def sw_channel(w: Window, channels: Optional[Sequence[Window]] = None) -> Window:
    channels = find_channels(w) if channels is None else channels
    for c in channels:
        if all(sw_leq(c, d) for d in channels):
            return c
    raise AmbcError(f"no southwest channel in {w}")


def ne_channel(w: Window, channels: Optional[Sequence[Window]] = None) -> Window:
    channels = find_channels(w) if channels is None else channels
    for c in channels:
        if all(sw_leq(d, c) for d in channels):
            return c
    raise AmbcError(f"no northeast channel in {w}")


# -- numberings ---------------------------------------------------------------


def _path_shift(xa: int, ya: int, xb: int, yb: int, n: int) -> int:
    """Largest ``t`` with ``(xa + tn, ya + tn)`` strictly northwest of ``(xb, yb)``."""
    return min((xb - xa - 1) // n, (yb - ya - 1) // n)


def proper_numbering(s: Window) -> dict:
    """Labels ``0, 1, ..., k-1`` on the window balls of a stream."""
    return {x: i for i, x in enumerate(s.positions())}


def channel_numbering(w: Window, c: Window) -> Numbering:
    """Largest ``d~(b') + k`` over paths ``b' = b0, ..., bk = b`` starting in ``c``."""
    if not is_substream(c, w) or not is_stream(c) or c.density() != width(w):
        raise NotAChannel(f"{c} is not a channel of {w}")
    return _longest_path_numbering(w, proper_numbering(c), c.density())


def _longest_path_numbering(w: Window, seed: dict, r: int) -> Numbering:
    n = w.n
    balls = w.balls()
    NEG = None
    labels: dict = {x: seed.get(x, NEG) for x, _ in balls}
    edges = [
        (xa, xb, _path_shift(xa, ya, xb, yb, n) * r + 1)
        for xa, ya in balls
        for xb, yb in balls
    ]
    for _ in range(n * n + 2):
        changed = False
        for xa, xb, weight in edges:
            da = labels[xa]
            if da is None:
                continue
            db = labels[xb]
            if db is None or da + weight > db:
                labels[xb] = da + weight
                changed = True
        if not changed:
            break
    else:
        raise NumberingDiverged(f"longest-path labels on {w} did not settle")
    if any(v is None for v in labels.values()):
        raise NumberingDiverged(f"unreached balls in {w}")
    return Numbering(w, labels, r).normalized()


def channel_distance(w: Window, c: Window, c2: Window) -> int:
    """``h(c, c2)``: offset between the two channel numberings, measured on ``c2``.

    Raises if the offset is not the same on every ball, which would mean the
    two numberings do not agree on ``c`` up to shift.
    """
    d1 = channel_numbering(w, c)
    d2 = channel_numbering(w, c2)
    shifts = {d1.labels[x] - d2.labels[x] for x in c.positions()}
    if len(shifts) != 1:
        raise AmbcError(f"numberings of {c} and {c2} disagree on {c} beyond a shift")
    (shift,) = shifts
    gaps = {abs(d2.labels[x] + shift - d1.labels[x]) for x in c2.positions()}
    if len(gaps) != 1:
        raise AmbcError(f"distance between {c} and {c2} depends on the ball")
    return gaps.pop()


def rivers(w: Window, channels: Optional[Sequence[Window]] = None) -> list[list[Window]]:
    """Classes of channels at distance zero, southwest-most river first."""
    channels = list(find_channels(w) if channels is None else channels)
    numberings = {c: channel_numbering(w, c) for c in channels}
    classes: list[list[Window]] = []
    for c in channels:
        for cls in classes:
            rep = cls[0]
            if _same_numbering(numberings[rep], numberings[c]):
                cls.append(c)
                break
        else:
            classes.append([c])
    classes.sort(key=lambda cls: sum(sw_leq(d, cls[0]) for d in channels))
    return classes


def _same_numbering(a: Numbering, b: Numbering) -> bool:
    # both are normalized, so h = 0 means equal labels
    return a.labels == b.labels


@dataclass(frozen=True)
class ChannelSequence:
    """Disjoint channels ``C1 <=_SW ... <=_SW Cm`` and the river blocks.

    ``river_breaks`` are the block ends ``m1 < ... < ml = m``.  ``southwest``
    keeps the greedy picks before the substitution; its entry at a block start
    is that river's SW channel.
    """

    channels: tuple[Window, ...]
    river_breaks: tuple[int, ...]
    southwest: tuple[Window, ...] = ()

    def __len__(self) -> int:
        return len(self.channels)

    def __getitem__(self, i: int) -> Window:
        return self.channels[i]

    def river_blocks(self) -> list[range]:
        starts = (0,) + self.river_breaks[:-1]
        return [range(a, b) for a, b in zip(starts, self.river_breaks)]


def _minus(w: Window, c: Window) -> Window:
    taken = set(c.positions())
    return Window(tuple(None if i in taken else v for i, v in enumerate(w.entries, 1)))


def canonical_channels(w: Window) -> ChannelSequence:
    """Greedy southwest channels, then each river's last pick swapped for its NE channel."""
    all_channels = find_channels(w)
    r = all_channels[0].density() if all_channels else 0
    picks: list[Window] = []
    rest = w
    while True:
        wd, found = _max_streams(rest)
        if wd < r or wd == 0:
            break
        cands = [restrict(rest, p) for p in sorted(found)]
        c = sw_channel(rest, cands)
        picks.append(c)
        rest = _minus(rest, c)
    river_list = rivers(w, all_channels)
    river_of = {}
    for k, cls in enumerate(river_list):
        for c in cls:
            river_of[c] = k
    breaks = []
    for i, c in enumerate(picks):
        if i + 1 == len(picks) or river_of[picks[i + 1]] != river_of[c]:
            breaks.append(i + 1)
    greedy = tuple(picks)
    for b in breaks:
        picks[b - 1] = ne_channel(w, river_list[river_of[picks[b - 1]]])
    return ChannelSequence(tuple(picks), tuple(breaks), greedy)


# -- forward step and phi -----------------------------------------------------


def _zigzags(numbering: Numbering) -> dict:
    """Balls of each label class ``0 <= m < increment``, sorted by decreasing ``x``."""
    w = numbering.base
    n, r = w.n, numbering.increment
    classes: dict = {m: [] for m in range(r)}
    for x, y in w.balls():
        d = numbering.labels[x]
        t = -(d // r)
        classes[d + t * r].append((x + t * n, y + t * n))
    for m in classes:
        classes[m].sort(reverse=True)
    return classes


def zigzag_parts(w: Window) -> list[tuple[list[tuple[int, int]], tuple[int, int]]]:
    """For each label class of the southwest channel numbering: the ``fw`` balls and the ``st`` ball."""
    channels = find_channels(w)
    if not channels:
        return []
    c = sw_channel(w, channels)
    d = _longest_path_numbering(w, proper_numbering(c), c.density())
    parts = []
    for zig in _zigzags(d).values():
        fw_balls = []
        for (xa, ya), (xb, yb) in zip(zig, zig[1:]):
            if not ya < yb:
                raise AmbcError(f"zigzag of {w} is not monotone")
            fw_balls.append((xa, yb))
        parts.append((fw_balls, (zig[-1][0], zig[0][1])))
    return parts


def forward_step(w: Window) -> tuple[Window, Window]:
    """``(fw(w), st(w))`` from the zigzags of the southwest channel numbering."""
    n = w.n
    parts = zigzag_parts(w)
    if not parts:
        return w, Window.empty(n)
    fw_balls = [b for fw, _ in parts for b in fw]
    st_balls = [st for _, st in parts]
    return Window.from_balls(n, fw_balls), Window.from_balls(n, st_balls)


def phi(w: Window) -> AmbcTriple:
    """``w -> (P, Q, rho)``; also accepts partial windows.

    Row ``i`` of ``P`` holds the value residues of the ``i``-th stream and
    row ``i`` of ``Q`` its positions, so ``P`` follows left multiplication.
    """
    n = w.n
    p_rows, q_rows, rho = [], [], []
    while not w.is_empty:
        w, st = forward_step(w)
        p_rows.append(tuple(sorted((v - 1) % n + 1 for v in st.values())))
        q_rows.append(st.positions())
        rho.append(altitude(st))
    return AmbcTriple(tuple(p_rows), tuple(q_rows), tuple(rho))


# -- backward step and psi ----------------------------------------------------


def _check_compatible(w: Window, s: Window) -> None:
    n = w.n
    if s.n != n or not is_stream(s) or s.is_empty:
        raise IncompatibleStream(f"{s} is not a nonempty stream of period {n}")
    if set(s.positions()) & set(w.positions()):
        raise IncompatibleStream(f"{s} and {w} share a column")
    if {v % n for v in s.values()} & {v % n for v in w.values()}:
        raise IncompatibleStream(f"{s} and {w} share a row")
    if s.density() < width(w):
        raise IncompatibleStream(f"{s} is thinner than the width of {w}")


def backward_numbering(w: Window, s: Window, order: str = "forward") -> Numbering:
    """Backward numbering of ``w`` induced by a compatible stream ``s``.

    Start from the largest stream label strictly northwest of each ball,
    then lower offending balls until labels increase along every path.
    ``order`` picks the scan direction for the next ball to lower.
    """
    _check_compatible(w, s)
    n, k = w.n, s.density()
    sballs = s.balls()
    balls = w.balls()
    labels = {}
    for x, y in balls:
        labels[x] = max(j + _path_shift(ys, vs, x, y, n) * k for j, (ys, vs) in enumerate(sballs))
    # smallest shift t putting ball b (shifted) strictly southeast of ball a
    first = {
        (xa, xb): max((xa - xb) // n + 1, (ya - yb) // n + 1)
        for xa, ya in balls
        for xb, yb in balls
    }
    scan = [x for x, _ in balls]
    if order == "reverse":
        scan.reverse()
    elif order != "forward":
        raise ValueError(f"unknown scan order {order!r}")
    cap = 4 * n * n * (k + 2) + 64
    for _ in range(cap):
        chosen = None
        for xa in scan:
            da = labels[xa]
            if not any(da >= labels[xb] + first[xa, xb] * k for xb in scan):
                continue
            if any(labels[xc] - first[xc, xa] * k >= da for xc in scan):
                continue
            chosen = xa
            break
        if chosen is None:
            if any(
                labels[xa] >= labels[xb] + first[xa, xb] * k for xa in scan for xb in scan
            ):
                raise NumberingDiverged(f"no ball can be lowered in {w} against {s}")
            return Numbering(w, labels, k)
        labels[chosen] -= 1
    raise NumberingDiverged(f"backward numbering of {w} against {s} did not settle")


def bk(w: Window, s: Window, order: str = "forward") -> Window:
    """Backward step: rebuild the partial permutation whose forward step gives ``(w, s)``."""
    n = w.n
    if w.is_empty:
        _check_compatible(w, s)
        return s
    d = backward_numbering(w, s, order)
    zig = _zigzags(d)
    out = []
    for m, (ys, vs) in enumerate(s.balls()):
        row = zig[m]
        if not row:
            out.append((ys, vs))
            continue
        for (xa, ya), (xb, yb) in zip(row, row[1:]):
            if not ya < yb:
                raise AmbcError(f"backward zigzag of {w} is not monotone")
            out.append((xb, ya))
        out.append((row[0][0], vs))
        out.append((ys, row[-1][1]))
    return Window.from_balls(n, out)


def stream_from(p_row: Sequence[int], q_row: Sequence[int], rho: int, n: int) -> Window:
    """The stream mapping positions ``p_row + nZ`` onto values ``q_row + nZ`` with altitude ``rho``.

    Rotating the images by ``t`` steps raises the altitude by exactly ``t``,
    so ``t = rho``.
    """
    p = sorted(p_row)
    q = sorted(q_row)
    k = len(p)
    if k != len(q) or k == 0:
        raise ShapeMismatch(f"rows {p_row} and {q_row} do not pair up")
    entries: list = [None] * n
    for j in range(k):
        idx = j + rho
        entries[p[j] - 1] = q[idx % k] + n * (idx // k)
    return Window(tuple(entries))


def psi(t: AmbcTriple, n: Optional[int] = None, order: str = "forward") -> Window:
    p, q, rho = t
    if shape(p) != shape(q) or len(rho) != len(p):
        raise ShapeMismatch(f"inconsistent triple {t}")
    if n is None:
        n = sum(len(r) for r in p)
    w = Window.empty(n)
    for prow, qrow, r in reversed(list(zip(p, q, rho))):
        w = bk(w, stream_from(qrow, prow, r, n), order)
    return w


# -- tableau statistics -------------------------------------------------------


def local_charge(t: Tabloid, i: int) -> int:
    """Smallest right shift of row ``i`` that makes rows ``i, i+1`` column-strict."""
    if not 1 <= i < len(t):
        raise IndexOutOfRange(f"row {i} has no row below it in {t}")
    a, b = t[i - 1], t[i]
    for d in range(len(b) + 1):
        if all(a[l - d - 1] < b[l - 1] for l in range(d + 1, len(b) + 1) if l - d <= len(a)):
            return d
    return len(b)


def symmetrized_offset(p: Tabloid, q: Tabloid) -> tuple[int, ...]:
    lam = shape(p)
    if lam != shape(q) or not is_partition(lam):
        raise ShapeMismatch(f"{p} and {q} do not share a partition shape")
    s = [0] * len(lam)
    for i in range(1, len(lam)):
        if lam[i - 1] == lam[i]:
            s[i] = s[i - 1] + local_charge(p, i) - local_charge(q, i)
    return tuple(s)


def reduced_weight(t: AmbcTriple) -> tuple[int, ...]:
    """``rho - s_{P,Q}``."""
    s = symmetrized_offset(t.p, t.q)
    return tuple(r - x for r, x in zip(t.rho, s))


def is_dominant(rho: Sequence[int], p: Tabloid, q: Tabloid) -> bool:
    lam = shape(p)
    if len(rho) != len(lam):
        raise ShapeMismatch(f"weight {tuple(rho)} does not fit shape {lam}")
    s = symmetrized_offset(p, q)
    return all(
        rho[i - 1] - s[i - 1] <= rho[i] - s[i] for i in range(1, len(lam)) if lam[i - 1] == lam[i]
    )


def delta_vector(t: Tabloid, s: int) -> tuple[int, ...]:
    lam = shape(t)
    for a, row in enumerate(t):
        if s in row:
            break
    else:
        raise EntryNotFound(f"{s} does not occur in {t}")
    above = lam[a - 1] if a > 0 else float("inf")
    return tuple(int(above > lam[a] == lam[i]) for i in range(len(lam)))


def omega_tabloid(t: Tabloid, n: Optional[int] = None) -> Tabloid:
    """Replace each entry ``i`` by ``i + 1`` (``n`` by ``1``) and re-sort rows."""
    if n is None:
        n = sum(len(r) for r in t)
    return tuple(tuple(sorted(x % n + 1 for x in row)) for row in t)


def validate_triple(t: AmbcTriple, n: Optional[int] = None) -> None:
    from .core import is_rsyt

    if n is None:
        n = sum(len(r) for r in t.p)
    if not (is_rsyt(t.p, n) and is_rsyt(t.q, n)):
        raise ValidationError(f"tableaux of {t} are not row-standard")
    if shape(t.p) != shape(t.q) or not is_partition(shape(t.p)):
        raise ShapeMismatch(f"tableaux of {t} do not share a partition shape")
    if len(t.rho) != len(t.p):
        raise ShapeMismatch(f"weight of {t} has the wrong length")


def dominant_weights(p: Tabloid, q: Tabloid, bound: int) -> list[tuple[int, ...]]:
    """All dominant weights for ``(P, Q)`` with every entry in ``[-bound, bound]``, lexicographic."""
    lam = shape(p)
    s = symmetrized_offset(p, q)
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]) -> None:
        i = len(prefix)
        if i == len(lam):
            out.append(tuple(prefix))
            return
        low = -bound
        if i and lam[i - 1] == lam[i]:
            low = max(low, prefix[-1] - s[i - 1] + s[i])
        for r in range(low, bound + 1):
            prefix.append(r)
            extend(prefix)
            prefix.pop()

    extend([])
    return out
