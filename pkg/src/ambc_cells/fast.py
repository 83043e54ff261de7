"""Compiled kernels behind the exhaustive verification suites.

These mirror :mod:`ambc_cells.ambc` and :mod:`ambc_cells.rotations` on plain
arrays so that millions of windows can be checked on one core.  A window is
an ``int64`` array with ``ABSENT`` for missing entries; a stream inside a
window is a bitmask whose bit ``x - 1`` marks position ``x``.  Tableau rows
are encoded per letter: ``prow[v - 1]`` is the row of value residue ``v`` and
``qrow[x - 1]`` the row of position ``x``.

The pure-Python modules stay the reference; the test suite checks these
kernels against them.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .ambc import AmbcTriple
from .core import Window

ABSENT = -(1 << 62)


def to_array(w: Window) -> np.ndarray:
    return np.array([ABSENT if v is None else v for v in w.entries], dtype=np.int64)


def from_array(a: np.ndarray) -> Window:
    return Window(tuple(None if v == ABSENT else int(v) for v in a))


def mask_of(positions) -> int:
    m = 0
    for x in positions:
        m |= 1 << (x - 1)
    return m


def positions_of(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(n) if mask >> i & 1)


def encode_triple(t: AmbcTriple, n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    prow = np.empty(n, np.int64)
    qrow = np.empty(n, np.int64)
    for i, row in enumerate(t.p):
        for v in row:
            prow[v - 1] = i
    for i, row in enumerate(t.q):
        for x in row:
            qrow[x - 1] = i
    return prow, qrow, np.array(t.rho, dtype=np.int64)


def decode_triple(prow: np.ndarray, qrow: np.ndarray, rho: np.ndarray, l: int) -> AmbcTriple:
    n = len(prow)
    p = tuple(tuple(v + 1 for v in range(n) if prow[v] == i) for i in range(l))
    q = tuple(tuple(x + 1 for x in range(n) if qrow[x] == i) for i in range(l))
    return AmbcTriple(p, q, tuple(int(r) for r in rho[:l]))


# -- streams and channels ------------------------------------------------------


@njit(cache=True)
def popcount(m):
    c = 0
    while m:
        m &= m - 1
        c += 1
    return c


@njit(cache=True)
def present_mask(w):
    m = 0
    for i in range(w.shape[0]):
        if w[i] != ABSENT:
            m |= 1 << i
    return m


@njit(cache=True)
def is_stream(w, mask):
    n = w.shape[0]
    first = ABSENT
    last = ABSENT
    for i in range(n):
        if mask >> i & 1:
            v = w[i]
            if v == ABSENT:
                return False
            if first == ABSENT:
                first = v
            elif v <= last:
                return False
            last = v
    return first == ABSENT or last < first + n


@njit(cache=True)
def channels(w):
    """Width and the masks of all maximal-density streams."""
    n = w.shape[0]
    present = present_mask(w)
    out = np.empty(1 << n, np.int64)
    width = 0
    count = 0
    sub = present
    while sub:
        c = popcount(sub)
        if c >= width and is_stream(w, sub):
            if c > width:
                width = c
                count = 0
            out[count] = sub
            count += 1
        sub = (sub - 1) & present
    return width, out[:count].copy()


@njit(cache=True)
def _ball_sw_of(x, y, w, d):
    n = w.shape[0]
    for i in range(n):
        if d >> i & 1:
            xd = i + 1
            yd = w[i]
            if -((yd - y) // n) <= (x - xd) // n:
                return True
    return False


@njit(cache=True)
def sw_leq(w, c, d):
    for i in range(w.shape[0]):
        if c >> i & 1:
            if not _ball_sw_of(i + 1, w[i], w, d):
                return False
    return True


@njit(cache=True)
def sw_min(w, masks):
    for c in masks:
        ok = True
        for d in masks:
            if not sw_leq(w, c, d):
                ok = False
                break
        if ok:
            return c
    return -1


@njit(cache=True)
def ne_max(w, masks):
    for c in masks:
        ok = True
        for d in masks:
            if not sw_leq(w, d, c):
                ok = False
                break
        if ok:
            return c
    return -1


# -- numberings ---------------------------------------------------------------


@njit(cache=True)
def numbering(w, seed, r):
    """Normalized longest-path numbering seeded by the proper numbering of ``seed``."""
    n = w.shape[0]
    labels = np.full(n, ABSENT, np.int64)
    j = 0
    for i in range(n):
        if seed >> i & 1:
            labels[i] = j
            j += 1
    settled = False
    for _ in range(n * n + 2):
        changed = False
        for a in range(n):
            if labels[a] == ABSENT:
                continue
            for b in range(n):
                if w[b] == ABSENT:
                    continue
                t = min((b - a - 1) // n, (w[b] - w[a] - 1) // n)
                cand = labels[a] + t * r + 1
                if labels[b] == ABSENT or cand > labels[b]:
                    labels[b] = cand
                    changed = True
        if not changed:
            settled = True
            break
    if not settled:
        raise RuntimeError("longest-path labels did not settle")
    low = ABSENT
    for i in range(n):
        if w[i] != ABSENT:
            if labels[i] == ABSENT:
                raise RuntimeError("unreached ball")
            if low == ABSENT or labels[i] < low:
                low = labels[i]
    for i in range(n):
        if w[i] != ABSENT:
            labels[i] -= low
    return labels


@njit(cache=True)
def is_monotone(w, labels, r):
    """Strict increase along paths on a three-period slab."""
    n = w.shape[0]
    for a in range(n):
        if w[a] == ABSENT:
            continue
        for b in range(n):
            if w[b] == ABSENT:
                continue
            for ta in range(-1, 2):
                for tb in range(-1, 2):
                    if a + 1 + ta * n < b + 1 + tb * n and w[a] + ta * n < w[b] + tb * n:
                        if not labels[a] + ta * r < labels[b] + tb * r:
                            return False
    return True


@njit(cache=True)
def _fold(arr, x, y):
    n = arr.shape[0]
    k = (x - 1) // n
    r = (x - 1) % n
    if arr[r] != ABSENT:
        raise RuntimeError("two balls in one column class")
    arr[r] = y - k * n


@njit(cache=True)
def _class_balls(w, labels, r, m, xs, ys):
    """Balls labelled exactly ``m`` (``0 <= m < r``), sorted by decreasing x."""
    n = w.shape[0]
    k = 0
    for i in range(n):
        if w[i] == ABSENT:
            continue
        d = labels[i]
        t = -(d // r)
        if d + t * r != m:
            continue
        xs[k] = i + 1 + t * n
        ys[k] = w[i] + t * n
        k += 1
    # insertion sort, x descending
    for a in range(1, k):
        xa = xs[a]
        ya = ys[a]
        b = a - 1
        while b >= 0 and xs[b] < xa:
            xs[b + 1] = xs[b]
            ys[b + 1] = ys[b]
            b -= 1
        xs[b + 1] = xa
        ys[b + 1] = ya
    return k


@njit(cache=True)
def forward_step(w):
    n = w.shape[0]
    width, masks = channels(w)
    fw = np.full(n, ABSENT, np.int64)
    st = np.full(n, ABSENT, np.int64)
    if width == 0:
        return fw, st
    c = sw_min(w, masks)
    labels = numbering(w, c, width)
    xs = np.empty(n, np.int64)
    ys = np.empty(n, np.int64)
    for m in range(width):
        k = _class_balls(w, labels, width, m, xs, ys)
        for q in range(k - 1):
            if not ys[q] < ys[q + 1]:
                raise RuntimeError("zigzag is not monotone")
            _fold(fw, xs[q], ys[q + 1])
        _fold(st, xs[k - 1], ys[0])
    return fw, st


@njit(cache=True)
def phi(w):
    """Row of each value residue, row of each position, weights, row count."""
    n = w.shape[0]
    prow = np.full(n, -1, np.int64)
    qrow = np.full(n, -1, np.int64)
    rho = np.zeros(n, np.int64)
    cur = w.copy()
    l = 0
    while present_mask(cur):
        fw, st = forward_step(cur)
        for i in range(n):
            v = st[i]
            if v != ABSENT:
                qrow[i] = l
                prow[(v - 1) % n] = l
                rho[l] += (v - 1) // n
        l += 1
        cur = fw
    return prow, qrow, rho, l


@njit(cache=True)
def shape_of(prow, l):
    sh = np.zeros(l, np.int64)
    for v in range(prow.shape[0]):
        sh[prow[v]] += 1
    return sh


# -- backward step and psi ----------------------------------------------------


@njit(cache=True)
def backward_numbering(w, s, reverse):
    n = w.shape[0]
    k = 0
    sy = np.empty(n, np.int64)
    sv = np.empty(n, np.int64)
    for i in range(n):
        if s[i] != ABSENT:
            sy[k] = i + 1
            sv[k] = s[i]
            k += 1
    labels = np.full(n, ABSENT, np.int64)
    for i in range(n):
        if w[i] == ABSENT:
            continue
        best = ABSENT
        for j in range(k):
            t = min((i + 1 - sy[j] - 1) // n, (w[i] - sv[j] - 1) // n)
            cand = j + t * k
            if best == ABSENT or cand > best:
                best = cand
        labels[i] = best
    first = np.zeros((n, n), np.int64)
    for a in range(n):
        for b in range(n):
            if w[a] != ABSENT and w[b] != ABSENT:
                first[a, b] = max((a - b) // n + 1, (w[a] - w[b]) // n + 1)
    cap = 4 * n * n * (k + 2) + 64
    for _ in range(cap):
        chosen = -1
        for step in range(n):
            a = n - 1 - step if reverse else step
            if w[a] == ABSENT:
                continue
            viol = False
            for b in range(n):
                if w[b] != ABSENT and labels[a] >= labels[b] + first[a, b] * k:
                    viol = True
                    break
            if not viol:
                continue
            blocked = False
            for c in range(n):
                if w[c] != ABSENT and labels[c] - first[c, a] * k >= labels[a]:
                    blocked = True
                    break
            if blocked:
                continue
            chosen = a
            break
        if chosen < 0:
            for a in range(n):
                for b in range(n):
                    if w[a] != ABSENT and w[b] != ABSENT:
                        if labels[a] >= labels[b] + first[a, b] * k:
                            raise RuntimeError("no ball can be lowered")
            return labels, k
        labels[chosen] -= 1
    raise RuntimeError("backward numbering did not settle")


@njit(cache=True)
def bk(w, s, reverse):
    n = w.shape[0]
    out = np.full(n, ABSENT, np.int64)
    if present_mask(w) == 0:
        for i in range(n):
            out[i] = s[i]
        return out
    labels, k = backward_numbering(w, s, reverse)
    xs = np.empty(n, np.int64)
    ys = np.empty(n, np.int64)
    m = 0
    for i in range(n):
        if s[i] == ABSENT:
            continue
        y = i + 1
        v = s[i]
        cnt = _class_balls(w, labels, k, m, xs, ys)
        if cnt == 0:
            _fold(out, y, v)
        else:
            for q in range(cnt - 1):
                if not ys[q] < ys[q + 1]:
                    raise RuntimeError("backward zigzag is not monotone")
                _fold(out, xs[q + 1], ys[q])
            _fold(out, xs[0], v)
            _fold(out, y, ys[cnt - 1])
        m += 1
    return out


@njit(cache=True)
def stream_from(qrow, prow, row, rho):
    """Stream on the positions of ``row`` with its value residues and altitude ``rho``."""
    n = qrow.shape[0]
    ps = np.empty(n, np.int64)
    qs = np.empty(n, np.int64)
    k = 0
    for x in range(n):
        if qrow[x] == row:
            ps[k] = x + 1
            k += 1
    k2 = 0
    for v in range(n):
        if prow[v] == row:
            qs[k2] = v + 1
            k2 += 1
    if k != k2 or k == 0:
        raise RuntimeError("rows do not pair up")
    s = np.full(n, ABSENT, np.int64)
    for j in range(k):
        idx = j + rho
        s[ps[j] - 1] = qs[idx % k] + n * (idx // k)
    return s


@njit(cache=True)
def psi(prow, qrow, rho, l, reverse=False):
    n = prow.shape[0]
    w = np.full(n, ABSENT, np.int64)
    for row in range(l - 1, -1, -1):
        w = bk(w, stream_from(qrow, prow, row, rho[row]), reverse)
    return w


# -- rotations ------------------------------------------------------------------


@njit(cache=True)
def pr(w, mask):
    n = w.shape[0]
    out = w.copy()
    first = -1
    prev = -1
    for i in range(n):
        if mask >> i & 1:
            if first < 0:
                first = i
            else:
                out[prev] = w[i]
            prev = i
    out[prev] = w[first] + n
    return out


@njit(cache=True)
def ipr(w, mask):
    n = w.shape[0]
    out = w.copy()
    first = -1
    prev = -1
    for i in range(n):
        if mask >> i & 1:
            if first < 0:
                first = i
            else:
                out[i] = w[prev]
            prev = i
    out[first] = w[prev] - n
    return out


# -- rivers and the canonical channel sequence ------------------------------------


@njit(cache=True)
def distance(w, c1, c2, r):
    """``h(c1, c2)``; ``-1`` if the offset depends on the ball."""
    n = w.shape[0]
    d1 = numbering(w, c1, r)
    d2 = numbering(w, c2, r)
    shift = ABSENT
    for i in range(n):
        if c1 >> i & 1:
            s = d1[i] - d2[i]
            if shift == ABSENT:
                shift = s
            elif s != shift:
                return -1
    gap = -1
    for i in range(n):
        if c2 >> i & 1:
            g = abs(d2[i] + shift - d1[i])
            if gap < 0:
                gap = g
            elif g != gap:
                return -1
    return gap


@njit(cache=True)
def rivers(w):
    """Channel masks, river id of each, and whether each is its river's NE / SW channel."""
    n = w.shape[0]
    width, masks = channels(w)
    c = masks.shape[0]
    labels = np.empty((c, n), np.int64)
    for a in range(c):
        labels[a] = numbering(w, masks[a], width)
    rid = np.full(c, -1, np.int64)
    nr = 0
    for a in range(c):
        if rid[a] >= 0:
            continue
        rid[a] = nr
        for b in range(a + 1, c):
            if rid[b] < 0:
                same = True
                for i in range(n):
                    if labels[a, i] != labels[b, i]:
                        same = False
                        break
                if same:
                    rid[b] = nr
        nr += 1
    is_ne = np.zeros(c, np.bool_)
    is_sw = np.zeros(c, np.bool_)
    for river in range(nr):
        members = masks[rid == river]
        ne = ne_max(w, members)
        sw = sw_min(w, members)
        for a in range(c):
            if masks[a] == ne:
                is_ne[a] = True
            if masks[a] == sw:
                is_sw[a] = True
    return width, masks, rid, is_ne, is_sw


@njit(cache=True)
def canonical_channels(w):
    """Masks of the canonical sequence, the greedy picks it came from, and the
    (exclusive) end of each river block."""
    n = w.shape[0]
    width, masks, rid, is_ne, is_sw = rivers(w)
    picks = np.empty(n, np.int64)
    m = 0
    rest = w.copy()
    while True:
        wd, cands = channels(rest)
        if wd < width or wd == 0:
            break
        c = sw_min(rest, cands)
        picks[m] = c
        m += 1
        for i in range(n):
            if c >> i & 1:
                rest[i] = ABSENT
    pick_rid = np.empty(m, np.int64)
    for a in range(m):
        pick_rid[a] = -1
        for b in range(masks.shape[0]):
            if masks[b] == picks[a]:
                pick_rid[a] = rid[b]
        if pick_rid[a] < 0:
            raise RuntimeError("greedy pick is not a channel")
    greedy = picks[:m].copy()
    breaks = np.empty(m, np.int64)
    nb = 0
    for a in range(m):
        if a + 1 == m or pick_rid[a + 1] != pick_rid[a]:
            breaks[nb] = a + 1
            nb += 1
            for b in range(masks.shape[0]):
                if rid[b] == pick_rid[a] and is_ne[b]:
                    picks[a] = masks[b]
    return picks[:m].copy(), greedy, breaks[:nb].copy(), width


# -- Greene-Kleitman oracle -------------------------------------------------------


@njit(cache=True)
def greene_kleitman_bruteforce(w):
    """Partition parts (zero-padded to ``n``) from the largest ``k``-antichain unions."""
    n = w.shape[0]
    pos = np.empty(n, np.int64)
    m = 0
    for i in range(n):
        if w[i] != ABSENT:
            pos[m] = i
            m += 1
    less = np.zeros((m, m), np.bool_)
    below = np.zeros(m, np.int64)
    for a in range(m):
        for b in range(m):
            i = pos[a]
            j = pos[b]
            if (i > j and w[i] < w[j]) or w[j] > w[i] + n:
                less[a, b] = True
                below[b] += 1
    order = np.argsort(below, kind="mergesort")
    best = np.zeros(m + 1, np.int64)
    height = np.zeros(m, np.int64)
    for mask in range(1 << m):
        h = 0
        size = 0
        for oi in range(m):
            a = order[oi]
            if not mask >> a & 1:
                continue
            size += 1
            ha = 1
            for oj in range(oi):
                b = order[oj]
                if mask >> b & 1 and less[b, a] and height[b] + 1 > ha:
                    ha = height[b] + 1
            height[a] = ha
            if ha > h:
                h = ha
        for k in range(h, m + 1):
            if size > best[k]:
                best[k] = size
    parts = np.zeros(n, np.int64)
    for k in range(1, m + 1):
        parts[k - 1] = best[k] - best[k - 1]
    return parts


# -- batch checks: one (P, Q) pair, many weights ---------------------------------
#
# Each returns one status code per row of ``rhos``; 0 means the check held.


@njit(cache=True)
def _same_triple(prow, qrow, rho, l, prow2, qrow2, rho2, l2):
    if l != l2:
        return False
    for i in range(prow.shape[0]):
        if prow[i] != prow2[i] or qrow[i] != qrow2[i]:
            return False
    for i in range(l):
        if rho[i] != rho2[i]:
            return False
    return True


@njit(cache=True)
def roundtrip_batch(prow, qrow, rhos, l):
    """1: image not total, 2: phi(psi(t)) != t."""
    out = np.zeros(rhos.shape[0], np.int64)
    for k in range(rhos.shape[0]):
        w = psi(prow, qrow, rhos[k], l)
        if present_mask(w) != (1 << w.shape[0]) - 1:
            out[k] = 1
            continue
        p2, q2, r2, l2 = phi(w)
        if not _same_triple(prow, qrow, rhos[k], l, p2, q2, r2, l2):
            out[k] = 2
    return out


@njit(cache=True)
def gk_batch(prow, qrow, rhos, l):
    """1: brute-force partition differs from the shape of phi."""
    n = prow.shape[0]
    out = np.zeros(rhos.shape[0], np.int64)
    for k in range(rhos.shape[0]):
        w = psi(prow, qrow, rhos[k], l)
        p2, q2, r2, l2 = phi(w)
        sh = shape_of(p2, l2)
        gk = greene_kleitman_bruteforce(w)
        for i in range(n):
            expect = sh[i] if i < l2 else 0
            if gk[i] != expect:
                out[k] = 1
                break
    return out


@njit(cache=True)
def distances_batch(prow, qrow, rhos, l, s, lam):
    """Bit flags: 1 sequence length, 2 distance law, 4 river blocks,
    8 triangle law, 16 missing extremal channel, 32 ill-defined distance."""
    out = np.zeros(rhos.shape[0], np.int64)
    mult = 0
    for i in range(l):
        if lam[i] == lam[0]:
            mult += 1
    for k in range(rhos.shape[0]):
        rho = rhos[k]
        w = psi(prow, qrow, rho, l)
        picks, greedy, breaks, width = canonical_channels(w)
        flag = 0
        m = picks.shape[0]
        if m != mult:
            out[k] = 1
            continue
        for i in range(m - 1):
            h = distance(w, picks[i], picks[i + 1], width)
            if h < 0:
                flag |= 32
            elif h != (rho[i + 1] - s[i + 1]) - (rho[i] - s[i]):
                flag |= 2
        nb = 0
        for i in range(m):
            end = i + 1 == m or rho[i + 1] - s[i + 1] != rho[i] - s[i]
            if end:
                if nb >= breaks.shape[0] or breaks[nb] != i + 1:
                    flag |= 4
                nb += 1
        if nb != breaks.shape[0]:
            flag |= 4
        wd, masks = channels(w)
        if sw_min(w, masks) < 0 or ne_max(w, masks) < 0:
            flag |= 16
        c = masks.shape[0]
        hs = np.empty((c, c), np.int64)
        for a in range(c):
            for b in range(c):
                hs[a, b] = distance(w, masks[a], masks[b], wd)
                if hs[a, b] < 0:
                    flag |= 32
        for a in range(c):
            for b in range(c):
                for e in range(c):
                    h12 = hs[a, b]
                    h23 = hs[b, e]
                    h13 = hs[a, e]
                    if h13 > h12 + h23:
                        flag |= 8
                    chain = sw_leq(w, masks[a], masks[b]) and sw_leq(w, masks[b], masks[e])
                    if (h12 == 0 or h23 == 0 or chain) and h13 != h12 + h23:
                        flag |= 8
        out[k] = flag
    return out


@njit(cache=True)
def _same_cell(w2, l, lam):
    p2, q2, r2, l2 = phi(w2)
    if l2 != l:
        return False
    sh = shape_of(p2, l2)
    for i in range(l):
        if sh[i] != lam[i]:
            return False
    return True


@njit(cache=True)
def rho_batch(prow, qrow, rhos, l, lam):
    """Bit flags: 1 proper pr changes phi wrongly, 2 proper ipr changes phi
    wrongly, 4 improper pr stays in the cell, 8 improper ipr stays in the cell,
    16 a river is missing from the canonical sequence or its SW channel is not
    the greedy pick at its block start."""
    out = np.zeros(rhos.shape[0], np.int64)
    for k in range(rhos.shape[0]):
        rho = rhos[k]
        w = psi(prow, qrow, rho, l)
        width, masks, rid, is_ne, is_sw = rivers(w)
        picks, greedy, breaks, wd = canonical_channels(w)
        m = picks.shape[0]
        first = np.full(masks.shape[0], -1, np.int64)
        last = np.full(masks.shape[0], -1, np.int64)
        for i in range(m):
            for b in range(masks.shape[0]):
                if masks[b] == picks[i]:
                    river = rid[b]
                    if first[river] < 0:
                        first[river] = i
                    last[river] = i
        flag = 0
        expect = rho.copy()
        for a in range(masks.shape[0]):
            c = masks[a]
            river = rid[a]
            w2 = pr(w, c)
            if is_ne[a]:
                if last[river] < 0 or picks[last[river]] != c:
                    flag |= 16
                else:
                    p2, q2, r2, l2 = phi(w2)
                    expect[:] = rho
                    expect[last[river]] += 1
                    if not _same_triple(prow, qrow, expect, l, p2, q2, r2, l2):
                        flag |= 1
            elif _same_cell(w2, l, lam):
                flag |= 4
            w3 = ipr(w, c)
            if is_sw[a]:
                if first[river] < 0 or greedy[first[river]] != c:
                    flag |= 16
                else:
                    p3, q3, r3, l3 = phi(w3)
                    expect[:] = rho
                    expect[first[river]] -= 1
                    if not _same_triple(prow, qrow, expect, l, p3, q3, r3, l3):
                        flag |= 2
            elif _same_cell(w3, l, lam):
                flag |= 8
        out[k] = flag
    return out


@njit(cache=True)
def numbering_batch(prow, qrow, rhos, l):
    """Bit flags: 1 backward numbering depends on scan order, 2 a backward
    numbering is not monotone, 4 a channel numbering is not monotone."""
    n = prow.shape[0]
    out = np.zeros(rhos.shape[0], np.int64)
    for k in range(rhos.shape[0]):
        rho = rhos[k]
        flag = 0
        w = np.full(n, ABSENT, np.int64)
        for row in range(l - 1, -1, -1):
            s = stream_from(qrow, prow, row, rho[row])
            if present_mask(w):
                d1, kk = backward_numbering(w, s, False)
                d2, kk2 = backward_numbering(w, s, True)
                for i in range(n):
                    if d1[i] != d2[i]:
                        flag |= 1
                if not is_monotone(w, d1, kk):
                    flag |= 2
            w = bk(w, s, False)
        width, masks = channels(w)
        for c in masks:
            if not is_monotone(w, numbering(w, c, width), width):
                flag |= 4
        out[k] = flag
    return out


@njit(cache=True)
def _swap(w, i):
    """Swap the entries at ``i`` and ``i + 1`` (1-based, periodic)."""
    n = w.shape[0]
    i = (i - 1) % n + 1
    out = w.copy()
    a = w[i - 1]
    j = i + 1
    b = w[(j - 1) % n] + ((j - 1) // n) * n
    out[i - 1] = b
    jr = (j - 1) % n
    out[jr] = a - (j - 1 - jr)
    return out


@njit(cache=True)
def _at(w, x):
    n = w.shape[0]
    return w[(x - 1) % n] + ((x - 1) // n) * n


@njit(cache=True)
def star_centered(w, p):
    """Returns ``(defined, result)``."""
    if w.shape[0] < 3:
        return False, w
    before = _at(w, p - 1)
    here = _at(w, p)
    after = _at(w, p + 1)
    if min(here, after) < before < max(here, after):
        return True, _swap(w, p)
    if min(before, here) < after < max(before, here):
        return True, _swap(w, p - 1)
    return False, w


@njit(cache=True)
def omega_right(w):
    n = w.shape[0]
    out = np.empty(n, np.int64)
    for k in range(n):
        out[k] = _at(w, k + 2)
    return out


@njit(cache=True)
def _proper(w, c, inverse):
    width, masks, rid, is_ne, is_sw = rivers(w)
    for a in range(masks.shape[0]):
        if masks[a] == c:
            return is_sw[a] if inverse else is_ne[a]
    return False


@njit(cache=True)
def diamond_batch(prow, qrow, rhos, l):
    """Counts completed squares; bit flags: 1 star undefined after rotation,
    2 completing channel not proper, 4 square does not close."""
    n = prow.shape[0]
    out = np.zeros(rhos.shape[0], np.int64)
    done = 0
    for k in range(rhos.shape[0]):
        w = psi(prow, qrow, rhos[k], l)
        picks, greedy, breaks, width = canonical_channels(w)
        flag = 0
        for mode in range(4):
            inverse = mode % 2 == 1
            use_omega = mode >= 2
            for p in range(1, n + 1):
                if use_omega:
                    if p > 1:
                        break
                    ok = True
                    w_star = omega_right(w)
                else:
                    ok, w_star = star_centered(w, p)
                if not ok:
                    continue
                seq = greedy if inverse else picks
                star_picks = np.empty(0, np.int64)
                have = False
                for q in range(seq.shape[0]):
                    c = seq[q]
                    if not _proper(w, c, inverse):
                        continue
                    if not have:
                        sp, sg, b2, w2 = canonical_channels(w_star)
                        star_picks = sg if inverse else sp
                        have = True
                    w_tilde = ipr(w, c) if inverse else pr(w, c)
                    if use_omega:
                        ok2 = True
                        w_tilde_star = omega_right(w_tilde)
                    else:
                        ok2, w_tilde_star = star_centered(w_tilde, p)
                    if not ok2:
                        flag |= 1
                        continue
                    done += 1
                    if q >= star_picks.shape[0]:
                        flag |= 2
                        continue
                    c_star = star_picks[q]
                    if not _proper(w_star, c_star, inverse):
                        flag |= 2
                    closed = ipr(w_star, c_star) if inverse else pr(w_star, c_star)
                    for i in range(n):
                        if closed[i] != w_tilde_star[i]:
                            flag |= 4
                            break
        out[k] = flag
    return out, done


@njit(cache=True)
def rotation_neighbors(w, prow, qrow, l):
    """Weights of every pr / ipr image of ``w`` over a sub-stream that keeps ``P`` and ``Q``."""
    n = w.shape[0]
    full = (1 << n) - 1
    out = np.empty((2 * (1 << n), l), np.int64)
    cnt = 0
    for mask in range(1, full + 1):
        if not is_stream(w, mask):
            continue
        for inverse in range(2):
            w2 = ipr(w, mask) if inverse else pr(w, mask)
            p2, q2, r2, l2 = phi(w2)
            if l2 != l:
                continue
            same = True
            for i in range(n):
                if p2[i] != prow[i] or q2[i] != qrow[i]:
                    same = False
                    break
            if same:
                out[cnt] = r2[:l]
                cnt += 1
    return out[:cnt].copy()
