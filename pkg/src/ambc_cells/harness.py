"""Bounded exhaustive verification suites.

Every enumeration item is a dominant triple ``(P, Q, rho)`` with
``|rho_i| <= B`` together with its image under ``psi``.  Heavy suites run
on the compiled kernels in :mod:`ambc_cells.fast`; any failure they report
is re-checked with the pure-Python reference before it is reported.
"""

from __future__ import annotations

import json
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from . import fast
from .ambc import (
    AmbcTriple,
    canonical_channels,
    channel_distance,
    dominant_weights,
    find_channels,
    greene_kleitman,
    greene_kleitman_bruteforce,
    phi,
    psi,
    symmetrized_offset,
)
from .core import AmbcError, Window, restrict, dominates, format_tabloid, format_window, partitions, rsyt, shape
from .group import left_star, omega_left
from .rotations import diamond_complete, diamond_holds, ipr, is_proper_ipr, is_proper_pr, pr
from .sign import build_w_TN, sign_insert
from .tableaux import act, crystal_reflection, r_matrix, rsk, rsk_inverse, theta, upsilon_classes

MAX_N = 6
MAX_DETAILS = 25


class TooLarge(AmbcError, ValueError):
    pass


class UnknownSuite(AmbcError, ValueError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    """``samples > 0`` switches suites that support it to seeded random inputs."""

    n: int
    rho_bound: int = 2
    lambda_filter: Optional[tuple[int, ...]] = None
    seed: int = 0
    jobs: int = 1
    samples: int = 0
    margin: int = 1
    force: bool = False


@dataclass
class VerifyReport:
    suite: str
    spec: dict
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def fail(self, **provenance) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_DETAILS:
            self.failures.append(provenance)

    def merge(self, other: "VerifyReport") -> None:
        self.instances += other.instances
        self.failure_count += other.failure_count
        room = MAX_DETAILS - len(self.failures)
        self.failures.extend(other.failures[: max(room, 0)])
        self.notes.extend(other.notes)

    def to_json(self, timing: bool = False) -> str:
        data = {
            "suite": self.suite,
            "spec": self.spec,
            "instances": self.instances,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "notes": self.notes,
        }
        if timing:
            data["seconds"] = round(self.seconds, 3)
        return json.dumps(data, sort_keys=True)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{self.failure_count} failures"
        return f"{self.suite}: {self.instances} instances, {status} ({self.seconds:.1f}s)"


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class Cell:
    """One ``(P, Q)`` pair with its dominant weights."""

    lam: tuple[int, ...]
    p: tuple
    q: tuple
    weights: tuple[tuple[int, ...], ...]

    def triples(self) -> Iterator[AmbcTriple]:
        for rho in self.weights:
            yield AmbcTriple(self.p, self.q, rho)

    def arrays(self):
        n = sum(self.lam)
        l = len(self.lam)
        prow, qrow, _ = fast.encode_triple(AmbcTriple(self.p, self.q, (0,) * l), n)
        rhos = np.array(self.weights, dtype=np.int64).reshape(-1, l)
        return prow, qrow, rhos, l


def _check_size(spec: EnumerationSpec) -> None:
    if spec.n < 1:
        raise ValueError(f"n must be positive, got {spec.n}")
    if spec.n > MAX_N and not spec.force:
        raise TooLarge(f"n = {spec.n} exceeds {MAX_N}; pass force to run anyway")


def shapes(spec: EnumerationSpec) -> list[tuple[int, ...]]:
    if spec.lambda_filter is not None:
        lam = tuple(spec.lambda_filter)
        if sum(lam) != spec.n:
            raise ValueError(f"{lam} is not a partition of {spec.n}")
        return [lam]
    return list(partitions(spec.n))


def cells(spec: EnumerationSpec) -> Iterator[Cell]:
    _check_size(spec)
    weights: dict = {}
    for lam in shapes(spec):
        tabs = list(rsyt(lam))
        for p in tabs:
            for q in tabs:
                key = (lam, symmetrized_offset(p, q))
                if key not in weights:
                    weights[key] = tuple(dominant_weights(p, q, spec.rho_bound))
                yield Cell(lam, p, q, weights[key])


def enumerate_cells(spec: EnumerationSpec) -> Iterator[tuple[Window, AmbcTriple]]:
    """Every dominant triple within bounds, paired with its ``psi`` image."""
    for cell in cells(spec):
        prow, qrow, rhos, l = cell.arrays()
        for rho, t in zip(rhos, cell.triples()):
            yield fast.from_array(fast.psi(prow, qrow, rho, l)), t


def random_windows(n: int, count: int, seed: int, spread: int = 2) -> list[Window]:
    """Seeded total windows: a random residue permutation with shifts in ``[-spread, spread]``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        out.append(Window(tuple(v + n * rng.randint(-spread, spread) for v in perm)))
    return out


def _triple_json(t: AmbcTriple) -> dict:
    return {"p": format_tabloid(t.p), "q": format_tabloid(t.q), "rho": list(t.rho)}


# -- kernel-backed suites -----------------------------------------------------
#
# A kernel maps one cell to a status code per weight; ``_explain`` turns a
# nonzero code into reasons using the reference implementation.


def _reference_reasons(suite: str, t: AmbcTriple) -> list[str]:
    """Recompute one item with the pure-Python modules."""
    n = sum(len(r) for r in t.p)
    reasons = []
    w = psi(t, n)
    if suite == "roundtrip":
        if not w.is_total:
            reasons.append("psi image is not total")
        elif phi(w) != t:
            reasons.append(f"phi(psi(t)) = {phi(w)}")
    elif suite == "gk-oracle":
        if greene_kleitman(w) != greene_kleitman_bruteforce(w):
            reasons.append(f"shape {greene_kleitman(w)} vs oracle {greene_kleitman_bruteforce(w)}")
    elif suite == "distances":
        seq = canonical_channels(w)
        s = symmetrized_offset(t.p, t.q)
        dot = [r - x for r, x in zip(t.rho, s)]
        for i in range(len(seq) - 1):
            h = channel_distance(w, seq[i], seq[i + 1])
            if h != dot[i + 1] - dot[i]:
                reasons.append(f"h(C{i + 1},C{i + 2}) = {h}")
    elif suite in ("rho-theorem", "nesw"):
        lam = shape(t.p)
        for c in find_channels(w):
            for rot, proper in ((pr, is_proper_pr), (ipr, is_proper_ipr)):
                image = phi(rot(w, c))
                same = shape(image.p) == lam
                if suite == "nesw" and same != proper(w, c):
                    reasons.append(f"{rot.__name__} on {c}: same cell {same}, proper {proper(w, c)}")
                if suite == "rho-theorem" and proper(w, c) and (image.p, image.q) != (t.p, t.q):
                    reasons.append(f"{rot.__name__} on {c} moved P or Q")
    elif suite in ("monotonicity", "bk-order"):
        if psi(t, n, order="reverse") != w:
            reasons.append("scan orders disagree")
    elif suite == "diamond":
        seq = canonical_channels(w)
        for inverse in (False, True):
            for p in range(1, n + 1):
                for q in range(1, len(seq) + 1):
                    try:
                        d = diamond_complete(w, p, q, inverse=inverse)
                    except AmbcError:
                        continue
                    if not diamond_holds(d, inverse=inverse):
                        reasons.append(f"square at p={p}, q={q}, inverse={inverse} does not close")
    return reasons


FLAG_TEXT = {
    "roundtrip": {1: "psi image is not total", 2: "phi(psi(t)) != t"},
    "gk-oracle": {1: "shape differs from the antichain oracle"},
    "distances": {
        1: "canonical sequence has the wrong length",
        2: "adjacent distance differs from the reduced weight gap",
        4: "river blocks differ from equal reduced-weight blocks",
        8: "triangle or additivity law fails",
        16: "no southwest-minimal or northeast-maximal channel",
        32: "channel distance is not a constant offset",
    },
    "rho-theorem": {
        1: "proper rotation did not add e_r",
        2: "proper inverse rotation did not subtract e_r'",
        16: "a river is missing from the canonical sequence",
    },
    "nesw": {4: "improper rotation stayed in the cell", 8: "improper inverse rotation stayed in the cell"},
    "bk-order": {1: "backward numbering depends on the scan order"},
    "monotonicity": {2: "a backward numbering is not monotone", 4: "a channel numbering is not monotone"},
    "diamond": {1: "star move undefined after rotation", 2: "completing channel is not proper", 4: "square does not close"},
}

FLAG_MASK = {
    "rho-theorem": 1 | 2 | 16,
    "nesw": 4 | 8,
    "bk-order": 1,
    "monotonicity": 2 | 4,
}


def _kernel_for(suite: str) -> Callable:
    if suite == "roundtrip":
        return lambda cell, a: fast.roundtrip_batch(*a)
    if suite == "gk-oracle":
        return lambda cell, a: fast.gk_batch(*a)
    if suite == "distances":
        return lambda cell, a: fast.distances_batch(
            *a,
            np.array(symmetrized_offset(cell.p, cell.q), dtype=np.int64),
            np.array(cell.lam, dtype=np.int64),
        )
    if suite in ("rho-theorem", "nesw"):
        return lambda cell, a: fast.rho_batch(*a, np.array(cell.lam, dtype=np.int64))
    if suite in ("bk-order", "monotonicity"):
        return lambda cell, a: fast.numbering_batch(*a)
    if suite == "diamond":
        return lambda cell, a: fast.diamond_batch(*a)[0]
    raise UnknownSuite(suite)


def _describe(suite: str, code: int) -> list[str]:
    return [text for bit, text in FLAG_TEXT[suite].items() if code & bit]


# suites reading different bits of one kernel; the partner reuses the codes once
SHARED_KERNEL = {"rho-theorem": "rho", "nesw": "rho", "bk-order": "numbering", "monotonicity": "numbering"}
_shared_codes: dict = {}


def _kernel_codes(suite: str, cell: Cell, rep: VerifyReport) -> list[int]:
    key = (SHARED_KERNEL.get(suite), cell)
    if key[0] is not None and key in _shared_codes:
        owner, codes = _shared_codes[key]
        if owner != suite:
            del _shared_codes[key]
            return codes
    kernel = _kernel_for(suite)
    a = cell.arrays()
    try:
        codes = [int(c) for c in kernel(cell, a)]
    except Exception:
        codes = []
        prow, qrow, rhos, l = a
        for k in range(len(rhos)):
            try:
                codes.append(int(kernel(cell, (prow, qrow, rhos[k : k + 1], l))[0]))
            except Exception as exc:
                codes.append(-1)
                rep.notes.append(f"kernel raised {type(exc).__name__}: {exc}")
    if key[0] is not None:
        _shared_codes[key] = (suite, codes)
    return codes


def _run_cell(suite: str, cell: Cell) -> VerifyReport:
    rep = VerifyReport(suite, {})
    if not cell.weights:
        return rep
    mask = FLAG_MASK.get(suite, -1)
    codes = _kernel_codes(suite, cell, rep)
    for t, code in zip(cell.triples(), codes):
        rep.instances += 1
        code = int(code) & mask if code >= 0 else -1
        if code == 0:
            continue
        try:
            reasons = _reference_reasons(suite, t)
        except Exception as exc:
            reasons = [f"reference raised {type(exc).__name__}: {exc}"]
        rep.fail(
            triple=_triple_json(t),
            window=format_window(fast.from_array(fast.psi(*cell.arrays()[:2], np.array(t.rho, dtype=np.int64), len(t.rho)))),
            kernel=_describe(suite, code) if code > 0 else ["kernel raised"],
            reference=reasons,
            confirmed=bool(reasons),
        )
    return rep


def _parallel_map(fn, items: list, jobs: int) -> Iterator:
    """Ordered map; the result order never depends on ``jobs``."""
    if jobs <= 1 or len(items) < 2:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs)))


class _CellTask:
    def __init__(self, suite: str) -> None:
        self.suite = suite

    def __call__(self, cell: Cell) -> VerifyReport:
        return _run_cell(self.suite, cell)


def _kernel_suite(suite: str, spec: EnumerationSpec, rep: VerifyReport) -> None:
    for part in _parallel_map(_CellTask(suite), list(cells(spec)), spec.jobs):
        rep.merge(part)


def _sampled_windows_suite(suite: str, spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Round trip or oracle agreement on seeded random windows of size ``n``."""
    for w in random_windows(spec.n, spec.samples, spec.seed):
        rep.instances += 1
        a = fast.to_array(w)
        prow, qrow, rho, l = fast.phi(a)
        if suite == "roundtrip":
            back = fast.psi(prow, qrow, rho, l)
            if not np.array_equal(back, a) and psi(phi(w), w.n) != w:
                rep.fail(window=format_window(w), reason="psi(phi(w)) != w")
        else:
            sh = [int(x) for x in fast.shape_of(prow, l)]
            oracle = [int(x) for x in fast.greene_kleitman_bruteforce(a) if x > 0]
            if sh != oracle and greene_kleitman(w) != greene_kleitman_bruteforce(w):
                rep.fail(window=format_window(w), shape=sh, oracle=oracle)


# -- python suites ------------------------------------------------------------


def _river_flags(w: Window) -> list[tuple[int, bool, bool]]:
    width, masks, rid, is_ne, is_sw = fast.rivers(fast.to_array(w))
    return [(int(m), bool(a), bool(b)) for m, a, b in zip(masks, is_ne, is_sw)]


def _restrict_mask(w: Window, mask: int) -> Window:
    return restrict(w, fast.positions_of(mask, w.n))


def _sgnq_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Sign words under left moves, proper rotations, and the sign word itself."""
    seen: dict = {}
    for w, t in enumerate_cells(spec):
        rep.instances += 1
        sp, sq = sign_insert(w)
        key = (sp, sq)
        if key in seen and seen[key] != w:
            rep.fail(window=format_window(w), other=format_window(seen[key]), reason="sign words collide")
        seen[key] = w
        # right stars and right shifts fix the value tableau
        if phi(Window(sp)).p != t.p:
            rep.fail(window=format_window(w), reason="sgn_P(w) and w have different P")
        moved = [("omega", omega_left(w, 1))]
        moved += [(f"left star {i}", left_star(w, i)) for i in range(1, w.n + 1)]
        for mask, ne, sw in _river_flags(w):
            c = _restrict_mask(w, mask)
            if ne:
                moved.append((f"pr on {c}", pr(w, c)))
            if sw:
                moved.append((f"ipr on {c}", ipr(w, c)))
        for name, v in moved:
            if v is not None and sign_insert(v)[1] != sq:
                rep.fail(window=format_window(w), move=name, reason="sgn_Q changed")
    _r_matrix_sign(spec, rep)


def _r_matrix_sign(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """``w_{T,N}`` and ``w_{R_i(T),N}`` share ``sgn_Q`` once ``N`` is large."""
    n = spec.n
    for l in range(2, min(n, 4) + 1):
        for alpha in product(range(n + 1), repeat=l):
            if sum(alpha) != n:
                continue
            for t in rsyt(alpha):
                for i in range(1, l):
                    rep.instances += 1
                    s = r_matrix(t, i)
                    for big_n in (2 * n, 4 * n):
                        if sign_insert(build_w_TN(t, big_n))[1] == sign_insert(build_w_TN(s, big_n))[1]:
                            if big_n != 2 * n:
                                rep.notes.append(f"R-matrix sign check for {format_tabloid(t)} needed N = {big_n}")
                            break
                    else:
                        rep.fail(tabloid=format_tabloid(t), i=i, reason="w_T,N and w_R(T),N differ in sgn_Q")


def _sample_cells(spec: EnumerationSpec) -> Iterator[tuple[Cell, list]]:
    """All cells, or ``samples`` seeded weights per ``(P, Q)`` pair when sampling."""
    rng = random.Random(spec.seed)
    for cell in cells(spec):
        weights = list(cell.weights)
        if spec.samples and len(weights) > spec.samples:
            weights = rng.sample(weights, spec.samples)
        yield cell, weights


def _blasiak_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Within each two-sided cell, ``sgn_Q`` is constant on ``Q``-slices and separates them."""
    by_shape: dict = defaultdict(lambda: defaultdict(set))
    if spec.samples:
        rep.notes.append(f"{spec.samples} sampled weights per (P, Q) pair, seed {spec.seed}")
    for cell, weights in _sample_cells(spec):
        prow, qrow, _, l = cell.arrays()
        for rho in weights:
            rep.instances += 1
            w = fast.from_array(fast.psi(prow, qrow, np.array(rho, dtype=np.int64), l))
            by_shape[cell.lam][cell.q].add(sign_insert(w)[1])
    for lam, slices in by_shape.items():
        owner: dict = {}
        for q, words in slices.items():
            if len(words) != 1:
                rep.fail(shape=list(lam), q=format_tabloid(q), words=sorted(map(list, words)), reason="Q-slice has several sign words")
            for word in words:
                if word in owner and owner[word] != q:
                    rep.fail(shape=list(lam), q=format_tabloid(q), other=format_tabloid(owner[word]), reason="two Q-slices share a sign word")
                owner[word] = q


def _connectivity_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Rotations over arbitrary sub-streams connect each ``(P, Q)`` fibre.

    Nodes are weights in the box widened by ``margin``; claims are made for
    the weights inside ``[-B, B]``, which must form one component.
    """
    outer = spec.rho_bound + spec.margin
    for cell in cells(EnumerationSpec(spec.n, outer, spec.lambda_filter, force=spec.force)):
        prow, qrow, _, l = cell.arrays()
        nodes = set(cell.weights)
        parent = {r: r for r in nodes}

        def find(r):
            while parent[r] != r:
                parent[r] = parent[parent[r]]
                r = parent[r]
            return r

        for rho in cell.weights:
            w = fast.psi(prow, qrow, np.array(rho, dtype=np.int64), l)
            for nb in fast.rotation_neighbors(w, prow, qrow, l):
                key = tuple(int(x) for x in nb)
                if key in nodes:
                    parent[find(key)] = find(rho)
        claimed = [r for r in cell.weights if all(abs(x) <= spec.rho_bound for x in r)]
        rep.instances += len(claimed)
        roots = {find(r) for r in claimed}
        if len(roots) > 1:
            groups = defaultdict(list)
            for r in claimed:
                groups[find(r)].append(list(r))
            rep.fail(
                p=format_tabloid(cell.p),
                q=format_tabloid(cell.q),
                components=len(roots),
                sample=[g[0] for g in groups.values()][:5],
                reason="interior weights are not connected",
            )


def _upsilon_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    from math import factorial

    n = spec.n
    classes = upsilon_classes(n, min(spec.rho_bound, 1))
    rep.instances = sum(len(v) for v in classes.values())
    if len(classes) != factorial(n):
        rep.fail(reason=f"{len(classes)} classes, expected {factorial(n)}")
    members = [t for ts in classes.values() for t in ts]
    if len(members) != len(set(members)):
        rep.fail(reason="a tableau lies in two classes")
    rsk_q_sets = {}
    for word, ts in classes.items():
        images = {t: rsk(t) for t in ts}
        if len({p for p, _ in images.values()}) != 1:
            rep.fail(word=list(word), reason="RSK_P is not constant on the class")
        rsk_q_sets[word] = {q for _, q in images.values()}
        for s, u in product(ts, repeat=2):
            a, b = shape(s), shape(u)
            if s != u and dominates(a, b):
                got = theta(images[s][1], b[::-1], alpha=a[::-1])
                if got != images[u][1]:
                    rep.fail(word=list(word), s=format_tabloid(s), t=format_tabloid(u), reason="theta does not map RSK_Q(S) to RSK_Q(T)")
        for t in ts:
            a = shape(t)
            for lam in partitions(n):
                if dominates(a, lam):
                    got = theta(images[t][1], lam[::-1], alpha=a[::-1])
                    if got not in rsk_q_sets[word]:
                        rep.fail(word=list(word), t=format_tabloid(t), target=list(lam), reason="class is not theta-stable")


def weak_compositions(n: int, length: int) -> Iterator[tuple[int, ...]]:
    for cut in combinations(range(n + length - 1), length - 1):
        bounds = (-1,) + cut + (n + length - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(length))


def ssyt_with_content(alpha: Sequence[int]) -> list:
    """Every semistandard tableau of content ``alpha``, via RSK on tabloids of shape ``alpha`` reversed."""
    return sorted({rsk(t)[1] for t in rsyt(tuple(alpha)[::-1])})


def _theta_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Path independence, identity, injectivity and composition of standardization."""
    n = spec.n
    length = n
    comps = list(weak_compositions(n, length))
    for alpha in comps:
        tabs = ssyt_with_content(alpha)
        plus = sorted(alpha, reverse=True)
        for beta in comps:
            if not dominates(plus, sorted(beta, reverse=True)):
                continue
            images = {}
            for u in tabs:
                rep.instances += 1
                first = theta(u, beta, alpha=alpha)
                last = theta(u, beta, alpha=alpha, strategy="last")
                if first != last:
                    rep.fail(u=format_tabloid(u), alpha=list(alpha), beta=list(beta), reason="paths disagree")
                if first in images:
                    rep.fail(u=format_tabloid(u), alpha=list(alpha), beta=list(beta), reason="theta is not injective")
                images[first] = u
                if alpha == beta and first != u:
                    rep.fail(u=format_tabloid(u), alpha=list(alpha), reason="theta from alpha to alpha is not the identity")
    # composition law along a chain of partitions
    lams = list(partitions(n))
    for a, b, c in combinations(lams, 3):
        if not (dominates(a, b) and dominates(b, c)):
            continue
        for u in ssyt_with_content(a):
            rep.instances += 1
            via = theta(theta(u, b, alpha=a), c, alpha=b)
            if via != theta(u, c, alpha=a):
                rep.fail(u=format_tabloid(u), chain=[list(a), list(b), list(c)], reason="composition law fails")


def _braid_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    """Involution and braid relations for R-matrices and crystal reflections, up to four rows."""
    n = spec.n
    for length in range(2, 5):
        for alpha in weak_compositions(n, length):
            for t in rsyt(alpha):
                rep.instances += 1
                p, q = rsk(t)
                if rsk_inverse(p, q, length) != t:
                    rep.fail(t=format_tabloid(t), reason="rsk_inverse does not invert rsk")
                for i in range(1, length):
                    r = r_matrix(t, i)
                    swapped = list(alpha)
                    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                    if shape(r) != tuple(swapped) or rsk(r)[0] != p:
                        rep.fail(t=format_tabloid(t), i=i, reason="R-matrix changes RSK_P or has the wrong shape")
                    if r_matrix(r, i) != t:
                        rep.fail(t=format_tabloid(t), i=i, reason="R-matrix is not an involution")
                    if crystal_reflection(crystal_reflection(q, i), i) != q:
                        rep.fail(u=format_tabloid(q), i=i, reason="crystal reflection is not an involution")
                for i in range(1, length - 1):
                    a = r_matrix(r_matrix(r_matrix(t, i), i + 1), i)
                    b = r_matrix(r_matrix(r_matrix(t, i + 1), i), i + 1)
                    if a != b:
                        rep.fail(t=format_tabloid(t), i=i, reason="R-matrix braid relation fails")
                    if act(q, (i, i + 1, i)) != act(q, (i + 1, i, i + 1)):
                        rep.fail(u=format_tabloid(q), i=i, reason="crystal braid relation fails")
                for i, j in combinations(range(1, length), 2):
                    if j - i >= 2:
                        if r_matrix(r_matrix(t, i), j) != r_matrix(r_matrix(t, j), i):
                            rep.fail(t=format_tabloid(t), i=i, j=j, reason="distant R-matrices do not commute")
                        if act(q, (i, j)) != act(q, (j, i)):
                            rep.fail(u=format_tabloid(q), i=i, j=j, reason="distant reflections do not commute")


def _golden_suite(spec: EnumerationSpec, rep: VerifyReport) -> None:
    from .golden import run_golden

    for check in run_golden():
        rep.instances += 1
        if not check.ok:
            rep.fail(check=check.name, detail=check.detail)


KERNEL_SUITES = ("roundtrip", "gk-oracle", "distances", "rho-theorem", "nesw", "diamond", "monotonicity", "bk-order")
PY_SUITES: dict[str, Callable[[EnumerationSpec, VerifyReport], None]] = {
    "golden": _golden_suite,
    "blasiak": _blasiak_suite,
    "sgnq-invariance": _sgnq_suite,
    "connectivity": _connectivity_suite,
    "upsilon": _upsilon_suite,
    "theta": _theta_suite,
    "braid": _braid_suite,
}
SUITES = ("golden",) + KERNEL_SUITES + tuple(s for s in PY_SUITES if s != "golden")


def run_suite(name: str, spec: EnumerationSpec) -> VerifyReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    _check_size(spec)
    spec_json = {k: v for k, v in asdict(spec).items() if k not in ("jobs", "force")}
    if spec_json["lambda_filter"] is not None:
        spec_json["lambda_filter"] = list(spec_json["lambda_filter"])
    rep = VerifyReport(name, spec_json)
    start = time.perf_counter()
    if name in KERNEL_SUITES:
        if spec.samples and name in ("roundtrip", "gk-oracle"):
            _sampled_windows_suite(name, spec, rep)
        else:
            _kernel_suite(name, spec, rep)
    else:
        PY_SUITES[name](spec, rep)
    rep.seconds = time.perf_counter() - start
    return rep
