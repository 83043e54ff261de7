"""Value types shared by every module: windows, compositions and tabloids.

A window is the length-``n`` slice ``[w(1), ..., w(n)]`` of a periodic
injection ``w(i + n) = w(i) + n``.  Absent entries (``None``) make it a
partial permutation.  Tabloids are plain tuples of row tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

Tabloid = tuple[tuple[int, ...], ...]


class AmbcError(Exception):
    """Base class for errors raised by this package."""


class ParseError(AmbcError, ValueError):
    pass


class ValidationError(AmbcError, ValueError):
    pass


class MismatchedPeriod(AmbcError, ValueError):
    pass


@dataclass(frozen=True)
class Window:
    """Window notation of a (partial) affine permutation."""

    entries: tuple[Optional[int], ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValidationError("a window needs at least one entry")
        n = len(entries)
        seen: dict[int, int] = {}
        for pos, value in enumerate(entries, start=1):
            if value is None:
                continue
            if not isinstance(value, int):
                raise ValidationError(f"entry {pos} is not an integer: {value!r}")
            res = value % n
            if res in seen:
                raise ValidationError(
                    f"entries {seen[res]} and {pos} share residue {res} mod {n}"
                )
            seen[res] = pos

    @classmethod
    def of(cls, *values: Optional[int]) -> "Window":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Window":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def empty(cls, n: int) -> "Window":
        return cls((None,) * n)

    @classmethod
    def from_balls(cls, n: int, balls: Iterable[tuple[int, int]]) -> "Window":
        """Fold balls ``(x, y)`` anywhere in the plane back into one window."""
        entries: list[Optional[int]] = [None] * n
        for x, y in balls:
            k, r = divmod(x - 1, n)
            if entries[r] is not None:
                raise ValidationError(f"two balls in column class {r + 1}")
            entries[r] = y - k * n
        return cls(tuple(entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, x: int) -> Optional[int]:
        k, r = divmod(x - 1, self.n)
        value = self.entries[r]
        return None if value is None else value + k * self.n

    def __getitem__(self, pos: int) -> Optional[int]:
        """1-based window entry."""
        return self.entries[pos - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Optional[int]]:
        return iter(self.entries)

    @property
    def is_total(self) -> bool:
        return all(v is not None for v in self.entries)

    @property
    def is_empty(self) -> bool:
        return all(v is None for v in self.entries)

    def positions(self) -> tuple[int, ...]:
        """Present positions in ``[1, n]``."""
        return tuple(i for i, v in enumerate(self.entries, start=1) if v is not None)

    def balls(self) -> tuple[tuple[int, int], ...]:
        """Balls ``(x, w(x))`` for the present positions of the window."""
        return tuple((i, v) for i, v in enumerate(self.entries, start=1) if v is not None)

    def density(self) -> int:
        return sum(v is not None for v in self.entries)

    def values(self) -> tuple[int, ...]:
        return tuple(v for v in self.entries if v is not None)

    def to_json(self) -> list[Optional[int]]:
        return list(self.entries)

    def __str__(self) -> str:
        return format_window(self)

    def __repr__(self) -> str:
        return f"Window({format_window(self)})"


_WINDOW_RE = re.compile(r"^\s*\[(.*)\]\s*$", re.S)


def parse_window(text: str) -> Window:
    """Parse ``[e1,...,en]`` where each entry is an integer or ``_``.

    ``null`` and the empty-set sign are accepted as synonyms for ``_``.
    """
    m = _WINDOW_RE.match(text)
    if not m:
        raise ParseError(f"not a window: {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ParseError("empty window")
    entries: list[Optional[int]] = []
    for token in body.split(","):
        token = token.strip()
        if token in ("_", "null", "None", "∅"):
            entries.append(None)
            continue
        try:
            entries.append(int(token))
        except ValueError:
            raise ParseError(f"bad window entry {token!r}") from None
    return Window(tuple(entries))


def format_window(w: Window) -> str:
    return "[" + ",".join("_" if v is None else str(v) for v in w.entries) + "]"


def restrict(w: Window, keep: Iterable[int]) -> Window:
    """Drop every entry whose position is not in ``keep``."""
    keep = set(keep)
    return Window(tuple(v if i in keep else None for i, v in enumerate(w.entries, start=1)))


# -- compositions and partitions ---------------------------------------------


def strip_zeros(parts: Sequence[int]) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def compositions_equal(a: Sequence[int], b: Sequence[int], padded: bool = False) -> bool:
    if padded:
        return tuple(a) == tuple(b)
    return strip_zeros(a) == strip_zeros(b)


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(parts) + (0,) * (length - len(parts))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Dominance order on partitions (sorted internally)."""
    a = sorted(a, reverse=True)
    b = sorted(b, reverse=True)
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


# -- tabloids -----------------------------------------------------------------


def tabloid(rows: Iterable[Iterable[int]]) -> Tabloid:
    return tuple(tuple(row) for row in rows)


def shape(t: Tabloid) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def content(t: Tabloid, length: Optional[int] = None) -> tuple[int, ...]:
    """Letter multiplicities ``(#1, #2, ...)``; padded to ``length`` if given."""
    letters = [x for row in t for x in row]
    top = max(letters, default=0)
    if length is not None:
        top = max(top, length)
    counts = [0] * top
    for x in letters:
        if x < 1:
            raise ValidationError(f"content needs positive letters, got {x}")
        counts[x - 1] += 1
    return tuple(counts)


def reading_word(t: Tabloid) -> tuple[int, ...]:
    """Rows concatenated from the last row to the first."""
    return tuple(x for row in reversed(t) for x in row)


def is_rsyt(t: Tabloid, n: Optional[int] = None) -> bool:
    letters = sorted(x for row in t for x in row)
    if n is None:
        n = len(letters)
    if letters != list(range(1, n + 1)):
        return False
    return all(all(a < b for a, b in zip(row, row[1:])) for row in t)


def is_ssyt(t: Tabloid) -> bool:
    if not is_partition(shape(t)):
        return False
    for row in t:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def check_rsyt(t: Tabloid, n: Optional[int] = None) -> Tabloid:
    t = tabloid(t)
    if not is_rsyt(t, n):
        raise ValidationError(f"not a row-standard tabloid: {t}")
    return t


def rsyt(sh: Sequence[int]) -> Iterator[Tabloid]:
    """All row-standard tabloids of composition shape ``sh``."""
    n = sum(sh)

    def fill(row: int, remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if row == len(sh):
            yield ()
            return
        for chosen in combinations(remaining, sh[row]):
            rest = tuple(x for x in remaining if x not in chosen)
            for tail in fill(row + 1, rest):
                yield (chosen,) + tail

    yield from fill(0, tuple(range(1, n + 1)))


def rsyt_all(n: int) -> Iterator[Tabloid]:
    """Row-standard tableaux of partition shape, grouped by partition."""
    for lam in partitions(n):
        yield from rsyt(lam)


def format_tabloid(t: Tabloid) -> str:
    return "(" + ",".join("(" + ",".join(map(str, row)) + ")" for row in t) + ")"


def parse_tabloid(text: str) -> Tabloid:
    """Parse JSON-ish ``[[1,3],[2]]`` or the parenthesized ``((1,3),(2))``."""
    import json

    s = text.strip().replace("(", "[").replace(")", "]").replace("∅", "[]")
    try:
        data = json.loads(s)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad tabloid {text!r}: {exc}") from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError(f"bad tabloid {text!r}")
    try:
        return tabloid(tuple(int(x) for x in row) for row in data)
    except (TypeError, ValueError):
        raise ParseError(f"bad tabloid {text!r}") from None
