from hypothesis import strategies as st

from ambc_cells.core import Window


@st.composite
def windows(draw, min_n=1, max_n=5, spread=2, partial=False):
    n = draw(st.integers(min_n, max_n))
    perm = draw(st.permutations(range(1, n + 1)))
    shifts = draw(st.lists(st.integers(-spread, spread), min_size=n, max_size=n))
    entries = [v + n * k for v, k in zip(perm, shifts)]
    if partial:
        keep = draw(st.lists(st.booleans(), min_size=n, max_size=n))
        entries = [v if k else None for v, k in zip(entries, keep)]
    return Window(tuple(entries))


@st.composite
def tabloids(draw, max_n=6, max_rows=4):
    n = draw(st.integers(1, max_n))
    rows = draw(st.integers(1, max_rows))
    labels = draw(st.lists(st.integers(0, rows - 1), min_size=n, max_size=n))
    perm = draw(st.permutations(range(1, n + 1)))
    return tuple(tuple(sorted(v for v, r in zip(perm, labels) if r == i)) for i in range(rows))
