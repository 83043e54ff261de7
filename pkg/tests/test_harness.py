import json
from math import factorial, prod

import numpy as np
import pytest

from ambc_cells import fast, harness
from ambc_cells.ambc import is_dominant, phi
from ambc_cells.core import partitions, rsyt
from ambc_cells.harness import (
    EnumerationSpec,
    TooLarge,
    UnknownSuite,
    enumerate_cells,
    run_suite,
)


def test_single_row_enumeration():
    items = list(enumerate_cells(EnumerationSpec(1, rho_bound=3)))
    assert [w.entries for w, _ in items] == [(1 + k,) for k in range(-3, 4)]


def test_shape_filter_count():
    assert len(list(enumerate_cells(EnumerationSpec(4, rho_bound=1, lambda_filter=(4,))))) == 3


def test_zero_bound_is_one_per_pair():
    pairs = sum(
        is_dominant((0,) * len(lam), p, q) for lam in partitions(4) for p in rsyt(lam) for q in rsyt(lam)
    )
    assert 0 < pairs < sum((factorial(4) // prod(factorial(x) for x in lam)) ** 2 for lam in partitions(4))
    assert len(list(enumerate_cells(EnumerationSpec(4, rho_bound=0)))) == pairs


@pytest.mark.parametrize("n, count", [(1, 5), (2, 64), (3, 1448)])
def test_counts_and_uniqueness(n, count):
    items = list(enumerate_cells(EnumerationSpec(n)))
    assert len(items) == count
    assert len({w for w, _ in items}) == count
    for w, t in items:
        assert is_dominant(t.rho, t.p, t.q)
        assert max(map(abs, t.rho)) <= 2
        assert phi(w) == t


def test_size_cap():
    with pytest.raises(TooLarge):
        list(enumerate_cells(EnumerationSpec(7)))
    with pytest.raises(TooLarge):
        run_suite("roundtrip", EnumerationSpec(7))


def test_bad_filter():
    with pytest.raises(ValueError):
        list(enumerate_cells(EnumerationSpec(4, lambda_filter=(2, 1))))


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope", EnumerationSpec(2))


@pytest.mark.parametrize("suite", harness.SUITES)
def test_every_suite_passes_small(suite):
    report = run_suite(suite, EnumerationSpec(3, rho_bound=1))
    assert report.ok, report.failures
    assert report.instances > 0


def test_reports_stable_across_jobs():
    one = run_suite("distances", EnumerationSpec(3, jobs=1))
    two = run_suite("distances", EnumerationSpec(3, jobs=2))
    assert one.to_json() == two.to_json()
    data = json.loads(one.to_json())
    assert "seconds" not in data and data["instances"] == 1448


def test_sampled_windows():
    report = run_suite("gk-oracle", EnumerationSpec(6, samples=20, seed=5))
    assert report.ok and report.instances == 20


def test_failure_carries_provenance(monkeypatch):
    def broken(prow, qrow, rhos, l):
        out = np.zeros(rhos.shape[0], np.int64)
        out[0] = 2
        return out

    monkeypatch.setattr(fast, "roundtrip_batch", broken)
    report = run_suite("roundtrip", EnumerationSpec(2, rho_bound=0))
    assert not report.ok
    f = report.failures[0]
    assert f["kernel"] == ["phi(psi(t)) != t"]
    assert f["reference"] == [] and f["confirmed"] is False
    assert "triple" in f and "window" in f


def test_kernel_crash_falls_back(monkeypatch):
    real = fast.gk_batch

    def flaky(prow, qrow, rhos, l):
        if rhos.shape[0] > 1:
            raise RuntimeError("batch failed")
        return real(prow, qrow, rhos, l)

    monkeypatch.setattr(fast, "gk_batch", flaky)
    assert run_suite("gk-oracle", EnumerationSpec(3, rho_bound=1)).ok


def test_connectivity_margin_zero():
    assert run_suite("connectivity", EnumerationSpec(3, rho_bound=1, margin=0)).ok
