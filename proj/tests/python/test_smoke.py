import math
import os
from pathlib import Path

import pytest

import reldec

DATA = Path(os.environ.get("RELDEC_TEST_DATA", Path(__file__).resolve().parents[2] / "data"))


def test_poisson_example():
    p0 = reldec.poisson_pmf(1.0)
    p1 = reldec.poisson_pmf(4.0, len(p0) - 1)
    assert reldec.np_threshold(p0, p1, 0.25) == 3
    size, power = reldec.operating_point(p0, p1, 3)
    assert size == pytest.approx(0.080301397071394196, abs=1e-12)
    assert power == pytest.approx(0.76189669444645566, abs=1e-12)
    pe, pc = reldec.poisson_error_sum(1.0, 4.0, 3)
    assert pe == pytest.approx(0.15920235131246927, abs=1e-12)
    assert pe + pc == pytest.approx(1.0)
    assert reldec.poisson_overlap(1.0, 4.0) == pytest.approx(math.exp(-1), abs=1e-9)


def test_binary_table():
    s0 = reldec.embed([0.2, 0.8])
    s1 = reldec.embed([0.0, 1.0])
    assert s0 == pytest.approx([1 / math.sqrt(5), 2 / math.sqrt(5)])
    assert reldec.overlap(s0, s1) == pytest.approx(0.8)
    m = reldec.optimal_measurement(s0, s1, 0.5)
    qe, _ = reldec.helstrom_error(0.8, 0.5)
    assert 0.5 * m["size"] + 0.5 * (1 - m["power"]) == pytest.approx(qe, abs=1e-12)
    assert qe == pytest.approx(0.276393, abs=1e-6)
    assert reldec.measurement_angle_scan(s0, s1, 0.5) == pytest.approx(qe, abs=1e-6)
    best, subset = reldec.exhaustive_subset_error([0.2, 0.8], [0.0, 1.0], 0.5)
    assert best == pytest.approx(0.4)
    assert subset == [1]


def test_envelope():
    pts = [(0.25, 1 / 3), (0.5, 2 / 3), (0.75, 0.8)]
    assert reldec.envelope_breakpoints(pts) == pytest.approx([4 / 7, 8 / 23], abs=1e-12)
    err, idx = reldec.min_error_envelope(pts, 0.2)
    assert idx == 2
    assert err == pytest.approx(0.31)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        reldec.poisson_pmf(-1.0)
    with pytest.raises(ValueError):
        reldec.embed([0.5, 0.6])


def test_sweep_and_suite():
    corpus = DATA / "minicorpus"
    rows, warnings, violations = reldec.run_sweep(
        corpus / "docs", corpus / "qrels.txt", corpus / "topics.tsv", alphas=[0.5], xis=[0.5]
    )
    assert warnings == []
    assert violations == 0
    assert rows and all(r["qe"] <= r["pe"] + 1e-12 for r in rows)
    assert reldec.tokenize("Gold, PRICES") == ["gold", "prices"]
    reports = reldec.run_property_suite(seed=5, cases=20)
    assert all(r["passed"] for r in reports)
