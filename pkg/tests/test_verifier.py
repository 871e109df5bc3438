import json
from fractions import Fraction

import pytest

from ksetlab import verifier
from ksetlab.errors import BadKError, CrossCheckMismatch
from ksetlab.models import SweepConfig
from ksetlab.verifier import Report, Verdict, sweep, verify_all_k, verify_instance

REPORT_KEYS = [
    "n", "k", "t", "x", "tangents", "chain_crossings", "below_level", "nk",
    "ksets_above", "ksets_below", "verdicts", "bound_ok", "easy_case",
]

VERDICT_NAMES = [
    "edges_equal_vertex_class",
    "level_vertices",
    "ksets_above_identity",
    "ksets_below_identity",
    "chain_count",
    "chain_concavity",
    "turn_partition",
    "edge_cover",
    "chain_crossing_census",
    "crossings_le_tangents",
    "tangents_le_chain_crossings",
    "tangent_charging",
    "crossing_tangent_correspondence",
    "below_level_le_nk",
    "crossing_lemma",
    "edge_bound",
    "bound_deduction",
]


def test_q4_golden_report(q4):
    report = verify_instance(q4, 2)
    assert (report.n, report.k, report.t, report.x) == (4, 2, 3, 0)
    assert report.tangents == 0
    assert report.chain_crossings == 2
    assert (report.below_level, report.nk) == (5, 8)
    assert (report.ksets_above, report.ksets_below) == (4, 4)
    assert report.bound_ok and report.easy_case
    assert report.all_hold, report.failed()
    assert [v.name for v in report.verdicts] == VERDICT_NAMES


def test_q4_edge_bound_values(q4):
    bound = verify_instance(q4, 2).verdict("edge_bound")
    assert (bound.lhs, bound.rhs) == (27, 64 * 64 * 2)


def test_q4_other_k(q4):
    one = verify_instance(q4, 1)
    assert (one.t, one.ksets_above, one.chain_crossings) == (2, 3, 0)
    three = verify_instance(q4, 3)
    assert (three.t, three.ksets_above, three.below_level, three.nk) == (1, 2, 6, 12)
    assert one.all_hold and three.all_hold


def test_verify_all_k(q4):
    reports = verify_all_k(q4)
    assert [r.k for r in reports] == [1, 2, 3]
    assert all(r.all_hold for r in reports)


def test_report_serializes_to_documented_shape(q4):
    data = verify_instance(q4, 2).to_dict()
    assert list(data.keys()) == REPORT_KEYS
    lemma = next(v for v in data["verdicts"] if v["name"] == "crossing_lemma")
    assert lemma["rhs"] == "27/1024"
    assert lemma["holds"] is True
    assert json.loads(json.dumps(data)) == data


def test_bad_k(q4):
    with pytest.raises(BadKError):
        verify_instance(q4, 4)


def test_failed_verdicts_are_reported():
    verdicts = (Verdict("ok", 1, 2, True), Verdict("broken", 3, 2, False, "3 > 2"))
    report = Report(n=4, k=2, t=3, x=0, tangents=0, chain_crossings=0, below_level=0, nk=8,
                    ksets_above=0, ksets_below=0, verdicts=verdicts, bound_ok=True, easy_case=True)
    assert not report.all_hold
    assert report.failed() == ["broken"]
    assert report.to_dict()["verdicts"][1] == {"name": "broken", "lhs": 3, "rhs": 2, "holds": False,
                                               "note": "3 > 2"}
    assert Verdict("half", Fraction(1, 2), 1, True).to_dict()["lhs"] == "1/2"


# --- sweeps ---

def test_empty_sweep():
    summary = sweep(SweepConfig(trials=0, seed=3))
    assert summary.records == [] and summary.failures == []
    assert summary.max_t == 0


def test_sweep_is_deterministic():
    config = SweepConfig(n=8, k=4, trials=15, seed=7)
    first = json.dumps(sweep(config).to_dict())
    second = json.dumps(sweep(SweepConfig(n=8, k=4, trials=15, seed=7)).to_dict())
    assert first == second


def test_sweep_all_k_with_varying_n():
    summary = sweep(SweepConfig(n=5, n_max=9, trials=12, seed=1))
    assert summary.failures == []
    assert {r["n"] for r in summary.records} <= set(range(5, 10))
    for trial in {r["trial"] for r in summary.records}:
        rows = [r for r in summary.records if r["trial"] == trial]
        assert [r["k"] for r in rows] == list(range(1, rows[0]["n"]))
    assert summary.easy_cases == len(summary.records)


def test_sweep_records_generation_failures():
    summary = sweep(SweepConfig(n=6, trials=2, seed=0, shape="parabola", coord_range=2))
    assert len(summary.failures) == 2
    assert all("error" in f for f in summary.failures)


def test_sweep_out_of_range_k_is_recorded():
    summary = sweep(SweepConfig(n=5, k=7, trials=1, seed=0))
    assert summary.records == []
    assert summary.failures[0]["k"] == 7


def test_sweep_records_integrity_errors_and_continues(monkeypatch):
    def broken_graph(inst, k, arr=None):
        raise CrossCheckMismatch(f"G disagrees with V_{k - 1}")

    monkeypatch.setattr(verifier, "build_graph", broken_graph)
    summary = sweep(SweepConfig(n=5, trials=3, seed=0))
    assert summary.records == []
    assert len(summary.failures) == 3 * 4
    assert [f["k"] for f in summary.failures[:4]] == [1, 2, 3, 4]
    assert all(f["error"].startswith("CrossCheckMismatch") for f in summary.failures)


def test_halving_sweep_reaches_high_counts():
    """Random ten-point sets cut off at least twenty 5-sets counting both sides"""
    summary = sweep(SweepConfig(n=10, k=5, trials=1000, seed=2024, coord_range=1000))
    assert summary.failures == []
    assert summary.max_total_ksets >= 20
    assert summary.easy_cases == 1000
    assert all(r["bound_ok"] for r in summary.records)
