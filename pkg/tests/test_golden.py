"""Comparison against the bundled reference data, including injected faults."""

from __future__ import annotations

import copy

import pytest

from hopf32.golden import check_golden, load_golden, module_from_spec, reference_labels
from hopf32.groups import catalogue

from conftest import cached_run

# every discrepancy the engine reports against the transcribed data, by location
EXPECTED_MISMATCHES = {
    "C2xC4 / table 10 / rows",
    "C2xC4 / table 10 / V5^30 / distinct",
    "C2xC4 / table 10 / V5^31 / distinct",
    "D4 / table 16 / Y7^3 / liftings",
    "D4 / total",
    "B1 / table 23 / rows",
    "B1 / table 23 / Y13^3 / distinct",
    "theorem / D4",
    "theorem / B1+B2+B3+B4+B5+B6",
}


@pytest.fixture(scope="module")
def full_report():
    return check_golden()


def test_golden_schema():
    """[TRIVIAL] versioned data with one entry per catalogue group."""
    g = load_golden()
    assert g["schema"] == 1
    assert len(g["groups"]) == 19
    assert g["theorem"]["totals"] == [1, 6, 12, 6, "infinite", "infinite", 7, 3, 1, 7, 4, 14, 7, 13]


def test_full_run_findings(full_report):
    """[DERIVED] the full comparison: annotated entries are the b4 rows and V5^39, mismatches are the known ones."""
    assert {f.where for f in full_report.mismatches} == EXPECTED_MISMATCHES
    annotated = {f.where for f in full_report.annotated}
    assert annotated == {f"C4 / table 6 / V3^{k} / dim" for k in (1, 2, 7, 10)} | {
        "C2xC4 / table 10 / V5^39 / liftings"}
    assert all("engine value recorded" in f.note for f in full_report.annotated)
    assert len(full_report.findings) > 600


def test_main_theorem_vector(full_report):
    """[PAPER] the totals vector in the order of the main list."""
    got = [f for f in full_report.findings if f.where.startswith("theorem / ")]
    assert [f.expected for f in got] == [1, 6, 12, 6, "infinite", "infinite", 7, 3, 1, 7, 4, 14, 7, 13]
    assert [f.got for f in got] == [1, 6, 12, 6, "infinite", "infinite", 6, 3, 1, 7, 4, 14, 7, 12]


def test_subset_passes():
    """[TRIVIAL] groups without discrepancies pass on their own."""
    rep = check_golden(groups=["C2", "C2xC2", "C4", "H", "C16"], table1=True)
    assert rep.ok, [f.line() for f in rep.mismatches]


def test_injected_total_fault():
    """[TRIVIAL] a corrupted C4 total of 13 fails, naming the location and both values."""
    gold = copy.deepcopy(load_golden())
    gold["groups"]["C4"]["total"] = 13
    rep = check_golden(groups=["C4"], gold=gold, table1=False)
    assert not rep.ok
    (bad,) = rep.mismatches
    assert bad.where == "C4 / total" and bad.expected == 13 and bad.got == 12


def test_injected_row_fault():
    """[TRIVIAL] a corrupted lifting count names the table and the row."""
    gold = copy.deepcopy(load_golden())
    for t in gold["groups"]["C4"]["tables"]:
        for r in t["rows"]:
            if r["label"] == "W3^1":
                r["liftings"] = 5
    rep = check_golden(groups=["C4"], gold=gold, table1=False)
    assert [f.where for f in rep.mismatches] == ["C4 / table 7 / W3^1 / liftings"]


def test_injected_table1_fault():
    """[TRIVIAL] a wrong Table 1 dimension is reported."""
    gold = copy.deepcopy(load_golden())
    gold["table1"][0]["dim"] = 5
    rep = check_golden(groups=[], gold=gold)
    assert len(rep.mismatches) == 1 and rep.mismatches[0].where.startswith("table 1 /")


def test_missing_row_detected():
    """[TRIVIAL] dropping a reference row leaves an engine class unlisted."""
    gold = copy.deepcopy(load_golden())
    t = gold["groups"]["C2xC2"]["tables"][1]
    t["rows"].pop()
    rep = check_golden(groups=["C2xC2"], gold=gold, table1=False)
    where = {f.where for f in rep.mismatches}
    assert "C2xC2 / table 3 / coverage" in where and "C2xC2 / table 3 / rows" in where


def test_reference_labels():
    """[TRIVIAL] engine labels map to reference labels."""
    R = cached_run("H")
    labels = reference_labels(R)
    assert sorted(labels.values()) == ["Y8^1", "Y8^2"]


def test_module_from_spec_formats():
    """[TRIVIAL] exponent lists, centralizer values and the degree-2 representation are all accepted."""
    assert module_from_spec(catalogue("C4"), [["g", [1]]]).dim == 1
    assert module_from_spec(catalogue("D4"), [["s", {"s": "-1", "r^2": "1"}]]).dim == 2
    assert module_from_spec(catalogue("H"), [["-e", "rho0"]]).dim == 2
