"""Tests for scan report text, machine and CSV export"""

import pandas as pd

from engine.verifier import equivalence_scan
from utils.exporter import export_scan_csv, export_scan_machine, export_scan_text, scan_records_frame


def test_text_summary_leads_with_counts():
    report = equivalence_scan(2, 6, 2, seed=3)
    lines = export_scan_text(report).splitlines()
    assert lines[0] == "scan n=2 max_value=2 seed=3"
    assert lines[1] == "capacities tested: 6"
    assert "verdict: ok" in lines
    assert "[machine]" in lines


def test_machine_section():
    report = equivalence_scan(2, 6, 2, seed=3)
    text = export_scan_machine(report)
    assert text.startswith("[machine]\ncapacities_tested=6\n")
    assert f"submodular_count={report.submodular_count}\n" in text
    assert "disagreements=0\n" in text


def test_records_frame():
    report = equivalence_scan(2, 6, 2, seed=3)
    frame = scan_records_frame(report)
    assert list(frame['index']) == list(range(6))
    assert list(frame['generator'][:2]) == ["submodular", "monotone"]
    assert set(frame['verdict']) == {"ok"}
    assert frame['submodular'].sum() == report.submodular_count


def test_csv_round_trip(tmp_path):
    report = equivalence_scan(1, 4, 1, seed=0)
    path = tmp_path / "scan.csv"
    export_scan_csv(report, str(path))
    frame = pd.read_csv(path)
    assert len(frame) == 4
    assert list(frame.columns) == ['index', 'generator', 'seed', 'submodular', 'local_agrees',
                                   'coverage', 'verdict', 'values']
    assert set(frame['values']) == {"0 1"}
