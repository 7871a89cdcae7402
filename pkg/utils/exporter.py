"""Scan report export: text summary, machine section and CSV records"""

import logging

import pandas as pd

from engine.choquet import PointFunction
from utils.file_formats import format_rational, serialize_capacity, serialize_function

logger = logging.getLogger(__name__)


def export_scan_text(report) -> str:
    """Human-readable summary followed by the machine section"""
    lines = [
        f"scan n={report.n} max_value={report.max_value} seed={report.seed}",
        f"capacities tested: {report.capacities_tested}",
        f"submodular: {report.submodular_count}",
        f"agreements: {report.agreements}",
        f"disagreements: {len(report.disagreements)}",
        f"coverage: {format_rational(report.coverage)}",
        f"verdict: {'ok' if report.ok else 'DISAGREEMENT'}",
    ]
    for d in report.disagreements:
        lines.append(f"  capacity {d.index}: {d.reason}")
    return "\n".join(lines) + "\n" + export_scan_machine(report)


def _witness_text(witness) -> str:
    if isinstance(witness, PointFunction):
        return serialize_function(witness)
    return f"event {witness}\n"


def export_scan_machine(report) -> str:
    """Key=value counts plus every disagreement in the file formats"""
    lines = [
        "[machine]",
        f"capacities_tested={report.capacities_tested}",
        f"submodular_count={report.submodular_count}",
        f"agreements={report.agreements}",
        f"disagreements={len(report.disagreements)}",
        f"seed={report.seed}",
        f"n={report.n}",
        f"max_value={report.max_value}",
        f"coverage={format_rational(report.coverage)}",
    ]
    text = "\n".join(lines) + "\n"
    for d in report.disagreements:
        text += f"[disagreement {d.index}]\nreason={d.reason}\n"
        text += serialize_capacity(d.capacity)
        if d.report is not None:
            text += f"lhs={format_rational(d.report.lhs)}\nrhs={format_rational(d.report.rhs)}\n"
            for witness in d.report.witnesses:
                text += _witness_text(witness)
    return text


def scan_records_frame(report) -> pd.DataFrame:
    """One row per scanned capacity"""
    rows = [{
        'index': r.index,
        'generator': r.generator,
        'seed': r.seed,
        'submodular': r.submodular,
        'local_agrees': r.local_agrees,
        'coverage': format_rational(r.coverage),
        'verdict': r.verdict,
        'values': " ".join(format_rational(v) for v in r.capacity.values),
    } for r in report.records]
    columns = ['index', 'generator', 'seed', 'submodular', 'local_agrees',
               'coverage', 'verdict', 'values']
    return pd.DataFrame(rows, columns=columns)


def export_scan_csv(report, path: str) -> None:
    frame = scan_records_frame(report)
    frame.to_csv(path, index=False)
    logger.info(f"Wrote {len(frame)} scan records to {path}")
