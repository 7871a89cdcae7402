"""Tests for the SQLite scan history"""

import pytest

from engine.verifier import equivalence_scan
from utils.sqlite_logger import SQLiteLogger, get_db_connection, get_history, init_db


@pytest.fixture
def history(tmp_path):
    return SQLiteLogger(str(tmp_path / "history.db"))


@pytest.fixture
def small_report():
    return equivalence_scan(1, 3, 1, seed=2)


def test_init_db_creates_tables(tmp_path):
    db_path = str(tmp_path / "fresh.db")
    init_db(db_path)
    with get_db_connection(db_path) as conn:
        names = {row[0] for row in conn.execute("SELECT name FROM sqlite_master WHERE type='table'")}
    assert {"scan_runs", "command_log"} <= names


def test_save_and_read_scan(history, small_report):
    scan_id = history.save_scan(small_report)
    details = history.get_scan_details(scan_id)
    assert details['n'] == 1
    assert details['seed'] == 2
    assert details['capacities_tested'] == 3
    assert details['disagreements'] == 0
    assert details['coverage'] == "1"


def test_history_is_newest_first(history, small_report):
    first = history.save_scan(small_report)
    second = history.save_scan(small_report)
    rows = history.get_history(limit=5)
    assert [row[0] for row in rows] == [second, first]


def test_unknown_scan_is_none(history):
    assert history.get_scan_details(999) is None


def test_log_command(history):
    history.log_command("check", {'capacity_file': 'cap.txt'}, 1)
    with get_db_connection(history.db_path) as conn:
        rows = conn.execute("SELECT command, exit_code FROM command_log").fetchall()
    assert rows == [("check", 1)]


def test_history_errors_are_not_fatal(tmp_path):
    # a directory is not a database
    assert get_history(db_path=str(tmp_path)) == []
