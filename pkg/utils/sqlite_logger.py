import sqlite3
import datetime
import logging
from contextlib import contextmanager

logger = logging.getLogger(__name__)


@contextmanager
def get_db_connection(db_path):
    """Context manager for database connections"""
    conn = None
    try:
        conn = sqlite3.connect(db_path)
        yield conn
    except Exception as e:
        if conn:
            conn.rollback()
        logger.error(f"Database error: {e}")
        raise
    finally:
        if conn:
            conn.close()


def init_db(db_path):
    """Create the scan history tables if needed"""
    with get_db_connection(db_path) as conn:
        c = conn.cursor()
        c.execute("""CREATE TABLE IF NOT EXISTS scan_runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            timestamp TEXT,
            n INTEGER,
            max_value INTEGER,
            seed INTEGER,
            capacities_tested INTEGER,
            submodular_count INTEGER,
            agreements INTEGER,
            disagreements INTEGER,
            coverage TEXT,
            elapsed_seconds REAL
        )""")

        c.execute("""CREATE TABLE IF NOT EXISTS command_log (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            timestamp TEXT,
            command TEXT,
            arguments TEXT,
            exit_code INTEGER
        )""")

        conn.commit()
        logger.info(f"History database ready at {db_path}")


def save_scan(report, db_path):
    """Store the summary of one equivalence scan, return its row id"""
    with get_db_connection(db_path) as conn:
        c = conn.cursor()
        c.execute("""
            INSERT INTO scan_runs
            (timestamp, n, max_value, seed, capacities_tested, submodular_count,
             agreements, disagreements, coverage, elapsed_seconds)
            VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
        """, (
            datetime.datetime.now().isoformat(),
            report.n,
            report.max_value,
            report.seed,
            report.capacities_tested,
            report.submodular_count,
            report.agreements,
            len(report.disagreements),
            str(report.coverage),
            report.elapsed_seconds,
        ))
        conn.commit()
        logger.info(f"Scan with seed {report.seed} saved to history")
        return c.lastrowid


def get_history(limit=10, db_path=None):
    """Most recent scan runs, newest first"""
    try:
        with get_db_connection(db_path) as conn:
            c = conn.cursor()
            c.execute("SELECT * FROM scan_runs ORDER BY id DESC LIMIT ?", (limit,))
            return c.fetchall()
    except Exception as e:
        logger.error(f"Error retrieving history: {e}")
        return []


def get_scan_details(scan_id, db_path):
    """Get one scan run as a dict"""
    try:
        with get_db_connection(db_path) as conn:
            c = conn.cursor()
            c.execute("SELECT * FROM scan_runs WHERE id = ?", (scan_id,))
            row = c.fetchone()

            if row:
                columns = [
                    "id", "timestamp", "n", "max_value", "seed",
                    "capacities_tested", "submodular_count", "agreements",
                    "disagreements", "coverage", "elapsed_seconds"
                ]
                return dict(zip(columns, row))
            return None
    except Exception as e:
        logger.error(f"Error retrieving scan details: {e}")
        return None


def log_command(command, arguments, exit_code, db_path):
    """Record one CLI invocation"""
    try:
        with get_db_connection(db_path) as conn:
            c = conn.cursor()
            c.execute("""
                INSERT INTO command_log (timestamp, command, arguments, exit_code)
                VALUES (?, ?, ?, ?)
            """, (
                datetime.datetime.now().isoformat(),
                command,
                str(arguments)[:5000],
                exit_code,
            ))
            conn.commit()
    except Exception as e:
        logger.error(f"Error logging command: {e}")


class SQLiteLogger:
    """Scan and command history bound to one database file"""

    def __init__(self, db_path):
        self.db_path = db_path
        init_db(self.db_path)

    def save_scan(self, report):
        return save_scan(report, self.db_path)

    def get_history(self, limit=10):
        return get_history(limit, self.db_path)

    def get_scan_details(self, scan_id):
        return get_scan_details(scan_id, self.db_path)

    def log_command(self, command, arguments, exit_code):
        return log_command(command, arguments, exit_code, self.db_path)
