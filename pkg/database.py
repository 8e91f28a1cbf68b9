# database.py
import sqlite3
import logging
from typing import List, Optional, Tuple

import config

logger = logging.getLogger(__name__)


class CertificationStore:
    """Keeps certification runs and every disagreement they found."""

    def __init__(self, db_path: str = config.RESULTS_DB_PATH):
        self.db_path = db_path
        self.init_database()

    def init_database(self):
        """Initialize the database with required tables"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()

                # One row per certify invocation
                cursor.execute('''
                    CREATE TABLE IF NOT EXISTS certification_runs (
                        id INTEGER PRIMARY KEY AUTOINCREMENT,
                        corpus TEXT NOT NULL,
                        seed INTEGER,
                        started_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                        completed_at TIMESTAMP,
                        graphs_checked INTEGER DEFAULT 0,
                        disagreements INTEGER DEFAULT 0,
                        status TEXT DEFAULT 'running' CHECK (status IN ('running', 'passed', 'failed'))
                    )
                ''')

                # Graphs on which production and oracle disagreed
                cursor.execute('''
                    CREATE TABLE IF NOT EXISTS certification_failures (
                        id INTEGER PRIMARY KEY AUTOINCREMENT,
                        run_id INTEGER NOT NULL,
                        graph_line TEXT NOT NULL,
                        check_name TEXT NOT NULL,
                        detail TEXT,
                        recorded_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                        FOREIGN KEY (run_id) REFERENCES certification_runs (id)
                    )
                ''')

                cursor.execute('CREATE INDEX IF NOT EXISTS idx_failures_run ON certification_failures (run_id)')
                conn.commit()
                logger.info("✅ Certification store initialized successfully")

        except Exception as e:
            logger.error(f"🔥 Failed to initialize certification store: {e}")
            raise

    def start_run(self, corpus: str, seed: Optional[int]) -> Optional[int]:
        """Open a run and return its id"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    INSERT INTO certification_runs (corpus, seed) VALUES (?, ?)
                ''', (corpus, seed))
                conn.commit()
                logger.info(f"✅ Started certification run {cursor.lastrowid} on corpus {corpus!r}")
                return cursor.lastrowid
        except Exception as e:
            logger.error(f"🔥 Failed to start certification run for {corpus!r}: {e}")
            return None

    def record_failure(self, run_id: int, graph_line: str, check_name: str, detail: str) -> bool:
        """Store one disagreement"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    INSERT INTO certification_failures (run_id, graph_line, check_name, detail)
                    VALUES (?, ?, ?, ?)
                ''', (run_id, graph_line, check_name, detail))
                conn.commit()
                return True
        except Exception as e:
            logger.error(f"🔥 Failed to record failure for run {run_id}: {e}")
            return False

    def finish_run(self, run_id: int, graphs_checked: int, disagreements: int) -> bool:
        """Close a run with its totals"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    UPDATE certification_runs
                    SET completed_at = CURRENT_TIMESTAMP, graphs_checked = ?, disagreements = ?, status = ?
                    WHERE id = ?
                ''', (graphs_checked, disagreements, 'passed' if disagreements == 0 else 'failed', run_id))
                conn.commit()

                if cursor.rowcount > 0:
                    logger.info(f"✅ Certification run {run_id} finished: {graphs_checked} graphs, {disagreements} disagreements")
                    return True
                else:
                    logger.warning(f"⚠️ Certification run {run_id} not found")
                    return False
        except Exception as e:
            logger.error(f"🔥 Failed to finish certification run {run_id}: {e}")
            return False

    def get_recent_runs(self, limit: int = 10) -> List[Tuple]:
        """Most recent runs first"""
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    SELECT id, corpus, seed, started_at, completed_at, graphs_checked, disagreements, status
                    FROM certification_runs
                    ORDER BY id DESC
                    LIMIT ?
                ''', (limit,))
                return cursor.fetchall()
        except Exception as e:
            logger.error(f"🔥 Failed to get recent certification runs: {e}")
            return []

    def get_run_failures(self, run_id: int) -> List[Tuple]:
        try:
            with sqlite3.connect(self.db_path) as conn:
                cursor = conn.cursor()
                cursor.execute('''
                    SELECT graph_line, check_name, detail
                    FROM certification_failures
                    WHERE run_id = ?
                    ORDER BY id
                ''', (run_id,))
                return cursor.fetchall()
        except Exception as e:
            logger.error(f"🔥 Failed to get failures for run {run_id}: {e}")
            return []
