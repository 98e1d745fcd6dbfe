"""
Storage — Lines on Hypersurfaces
--------------------------------

All disk I/O in one place: verification reports are written as
timestamped JSON files under reports/.
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from src.config import REPORTS_PATH
from src.validation.verify import SuiteResult


logger = logging.getLogger(__name__)


def save_verify_report(
    results: list[SuiteResult],
    max_n: int,
    timestamp: Optional[datetime] = None,
    output_dir: Path = REPORTS_PATH,
) -> Path:
    """
    Save the suite summary as reports/verify_YYYY-MM-DD_HH-MM-SS.json.

    Parameters
    ----------
    results : list[SuiteResult]
        Output of run_verification, in suite order.
    max_n : int
        Upper end of the verified range.
    timestamp : datetime, optional
        Defaults to now; fixes the file name.
    output_dir : Path
        Defaults to REPORTS_PATH.

    Returns
    -------
    Path
        The written file.
    """
    timestamp = timestamp or datetime.now()
    output_dir.mkdir(parents=True, exist_ok=True)
    output_path = output_dir / f"verify_{timestamp.strftime('%Y-%m-%d_%H-%M-%S')}.json"

    payload = {
        "timestamp": timestamp.isoformat(timespec="seconds"),
        "max_n":     max_n,
        "passed":    all(r.passed for r in results),
        "suites":    [r.to_dict() for r in results],
    }

    with open(output_path, "w") as f:
        json.dump(payload, f, indent=2)
    logger.info(f"[SAVED] Verification report → {output_path}")
    return output_path
