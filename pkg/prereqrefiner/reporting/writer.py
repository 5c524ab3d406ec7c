import os
from typing import Dict, Iterable, List, Optional

from prereqrefiner.model import Cohort
from .dot import render_dot
from .report import render_report
from .tables import render_tables

REPORT_FILE = "report.json"
DOT_FILE = "final.dot"
FORMATS = ("json", "dot", "csv")


def write_outputs(cohort: Cohort, out_dir: str, formats: Iterable[str] = FORMATS, settings: Optional[Dict] = None,
                  decimals: int = 2, include_deleted: bool = False) -> List[str]:
    """
    Writes the requested output files of a refined cohort into `out_dir`, one file at a time.

    :param cohort: a cohort the full pipeline has run on
    :param out_dir: output directory, created if needed
    :param formats: any of 'json', 'dot', 'csv'
    :param settings: configuration echo for the JSON report
    :param decimals: number of decimals of the presentation values
    :param include_deleted: draw deleted links in the DOT output
    :return: paths of the written files
    """
    os.makedirs(out_dir, exist_ok=True)
    files = dict()
    formats = set(formats)
    if "json" in formats:
        files[REPORT_FILE] = render_report(cohort, settings, decimals)
    if "dot" in formats:
        files[DOT_FILE] = render_dot(cohort.get_artifact("final"), include_deleted=include_deleted,
                                     decimals=decimals)
    if "csv" in formats:
        files.update(render_tables(cohort, decimals))

    written = []
    for name, text in files.items():
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        written.append(path)
    return written
