from typing import Dict, List

import pandas as pd

from prereqrefiner.model import Cohort
from prereqrefiner.util import format_value

DELTA_FILE = "delta.csv"
FUZZY_CPR_FILE = "fuzzy_cpr.csv"
FUZZY_RPR_FILE = "fuzzy_rpr.csv"
AVERAGES_FILE = "averages.csv"
DECISIONS_FILE = "decisions.csv"


def _to_csv(rows: List[List[str]], columns: List[str]) -> str:
    return pd.DataFrame(rows, columns=columns, dtype=str).to_csv(index=False, lineterminator="\n")


def _learner_table(labeled, decimals: int, trim: bool = False, avg_row=None) -> str:
    rows = [[learner] + [format_value(v, decimals, trim) for v in row]
            for learner, row in zip(labeled.ids, labeled.matrix)]
    if avg_row is not None:
        rows.append(["AVG"] + [format_value(v, decimals) for v in avg_row])
    return _to_csv(rows, ["learner"] + list(labeled.columns))


def render_tables(cohort: Cohort, decimals: int = 2) -> Dict[str, str]:
    """
    Renders each pipeline stage of a refined cohort as CSV text: grade variations, the two membership tables
    (AVG as last row), per-link averages and the decisions. Link columns follow the hierarchy's edge order and rows
    follow the learner order of the grade file. Missing values are empty cells.

    :param cohort: a cohort the full pipeline has run on
    :param decimals: number of decimals written
    :return: a dictionary from file name to CSV text
    """
    delta = cohort.get_artifact("delta")
    fuzzy = cohort.get_artifact("fuzzy")
    averages = cohort.get_artifact("averages")
    decisions = cohort.get_artifact("decisions")

    tables = dict()
    tables[DELTA_FILE] = _learner_table(delta, decimals, trim=True)
    tables[FUZZY_CPR_FILE] = _learner_table(fuzzy.cpr, decimals, avg_row=averages.avg_cpr)
    tables[FUZZY_RPR_FILE] = _learner_table(fuzzy.rpr, decimals, avg_row=averages.avg_rpr)
    tables[AVERAGES_FILE] = _to_csv(
        [[link.name, format_value(cpr, decimals), format_value(rpr, decimals), str(int(n)),
          format_value(cs, decimals), format_value(rs, decimals)]
         for link, cpr, rpr, n, cs, rs in zip(averages.links, averages.avg_cpr, averages.avg_rpr,
                                             averages.effective_n, averages.cpr_rule_support,
                                             averages.rpr_rule_support)],
        ["link", "avg_cpr", "avg_rpr", "effective_n", "cpr_rule_support", "rpr_rule_support"])
    tables[DECISIONS_FILE] = _to_csv(
        [[d.original.name, d.verdict.value,
          d.result_edge.name if d.result_edge is not None else "",
          format_value(d.relevance, decimals), format_value(d.avg_cpr, decimals),
          format_value(d.avg_rpr, decimals), str(d.effective_n), "; ".join(d.notes)]
         for d in decisions],
        ["link", "verdict", "result", "relevance", "avg_cpr", "avg_rpr", "effective_n", "notes"])
    return tables
