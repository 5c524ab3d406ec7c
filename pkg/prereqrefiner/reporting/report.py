import json
import math
from typing import Dict, List, Optional

from prereqrefiner.model import Cohort, to_matrix
from prereqrefiner.util import round_half_away

SCHEMA_VERSION = "prereq-refiner/1"


def _raw(value) -> Optional[float]:
    if value is None:
        return None
    value = float(value)
    return None if math.isnan(value) else value


def _rounded_list(values, decimals: int) -> List[Optional[float]]:
    return [round_half_away(_raw(v), decimals) for v in values]


def _raw_list(values) -> List[Optional[float]]:
    return [_raw(v) for v in values]


def _table(matrix, learners, decimals: int) -> List[Dict]:
    return [{"learner": learner, "values": _rounded_list(row, decimals), "raw": _raw_list(row)}
            for learner, row in zip(learners, matrix)]


def _fuzzy_section(labeled, averages, decimals: int) -> Dict:
    return {"rows": _table(labeled.matrix, labeled.ids, decimals),
            "avg": _rounded_list(averages, decimals),
            "avg_raw": _raw_list(averages)}


def build_report(cohort: Cohort, settings: Optional[Dict] = None, decimals: int = 2) -> Dict:
    """
    Collects every pipeline artifact of a refined cohort into one JSON-ready dictionary. Presentation values are
    rounded half away from zero to `decimals`; the matching "*raw" fields hold the engine's values unchanged.

    :param cohort: a cohort the full pipeline has run on
    :param settings: configuration echo (thresholds, alpha_min, g_max, policies, ...)
    :param decimals: number of decimals of the presentation values
    :return: the report as an ordered dictionary
    """
    hierarchy = cohort.hierarchy
    delta = cohort.get_artifact("delta")
    fuzzy = cohort.get_artifact("fuzzy")
    averages = cohort.get_artifact("averages")
    decisions = cohort.get_artifact("decisions")
    final = cohort.get_artifact("final")
    links = [e.name for e in hierarchy.edges]

    report = dict()
    report["schema"] = SCHEMA_VERSION
    report["config"] = dict(settings) if settings is not None else dict()
    report["config"]["decimals"] = decimals
    report["initial_hierarchy"] = {
        "skills": [s.id for s in hierarchy.skills],
        "labels": [s.display_name for s in hierarchy.skills],
        "edges": links,
        "matrix": to_matrix(hierarchy).tolist(),
    }
    report["learners"] = list(cohort.grades.learners)
    report["delta"] = {"links": links, "rows": _table(delta.matrix, delta.learners, decimals)}
    report["fuzzy"] = {
        "links": links,
        "cpr": _fuzzy_section(fuzzy.cpr, averages.avg_cpr, decimals),
        "rpr": _fuzzy_section(fuzzy.rpr, averages.avg_rpr, decimals),
        "effective_n": [int(n) for n in averages.effective_n],
    }
    report["averages"] = [{
        "edge": link.name,
        "avg_cpr": round_half_away(_raw(cpr), decimals),
        "avg_rpr": round_half_away(_raw(rpr), decimals),
        "avg_cpr_raw": _raw(cpr),
        "avg_rpr_raw": _raw(rpr),
        "effective_n": int(n),
        "cpr_rule_support": _raw(cs),
        "rpr_rule_support": _raw(rs),
    } for link, cpr, rpr, n, cs, rs in zip(averages.links, averages.avg_cpr, averages.avg_rpr,
                                          averages.effective_n, averages.cpr_rule_support,
                                          averages.rpr_rule_support)]
    report["decisions"] = [{
        "edge": d.original.name,
        "verdict": d.verdict.value,
        "relevance": round_half_away(d.relevance, decimals),
        "relevance_raw": _raw(d.relevance),
        "result": d.result_edge.name if d.result_edge is not None else None,
        "avg_cpr_raw": _raw(d.avg_cpr),
        "avg_rpr_raw": _raw(d.avg_rpr),
        "effective_n": d.effective_n,
        "notes": list(d.notes),
    } for d in decisions]
    report["final_hierarchy"] = {
        "skills": final.skill_ids,
        "edges": [{"edge": e.name, "from": e.source, "to": e.target,
                   "relevance": round_half_away(r, decimals), "relevance_raw": _raw(r)}
                  for e, r in final.edges],
        "cycle_warnings": [list(c) for c in final.cycle_warnings],
    }
    report["warnings"] = list(cohort.warnings)
    return report


def dumps_report(report: Dict) -> str:
    """
    Serializes a report dictionary. Used for both first rendering and re-rendering a parsed report, so that the two
    produce identical bytes.
    """
    return json.dumps(report, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def render_report(cohort: Cohort, settings: Optional[Dict] = None, decimals: int = 2) -> str:
    """
    Renders the complete pipeline report as a single self-contained JSON document with stable key order.

    :param cohort: a cohort the full pipeline has run on
    :param settings: configuration echo
    :param decimals: number of decimals of the presentation values
    :return: JSON text
    """
    return dumps_report(build_report(cohort, settings, decimals))
