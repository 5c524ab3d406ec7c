import math
import numbers
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from prereqrefiner.fuzzy_engine import EdgeAverages
from prereqrefiner.model import Edge
from prereqrefiner.util import PipelineError

DEFAULT_ALPHA_MIN = 0.5

NO_LEARNERS_NOTE = "no contributing learners"
# possible causes of a deleted link; reported as annotations, never inferred from the data
DELETION_EXPLANATIONS = (
    "inappropriate test items for one or both skills",
    "the two skills are independent",
)


class Verdict(str, Enum):
    KEPT = "KEPT"
    REVERSED = "REVERSED"
    DELETED = "DELETED"


@dataclass(frozen=True)
class DecisionConfig:
    """
    :param alpha_min: minimum relevance a link needs to enter the final hierarchy, in (0, 1]
    """
    alpha_min: float = DEFAULT_ALPHA_MIN

    def __post_init__(self):
        if not isinstance(self.alpha_min, numbers.Real) or not 0 < self.alpha_min <= 1:
            raise PipelineError("decision", "alpha-min must be in (0, 1], got {!r}".format(self.alpha_min),
                                "alpha_min")


@dataclass(frozen=True)
class EdgeDecision:
    """
    The verdict on one link of the expert hierarchy.

    :param original: the expert's link
    :param verdict: KEPT, REVERSED or DELETED
    :param relevance: the winning average membership for KEPT / REVERSED links; None for DELETED links
    :param avg_cpr: mean CPR degree of the link
    :param avg_rpr: mean RPR degree of the link
    :param effective_n: number of learners the averages were taken over
    :param notes: annotations carried to the report
    """
    original: Edge
    verdict: Verdict
    relevance: Optional[float]
    avg_cpr: float
    avg_rpr: float
    effective_n: int = 0
    notes: Tuple[str, ...] = ()

    @property
    def result_edge(self) -> Optional[Edge]:
        """
        :return: the link as it enters the final hierarchy, or None if deleted
        """
        if self.verdict == Verdict.KEPT:
            return self.original
        if self.verdict == Verdict.REVERSED:
            return self.original.reversed()
        return None


def decide_edge(link: Edge, avg_cpr: float, avg_rpr: float, c: DecisionConfig, effective_n: int = 0) -> EdgeDecision:
    """
    Keeps, reverses or deletes a single link. The larger of the two averages is compared against alpha_min
    (inclusive); a tie between the averages keeps the expert's direction.
    """
    if math.isnan(avg_cpr) or math.isnan(avg_rpr):
        return EdgeDecision(link, Verdict.DELETED, None, avg_cpr, avg_rpr, effective_n,
                            (NO_LEARNERS_NOTE,) + DELETION_EXPLANATIONS)
    if max(avg_cpr, avg_rpr) >= c.alpha_min:
        if avg_cpr >= avg_rpr:
            return EdgeDecision(link, Verdict.KEPT, avg_cpr, avg_cpr, avg_rpr, effective_n)
        return EdgeDecision(link, Verdict.REVERSED, avg_rpr, avg_cpr, avg_rpr, effective_n)
    return EdgeDecision(link, Verdict.DELETED, None, avg_cpr, avg_rpr, effective_n, DELETION_EXPLANATIONS)


def decide_edges(a: EdgeAverages, c: Optional[DecisionConfig] = None) -> List[EdgeDecision]:
    """
    Applies the construction rule to every link of the averaged fuzzy matrix.

    :param a: per-link averages
    :param c: DecisionConfig; alpha_min = 0.5 by default
    :return: one EdgeDecision per link, in edge order
    """
    c = c if c is not None else DecisionConfig()
    return [decide_edge(link, float(cpr), float(rpr), c, int(n))
            for link, cpr, rpr, n in zip(a.links, a.avg_cpr, a.avg_rpr, a.effective_n)]
