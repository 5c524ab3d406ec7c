from typing import Optional

import pandas as pd

from prereqrefiner.model import Cohort
from prereqrefiner.transformer import Transformer
from prereqrefiner.util import progress
from .decision import DecisionConfig, decide_edges
from .finalHierarchy import build_final_hierarchy


class HierarchyRefiner(Transformer):
    """
    Pipeline stage that turns the averaged fuzzy matrix of a cohort into the final learning hierarchy. Each link is
    kept, reversed or deleted by comparing its larger average membership degree with `alpha_min`; the result is
    then audited for cycles introduced by reversals. Cycles and link collisions are reported as cohort warnings,
    never repaired.

    :param config: DecisionConfig; alpha_min = 0.5 by default
    :param averages_attribute_name: artifact name to read the EdgeAverages from, default: "averages"
    :param decisions_attribute_name: artifact name for the list of EdgeDecision, default: "decisions"
    :param final_attribute_name: artifact name for the FinalHierarchy, default: "final"
    :param verbosity: if positive, prints a status line to the error stream
    """

    def __init__(self, config: Optional[DecisionConfig] = None, averages_attribute_name: str = "averages",
                 decisions_attribute_name: str = "decisions", final_attribute_name: str = "final",
                 verbosity: int = 0):
        self.config = config if config is not None else DecisionConfig()
        self.averages_attribute_name = averages_attribute_name
        self.decisions_attribute_name = decisions_attribute_name
        self.final_attribute_name = final_attribute_name
        self.verbosity = verbosity

    def transform(self, cohort: Cohort, **kwargs) -> Cohort:
        averages = cohort.get_artifact(self.averages_attribute_name)
        if averages is None:
            raise ValueError("HierarchyRefiner: cohort has no '{}' artifact; run the Fuzzifier first"
                             .format(self.averages_attribute_name))
        decisions = decide_edges(averages, self.config)
        final = build_final_hierarchy(decisions, cohort.hierarchy)
        for text in final.warnings:
            cohort.add_warning("[decision] " + text)
        cohort.add_artifact(self.decisions_attribute_name, decisions)
        cohort.add_artifact(self.final_attribute_name, final)
        if self.verbosity > 0:
            progress("final hierarchy: {} of {} links retained".format(len(final.edges), len(decisions)))
        return cohort

    def summarize(self, cohort: Cohort, **kwargs) -> pd.DataFrame:
        """
        :return: a DataFrame indexed by original link with verdict, resulting link and relevance
        """
        decisions = cohort.get_artifact(self.decisions_attribute_name)
        rows = [(d.original.name, d.verdict.value,
                 d.result_edge.name if d.result_edge is not None else None, d.relevance)
                for d in decisions]
        return pd.DataFrame(rows, columns=["link", "verdict", "result", "relevance"]).set_index("link")
