from typing import Sequence, Union

import numpy as np
import pandas as pd

from prereqrefiner.model import Cohort, Edge, GradeMatrix, Hierarchy, LabeledMatrix, check_skill_sets, edges_of
from prereqrefiner.transformer import Transformer
from prereqrefiner.util import progress


class DeltaMatrix(LabeledMatrix):
    """
    Learners x links table of grade variations: for link i -> j, the value for learner l is
    grade(l, j) - grade(l, i). Columns follow the hierarchy's edge order; NaN marks a variation that could not be
    computed because one of the two grades is missing.

    :param learners: learner ids
    :param links: prerequisite links, one per column
    :param values: the variations
    :param g_max: maximum attainable grade of the grade scale the variations come from
    """

    def __init__(self, learners: Sequence[str], links: Sequence[Edge], values, g_max: float):
        self.links = list(links)
        self.g_max = float(g_max)
        super().__init__("delta", values, ids=learners, columns=[e.name for e in self.links])

    @property
    def learners(self):
        return self.ids

    def delta(self, learner: str, link: Union[Edge, str]) -> float:
        name = link.name if isinstance(link, Edge) else link
        return self.value(learner, name)


def delta_grades(m: GradeMatrix, h: Hierarchy) -> DeltaMatrix:
    """
    Computes the grade variation of every learner along every prerequisite link of `h`.

    :param m: grade matrix whose skill set equals the hierarchy's
    :param h: the expert hierarchy
    :return: a DeltaMatrix with one column per link, in edge order
    """
    check_skill_sets(m, h)
    links = edges_of(h)
    grades = m.matrix
    if links:
        sources = [m.cols_to_idx[e.source] for e in links]
        targets = [m.cols_to_idx[e.target] for e in links]
        values = grades[:, targets] - grades[:, sources]
    else:
        values = np.zeros((len(m.learners), 0))
    return DeltaMatrix(m.learners, links, values, g_max=m.g_max)


class DeltaGrades(Transformer):
    """
    Pipeline stage computing the grade-variation matrix of a cohort. Stores the DeltaMatrix under the
    `delta_attribute_name` artifact.

    :param delta_attribute_name: artifact name for the DeltaMatrix, default: "delta"
    :param verbosity: if positive, prints a status line to the error stream
    """

    def __init__(self, delta_attribute_name: str = "delta", verbosity: int = 0):
        self.delta_attribute_name = delta_attribute_name
        self.verbosity = verbosity

    def transform(self, cohort: Cohort, **kwargs) -> Cohort:
        """
        Computes grade variations for every link of the cohort's hierarchy.

        :param cohort: Cohort
        :return: the cohort
        """
        delta = delta_grades(cohort.grades, cohort.hierarchy)
        cohort.add_artifact(self.delta_attribute_name, delta)
        if self.verbosity > 0:
            progress("grade variations computed for {} learners x {} links".format(*delta.shape))
        return cohort

    def summarize(self, cohort: Cohort, **kwargs) -> pd.DataFrame:
        """
        :return: the grade variations as a learners x links DataFrame
        """
        return cohort.get_artifact(self.delta_attribute_name).to_dataframe()
