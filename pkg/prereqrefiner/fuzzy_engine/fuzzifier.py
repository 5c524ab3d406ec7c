import math
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from prereqrefiner.model import Cohort, Edge, LabeledMatrix, MissingPolicy
from prereqrefiner.transformer import Transformer
from prereqrefiner.util import PipelineError, progress
from .deltaGrades import DeltaMatrix, delta_grades
from .membership import Thresholds, mu_cpr, mu_rpr, in_cpr_rule, in_rpr_rule


class FuzzyScores:
    """
    Per-learner membership degrees of every link in the two fuzzy sets: correct prerequisite relationships (CPR)
    and reversed prerequisite relationships (RPR).

    :ivar cpr: learners x links LabeledMatrix of CPR membership degrees
    :ivar rpr: learners x links LabeledMatrix of RPR membership degrees
    :ivar thresholds: the thresholds the degrees were computed with
    """

    def __init__(self, learners: Sequence[str], links: Sequence[Edge], cpr, rpr, thresholds: Thresholds):
        self.links = list(links)
        names = [e.name for e in self.links]
        self.cpr = LabeledMatrix("fuzzy_cpr", cpr, ids=learners, columns=names)
        self.rpr = LabeledMatrix("fuzzy_rpr", rpr, ids=learners, columns=names)
        self.thresholds = thresholds

    @property
    def learners(self):
        return self.cpr.ids

    def scores(self, learner: str, link: Union[Edge, str]):
        """
        :return: (CPR degree, RPR degree) of `learner` on `link`
        """
        name = link.name if isinstance(link, Edge) else link
        return self.cpr.value(learner, name), self.rpr.value(learner, name)


class EdgeAverages:
    """
    Per-link arithmetic means of the CPR and RPR membership degrees over the contributing learners.

    :ivar links: links in edge order
    :ivar avg_cpr: per-link mean CPR degree (NaN for a link without contributing learners)
    :ivar avg_rpr: per-link mean RPR degree
    :ivar effective_n: per-link number of learners that contributed
    :ivar cpr_rule_support: per-link fraction of contributing learners satisfying s1 <= delta <= s2
    :ivar rpr_rule_support: per-link fraction of contributing learners satisfying s2 <= delta <= s3
    """

    def __init__(self, links: Sequence[Edge], avg_cpr, avg_rpr, effective_n,
                 cpr_rule_support=None, rpr_rule_support=None):
        self.links = list(links)
        self.avg_cpr = np.asarray(avg_cpr, dtype=float)
        self.avg_rpr = np.asarray(avg_rpr, dtype=float)
        self.effective_n = np.asarray(effective_n, dtype=int)
        nan = np.full(len(self.links), np.nan)
        self.cpr_rule_support = nan if cpr_rule_support is None else np.asarray(cpr_rule_support, dtype=float)
        self.rpr_rule_support = nan.copy() if rpr_rule_support is None else np.asarray(rpr_rule_support, dtype=float)
        self.links_to_idx = {e.name: idx for idx, e in enumerate(self.links)}

    def averages(self, link: Union[Edge, str]):
        """
        :return: (mean CPR degree, mean RPR degree) of `link`
        """
        idx = self.links_to_idx[link.name if isinstance(link, Edge) else link]
        return float(self.avg_cpr[idx]), float(self.avg_rpr[idx])

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame({"avg_cpr": self.avg_cpr, "avg_rpr": self.avg_rpr, "effective_n": self.effective_n,
                             "cpr_rule_support": self.cpr_rule_support,
                             "rpr_rule_support": self.rpr_rule_support},
                            index=[e.name for e in self.links])

    def __len__(self):
        return len(self.links)


def fuzzify(d: DeltaMatrix, t: Thresholds) -> FuzzyScores:
    """
    Maps every grade variation to its CPR and RPR membership degrees.

    :param d: the grade-variation matrix
    :param t: thresholds of the membership functions
    :return: FuzzyScores with the same learners and links as `d`
    """
    return FuzzyScores(d.learners, d.links, mu_cpr(d.matrix, t), mu_rpr(d.matrix, t), t)


def _column_mean(column: np.ndarray) -> float:
    # exactly rounded sum: the mean does not depend on learner order
    return math.fsum(column) / len(column)


def average_scores(f: FuzzyScores, allow_empty: bool = False) -> EdgeAverages:
    """
    Averages the membership degrees of every link over the learners that have a value for it.

    :param f: per-learner fuzzy scores
    :param allow_empty: if False (default), a link with no contributing learner is an error; if True its averages
        are NaN and its effective_n is 0
    :return: EdgeAverages
    """
    avg_cpr, avg_rpr, counts = [], [], []
    for idx, link in enumerate(f.links):
        cpr_col = f.cpr.matrix[:, idx]
        present = ~np.isnan(cpr_col)
        n = int(present.sum())
        if n == 0:
            if not allow_empty:
                raise PipelineError("averages", "link {} has no contributing learners".format(link.name), link)
            avg_cpr.append(np.nan)
            avg_rpr.append(np.nan)
        else:
            avg_cpr.append(_column_mean(cpr_col[present]))
            avg_rpr.append(_column_mean(f.rpr.matrix[:, idx][present]))
        counts.append(n)
    return EdgeAverages(f.links, avg_cpr, avg_rpr, counts)


def rule_support(d: DeltaMatrix, t: Thresholds):
    """
    Crisp counterpart of the fuzzy sets: per link, the fraction of contributing learners whose variation satisfies
    the CPR rule (s1 <= delta <= s2) and the RPR rule (s2 <= delta <= s3).

    :return: (cpr support array, rpr support array); NaN for links without contributing learners
    """
    present = ~np.isnan(d.matrix)
    counts = present.sum(axis=0)
    with np.errstate(invalid="ignore", divide="ignore"):
        cpr = np.where(counts > 0, (in_cpr_rule(d.matrix, t) & present).sum(axis=0) / np.maximum(counts, 1), np.nan)
        rpr = np.where(counts > 0, (in_rpr_rule(d.matrix, t) & present).sum(axis=0) / np.maximum(counts, 1), np.nan)
    return cpr, rpr


class Fuzzifier(Transformer):
    """
    Pipeline stage that fuzzifies a cohort's grade variations and averages them per link, producing the matrix of
    fuzzy prerequisite relationships. Computes the grade variations first if no earlier stage stored them.

    :param thresholds: Thresholds of the membership functions; default (-5, 5, 10)
    :param delta_attribute_name: artifact name to read the DeltaMatrix from, default: "delta"
    :param fuzzy_attribute_name: artifact name for the FuzzyScores, default: "fuzzy"
    :param averages_attribute_name: artifact name for the EdgeAverages, default: "averages"
    :param verbosity: if positive, prints a status line to the error stream
    """

    def __init__(self, thresholds: Optional[Thresholds] = None, delta_attribute_name: str = "delta",
                 fuzzy_attribute_name: str = "fuzzy", averages_attribute_name: str = "averages",
                 verbosity: int = 0):
        self.thresholds = thresholds if thresholds is not None else Thresholds()
        self.delta_attribute_name = delta_attribute_name
        self.fuzzy_attribute_name = fuzzy_attribute_name
        self.averages_attribute_name = averages_attribute_name
        self.verbosity = verbosity

    def transform(self, cohort: Cohort, **kwargs) -> Cohort:
        """
        Annotates the cohort with per-learner fuzzy scores and per-link averages. Under the SKIP missing-grade
        policy, links left without any contributing learner get NaN averages and a warning.

        :param cohort: Cohort
        :return: the cohort
        """
        delta = cohort.get_artifact(self.delta_attribute_name)
        if delta is None:
            delta = delta_grades(cohort.grades, cohort.hierarchy)
            cohort.add_artifact(self.delta_attribute_name, delta)

        scores = fuzzify(delta, self.thresholds)
        skip = cohort.grades.missing_policy == MissingPolicy.SKIP
        averages = average_scores(scores, allow_empty=skip)
        averages.cpr_rule_support, averages.rpr_rule_support = rule_support(delta, self.thresholds)

        for link, n in zip(averages.links, averages.effective_n):
            if n == 0:
                cohort.add_warning("[averages] link {} has no contributing learners".format(link.name))
            elif skip and n < len(delta.learners):
                if self.verbosity > 0:
                    progress("link {}: {} of {} learners contributed".format(link.name, n, len(delta.learners)))

        cohort.add_artifact(self.fuzzy_attribute_name, scores)
        cohort.add_artifact(self.averages_attribute_name, averages)
        if self.verbosity > 0:
            progress("fuzzified {} links".format(len(averages)))
        return cohort

    def summarize(self, cohort: Cohort, **kwargs) -> pd.DataFrame:
        """
        :return: a DataFrame indexed by link with averages, effective_n and crisp rule support
        """
        return cohort.get_artifact(self.averages_attribute_name).to_dataframe()
