from dataclasses import dataclass, replace
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from joblib import Parallel, delayed
from sklearn.metrics import accuracy_score, confusion_matrix, precision_recall_fscore_support

from prereqrefiner.decision import DecisionConfig, EdgeDecision, Verdict
from prereqrefiner.fuzzy_engine import Thresholds
from prereqrefiner.model import Cohort, Edge, Hierarchy
from prereqrefiner.refinerPipeline import default_pipeline
from prereqrefiner.util import SimulationError, progress
from .cohortSpec import CohortSpec
from .simulator import expected_verdicts, generate_cohort, perturb_hierarchy

VERDICT_LABELS = (Verdict.KEPT.value, Verdict.REVERSED.value, Verdict.DELETED.value)


@dataclass(frozen=True)
class RecoveryStats:
    """
    How well a refinement run recovered the expected verdicts.

    :param confusion: expected verdict -> predicted verdict -> number of links
    :param precision: per predicted verdict; 0.0 for a verdict never predicted
    :param recall: per expected verdict; 0.0 for a verdict never expected
    :param accuracy: fraction of links whose verdict was recovered
    :param links: (link, expected, predicted) per evaluated link, in the order of the predictions
    """
    confusion: Dict[str, Dict[str, int]]
    precision: Dict[str, float]
    recall: Dict[str, float]
    accuracy: float
    links: Tuple[Tuple[str, str, str], ...] = ()

    @property
    def n_links(self) -> int:
        return sum(sum(row.values()) for row in self.confusion.values())

    def to_dict(self) -> Dict:
        return {
            "n_links": self.n_links,
            "accuracy": self.accuracy,
            "confusion": self.confusion,
            "precision": self.precision,
            "recall": self.recall,
            "links": [{"link": link, "expected": exp, "predicted": pred} for link, exp, pred in self.links],
        }


def evaluate_recovery(truth_decisions: Mapping[Edge, Verdict], predicted: Sequence[EdgeDecision]) -> RecoveryStats:
    """
    Compares predicted verdicts against the expected ones.

    :param truth_decisions: expected verdict per link, e.g. from expected_verdicts()
    :param predicted: decisions of a refinement run over the same links
    :return: RecoveryStats
    """
    predicted_links = [d.original for d in predicted]
    if len(set(predicted_links)) != len(predicted_links):
        raise SimulationError("predicted decisions contain a link more than once")
    missing = [e.name for e in truth_decisions if e not in set(predicted_links)]
    extra = [e.name for e in predicted_links if e not in truth_decisions]
    if missing or extra:
        raise SimulationError("link sets differ; expected only: {}; predicted only: {}".format(
            ", ".join(missing) or "-", ", ".join(extra) or "-"), missing + extra)

    y_true = [Verdict(truth_decisions[d.original]).value for d in predicted]
    y_pred = [d.verdict.value for d in predicted]
    if not y_pred:
        raise SimulationError("no links to evaluate")

    counts = confusion_matrix(y_true, y_pred, labels=list(VERDICT_LABELS))
    precision, recall, _, _ = precision_recall_fscore_support(y_true, y_pred, labels=list(VERDICT_LABELS),
                                                              zero_division=0)
    return RecoveryStats(
        confusion={t: {p: int(counts[i, j]) for j, p in enumerate(VERDICT_LABELS)}
                   for i, t in enumerate(VERDICT_LABELS)},
        precision={v: float(p) for v, p in zip(VERDICT_LABELS, precision)},
        recall={v: float(r) for v, r in zip(VERDICT_LABELS, recall)},
        accuracy=float(accuracy_score(y_true, y_pred)),
        links=tuple((d.original.name, t, p) for d, t, p in zip(predicted, y_true, y_pred)),
    )


def run_recovery_experiment(truth: Hierarchy, spec: CohortSpec, reverse: Iterable[Edge] = (),
                            thresholds: Optional[Thresholds] = None, config: Optional[DecisionConfig] = None,
                            n_jobs: int = 1, verbosity: int = 0) -> Tuple[RecoveryStats, Cohort]:
    """
    Generates a cohort from `truth`, refines the expert hierarchy obtained by reversing `reverse`, and scores the
    decisions against the verdicts a perfect refinement would give.

    :return: the RecoveryStats and the refined cohort
    """
    thresholds = thresholds if thresholds is not None else Thresholds()
    expert = perturb_hierarchy(truth, reverse)
    grades = generate_cohort(truth, spec, thresholds, n_jobs=n_jobs, verbosity=verbosity)
    cohort = Cohort(expert, grades)
    default_pipeline(thresholds, config, verbosity=verbosity).transform(cohort)
    stats = evaluate_recovery(expected_verdicts(truth, expert), cohort.get_artifact("decisions"))
    return stats, cohort


def _verdict_of(truth: Hierarchy, link: Edge, spec: CohortSpec, thresholds, config) -> Verdict:
    _, cohort = run_recovery_experiment(truth, spec, [link], thresholds, config)
    flipped = link.reversed()
    return next(d.verdict for d in cohort.get_artifact("decisions") if d.original == flipped)


def reversal_detection_rate(truth: Hierarchy, link: Edge, spec: CohortSpec, seeds: Iterable[int],
                            thresholds: Optional[Thresholds] = None, config: Optional[DecisionConfig] = None,
                            n_jobs: int = 1, verbosity: int = 0) -> float:
    """
    Fraction of seeds for which an expert who reversed `link` gets that link back as REVERSED.

    :param truth: ground-truth hierarchy containing `link`
    :param link: the link the expert mis-oriented
    :param spec: cohort parameters; its seed is replaced by each of `seeds`
    :param seeds: cohort seeds to run
    :param n_jobs: number of joblib workers, one experiment per seed
    :return: detection rate in [0, 1]
    """
    seeds = list(seeds)
    if not seeds:
        raise SimulationError("at least one seed is required")
    verdicts: List[Verdict] = Parallel(n_jobs=n_jobs, prefer="threads")(
        delayed(_verdict_of)(truth, link, replace(spec, seed=s), thresholds, config) for s in seeds)
    detected = sum(1 for v in verdicts if v == Verdict.REVERSED)
    if verbosity > 0:
        progress("link {} reversed in {}/{} runs".format(link.name, detected, len(seeds)))
    return detected / len(seeds)
