from sklearn.pipeline import Pipeline

from prereqrefiner.model import Cohort


class RefinementPipeline(Pipeline):
    """
    A pipeline of refinement stages. Builds on and inherits functionality from scikit-learn's Pipeline class.

    Per-step parameters are passed as ``<step name>__<parameter>`` keyword arguments to ``transform()``.

    :param steps: a list of (name, transformer) tuples in the order that they are to be called.
    """

    def __init__(self, steps):
        Pipeline.__init__(self, steps)

    def _parse_param_steps(self, params):
        params_steps = {}
        for pname, pval in params.items():
            if '__' not in pname:
                continue
            step, param = pname.split('__', 1)
            params_steps.setdefault(step, {})[param] = pval
        return params_steps

    def transform(self, cohort: Cohort, **params) -> Cohort:
        params_steps = self._parse_param_steps(params)
        for name, transform in self.steps:
            cohort = transform.transform(cohort, **params_steps.get(name, {}))
        return cohort

    def fit_transform(self, cohort: Cohort, y=None, **params) -> Cohort:
        return self.transform(cohort, **params)


def default_pipeline(thresholds=None, decision_config=None, verbosity: int = 0) -> RefinementPipeline:
    """
    The full refinement sequence: grade variations, fuzzification with link averages, then the keep / reverse /
    delete decision with final hierarchy assembly.

    :param thresholds: Thresholds for the membership functions; defaults to (-5, 5, 10)
    :param decision_config: DecisionConfig; defaults to alpha_min = 0.5
    :return: a RefinementPipeline
    """
    from prereqrefiner.fuzzy_engine import DeltaGrades, Fuzzifier
    from prereqrefiner.decision import HierarchyRefiner
    return RefinementPipeline([
        ("delta", DeltaGrades(verbosity=verbosity)),
        ("fuzzify", Fuzzifier(thresholds=thresholds, verbosity=verbosity)),
        ("decide", HierarchyRefiner(config=decision_config, verbosity=verbosity)),
    ])
