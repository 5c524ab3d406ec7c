from abc import ABC, abstractmethod
from .model import Cohort


class Transformer(ABC):
    """
    Abstract base class for pipeline stages that take in a Cohort and extend it with the artifacts they compute,
    imitating the scikit-learn Transformer API. Exposes ``fit()`` and ``transform()`` methods. ``fit()`` performs any
    necessary precomputation, while ``transform()`` does the work of actually computing the stage's artifact and
    storing it on the cohort.

    All subclasses must implement ``transform()``; the refinement stages need no precomputation, so ``fit()`` by
    default does nothing. ``fit_transform()`` calls ``fit()`` followed by ``transform()``.
    """

    def fit(self, cohort: Cohort, y=None, **kwargs):
        """Use the provided Cohort to perform any precomputations necessary to
        later perform the actual transformation step.

        :param cohort: the Cohort to use for fitting

        :return: the fitted Transformer
        """
        return self

    @abstractmethod
    def transform(self, cohort: Cohort, **kwargs) -> Cohort:
        """Annotate the provided cohort. This is an abstract method that must be
        implemented by any Transformer subclass

        :param cohort: the Cohort to transform

        :return: the same Cohort, with this stage's artifacts added. ``transform()`` operates inplace on the
            Cohort (though for convenience and compatibility with scikit-learn, it also returns it).
        """
        pass

    def fit_transform(self, cohort: Cohort, y=None, **kwargs) -> Cohort:
        """Fit and run the Transformer on a single Cohort.

        :param cohort: the Cohort to use

        :return: same as transform
        """
        self.fit(cohort, y=y, **kwargs)
        return self.transform(cohort, **kwargs)

    def summarize(self, cohort: Cohort, **kwargs):
        pass
