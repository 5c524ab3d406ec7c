import math
import numbers
from dataclasses import dataclass

import numpy as np

from prereqrefiner.util import ThresholdError

DEFAULT_S1 = -5.0
DEFAULT_S2 = 5.0
DEFAULT_S3 = 10.0


@dataclass(frozen=True)
class Thresholds:
    """
    The three grade-variation thresholds shaping the two membership functions.

    :param s1: lower end of the CPR support (negative)
    :param s2: upper end of the CPR support and peak of the RPR function (positive)
    :param s3: upper end of the RPR support (greater than s2)
    """
    s1: float = DEFAULT_S1
    s2: float = DEFAULT_S2
    s3: float = DEFAULT_S3

    def __post_init__(self):
        for name in ("s1", "s2", "s3"):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise ThresholdError("{} must be a finite number, got {!r}".format(name, value), name)
        if not self.s1 < 0:
            raise ThresholdError("s1 must be negative", "s1")
        if not self.s2 > 0:
            raise ThresholdError("s2 must be positive", "s2")
        if not self.s3 > self.s2:
            raise ThresholdError("s3 must exceed s2", "s3")


def _as_result(out: np.ndarray):
    return float(out) if out.ndim == 0 else out


def mu_cpr(delta, t: Thresholds):
    """
    Membership degree of a grade variation in the fuzzy set of correct prerequisite relationships. Triangular, with
    support [s1, s2] and peak 1 at a variation of 0:

    - 0 if delta < s1
    - 1 - delta / s1 if s1 <= delta <= 0
    - 1 - delta / s2 if 0 < delta <= s2
    - 0 if delta > s2

    :param delta: a grade variation, or an array of them (NaN passes through)
    :param t: the thresholds
    :return: float or array in [0, 1]
    """
    d = np.asarray(delta, dtype=float)
    out = np.where((t.s1 <= d) & (d <= 0), 1 - d / t.s1,
                   np.where((0 < d) & (d <= t.s2), 1 - d / t.s2, 0.0))
    out = np.where(np.isnan(d), np.nan, out)
    return _as_result(out)


def mu_rpr(delta, t: Thresholds):
    """
    Membership degree of a grade variation in the fuzzy set of reversed prerequisite relationships. Triangular, with
    support [0, s3] and peak 1 at a variation of s2:

    - 0 if delta < 0
    - delta / s2 if 0 <= delta <= s2
    - (s3 - delta) / (s3 - s2) if s2 < delta <= s3
    - 0 if delta > s3

    :param delta: a grade variation, or an array of them (NaN passes through)
    :param t: the thresholds
    :return: float or array in [0, 1]
    """
    d = np.asarray(delta, dtype=float)
    out = np.where((0 <= d) & (d <= t.s2), d / t.s2,
                   np.where((t.s2 < d) & (d <= t.s3), (t.s3 - d) / (t.s3 - t.s2), 0.0))
    out = np.where(np.isnan(d), np.nan, out)
    return _as_result(out)


def in_cpr_rule(delta, t: Thresholds):
    """Crisp rule: s1 <= delta <= s2 classifies the link as a correct prerequisite relationship."""
    d = np.asarray(delta, dtype=float)
    return (t.s1 <= d) & (d <= t.s2)


def in_rpr_rule(delta, t: Thresholds):
    """Crisp rule: s2 <= delta <= s3 classifies the link as a reversed prerequisite relationship."""
    d = np.asarray(delta, dtype=float)
    return (t.s2 <= d) & (d <= t.s3)
