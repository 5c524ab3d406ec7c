import json
import numbers
from dataclasses import dataclass, asdict
from typing import Dict, Tuple, Union

from prereqrefiner.model import DEFAULT_G_MAX
from prereqrefiner.util import SimulationError


@dataclass(frozen=True)
class CohortSpec:
    """
    Parameters of a synthetic cohort.

    :param n_learners: number of learners to generate
    :param noise_spread: half-width of the uniform grade noise added along every true link, in grade units
    :param base_grade_range: (low, high) range of the uniform grade of root skills
    :param seed: seed of the cohort; fixes every generated grade
    :param prerequisite_gap: mean grade drop from the weakest prerequisite to the dependent skill
    :param g_max: maximum attainable grade; generated grades are clamped to [0, g_max]
    """
    n_learners: int = 100
    noise_spread: float = 2.0
    base_grade_range: Tuple[float, float] = (6.0, 14.0)
    seed: int = 0
    prerequisite_gap: float = 0.0
    g_max: float = DEFAULT_G_MAX

    def __post_init__(self):
        if not isinstance(self.n_learners, numbers.Integral) or self.n_learners < 1:
            raise SimulationError("n_learners must be a positive integer, got {!r}".format(self.n_learners))
        if not self.noise_spread >= 0:
            raise SimulationError("noise_spread must be >= 0, got {!r}".format(self.noise_spread))
        if not self.g_max > 0:
            raise SimulationError("g_max must be positive, got {!r}".format(self.g_max))
        low, high = self.base_grade_range
        if not 0 <= low <= high <= self.g_max:
            raise SimulationError("base_grade_range must satisfy 0 <= low <= high <= g_max, got ({}, {})"
                                  .format(low, high))
        if not isinstance(self.seed, numbers.Integral) or not 0 <= self.seed < 2 ** 64:
            raise SimulationError("seed must be a 64-bit unsigned integer, got {!r}".format(self.seed))

    def to_dict(self) -> Dict:
        d = asdict(self)
        d["base_grade_range"] = list(self.base_grade_range)
        return d

    @staticmethod
    def from_dict(d: Dict) -> 'CohortSpec':
        d = dict(d)
        if "base_grade_range" in d:
            d["base_grade_range"] = tuple(d["base_grade_range"])
        try:
            return CohortSpec(**d)
        except TypeError as e:
            raise SimulationError("malformed cohort spec: {}".format(e))

    @staticmethod
    def read_document(source: str) -> Dict:
        """
        Reads a cohort spec file without building the spec, so callers can merge in settings it leaves out.

        :param source: path to a JSON file holding one object
        """
        try:
            with open(source, "r", encoding="utf-8") as f:
                d = json.load(f)
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            raise SimulationError("cannot read cohort spec {}: {}".format(source, e), source)
        if not isinstance(d, dict):
            raise SimulationError("cohort spec {} must be a JSON object".format(source), source)
        return d

    @staticmethod
    def from_json(source: Union[str, Dict]) -> 'CohortSpec':
        """
        :param source: path to a JSON file, or an already parsed dictionary
        """
        if isinstance(source, dict):
            return CohortSpec.from_dict(source)
        return CohortSpec.from_dict(CohortSpec.read_document(source))
