import math
from enum import Enum
from typing import Sequence, Union, TextIO, Optional

import numpy as np
import pandas as pd

from prereqrefiner.util import GradeError
from .labeledMatrix import LabeledMatrix

DEFAULT_G_MAX = 20.0


class MissingPolicy(str, Enum):
    """
    What to do with empty cells in a grade file. STRICT rejects them; SKIP keeps them as NaN and excludes the learner
    from the averages of every link touching the missing skill.
    """
    STRICT = "STRICT"
    SKIP = "SKIP"


class GradeMatrix(LabeledMatrix):
    """
    The learners x skills table of assessment grades, on a 0..g_max scale. Rows are learners, columns are skills;
    both keep the order of the source file.

    :param learners: learner ids, one per row
    :param skills: skill ids, one per column
    :param values: grades; NaN marks a missing cell (only allowed under the SKIP policy)
    :param g_max: maximum attainable grade
    :param missing_policy: STRICT or SKIP
    """

    def __init__(self, learners: Sequence[str], skills: Sequence[str], values, g_max: float = DEFAULT_G_MAX,
                 missing_policy: MissingPolicy = MissingPolicy.STRICT):
        super().__init__("grades", values, ids=learners, columns=skills)
        if not g_max > 0:
            raise GradeError("g-max must be positive, got {}".format(g_max))
        self.g_max = float(g_max)
        self.missing_policy = MissingPolicy(missing_policy)
        self._validate()

    @property
    def learners(self):
        return self.ids

    @property
    def skills(self):
        return self.columns

    @property
    def has_missing(self) -> bool:
        return bool(np.isnan(self.matrix).any())

    def _validate(self):
        if len(set(self.ids)) != len(self.ids):
            dup = next(i for i in self.ids if self.ids.count(i) > 1)
            raise GradeError("duplicate learner id: {}".format(dup), dup)
        if len(set(self.columns)) != len(self.columns):
            dup = next(c for c in self.columns if self.columns.count(c) > 1)
            raise GradeError("duplicate skill column: {}".format(dup), dup)
        for (row, col), v in np.ndenumerate(self.matrix):
            learner, skill = self.ids[row], self.columns[col]
            if math.isnan(v):
                if self.missing_policy == MissingPolicy.STRICT:
                    raise GradeError("missing grade for learner {}, skill {}".format(learner, skill),
                                     (learner, skill))
            elif not 0 <= v <= self.g_max:
                raise GradeError("grade {} out of range [0, {}] for learner {}, skill {}"
                                 .format(_format_grade(v), _format_grade(self.g_max), learner, skill),
                                 (learner, skill))

    def to_csv(self, path_or_buf: Optional[Union[str, TextIO]] = None):
        """
        Writes the grade matrix in the grade file format (first column `learner`, one column per skill).
        Values are written at full precision so that loading the file again gives identical values.

        :param path_or_buf: file path or text stream; if None the CSV text is returned
        """
        df = pd.DataFrame([[_format_grade(v) for v in row] for row in self.matrix],
                          columns=list(self.columns))
        df.insert(0, "learner", list(self.ids))
        return df.to_csv(path_or_buf, index=False, lineterminator="\n")


def _format_grade(v: float) -> str:
    if math.isnan(v):
        return ""
    if float(v).is_integer():
        return str(int(v))
    return repr(float(v))


def _parse_cell(cell: str, learner: str, skill: str) -> float:
    cell = cell.strip()
    if cell == "":
        return float("nan")
    try:
        value = float(cell)
    except ValueError:
        raise GradeError("non-numeric grade {!r} for learner {}, skill {}".format(cell, learner, skill),
                         (learner, skill))
    if math.isnan(value) or math.isinf(value):
        raise GradeError("non-numeric grade {!r} for learner {}, skill {}".format(cell, learner, skill),
                         (learner, skill))
    return value


def load_grades(source: Union[str, TextIO], g_max: float = DEFAULT_G_MAX,
                missing_policy: MissingPolicy = MissingPolicy.STRICT) -> GradeMatrix:
    """
    Loads and validates a grade file: a header row of skill ids after a first learner-id column, then one row per
    learner. Row and column order are preserved.

    :param source: path to a CSV file or a text stream
    :param g_max: maximum attainable grade
    :param missing_policy: STRICT (empty cells are an error) or SKIP (empty cells are kept as missing)
    :return: the validated GradeMatrix
    """
    try:
        raw = pd.read_csv(source, header=None, dtype=str, keep_default_na=False, encoding="utf-8",
                          skip_blank_lines=True)
    except FileNotFoundError:
        raise GradeError("grade file not found: {}".format(source), source)
    except pd.errors.EmptyDataError:
        raise GradeError("grade file is empty")
    except pd.errors.ParserError as e:
        raise GradeError("malformed grade file: {}".format(e))
    except UnicodeDecodeError as e:
        raise GradeError("grade file {} is not valid UTF-8: {}".format(source, e), source)

    header = [h.strip() if isinstance(h, str) else "" for h in raw.iloc[0].tolist()]
    if len(header) < 2:
        raise GradeError("grade file needs a learner column and at least one skill column")
    skills = header[1:]
    learners = []
    values = []
    for _, row in raw.iloc[1:].iterrows():
        # short rows come back padded with NaN
        cells = [c if isinstance(c, str) else "" for c in row.tolist()]
        learner = cells[0].strip()
        learners.append(learner)
        values.append([_parse_cell(cell, learner, skill) for cell, skill in zip(cells[1:], skills)])

    matrix = np.array(values, dtype=float).reshape(len(learners), len(skills))
    return GradeMatrix(learners, skills, matrix, g_max=g_max, missing_policy=missing_policy)


def grade_of(m: GradeMatrix, learner: str, skill: str) -> float:
    """
    :return: the stored grade of `learner` on `skill`
    """
    if learner not in m.ids_to_idx:
        raise GradeError("unknown learner: {}".format(learner), learner)
    if skill not in m.cols_to_idx:
        raise GradeError("unknown skill: {}".format(skill), skill)
    return m.value(learner, skill)
