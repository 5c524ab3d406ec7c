from typing import Dict, List

from prereqrefiner.util import GradeError, warn
from .hierarchy import Hierarchy
from .gradeMatrix import GradeMatrix


def check_skill_sets(grades: GradeMatrix, hierarchy: Hierarchy):
    """
    Raises a GradeError naming the first skill present in only one of the two inputs.
    """
    grade_skills = set(grades.skills)
    for skill_id in hierarchy.skill_ids:
        if skill_id not in grade_skills:
            raise GradeError("grade file has no column for hierarchy skill {}".format(skill_id), skill_id)
    hierarchy_skills = set(hierarchy.skill_ids)
    for skill_id in grades.skills:
        if skill_id not in hierarchy_skills:
            raise GradeError("grade column {} is not a skill of the hierarchy".format(skill_id), skill_id)


class Cohort:
    """
    Represents one refinement run's data: an expert hierarchy paired with the grades of a cohort of learners.
    Pipeline stages store what they compute under ``artifacts`` (e.g. 'delta', 'fuzzy', 'averages', 'decisions',
    'final') so later stages and the reporting layer can read them back.

    :param hierarchy: the expert's initial hierarchy
    :param grades: the learners x skills grade matrix; its skill set must equal the hierarchy's

    :ivar artifacts: stage outputs, keyed by artifact name
    :ivar warnings: warnings collected by the stages, in the order they were raised
    """

    def __init__(self, hierarchy: Hierarchy, grades: GradeMatrix):
        check_skill_sets(grades, hierarchy)
        self.hierarchy = hierarchy
        self.grades = grades
        self.artifacts: Dict[str, object] = dict()
        self.warnings: List[str] = []

    def add_artifact(self, name: str, value) -> None:
        self.artifacts[name] = value

    def get_artifact(self, name: str, default=None):
        return self.artifacts.get(name, default)

    def has_artifact(self, name: str) -> bool:
        return name in self.artifacts

    def add_warning(self, text: str, verbose: bool = True) -> None:
        self.warnings.append(text)
        if verbose:
            warn(text)

    def print_summary_stats(self) -> None:
        print("Number of Skills: {}".format(len(self.hierarchy.skill_ids)))
        print("Number of Links: {}".format(len(self.hierarchy.edges)))
        print("Number of Learners: {}".format(len(self.grades.learners)))

    def __repr__(self):
        return "Cohort(skills: {}, links: {}, learners: {}, artifacts: {})".format(
            len(self.hierarchy.skill_ids), len(self.hierarchy.edges), len(self.grades.learners),
            list(self.artifacts))
