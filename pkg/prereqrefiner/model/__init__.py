from .skill import Skill, Edge
from .hierarchy import Hierarchy, build_hierarchy, to_matrix, edges_of, load_hierarchy
from .labeledMatrix import LabeledMatrix
from .gradeMatrix import GradeMatrix, MissingPolicy, load_grades, grade_of, DEFAULT_G_MAX
from .cohort import Cohort, check_skill_sets
