from .membership import *
from .deltaGrades import *
from .fuzzifier import *
