from .cohortSpec import *
from .simulator import *
from .recovery import *
