from .decision import *
from .finalHierarchy import *
from .hierarchyRefiner import HierarchyRefiner
