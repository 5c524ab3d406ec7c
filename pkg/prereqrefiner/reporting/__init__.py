from .report import *
from .dot import *
from .tables import *
from .writer import *
