from .util import *
from .model import *
from .transformer import *
from .refinerPipeline import *
from .fuzzy_engine import *
from .decision import *
from .reporting import *
from .simulator import *
