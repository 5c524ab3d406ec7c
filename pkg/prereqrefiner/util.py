import sys
import math
from decimal import Decimal, ROUND_HALF_UP
from typing import Optional

ARROW = "→"


class PipelineError(ValueError):
    """
    Base class for every error raised by a pipeline stage. The message is prefixed with the stage name so that
    errors surfacing at the command line always say where they came from.

    :param stage: name of the stage raising the error, e.g. 'hierarchy' or 'grades'
    :param message: human-readable description
    :param element: the offending skill, link or learner (if any)
    """

    def __init__(self, stage: str, message: str, element=None):
        self.stage = stage
        self.message = message
        self.element = element
        super().__init__("[{}] {}".format(stage, message))


class HierarchyError(PipelineError):
    def __init__(self, message: str, element=None):
        super().__init__("hierarchy", message, element)


class GradeError(PipelineError):
    def __init__(self, message: str, element=None):
        super().__init__("grades", message, element)


class ThresholdError(PipelineError):
    def __init__(self, message: str, element=None):
        super().__init__("thresholds", message, element)


class ConfigError(PipelineError):
    def __init__(self, message: str, element=None):
        super().__init__("config", message, element)


class SimulationError(PipelineError):
    def __init__(self, message: str, element=None):
        super().__init__("simulator", message, element)


def warn(text: str):
    """
    Pre-pends a red-colored 'WARNING: ' to [text] and writes it to the error stream.

    :param text: Warning message
    :return: None
    """
    print('\033[91m' + "WARNING: " + '\033[0m' + text, file=sys.stderr)


def progress(text: str):
    """Status line for verbose loops; never written to standard output."""
    print(text, file=sys.stderr)


def link_name(source: str, target: str) -> str:
    return "{}{}{}".format(source, ARROW, target)


def round_half_away(value: Optional[float], decimals: int = 2) -> Optional[float]:
    """
    Rounds half away from zero at the given number of decimals, which is how the membership tables are printed.
    NaN and None are passed through as None.

    :param value: value to round
    :param decimals: number of decimals to keep
    :return: rounded float
    """
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return None
    quantum = Decimal(1).scaleb(-decimals)
    sign = -1 if value < 0 else 1
    rounded = Decimal(repr(abs(float(value)))).quantize(quantum, rounding=ROUND_HALF_UP)
    result = sign * float(rounded)
    return 0.0 if result == 0 else result


def format_value(value: Optional[float], decimals: int = 2, trim: bool = False) -> str:
    """
    Formats a number for the CSV tables; empty string for missing values.

    :param trim: if True, integral values are written without decimals (used for the delta table)
    """
    rounded = round_half_away(value, decimals)
    if rounded is None:
        return ""
    if trim and float(rounded).is_integer():
        return str(int(rounded))
    return "{:.{}f}".format(rounded, decimals)
