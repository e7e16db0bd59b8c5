"""Exact computations around character codegrees of finite groups."""
from .errors import (CodegError, DataFileError, InvariantViolation, NonExactQuotient, NonIntegralCodegree,
                     ParseError, UnsupportedFamily)

__version__ = "0.1.0"

__all__ = ["CodegError", "DataFileError", "InvariantViolation", "NonExactQuotient", "NonIntegralCodegree",
           "ParseError", "UnsupportedFamily", "__version__"]
