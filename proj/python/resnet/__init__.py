"""Exact and spectral effective resistance on resistor networks."""

from ._resnet import *  # noqa: F401,F403
from ._resnet import (
    BudgetExceeded,
    DisconnectedNetwork,
    MalformedNetwork,
    ParseError,
    ReductionError,
    ResnetError,
    SingularSystem,
)

__version__ = "0.1.0"
