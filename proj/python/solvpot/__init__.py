"""Exactly solvable potentials from hypergeometric and Heun-type equations."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    BadStart,
    FamilySpec,
    InvalidSpec,
    NearPole,
    NotCollapsible,
    NotConverged,
    OutOfDomain,
    SolvpotError,
    StalledMap,
)
