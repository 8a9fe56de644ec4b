"""Chern numbers, bordism operations and SU-bordism generator certificates."""

from ._core import *  # noqa: F401,F403
from ._core import InconsistencyError, StructureError  # noqa: F401
