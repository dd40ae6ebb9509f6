"""Guaranteed interval enclosures of the series-RLC unit-step response."""

from ._rlcband import *  # noqa: F401,F403
from ._rlcband import RlcBandError, run_cli  # noqa: F401

__version__ = "0.1.0"
