"""Prisoners' Dilemma played on a multi-slit diffraction table."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

C = Strategy.Cooperate
D = Strategy.Defect
