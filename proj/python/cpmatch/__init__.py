"""Belief-propagation and cutting-plane solvers for maximum weight matching."""

from ._cpmatch import *  # noqa: F401,F403
from ._cpmatch import __doc__  # noqa: F401
