"""Effective-resistance graph sparsification experiments.

Bridges carry unit effective resistance no matter how rarely they appear,
which is what the weighted scoring strategy exploits; see the project
README for the experiment suite built on top of these primitives.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
