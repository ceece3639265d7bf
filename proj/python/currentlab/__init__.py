"""Geodesic currents on the disk: holonomy, dual complexes, and the model geometries."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
