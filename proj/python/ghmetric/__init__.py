"""Finite metric spaces, exact Gromov-Hausdorff distances and bead constructions."""

from ._core import *  # noqa: F401,F403

__version__ = "0.1.0"
