"""tilt-forge

Tilting objects for graded singularity categories of cyclic quotient
singularities: McKay quivers, Beilinson algebras, quadratic duals, idempotent
truncations and exceptional collections on the Euler lattice.
"""

__author__ = 'tilt-forge developers'

from .api import TiltForge
from .fixtures import get_fixture, FIXTURES
from . import models
