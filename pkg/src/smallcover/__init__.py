"""Characteristic maps, small covers and lifts over simple polytopes."""

from .combinatorics import (
    PointSet,
    SimplePolytope,
    SimplicialFacets,
    cube,
    cyclic_polytope,
    dual_cyclic,
    dualize,
    f_vector,
    facets_from_points,
    h_vector,
    polygon,
    product,
    simplex,
)
from .gf2 import CharMatrixZ2, canonicalize, enumerate_char_maps, is_characteristic_z2
from .lift import CharMatrixZ, find_lift, is_characteristic_z
from .symmetry import act, automorphisms, orbit_classify

__version__ = "0.1.0"
