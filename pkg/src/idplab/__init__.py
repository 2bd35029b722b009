"""Exact-arithmetic tools for the integer decomposition property of lattice
polytopes cut out by smooth complete fans.

The pentagon family (smooth complete n-fans with n+3 rays and five primitive
collections) gets a dedicated constructor, a height normal form, and a
constructive Minkowski decomposition with verified certificates; a brute-force
IDP oracle and bounded search harnesses cross-check everything.
"""

from .batyrev import (BatyrevParams, BatyrevStructure, CanonicalHeight, build_batyrev,
                      canonical_height, heights_from_canonical)
from .decompose import (DecompositionCertificate, Decomposer, decompose,
                        decompose_in_splitting_fiber, fiber_heights, project_to_simplex,
                        reduce_fiber, split_simplex_point, structure_case)
from .errors import (CompletenessViolation, ConvexityPostcheckFailed, IdpLabError,
                     NegativeCanonicalParameter, NoLatticePoint, NonPrimitiveRay,
                     NotConvex, NotCovered, PointNotInSum, SmoothnessViolation)
from .fan import (Fan, build_fan, fan_from_dict, find_cone, find_convexity_violation,
                  is_convex, is_splitting, is_strictly_convex, projective_fan,
                  support_value)
from .linalg import determinant, minkowski_sum_points, unimodular_solve
from .polytope import (IdpResult, LatticePolytope, add_heights, hrep_lattice_points,
                       idp_check, rational_vertices)

__version__ = "0.1.0"

def fixture_path(name):
    """Filesystem path of a bundled fixture JSON (for tests and demos)."""
    from importlib.resources import files
    return str(files("idplab") / "fixtures" / name)
