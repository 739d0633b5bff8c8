"""Exact volume polynomials, moment polytopes and graded rings built from them."""

from .apolarity import GradedAlgebraPresentation, annihilator_presentation, ideals_equal, pairing_rank
from .errors import (
    CapExceededError,
    CertificationError,
    DomainError,
    PresentationMismatch,
    UnboundedError,
    UnsupportedError,
    VolringError,
)
from .flagring import (
    GLnWeight,
    brion_degree_integral,
    flag_cohomology,
    flag_degree_closed_form,
    flag_volume_polynomial,
    gc_additivity_check,
    gc_dimension_check,
    gc_polytope,
    kostant_check,
)
from .mpoly import MPoly, apply_diffop, interpolate_homogeneous, polarize
from .polykernel import (
    QPolytope,
    ehrhart_count,
    h_from_v,
    integrate,
    lattice_points,
    lattice_volume,
    minkowski_sum,
    polytopes_equal,
    v_from_h,
)
from .rootdata import Weight, build_root_system, weyl_dimension, weyl_group, weight_polytope
from .toricring import ToricFamily, moment_from_divisor, preset, toric_cohomology, toric_volume_polynomial

__version__ = "0.1.0"
