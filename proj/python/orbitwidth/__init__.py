"""Width bounds, moment graphs and numerical certification for isospectral
Hermitian orbits of U(n).

Spectra enter as comma-separated rational strings ("3,1/2,0"); exact rational
results come back as strings, numerical matrices as numpy arrays.
"""

from ._core import (
    OrbitError,
    __version__,
    contains,
    difference_gcd,
    fixed_points,
    flag_to_hermitian,
    flag_type,
    gkm_graph_dot,
    gkm_graph_json,
    h2_generators,
    hull_membership,
    intersect,
    kks_eval,
    line_through,
    minimal_coset_reps,
    moment_map,
    orbit_dimensions,
    orthonormalize,
    parse_spectrum,
    poincare_polynomial,
    sphere_area,
    sphere_point,
    subspace_distance,
    subspace_sum,
    width_report,
    width_report_json,
)

__all__ = [
    "OrbitError",
    "__version__",
    "contains",
    "difference_gcd",
    "fixed_points",
    "flag_to_hermitian",
    "flag_type",
    "gkm_graph_dot",
    "gkm_graph_json",
    "h2_generators",
    "hull_membership",
    "intersect",
    "kks_eval",
    "line_through",
    "minimal_coset_reps",
    "moment_map",
    "orbit_dimensions",
    "orthonormalize",
    "parse_spectrum",
    "poincare_polynomial",
    "sphere_area",
    "sphere_point",
    "subspace_distance",
    "subspace_sum",
    "width_report",
    "width_report_json",
]
