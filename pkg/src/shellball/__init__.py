"""shellball: exact combinatorics of shellable simplicial balls.

Construct the facet families of determinantal initial complexes as
non-intersecting lattice paths, polarize powers of the maximal ideal,
certify shellings and ball gluings step by step, compute exact f/h-vectors
and graded Betti tables by induced-subcomplex homology, and check the
multiplicity bounds L <= e <= U with exact rational arithmetic.
"""

from .bounds import (
    BoundParams,
    ConjectureReport,
    betti_bounds,
    check_conjecture,
    closed_form_bounds,
    cyclic_h,
    cyclic_max_shifts,
    cyclic_multiplicity,
    linear_ball_boundary_h,
    lower_bound_estimate,
)
from .complexes import (
    SimplicialComplex,
    boundary_complex,
    boundary_h_from_h,
    build_complex,
    complex_from_text,
    complex_from_text_with_order,
    complex_to_text,
    f_from_h,
    f_vector,
    h_vector,
    minimal_inside_faces,
    minimal_nonfaces,
    multiplicity,
    read_complex_file,
    smallest_nonface_size,
    vector_profile,
    write_complex_file,
)
from .duality import alexander_dual, dual_matrix, minimal_vertex_covers, verify_dual_theorem
from .homology import (
    BettiTable,
    betti_row_degrees,
    canonical_generator_degrees,
    has_linear_resolution,
    hochster_betti_row,
    hochster_betti_table,
    linear_resolution_reason,
    reduced_homology_ranks,
    shifts,
)
from .paths import (
    MinorSpec,
    PathFamily,
    admits_family_flip,
    boundary_via_corners,
    canonical_generators,
    construct_nonflippable,
    corner_spectrum,
    corners,
    enumerate_facets,
    facet_leq,
    flip,
    h_via_corners,
    is_corner_maximal,
    is_non_flippable,
    nonflippable_discrepancies,
    path_complex,
    random_shelling_orders,
    render_ascii,
    shelling_order,
    sr_generators,
)
from .polarization import multicomplex_facets, polarize, power_ideal_complex, theta
from .shelling import BallCertificate, ShellingCertificate, verify_ball, verify_shelling

__version__ = "0.1.0"

__all__ = [
    "BallCertificate",
    "BettiTable",
    "BoundParams",
    "ConjectureReport",
    "MinorSpec",
    "PathFamily",
    "ShellingCertificate",
    "SimplicialComplex",
    "admits_family_flip",
    "alexander_dual",
    "betti_bounds",
    "betti_row_degrees",
    "boundary_complex",
    "boundary_h_from_h",
    "boundary_via_corners",
    "build_complex",
    "canonical_generator_degrees",
    "canonical_generators",
    "check_conjecture",
    "closed_form_bounds",
    "complex_from_text",
    "complex_from_text_with_order",
    "complex_to_text",
    "construct_nonflippable",
    "corner_spectrum",
    "corners",
    "cyclic_h",
    "cyclic_max_shifts",
    "cyclic_multiplicity",
    "dual_matrix",
    "enumerate_facets",
    "f_from_h",
    "f_vector",
    "facet_leq",
    "flip",
    "h_vector",
    "h_via_corners",
    "has_linear_resolution",
    "hochster_betti_row",
    "hochster_betti_table",
    "is_corner_maximal",
    "is_non_flippable",
    "linear_ball_boundary_h",
    "linear_resolution_reason",
    "lower_bound_estimate",
    "minimal_inside_faces",
    "minimal_nonfaces",
    "minimal_vertex_covers",
    "multicomplex_facets",
    "multiplicity",
    "nonflippable_discrepancies",
    "path_complex",
    "polarize",
    "power_ideal_complex",
    "random_shelling_orders",
    "read_complex_file",
    "reduced_homology_ranks",
    "render_ascii",
    "shelling_order",
    "shifts",
    "smallest_nonface_size",
    "sr_generators",
    "theta",
    "vector_profile",
    "verify_ball",
    "verify_dual_theorem",
    "verify_shelling",
    "write_complex_file",
]
