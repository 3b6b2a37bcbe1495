"""Multitriangulations on convex polygons and the half-cylinder.

Enumeration of k-triangulations, star decompositions, the periodic
polygon bijection, pipe dreams (staircase and chevron), orbit flips
with their flip graph, and the associated simplicial complex.
"""

from .bijection import (
    CountReport,
    PeriodicPolygonTriangulation,
    class_of_polygon_edge,
    count_report,
    orbit_of_class,
    phi,
    phi_inverse,
)
from .complexes import ComplexReport, analyze_complex, complex_report_json
from .conjectures import (
    check_bijection_k,
    check_counts_k,
    check_star_decomposition_k,
    check_translation_lemma,
    find_single_translate_replacement,
    minimize_witness,
    run_all_checks,
    stars_containing_angle,
)
from .cylinder import (
    Angle,
    CylinderTriangulation,
    canonical_star,
    expected_class_count,
    relevant_class_candidates,
    short_classes,
    check_maximal_lifting,
    enumerate_cylinder,
    find_angles,
    star_of_angle,
    stars_of,
    unique_spanning_class,
    validate_cylinder_triangulation,
)
from .errors import (
    EdgeTooLong,
    LengthPrecondition,
    MalformedShape,
    MultitriError,
    NotInTriangulation,
    NotPeriodic,
    NotRelevant,
    ShapeMismatch,
    StructureViolation,
    TooLarge,
)
from .flips import (
    FlipGraph,
    build_flip_graph,
    find_multi_representative_stars,
    flip_graph_dot,
    flip_graph_json,
    orbit_flip,
)
from .io import (
    grid_lines,
    parse_triangulation,
    pipedream_json,
    render_ascii,
    render_svg,
    serialize_triangulation,
)
from .pipedreams import (
    BUMP,
    CHEVRON,
    CROSS,
    FELBOW,
    JELBOW,
    STAIRCASE,
    PipeDream,
    PipePath,
    TraceResult,
    boundary_ports,
    cell_edge,
    chevron_from_staircase,
    chevron_stages,
    edges_from_pipedream,
    is_n_periodic,
    is_reflection_symmetric,
    permutation_target,
    staircase_from_triangulation,
    trace_pipes,
)
from .polygon import (
    KStar,
    PolygonTriangulation,
    all_edges,
    common_bisector,
    relevant_candidates,
    short_edges,
    enumerate_polygon,
    enumerate_shift_invariant,
    expected_edge_count,
    is_shift_invariant,
    make_star,
    polygon_flip,
    star_decomposition,
    validate_polygon_triangulation,
)
from .surfaces import (
    Edge,
    EdgeClass,
    SurfaceDesc,
    crosses,
    cyclic_length,
    cyclically_ordered,
    cylinder,
    edge_class_of,
    has_k_plus_1_crossing,
    is_periodic_crossing_free,
    polygon,
    window_translations,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
