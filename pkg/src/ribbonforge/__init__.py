"""ribbonforge: ribbon graphs as arrow presentations.

Build ribbon graphs, compute their surface geometry, take minors and
partial duals, canonicalize and compare them, search for forbidden minors,
and decide whether a ribbon graph is the all-A state graph of a link
diagram — with verified witnesses and replayable certificates throughout.
"""

from .acceptance import CriterionResult, criterion_numbers, run_all, run_criterion
from .canonical import canonical_key, equivalent
from .enumeration import (
    SINGLE_VERTEX,
    EnumerationFilter,
    enumerate_all,
    enumerate_by_slots,
    enumerate_presentations,
    random_ribbon_graph,
)
from .errors import (
    ClaimViolation,
    EmptyLabelError,
    InternalInvariantViolation,
    LabelCountError,
    NotABouquet,
    NotConnected,
    OrientabilityViolation,
    ParseError,
    RibbonError,
    SizeBoundExceeded,
    StrandCountError,
    UnknownLabel,
    UnknownVertex,
)
from .limits import (
    CANONICAL_MAX_EDGES,
    ENUMERATION_MAX_EDGES,
    MINOR_SEARCH_MAX_EDGES,
    PLANE_DUAL_MAX_EDGES,
)
from .links import (
    IntersectionGraph,
    PDCode,
    Verdict,
    all_A_ribbon_graph,
    brute_force_plane_dual,
    defines_plane_biseparation,
    intersection_graph,
    is_separating_vertex,
    parse_pd,
    pd_code,
    represents_link,
    serialize_pd,
)
from .minors import (
    MinorScript,
    apply_step,
    b_family_members,
    bbar1_script,
    build_B,
    build_Bbar1,
    build_theta_t,
    contraction_chain_Bn,
    excluded_minor_scan,
    extract_genus_minor,
    has_minor,
    one_step_minors,
    replay,
    verified_script,
)
from .moves import contract_edge, delete_edge, geometric_dual, partial_dual
from .presentation import (
    EMPTY,
    Arrow,
    ArrowPresentation,
    component_count,
    components,
    delete_vertex,
    disjoint_union,
    from_words,
    parse_arp,
    presentation,
    restriction,
    serialize_arp,
    spanning_tree,
    underlying_edges,
)
from .surfaces import (
    SurfaceSummary,
    boundary_component_count,
    euler_genus,
    is_orientable,
    is_plane,
    surface_summary,
    trace_boundary,
    twists,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "ArrowPresentation",
    "CANONICAL_MAX_EDGES",
    "ClaimViolation",
    "CriterionResult",
    "EMPTY",
    "ENUMERATION_MAX_EDGES",
    "EmptyLabelError",
    "EnumerationFilter",
    "IntersectionGraph",
    "InternalInvariantViolation",
    "LabelCountError",
    "MINOR_SEARCH_MAX_EDGES",
    "MinorScript",
    "NotABouquet",
    "NotConnected",
    "OrientabilityViolation",
    "PDCode",
    "PLANE_DUAL_MAX_EDGES",
    "ParseError",
    "RibbonError",
    "SINGLE_VERTEX",
    "SizeBoundExceeded",
    "StrandCountError",
    "SurfaceSummary",
    "UnknownLabel",
    "UnknownVertex",
    "Verdict",
    "all_A_ribbon_graph",
    "apply_step",
    "b_family_members",
    "bbar1_script",
    "boundary_component_count",
    "brute_force_plane_dual",
    "build_B",
    "build_Bbar1",
    "build_theta_t",
    "canonical_key",
    "component_count",
    "components",
    "contract_edge",
    "contraction_chain_Bn",
    "criterion_numbers",
    "defines_plane_biseparation",
    "delete_edge",
    "delete_vertex",
    "disjoint_union",
    "enumerate_all",
    "enumerate_by_slots",
    "enumerate_presentations",
    "equivalent",
    "euler_genus",
    "excluded_minor_scan",
    "extract_genus_minor",
    "from_words",
    "geometric_dual",
    "has_minor",
    "intersection_graph",
    "is_orientable",
    "is_plane",
    "is_separating_vertex",
    "one_step_minors",
    "parse_arp",
    "parse_pd",
    "partial_dual",
    "pd_code",
    "presentation",
    "random_ribbon_graph",
    "replay",
    "represents_link",
    "restriction",
    "run_all",
    "run_criterion",
    "serialize_arp",
    "serialize_pd",
    "spanning_tree",
    "surface_summary",
    "trace_boundary",
    "twists",
    "underlying_edges",
    "verified_script",
]
