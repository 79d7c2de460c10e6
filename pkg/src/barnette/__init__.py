"""Generation and analysis toolkit for cubic 3-connected planar bipartite graphs."""

from .graphs import (
    BipartiteGraph,
    Cut,
    GraphError,
    bits,
    connected_components,
    is_connected,
    is_k_connected,
    shore_colour_balance,
    two_colour,
    vertex_mask,
    with_colouring,
)
from .canon import are_isomorphic, canonical_form
from .io import from_bgf, from_graph6, to_bgf, to_graph6
from .embedding import (
    C4Site,
    RotationEmbedding,
    embed_planar,
    euler_check,
    face_vertices,
    faces,
    facial_c4_expansion_sites,
)
from .matching import (
    OracleBoundError,
    PerfectMatching,
    allowed_edges,
    cover_graph,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_brace,
    is_k_extendable,
    is_matching_covered,
    oracle_bound,
    perfect_matching,
)
from .hamiltonicity import (
    HamiltonianCycle,
    HamiltonicityEngine,
    PropertyResult,
    cycle_to_matchings,
    find_hamiltonian_cycle,
    has_h_minus,
    has_h_plus_minus,
    is_hamiltonian,
    is_pk_hamiltonian,
    property_profile,
)
from .tightcut import (
    Contraction,
    DecompositionResult,
    DecompositionStep,
    contract,
    cubic_three_connected,
    cut_from_edge_ids,
    cuts_compatible,
    family_is_laminar,
    find_nontrivial_tight_cut,
    find_tight_cuts_cubic,
    is_cyclically_4_connected,
    is_tight,
    maximal_laminar_family,
    tight_cut_decomposition,
)
from .constructions import (
    CycleSaturationError,
    K33Bisubdivision,
    Orientation,
    Splice,
    braces_pfaffian_consistency,
    conformal_cross,
    conformal_cycles,
    cubic_trisum,
    enumerate_simple_cycles,
    find_conformal_k33_bisubdivision,
    find_pfaffian_orientation,
    is_conformal_subgraph,
    is_oddly_oriented,
    splice,
    trisum,
)
from .expansion import (
    ExpansionSite,
    TightCutFamily,
    c4_expand,
    cube_expand,
    general_c4_expand,
    update_family_c4,
    update_family_cube,
)
from .catalog import CatalogEntry, CatalogError, catalog, catalog_names
from .generator import GenerationRecord, class_counts, generate, survey, verify_record

__all__ = [name for name in dir() if not name.startswith("_")]
