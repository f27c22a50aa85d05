"""A_alpha spectral radii and path-factor coverage of small graphs."""

from ._specfac import (  # noqa: F401
    Graph,
    a_alpha,
    audit_inequalities,
    case_char_poly,
    case_graph,
    claim1_graph,
    complement,
    complete,
    connected_components,
    cubic_roots,
    deficiency_check,
    disjoint_union,
    eigenvalues,
    empty_graph,
    eta,
    extremal_graph,
    f_alpha,
    graph6_decode,
    graph6_encode,
    has_p2_factor,
    induced_delete,
    is_connected,
    is_covered_direct,
    is_covered_structural,
    is_equitable,
    isolated_count,
    join,
    path_graph,
    quotient,
    quotient_largest_eig,
    random_connected_graph,
    sequential_join,
    spectral_radius,
    theta,
    threshold_in_domain,
    __version__,
)
