"""Simplicial complexes, Hodge Laplacians and Fourier quantum walks on simplices."""

from ._core import (
    DegenerateSimplex,
    Error,
    InvalidEdge,
    InvalidParameter,
    IoError,
    IsolatedSimplex,
    NoAdjacency,
    NumericalError,
    ParseError,
    QuantumWalk,
    SimplicialComplex,
    UnknownSimplex,
    adjacency,
    betti_number,
    boundary_matrix,
    canonical_simplex,
    clique_complex,
    detect_communities,
    exact_down_communities,
    exact_up_communities,
    from_simplices,
    hodge_laplacian,
    laplacian_spectrum,
    load_edge_list,
    lower_neighbourhood,
    read_edge_list,
    simplicial_modularity,
    verify_chain_identities,
    verify_symmetry,
)

__version__ = "0.1.0"
