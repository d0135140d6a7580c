"""Kirchhoff polynomials, graph hypersurfaces and their Grothendieck classes."""

from .count import (
    StrataCount,
    count_multi_vanishing,
    count_zeros,
    cremona_point_check,
    verify_class,
)
from .embedding import FaceSet, RotationSystem, dual, faces, family_rotation, wheel_rotation
from .errors import DefectError, DomainTooLargeError, EmbeddingError, GraphMotiveError, NotConnectedError
from .graph import (
    BlockDecomposition,
    Edge,
    Multigraph,
    blocks,
    family,
    is_connected,
    is_cyclic_block,
    spanning_tree_count,
    spanning_trees,
    wheel,
)
from .irred import Kind, Verdict, classify_graph, classify_poly, duality_irreducibility_check
from .kirchhoff import cremona_identity_check, psi, psi_block_product_check, psi_family
from .motive import (
    ClassPoly,
    affine_class,
    banana_off_sigma_class,
    evaluate_at_q,
    family_class,
    hyperplane_section,
    line_sigma_class,
    projective_class,
    sigma_class,
    sn_class,
)
from .multipoly import (
    SubsetPoly,
    add,
    degree,
    evaluate_mod,
    find_disjoint_factorization,
    is_homogeneous,
    mul_disjoint,
    reciprocal_transform,
)

__version__ = "0.1.0"
