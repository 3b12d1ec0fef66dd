"""Exact mixed volumes of polyhedron pairs and related invariants."""

from .errors import (
    DimensionError,
    EmptyPolyhedronError,
    MixvolError,
    NotConvenientError,
    NotEssentialError,
    NotPointedError,
    PreconditionError,
    SupportConeMismatch,
    UnboundedDifferenceError,
    UnboundedError,
    UnsupportedError,
)
from .invariants import (
    chi_compatible_faces,
    collection_multiplicity,
    det_multiplicity,
    determinant_encoding,
    euler_char_det,
    gz_index,
    milnor_number,
    radial_index_det,
    res_eg,
    resultantal_multiplicity,
)
from .lattice import count_points, count_points_pair, prism_mixed_volume_direct, prism_mixed_volume_lattice
from .pairs import (
    PolyhedronPair,
    is_convenient,
    mixed_volume_pairs,
    pair_volume,
    prism,
    stable_mixed_volume_pairs,
)
from .polyhedron import (
    Polyhedron,
    convex_hull,
    lattice_volume,
    minkowski_sum,
    mixed_volume,
    newton_polyhedron,
    orthant,
    simplex_complement,
    support_face,
    support_value,
)
from .resultants import codim_config, essential_subcollection, resultant_support, resultantal_codim
from .series import PairPolynomial

__version__ = "0.1.0"

__all__ = [
    "DimensionError",
    "EmptyPolyhedronError",
    "MixvolError",
    "NotConvenientError",
    "NotEssentialError",
    "NotPointedError",
    "PairPolynomial",
    "Polyhedron",
    "PolyhedronPair",
    "PreconditionError",
    "SupportConeMismatch",
    "UnboundedDifferenceError",
    "UnboundedError",
    "UnsupportedError",
    "chi_compatible_faces",
    "codim_config",
    "collection_multiplicity",
    "convex_hull",
    "count_points",
    "count_points_pair",
    "det_multiplicity",
    "determinant_encoding",
    "essential_subcollection",
    "euler_char_det",
    "gz_index",
    "is_convenient",
    "lattice_volume",
    "milnor_number",
    "minkowski_sum",
    "mixed_volume",
    "mixed_volume_pairs",
    "newton_polyhedron",
    "orthant",
    "pair_volume",
    "prism",
    "prism_mixed_volume_direct",
    "prism_mixed_volume_lattice",
    "radial_index_det",
    "res_eg",
    "resultant_support",
    "resultantal_codim",
    "resultantal_multiplicity",
    "simplex_complement",
    "stable_mixed_volume_pairs",
    "support_face",
    "support_value",
]
