"""Exact-arithmetic stability walls and ample cones for moduli of sheaves on the plane."""

__version__ = "0.1.0"

from .exactmath import QuadVal, Rat, decimal_str, farey_pred, quad_cmp, rat_str
from .chern import (
    ChernChar,
    DiscLattice,
    char_product,
    disc_lattice,
    euler_char,
    euler_pair,
    from_invariants,
    hilbert_poly,
    sym_pair,
)
from .exceptional import (
    ExcSlope,
    containing_exceptional,
    delta,
    dot,
    exc_slope,
    is_exceptional_slope,
    slopes_in_unit_interval,
)
from .extremal import (
    Classification,
    Decomposition,
    StabKind,
    chi_chain,
    classify,
    curve_decomposition,
    extremal_triple,
    is_special_character,
    min_stable_disc,
    minimal_triple,
)
from .walls import (
    EmptyWall,
    GiesekerReport,
    SemicircleWall,
    VerticalWall,
    Wall,
    WallChecks,
    exclusion_bound_root,
    exclusion_search,
    gieseker_wall,
    on_wall,
    potential_wall,
    rank_bound_radius_sq,
)
from .ample import (
    AmpleReport,
    ample_cone,
    duy_edge,
    duy_ray,
    moduli_dimension,
    primary_ray,
    singular_locus_empty,
)
from . import errors

__all__ = [
    "AmpleReport",
    "ChernChar",
    "Classification",
    "Decomposition",
    "DiscLattice",
    "EmptyWall",
    "ExcSlope",
    "GiesekerReport",
    "QuadVal",
    "Rat",
    "SemicircleWall",
    "StabKind",
    "VerticalWall",
    "Wall",
    "WallChecks",
    "ample_cone",
    "char_product",
    "chi_chain",
    "classify",
    "containing_exceptional",
    "curve_decomposition",
    "decimal_str",
    "delta",
    "disc_lattice",
    "dot",
    "duy_edge",
    "duy_ray",
    "errors",
    "euler_char",
    "euler_pair",
    "exc_slope",
    "exclusion_bound_root",
    "exclusion_search",
    "extremal_triple",
    "farey_pred",
    "from_invariants",
    "gieseker_wall",
    "hilbert_poly",
    "is_exceptional_slope",
    "is_special_character",
    "min_stable_disc",
    "minimal_triple",
    "moduli_dimension",
    "on_wall",
    "potential_wall",
    "primary_ray",
    "quad_cmp",
    "rank_bound_radius_sq",
    "rat_str",
    "singular_locus_empty",
    "slopes_in_unit_interval",
    "sym_pair",
]
