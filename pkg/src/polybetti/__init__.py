"""Bigraded Betti numbers, belts and Tor-algebra invariants of simple 3-polytopes."""

from .catalog import CatalogEntry, CollisionReport, classify, load_table2, table2_row
from .enumeration import (
    RotationSystem,
    canonical_code,
    enumerate_triangulations,
    filter_irreducible,
    vertex_split,
)
from .hochster import BettiTable, betti_tuple, bigraded_betti, moment_angle_betti
from .koszul import StanleyReisnerData, koszul_slice, tor_betti_via_koszul
from .linalg import HomologyProfile, IntMatrix, rank_exact, reduced_homology
from .polytope import (
    Belt3,
    Belt4,
    DualTriangulation,
    FacetGraph,
    PolytopeError,
    SimplicialComplex,
    four_belts,
    full_subcomplex,
    non_adjacent_pairs,
    parse_adjacency_rows,
    three_belts,
    to_triangulation,
)
from .torring import (
    AnnihilatorReport,
    Deg14Generator,
    Deg28Generator,
    ReducibleError,
    Verdict,
    annihilator_dim,
    product,
    rings_distinguished,
)

__version__ = "0.1.0"
