"""Exact tools for Zarankiewicz-type problems on intersection hypergraphs of axis-parallel boxes."""

from .bounds import BoundReport, Formula, asymmetric_bound_sweep, check_bound, g_t
from .constructions import (
    ConstructionReport,
    amplify_copies,
    coherent_lower_bound,
    digit_reversal_family,
    grouped_family,
    lift_family,
    planar_coherent_family,
    trivial_family,
)
from .directions import (
    AuxiliaryGraph,
    CoherenceVerdict,
    DirectionVector,
    auxiliary_graph,
    canonical_direction_vector,
    is_2_coherent,
    is_canonical,
    is_restricted,
    is_separated,
    parse_direction_vector,
)
from .errors import BoxZarError, BudgetExceeded, DirectionParseError, ForbiddenPattern, PreconditionError
from .family import BoxFamily
from .geometry import Box, Interval, Point, Rational, box_intersect, helly_pierce
from .hypergraph import (
    BicliqueWitness,
    HypergraphReport,
    PlanarInstance,
    count_hyperedges,
    edge_set,
    find_biclique,
)
from .oracle import OracleResult, naive_count, naive_find_biclique, zarankiewicz_bruteforce
from .reductions import (
    PlanarSlice,
    SliceDecomposition,
    rescale_to_grid,
    separate,
    slice_general,
    slice_restricted,
    transfer_to_canonical,
)

__version__ = "0.1.0"
