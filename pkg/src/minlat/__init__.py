"""Exact Wiener indices and distance moments of minuscule lattices.

The library builds the three infinite families of minuscule lattices
(rectangles, shifted staircases, double-tailed diamonds) and the two
exceptional ones, computes their Wiener indices and higher distance
moments by several independent routes (all-source BFS, symmetric
differences of order ideals, closed product formulas, generating-
function coefficients), and checks the scaled distance distribution
against its Brownian limit constants by exact trends and sampling.
"""

from .distance import (
    DisconnectedGraphError,
    Graph,
    WienerReport,
    distance_histogram,
    wiener_moment_bfs,
    wiener_moment_symdiff,
    wiener_report,
)
from .formulas import (
    count,
    mean_distance_exact,
    scaled_mean,
    second_moment_rectangle,
    second_moment_staircase,
    wiener_diamond,
    wiener_exceptional,
    wiener_rectangle,
    wiener_staircase,
)
from .montecarlo import (
    SampleReport,
    limit_moments,
    run_experiment,
    sample_rect_pair,
    sample_stair_pair,
)
from .paths import (
    area_d,
    area_dbar,
    bijection_A,
    bijection_A_inverse,
    classify,
    rect_distance,
    stair_distance,
)
from .posets import (
    IdealLattice,
    Poset,
    ResourceLimitExceeded,
    double_tailed_diamond_lattice,
    order_ideals,
    rectangle_poset,
    staircase_poset,
)
from .series import SERIES_BUILDERS, TruncatedSeries
from .weyl import CartanMatrix, NotMinusculeError, cartan, minuscule_weight_lattice

__version__ = "0.1.0"

__all__ = [
    "CartanMatrix",
    "DisconnectedGraphError",
    "Graph",
    "IdealLattice",
    "NotMinusculeError",
    "Poset",
    "ResourceLimitExceeded",
    "SampleReport",
    "SERIES_BUILDERS",
    "TruncatedSeries",
    "WienerReport",
    "area_d",
    "area_dbar",
    "bijection_A",
    "bijection_A_inverse",
    "cartan",
    "classify",
    "count",
    "distance_histogram",
    "double_tailed_diamond_lattice",
    "limit_moments",
    "mean_distance_exact",
    "minuscule_weight_lattice",
    "order_ideals",
    "rect_distance",
    "rectangle_poset",
    "run_experiment",
    "sample_rect_pair",
    "sample_stair_pair",
    "scaled_mean",
    "second_moment_rectangle",
    "second_moment_staircase",
    "stair_distance",
    "staircase_poset",
    "wiener_diamond",
    "wiener_exceptional",
    "wiener_moment_bfs",
    "wiener_moment_symdiff",
    "wiener_rectangle",
    "wiener_report",
    "wiener_staircase",
]
