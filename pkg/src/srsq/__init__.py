"""srsq: exact desk-scale toolkit for squarefree monomial ideals.

Decides, with exact arithmetic, when the second symbolic power of a
Stanley-Reisner ideal equals the ordinary square, and when the square is
Cohen-Macaulay; ships the homological criteria (Reisner, Stanley, linkwise
diameter conditions) and the degreewise local cohomology scans behind them.
"""

from .complexes import (
    FVector,
    Graph,
    SimplicialComplex,
    complementary_complex,
    complete_graph,
    conjecture_complex,
    conjecture_graph,
    cross_polytope,
    cross_polytope_stellar,
    cycle_complex,
    cycle_graph,
    disjoint_pentagons,
    disjoint_union,
    four_path,
    graph_diameter,
    irrelevant_complex,
    named_complex,
    new_complex,
    path_complex,
    phantom_pentagon,
    rp2,
    simplex_complex,
    void_complex,
)
from .criteria import (
    AuditReport,
    Condition3Result,
    Depth2Result,
    S2Result,
    condition3_check,
    depth2_criterion,
    explore_random,
    paper_audit,
    random_pure_complex,
    s2_criterion,
)
from .homology import (
    DEFAULT_FIELDS,
    GF2,
    QQ,
    FieldSpec,
    HomologyProfile,
    boundary_matrix,
    is_cohen_macaulay,
    is_gorenstein,
    is_locally_gorenstein,
    matrix_rank,
    reduced_homology,
)
from .ideals import (
    Hypergraph,
    Monomial,
    MonomialIdeal,
    SpecialTriangle,
    Sym2Result,
    associated_hypergraph,
    complex_of_ideal,
    edge_ideal,
    in_symbolic_power,
    special_triangles,
    stanley_reisner,
    symbolic2_equals_square,
    symbolic_power,
)
from .takayama import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    DegreeVector,
    DepthReport,
    delta_a,
    delta_a_symbolic,
    depth_via_takayama,
    is_cm_square,
    is_cm_square_by_factors,
    is_cm_symbolic_square,
    local_cohomology_dim,
    square_depth_report,
    symbolic_square_depth_report,
)

__version__ = "0.1.0"
