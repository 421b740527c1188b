"""k-fold Borsuk numbers of finite point sets via multifold chromatic
numbers of diameter graphs, plus the explicit covers and realizations."""

from .errors import (
    AmbiguousDiameterError,
    BoundExceededError,
    ConstructionError,
    HypothesisError,
    MultiborsukError,
)
from .graphs import (
    Graph,
    CycleWitness,
    contains_subgraph,
    girth,
    graphs_isomorphic,
    independence_number,
    is_bipartite_with_parts,
    maximal_independent_sets,
    mycielskian,
    odd_cycles_pairwise_intersect,
    shortest_odd_cycle,
    wheel_subgraph,
)
from .coloring import (
    BorsukReport,
    MultiColoring,
    borsuk_sequence,
    chi_k,
    chi_k_bruteforce,
    fractional_chromatic,
    odd_cycle_multicoloring,
    triangle_free_coloring,
    validate,
)
from .pointsets import (
    Isometry,
    PointSet,
    diameter,
    diameter_graph,
    dihedral_generators,
    group_closure,
    is_invariant,
    mirror_odd_cycle_check,
    regular_tetrahedron,
    tetrahedral_generators,
    tetrahedral_theorem_check,
    vazsonyi_check,
)
from .reuleaux import (
    Arc,
    ArcPatch,
    BoundaryCover,
    DiskBody,
    ReuleauxPolygon,
    disk_cover,
    perturbed_reuleaux_angles,
    regular_reuleaux,
    reuleaux_cover,
    reuleaux_from_angles,
    verify_cover,
)
from .spheres import (
    BallBorsukResult,
    CapCover,
    HemisphereFamily,
    ball_borsuk,
    gale_vectors,
    min_cover_fold,
    shrink_caps,
)
from .realizations import (
    DihedralReport,
    LayeredConstruction,
    dihedral_theorem_check,
    mu1_borsuk_formula,
    mycielskian_pointset,
    polygon_mirror_planes,
    wheel_pyramid,
)

__version__ = "0.1.0"
