"""hocolim: a finite colimit engine for coslice homotopy colimits.

Set-level colimits are computed by exact enumeration; 1-truncated behavior
is modeled with finite 2-dimensional cell complexes and verified through
component counts, fundamental-group presentations, and integer
(co)homology computed by Smith normal form.
"""

from .complexes import (
    CellMap,
    EdgeWord,
    TwoComplex,
    compose_cell_maps,
    disjoint_union,
    euler_characteristic,
    identity_map,
    pi0,
    pi1_presentation,
    pushout,
)
from .coslice import (
    ADiagramCx,
    ADMorphism,
    CosliceComplex,
    augmented_diagram,
    build_psi,
    check_connectivity,
    check_tree_creation,
    colim_cx,
    colim_map,
    construction_one,
    construction_two,
    coslice_coproduct,
    fold_map,
    t_f_map,
    truncation_compatibility,
)
from .graphs import (
    Graph,
    Walk,
    enumerate_walks,
    is_tree,
    realize,
    verify_combinatorial_tree,
    walk_to_path,
)
from .homology import (
    cohomology_h1,
    homology_groups,
    induced_cohomology_h1,
    induced_h1,
    weak_limit_check,
)
from .intlinalg import (
    FgAbelianGroup,
    cokernel_group,
    hermite_normal_form,
    smith_normal_form,
    subgroup_equal,
)
from .setmodel import (
    AMap,
    CosliceSet,
    CosliceSetDiagram,
    CosliceTransformation,
    FinFun,
    FinSet,
    SetDiagram,
    check_universality,
    check_universality_plain,
    colim_set,
    coslice_colim_set,
    factorize,
    lim_set,
    preservation_surjectivity,
    pullback_coslice,
    unique_filler,
    verify_universal_property,
)

__version__ = "0.1.0"
