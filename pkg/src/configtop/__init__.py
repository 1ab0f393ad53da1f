"""Topological invariants of Euclidean configuration spaces.

Exact arithmetic in the integral cohomology ring of the ordered
configuration space F(R^n, k), labeling-tree combinatorics for the mod-2
cohomological dimension of the unordered space B(R^n, k), and a rule
engine producing certified intervals for the Lusternik-Schnirelmann
category of both spaces and the sectional category of the covering
F(R^n, k) -> B(R^n, k).
"""

from configtop.cohen_ring import (
    Element,
    Monomial,
    RingContext,
    RingError,
    basis,
    cuplength,
    element_degree,
    generator,
    is_zero,
    make_ring,
    multiply,
    normal_form,
    poincare_table,
    unit,
)
from configtop.labeling_trees import (
    LabelTree,
    TreeCollection,
    alpha,
    cell_dim_range,
    cohdim_mod2,
    min_edges,
)
from configtop.bounds import (
    BoundEvidence,
    BoundReport,
    InconsistentBoundsError,
    cat_B_bounds,
    cat_F,
    digit_sum,
    secat_bounds,
    sweep,
)

__all__ = [
    "Element",
    "Monomial",
    "RingContext",
    "RingError",
    "basis",
    "cuplength",
    "element_degree",
    "generator",
    "is_zero",
    "make_ring",
    "multiply",
    "normal_form",
    "poincare_table",
    "unit",
    "LabelTree",
    "TreeCollection",
    "alpha",
    "cell_dim_range",
    "cohdim_mod2",
    "min_edges",
    "BoundEvidence",
    "BoundReport",
    "InconsistentBoundsError",
    "cat_B_bounds",
    "cat_F",
    "digit_sum",
    "secat_bounds",
    "sweep",
]
