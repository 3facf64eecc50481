"""Combinatorial invariants of pointed lattice ideals: fibers, gcd
complexes, multigraded Betti numbers, basic fiber components, and the
generalized Scarf chain complexes built on them."""

__version__ = "0.1.0"

from .fibers import (
    ExponentVector,
    Fiber,
    canonical_order,
    enumerate_fiber,
    enumerate_fiber_box_oracle,
    gcd_of,
    monomial_str,
    reduce_by_gcd,
)
from .homology import (
    BettiTable,
    SimplicialComplex,
    betti_at,
    betti_scan,
    connected_components,
    euler_characteristic_checks,
    gcd_complex,
    minimal_betti_degrees,
    reduced_homology_dims,
    scan_degree_classes,
    support_complex,
)
from .lattice_core import (
    DegreeClass,
    LatticeBasis,
    NotPointedError,
    SemigroupMatrix,
    class_eq,
    class_leq,
    class_of,
    contains,
    is_pointed,
    lattice_from_semigroup,
    positive_functional,
)
from .scarf import (
    AlgebraicComplex,
    BasicComponent,
    LatticeSubset,
    ScarfPoset,
    algebraic_scarf_subcomplex,
    basic_components,
    bmax,
    build_generalized_scarf_complex,
    enumerate_scarf_poset,
    in_generalized_scarf,
    indispensable_binomials,
    is_basic_fiber,
    minimal_generators,
    monomials_of,
    strongly_algebraic_subcomplex,
    verify_zero_composition,
    vsupp,
)

__all__ = [
    "AlgebraicComplex",
    "BasicComponent",
    "BettiTable",
    "DegreeClass",
    "ExponentVector",
    "Fiber",
    "LatticeBasis",
    "LatticeSubset",
    "NotPointedError",
    "ScarfPoset",
    "SemigroupMatrix",
    "SimplicialComplex",
    "algebraic_scarf_subcomplex",
    "basic_components",
    "betti_at",
    "betti_scan",
    "bmax",
    "build_generalized_scarf_complex",
    "canonical_order",
    "class_eq",
    "class_leq",
    "class_of",
    "connected_components",
    "contains",
    "enumerate_fiber",
    "enumerate_fiber_box_oracle",
    "enumerate_scarf_poset",
    "euler_characteristic_checks",
    "gcd_complex",
    "gcd_of",
    "in_generalized_scarf",
    "indispensable_binomials",
    "is_basic_fiber",
    "is_pointed",
    "lattice_from_semigroup",
    "minimal_betti_degrees",
    "minimal_generators",
    "monomial_str",
    "monomials_of",
    "positive_functional",
    "reduce_by_gcd",
    "reduced_homology_dims",
    "scan_degree_classes",
    "strongly_algebraic_subcomplex",
    "support_complex",
    "verify_zero_composition",
    "vsupp",
]
