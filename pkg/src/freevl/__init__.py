"""Free vector lattices over finite Boolean algebras, with exact arithmetic."""

from .boolean import (
    BaElement,
    BooleanAlgebra,
    BooleanRing,
    DisjointFamily,
    complement,
    disjoint,
    disjoint_refinement,
    free_boolean_algebra,
    join,
    leq,
    meet,
    validate_ring,
)
from .errors import (
    DomainError,
    FreeVLError,
    MembershipError,
    ParseError,
    PreconditionError,
    SizeError,
    ValidationError,
)
from .lattice import (
    ConeCertificate,
    ConeGenerator,
    DisjointRepresentation,
    FormalSum,
    LatticeElement,
    LatticeHomomorphism,
    OrderedTarget,
    RingLattice,
    canonicalize,
    common_disjoint_representation,
    cone_certificate,
    cone_contains_atoms,
    cone_contains_quantifier,
    embed_phi,
    equivalent,
    extend_hom,
    hom_from_atom_images,
    indicator_sum,
    lattice_abs,
    lattice_join,
    lattice_meet,
    positive_part,
    ppp_stabilization_index,
    ppp_sup,
    ring_lattice,
    verify_disjointness_additive,
)
from .parse import parse, parse_ba_element, parse_formal_sum, print_element, print_sum
from .riesz import (
    FiniteFunctional,
    FiniteMeasure,
    al_norm_check,
    functional_to_measure,
    integrate,
    measure_to_functional,
)
from .stone import (
    SimpleFunction,
    StoneSpace,
    from_simple_function,
    stone_space,
    to_simple_function,
    urysohn_truncation,
    verify_simple_ppp,
)

__version__ = "0.1.0"
