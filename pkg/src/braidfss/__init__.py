"""Braided diagram groups over tree-like semigroup presentations and the
matching groups of small similarity structures on ultrametric spaces."""

from .calculus import (
    DipoleOccurrence, canonical_form, equal, equivalent, find_dipoles, insert_dipole, is_identity,
    is_reduced, multiply, power, reduce, reduce_dipole, split_positive_negative,
)
from .catalog import (
    HoughtonMap, builtin, houghton, houghton_build, houghton_interpret, qaut, relabel_embed, thompson,
)
from .diagram import (
    Diagram, Transistor, bottom_label, concatenate, identity_diagram, invert, permutation_diagram,
    top_label, validate,
)
from .errors import BraidError, ParseError, ValidationError
from .fss import (
    DefiningTriple, bijection_diagram, canonicalize, compose, evaluate, invert_triple,
    partition_diagram, psi, subdivide, triple_from_diagram, validate_triple,
)
from .presentation import Presentation, parse_presentation, validate_tree_like
from .treespace import (
    Ball, Partition, PointPrefix, Space, common_refinement, compare_balls, distance, is_partition,
    maximal_proper_subballs, presentation_of_space, standard_decomposition,
)

__all__ = [
    "Ball", "bijection_diagram", "bottom_label", "BraidError", "builtin", "canonical_form",
    "canonicalize", "common_refinement", "compare_balls", "compose", "concatenate",
    "DefiningTriple", "Diagram", "DipoleOccurrence", "distance", "equal", "equivalent", "evaluate",
    "find_dipoles", "houghton", "houghton_build", "houghton_interpret", "HoughtonMap",
    "identity_diagram", "insert_dipole", "invert", "invert_triple", "is_identity", "is_partition",
    "is_reduced", "maximal_proper_subballs", "multiply", "parse_presentation", "ParseError",
    "Partition", "partition_diagram", "permutation_diagram", "PointPrefix", "power", "Presentation",
    "presentation_of_space", "psi", "qaut", "reduce", "reduce_dipole", "relabel_embed", "Space",
    "split_positive_negative", "standard_decomposition", "subdivide", "thompson", "top_label",
    "Transistor", "triple_from_diagram", "validate", "validate_tree_like", "validate_triple",
    "ValidationError",
]

__version__ = "0.1.0"
