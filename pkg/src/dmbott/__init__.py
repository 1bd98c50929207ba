"""Discrete Morse-Bott theory on finite combinatorial CW complexes."""

from .cw import Cell, Complex, CoveringPair, build_complex, from_simplicial
from .functions import CellFunction
from .morse import MorseVerdict, check_morse, critical_cells, critical_counts
from .bott import (
    Collection,
    MorseBottVerdict,
    check_morse_bott,
    collections,
    reduce_all,
    reduce_collection,
)
from .homology import (
    ChainComplexZ,
    IntPolynomial,
    chain_complex,
    poincare,
    rank_profile,
    reduced_chain_complex,
    smith_ranks,
)
from .gradient import (
    VectorField,
    morse_gradient,
    strict_gradient,
    synthesize_morse,
    validate_vector_field,
)
from .inequalities import (
    CountProfile,
    IdentityReport,
    count_profile,
    morse_bott_identity,
    morse_identity,
)

__all__ = [
    "Cell",
    "CellFunction",
    "ChainComplexZ",
    "Collection",
    "Complex",
    "CountProfile",
    "CoveringPair",
    "IdentityReport",
    "IntPolynomial",
    "MorseBottVerdict",
    "MorseVerdict",
    "VectorField",
    "build_complex",
    "chain_complex",
    "check_morse",
    "check_morse_bott",
    "collections",
    "count_profile",
    "critical_cells",
    "critical_counts",
    "from_simplicial",
    "morse_bott_identity",
    "morse_gradient",
    "morse_identity",
    "poincare",
    "rank_profile",
    "reduce_all",
    "reduce_collection",
    "reduced_chain_complex",
    "smith_ranks",
    "strict_gradient",
    "synthesize_morse",
    "validate_vector_field",
]

__version__ = "0.1.0"
