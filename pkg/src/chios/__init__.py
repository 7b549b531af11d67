"""chi-algebras of matroids: nbc bases, Groebner bases, iterated residues."""

from .algebra import (
    COMMUTATIVE,
    EXTERIOR,
    AlgebraElement,
    BetaSystem,
    algebra_dimension,
    boundary,
    ideal_degree_basis,
    mono_mul,
    nbc_expand,
    nbc_expand_oracle,
)
from .errors import ChiosError, ParseError
from .groebner import (
    TermOrder,
    canonical_basis,
    is_groebner,
    leading_term,
    leading_term_ideal,
    reduced_groebner,
    universal_groebner,
)
from .matroid import (
    Matroid,
    broken_circuits,
    closure,
    contract,
    delete,
    matroid_from_circuits,
    nbc_sets,
    rank,
    uniform_matroid,
)
from .realization import (
    VectorConfig,
    chi_cordovil,
    chi_os,
    chi_ot,
    circuits_from_vectors,
)
from .residues import (
    DiagonalBasisCandidate,
    chi_contract,
    chi_delete,
    dual_pairing_matrix,
    exact_sequence_check,
    expand_in_diagonal_basis,
    is_diagonal_basis,
    iterated_residue,
)

__version__ = "0.1.0"
