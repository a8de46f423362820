"""Exact mass computations for prime-degree extensions of local fields.

The ramified separable degree-p extensions of a local field with residue
cardinality q, weighted by q**-c with c the wild part of the discriminant
valuation, have total mass exactly p.  This package computes that total, its
refinement by character class of the degree-(p-1) abelian closure, the
extension and conjugacy-class counts per discriminant level, the masses of
extensions with constrained Galois closure, and the tame degree-p' analogue,
all in exact rational arithmetic, together with a brute-force enumeration
oracle and permutation-group verifications of the underlying group theory.
"""

from .mass import (
    LevelCount,
    MassInvariantError,
    MassReport,
    TameReport,
    char_contribution,
    char_contribution_closed,
    char_contribution_truncated,
    contribution_checksum,
    count_extensions,
    count_table,
    cyclic_contribution,
    galois_closure_contribution,
    group_order_contribution,
    mass_from_counts,
    per_character_contributions,
    peu_tres_split,
    subfield_contribution,
    tame_mass,
    total_mass,
    tres_term,
    unramified_closure_contribution,
)
from .model import (
    GENERIC,
    INFINITE_E,
    OMEGA,
    TRIVIAL,
    BreakData,
    CharClass,
    EigenBlock,
    FilteredLayout,
    LocalField,
    char_is_omega,
    char_is_trivial,
    cyclotomic_valuation,
    discriminant_valuation,
    enumerate_characters,
    eigenspace_dim,
    generic_char,
    is_prime,
    layout,
    nth_prime_to_p,
    omega_char,
    omega_is_trivial,
    stratum_level,
    stratum_slot,
    trivial_char,
    unramified_level,
)
from .oracle import MassOracleError, enumerate_lines, oracle_mass
from .rationals import (
    Rational,
    format_rational,
    geom_finite,
    geom_infinite,
    rat,
    rat_arith,
    rat_pow,
)

__version__ = "0.1.0"

__all__ = [
    "BreakData",
    "CharClass",
    "EigenBlock",
    "FilteredLayout",
    "GENERIC",
    "INFINITE_E",
    "LevelCount",
    "LocalField",
    "MassInvariantError",
    "MassOracleError",
    "MassReport",
    "OMEGA",
    "Rational",
    "TRIVIAL",
    "TameReport",
    "char_contribution",
    "char_contribution_closed",
    "char_contribution_truncated",
    "char_is_omega",
    "char_is_trivial",
    "contribution_checksum",
    "count_extensions",
    "count_table",
    "cyclic_contribution",
    "cyclotomic_valuation",
    "discriminant_valuation",
    "eigenspace_dim",
    "enumerate_characters",
    "enumerate_lines",
    "format_rational",
    "galois_closure_contribution",
    "generic_char",
    "geom_finite",
    "geom_infinite",
    "group_order_contribution",
    "is_prime",
    "layout",
    "mass_from_counts",
    "nth_prime_to_p",
    "omega_char",
    "omega_is_trivial",
    "oracle_mass",
    "per_character_contributions",
    "peu_tres_split",
    "rat",
    "rat_arith",
    "rat_pow",
    "stratum_level",
    "stratum_slot",
    "subfield_contribution",
    "tame_mass",
    "total_mass",
    "tres_term",
    "trivial_char",
    "unramified_closure_contribution",
    "unramified_level",
]
