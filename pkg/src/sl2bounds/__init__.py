"""Exact sl2-branching of semisimple Lie algebra representations.

Compute root systems, weight multiplicities (Freudenthal), restrictions to
sl2-subalgebras given by marks, invariant dimensions, the uniform
branching bound b, maximal-parabolic dimension tables, and certified
complements of affine subsemigroups of N^r.
"""

from .rootsys import (RootSystem, RootSystemError, SimpleComponent, Weight,
                      build, dominant_representative, inner_product,
                      root_to_weight_coords, weyl_dimension, weyl_orbit)
from .character import (Character, CharacterError, dominant_character,
                        full_weight_values, weyl_alternating_character)
from .sl2branch import (BranchingError, Sl2Decomposition, Sl2Embedding, g0,
                        invariant_dim, principal_embedding, root_embedding,
                        sl2_decompose)
from .semigroup import ComplementResult, GeneratorSet, complement, member
from .bounds import (BoundResult, E_set, MValues, ParabolicRow, b_bound,
                     e_value, levi_ss_components, m_value, m_values,
                     parabolic_table)

__version__ = "0.1.0"

__all__ = [
    "RootSystem", "RootSystemError", "SimpleComponent", "Weight", "build",
    "dominant_representative", "inner_product", "root_to_weight_coords",
    "weyl_dimension", "weyl_orbit",
    "Character", "CharacterError", "dominant_character",
    "full_weight_values", "weyl_alternating_character",
    "BranchingError", "Sl2Decomposition", "Sl2Embedding", "g0",
    "invariant_dim", "principal_embedding", "root_embedding",
    "sl2_decompose",
    "ComplementResult", "GeneratorSet", "complement", "member",
    "BoundResult", "E_set", "MValues", "ParabolicRow", "b_bound", "e_value",
    "levi_ss_components", "m_value", "m_values", "parabolic_table",
]
