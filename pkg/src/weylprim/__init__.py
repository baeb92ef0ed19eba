"""Primitive vectors in restrictions of simple SL_n-modules to SL_{n-1}.

Combinatorial criteria (Jantzen simplicity, Theorem A/B hypotheses, tableau
bases) plus an exact GF(p) oracle that builds Weyl and simple modules weight
space by weight space.
"""

__version__ = "0.1.0"

from .characters import dim_weyl, weight_multiplicities
from .jantzen import is_weyl_simple, p_decompose
from .roots import (
    E_set,
    PositiveRoot,
    RootSum,
    Weight,
    dual_twist,
    is_dominant,
    pairing,
    restrict_q1,
    subtract_rootsum,
)
from .theorems import (
    only_if_weights,
    search,
    theorem_a,
    theorem_b_condition,
    theorem_b_consistency,
    verify_embedding,
)
from .weyl import (
    GeneratedSubmodule,
    Operator,
    WeylModule,
    act,
    generated_submodule_dim,
    primitive_vectors,
    simple_weight_space,
    weyl_weight_space,
)
