"""Ext^1 dimensions and block decompositions for equivariant map algebras."""

from .blocks import (BlockClass, SpectralCharacter, block_class, chain_reachable,
                     enumerate_blocks, same_block, spectral_character,
                     weight_equivalence_quotient)
from .chars import (IrrepLabel, ModuleExpr, WeightMultiset, dim, dual_label, hom_dim,
                    tensor_decompose, weight_multiplicities)
from .emalg import (AlgebraConfig, EvalRepSpec, ExtResult, PointSpec, g_fixed_at,
                    load_document, parse_document, validate)
from .ext import abelian_ext, ext_dim, graded_ext_general, kunneth_ext, single_point_ext
from .rootsys import RootSystemSpec, build

__all__ = [
    "BlockClass", "SpectralCharacter", "block_class", "chain_reachable", "enumerate_blocks",
    "same_block", "spectral_character", "weight_equivalence_quotient",
    "IrrepLabel", "ModuleExpr", "WeightMultiset", "dim", "dual_label", "hom_dim",
    "tensor_decompose", "weight_multiplicities",
    "AlgebraConfig", "EvalRepSpec", "ExtResult", "PointSpec", "g_fixed_at", "load_document",
    "parse_document", "validate",
    "abelian_ext", "ext_dim", "graded_ext_general", "kunneth_ext", "single_point_ext",
    "RootSystemSpec", "build",
]
