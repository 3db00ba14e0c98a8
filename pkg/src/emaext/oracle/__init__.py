"""Brute-force Lie algebra cohomology used to check the Ext formulas."""

from .lie import (FinDimLie, FinModule, InconsistentStructure, ext1_dim, h1_dim,
                  h1_onedim_via_Klam, hom_module, one_dim_module, trivial_module)
from .builders import (build_exchange_quotient, build_jet_algebra, build_onsager_quotient,
                       build_truncated_current, builtin_simple, evaluation_module)

__all__ = [
    "FinDimLie", "FinModule", "InconsistentStructure", "ext1_dim", "h1_dim",
    "h1_onedim_via_Klam", "hom_module", "one_dim_module", "trivial_module",
    "build_exchange_quotient", "build_jet_algebra", "build_onsager_quotient",
    "build_truncated_current", "builtin_simple", "evaluation_module",
]
