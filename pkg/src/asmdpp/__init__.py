"""Exact generating functions for alternating sign matrices and descending plane partitions."""

from .laurent import LaurentPoly, Ring, determinant, parse_json, parse_text
from .opformula import DecorWeights, gf_amt_closed, gf_generalized_closed, gf_mt_closed
from .asm_side import (
    MonotoneTriangle,
    ArrowedMT,
    asm_count,
    enumerate_asm,
    enumerate_mt,
    gf_amt_enum,
    gf_damt_enum,
    gf_extended_recursion,
    gf_generalized_recursion,
)
from .dpp_side import DppPair, Sbcspp, enumerate_dpp, gf_bcspp, gf_dpp_pairs, gf_sbcspp
from .paths_lgv import PathFamily, gf_lgv, gf_paths_enum, single_path_gf
from .identities import verify_identity
from .harness import verify_all

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "Ring",
    "determinant",
    "parse_json",
    "parse_text",
    "DecorWeights",
    "gf_amt_closed",
    "gf_generalized_closed",
    "gf_mt_closed",
    "MonotoneTriangle",
    "ArrowedMT",
    "asm_count",
    "enumerate_asm",
    "enumerate_mt",
    "gf_amt_enum",
    "gf_damt_enum",
    "gf_extended_recursion",
    "gf_generalized_recursion",
    "DppPair",
    "Sbcspp",
    "enumerate_dpp",
    "gf_bcspp",
    "gf_dpp_pairs",
    "gf_sbcspp",
    "PathFamily",
    "gf_lgv",
    "gf_paths_enum",
    "single_path_gf",
    "verify_identity",
    "verify_all",
]
