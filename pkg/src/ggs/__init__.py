"""Exact verification of the GGS R-matrices for Belavin-Drinfeld triples of sl(n)."""
from .bd_triples import (BDTriple, TripleCatalog, canonical_form, enumerate_all,
                         enumerate_canonical, inner_product, is_valid_triple)
from .exact_algebra import LaurentPoly, q_power
from .r0_solver import free_space_basis, r0_tilde, validate_r0
from .r_matrix import BandedOperator, build_R
from .verifier import check_hecke, check_qybe, dense_oracle, verify_triple

__all__ = [
    "BDTriple", "TripleCatalog", "canonical_form", "enumerate_all",
    "enumerate_canonical", "inner_product", "is_valid_triple", "LaurentPoly",
    "q_power", "free_space_basis", "r0_tilde", "validate_r0", "BandedOperator",
    "build_R", "check_hecke", "check_qybe", "dense_oracle", "verify_triple",
]
