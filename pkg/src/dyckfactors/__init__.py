"""Counting Dyck paths by UD- and UUD-factors, with the plane tree bijections,
generating functions and polynomial root analysis that go with them."""

from .combinatorics import DyckWord, CyclicComposition, enumerate_dyck, count_factor, w_oracle, w_oracle_multi
from .counting import w_formula, w_formula_multi
from .errors import DyckFactorsError
from .polynomials import Poly, w_poly, symmetric_decomposition
from .trees import PlaneTree, MarkedNecklace, phi, phi_inv, symmetry_bijection

__version__ = "0.1.0"

__all__ = [
    "CyclicComposition",
    "DyckFactorsError",
    "DyckWord",
    "MarkedNecklace",
    "PlaneTree",
    "Poly",
    "count_factor",
    "enumerate_dyck",
    "phi",
    "phi_inv",
    "symmetric_decomposition",
    "symmetry_bijection",
    "w_formula",
    "w_formula_multi",
    "w_oracle",
    "w_oracle_multi",
    "w_poly",
]
