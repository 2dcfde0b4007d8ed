"""Exact arithmetic for twisted degenerate Euler polynomials.

Submodules
----------
exactnum
    rationals, cyclotomic numbers, p-adic valuations
fps
    truncated exponential generating functions
characters
    Dirichlet characters modulo odd integers
degen
    degenerate Euler numbers/polynomials, R-sums, fermionic-integral oracles
identities
    exact verification of the symmetry identities
cli
    command-line front end
"""

from ._backend import BACKEND
from .characters import DirichletCharacter, enumerate_characters, get_character
from .degen import (
    carlitz_numbers,
    carlitz_poly_eval,
    falling,
    fermionic_integral,
    generalized_numbers,
    generalized_poly_eval,
    r_sum,
    twisted_fermionic_integral,
)
from .exactnum import CyclotomicElement, cyclotomic_polynomial, p_adic_valuation, root_of_unity
from .fps import TruncatedEgfSeries, degenerate_exponential

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CyclotomicElement",
    "DirichletCharacter",
    "TruncatedEgfSeries",
    "carlitz_numbers",
    "carlitz_poly_eval",
    "cyclotomic_polynomial",
    "degenerate_exponential",
    "enumerate_characters",
    "falling",
    "fermionic_integral",
    "generalized_numbers",
    "generalized_poly_eval",
    "get_character",
    "p_adic_valuation",
    "r_sum",
    "root_of_unity",
    "twisted_fermionic_integral",
]
