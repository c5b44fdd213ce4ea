"""Exact ideals of products of linear forms: decompositions, resolutions, Rees algebras, stars."""

from .arrangement import Arrangement, parse_arrangement
from .groebner import Budget, BudgetExceeded, Ideal, buchberger
from .poly import DEGREVLEX, LEX, MonomialOrder, ParseError, Polynomial, Ring

__all__ = ["Arrangement", "Budget", "BudgetExceeded", "DEGREVLEX", "Ideal", "LEX",
           "MonomialOrder", "ParseError", "Polynomial", "Ring", "buchberger",
           "parse_arrangement"]
__version__ = "0.1.0"
