"""Workbench for Basic Logic over many-valued linear Kripke frames."""

from .syntax import (
    And, Atom, Bottom, Formula, Implies, Or, ParseError, Sequent, Tensor, Top,
    atoms_of, parse_formula, parse_sequent, render, render_sequent,
)
from .mv import SlopingFunction, mv_denote, mv_value
from .lbm import LBMStructure, evaluate, formula_profile, holds
from .nd import NDProof, check_nd
from .hilbert import HilbertProof, check_hilbert, hilbert_to_nd
from .search import SearchBounds, find_countermodel

__all__ = [
    "And", "Atom", "Bottom", "Formula", "Implies", "Or", "ParseError", "Sequent",
    "Tensor", "Top", "atoms_of", "parse_formula", "parse_sequent", "render",
    "render_sequent", "SlopingFunction", "mv_denote", "mv_value", "LBMStructure",
    "evaluate", "formula_profile", "holds", "NDProof", "check_nd", "HilbertProof",
    "check_hilbert", "hilbert_to_nd", "SearchBounds", "find_countermodel",
]
__version__ = "0.1.0"
