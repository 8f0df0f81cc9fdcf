"""Exact solver for the independent cut (stable cutset) problem."""
from .cover import QuasiCover, Windmill, auto_cover, check_quasi_cover, dense_cover, windmill_cover
from .estimator import IndependentCutSolver, check_graph
from .graph import Graph, ParseError, parse_dimacs, write_dimacs
from .reduction import Cnf3, R3Formula, reduce_full
from .solver import Verdict, brute_force, preprocess, solve, verify_cut
from .twosat import TwoSatFormula

__all__ = [
    "Cnf3", "Graph", "IndependentCutSolver", "ParseError", "QuasiCover", "R3Formula",
    "TwoSatFormula", "Verdict", "Windmill", "auto_cover", "brute_force", "check_graph",
    "check_quasi_cover", "dense_cover", "parse_dimacs", "preprocess", "reduce_full",
    "solve", "verify_cut", "windmill_cover", "write_dimacs",
]
__version__ = "0.1.0"
