"""Exact Groebner-basis engine and verification suite for fibers of blow-ups
over length-3 punctual schemes."""

from .algebra import GREVLEX, LEX, QQ, WGREVLEX, MonomialOrder, Polynomial, PolyRing, block_order, parse_order
from .blowup import chart, rees_ideal, simplify_presentation, strict_transform, symmetric_algebra_ideal
from .groebner import GroebnerBasis, buchberger, normal_form
from .hilbert import HilbertSeries, closed_form_colength, colength, hilbert_series
from .ideals import Ideal, eliminate, intersect, krull_dim, quotient, saturate
from .parser import ParseError, parse_file, parse_source
from .resolution import BettiTable, betti_table, free_resolution, syzygies
from .ringprops import RingProps, classify, is_smooth
from .scenarios import ScenarioConfig, ScenarioReport, run_scenario

__version__ = "0.1.0"

__all__ = [
    "QQ", "LEX", "GREVLEX", "WGREVLEX", "MonomialOrder", "Polynomial", "PolyRing", "block_order", "parse_order",
    "chart", "rees_ideal", "simplify_presentation", "strict_transform", "symmetric_algebra_ideal",
    "GroebnerBasis", "buchberger", "normal_form",
    "HilbertSeries", "closed_form_colength", "colength", "hilbert_series",
    "Ideal", "eliminate", "intersect", "krull_dim", "quotient", "saturate",
    "ParseError", "parse_file", "parse_source",
    "BettiTable", "betti_table", "free_resolution", "syzygies",
    "RingProps", "classify", "is_smooth",
    "ScenarioConfig", "ScenarioReport", "run_scenario",
]
