"""Graphic pure braid groups: presentations, deletion maps, word problem and
theorem-backed classification of arrangement groups attached to simple graphs."""

from __future__ import annotations

from .braid import BraidWord, PureBraidWord, braid_to_endo, conjugate_by_sigma, is_trivial_pure
from .classify import analyze, bgamma_report, finiteness_type, property_flags, semidirect_split
from .errors import AlphabetError, CapabilityError, GraphParseError, ResourceError, WordLengthError
from .freegroup import Endomorphism, FreeWord, format_word, parse_word
from .graphic import Verdict, injectivity_status, presentation, rho, word_problem
from .graphs import Graph, Permutation, is_chordal, maximal_cliques, parse_graph

__all__ = [
    "AlphabetError", "BraidWord", "CapabilityError", "Endomorphism", "FreeWord", "Graph",
    "GraphParseError", "Permutation", "PureBraidWord", "ResourceError", "Verdict",
    "WordLengthError", "analyze", "bgamma_report", "braid_to_endo", "conjugate_by_sigma",
    "finiteness_type", "format_word", "injectivity_status", "is_chordal", "is_trivial_pure",
    "maximal_cliques", "parse_graph", "parse_word", "presentation", "property_flags", "rho",
    "semidirect_split", "word_problem",
]

__version__ = "0.1.0"
