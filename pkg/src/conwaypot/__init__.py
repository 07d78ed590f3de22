"""Exact Conway potential functions of colored links."""

from .ccomplex import CComplexData, CComplexError, potential, validate
from .dataset import get_entry, load_dataset
from .diagrams import ColoredDiagram, DiagramError, from_braid, parse_pd
from .fox import alexander_polynomial, crosscheck
from .laurent import LaurentPoly, PotentialValue, det, equal_up_to_units
from .seifert import conway_of_diagram, seifert_matrix

__version__ = "0.1.0"

__all__ = [
    "CComplexData",
    "CComplexError",
    "ColoredDiagram",
    "DiagramError",
    "LaurentPoly",
    "PotentialValue",
    "alexander_polynomial",
    "conway_of_diagram",
    "crosscheck",
    "det",
    "equal_up_to_units",
    "from_braid",
    "get_entry",
    "load_dataset",
    "parse_pd",
    "potential",
    "seifert_matrix",
    "validate",
]
