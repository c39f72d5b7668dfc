"""Kauffman bracket spans, Turaev surface Euler characteristics and
(pseudo-)adequacy of virtual link diagrams."""

from .adequacy import (
    AdequacyReport,
    ClassicalityVerdict,
    Theorem43Certificate,
    adequacy_report,
    check_theorem_43,
    classicality_obstruction,
    euler_characteristic,
    is_admissible,
    v_adequacy_witnesses,
)
from .kauffman import CrossingLimitError, bracket, kmt_bound, span_bracket, state_weight
from .codec import ParseError, parse, serialize, to_json
from .diagram import (
    Diagram,
    DiagramError,
    Kind,
    State,
    connecting_arc_components,
    flip,
    incident_components,
    realize,
    splice,
    state_all_A,
    state_all_B,
    validate,
    virtualize,
)
from .laurent import LaurentPoly, monomial
from .report import InvariantReport, invariant_report

__version__ = "0.1.0"
