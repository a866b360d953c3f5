"""Degree-sequence realizations with optimal dominating set or matching.

Given a finite degree sequence, this package decides graphicality, computes
the minimum dominating-set size and the maximum matching size achievable
over all realizations, and constructs witness graphs carrying the
corresponding certificates.
"""

from .bipartite import BipartiteRealization
from .dominating import (build_mds_flow, extract_bipartite_mds, mds_feasible,
                         mds_systems_hold, mds_value, realize_mds,
                         round_bipartite_mds, verify_dominating)
from .errors import (ContractError, DomainError, FlipError, InfeasibleError,
                     InternalError, LimitError, NetworkError, NotGraphicError,
                     OptrealError, ParseError)
from .flow import FlowAssignment, FlowNetwork, max_flow
from .matching import (build_mm_flow, extract_bipartite_mm, flip,
                       invert_matching, mm_feasible, mm_value, realize_mm,
                       round_bipartite_mm, verify_matching)
from .oracle import (enumerate_realizations, exact_mds, exact_mm, oracle_mds,
                     oracle_mm)
from .sequences import (DegreeSequence, DominatingSet, Matching, Realization,
                        format_sequence, havel_hakimi_realize, is_graphic,
                        parse_sequence)

__version__ = "0.1.0"

__all__ = [
    "BipartiteRealization",
    "ContractError",
    "DegreeSequence",
    "DomainError",
    "DominatingSet",
    "FlipError",
    "FlowAssignment",
    "FlowNetwork",
    "InfeasibleError",
    "InternalError",
    "LimitError",
    "Matching",
    "NetworkError",
    "NotGraphicError",
    "OptrealError",
    "ParseError",
    "Realization",
    "build_mds_flow",
    "build_mm_flow",
    "enumerate_realizations",
    "exact_mds",
    "exact_mm",
    "extract_bipartite_mds",
    "extract_bipartite_mm",
    "flip",
    "format_sequence",
    "havel_hakimi_realize",
    "invert_matching",
    "is_graphic",
    "max_flow",
    "mds_feasible",
    "mds_systems_hold",
    "mds_value",
    "mm_feasible",
    "mm_value",
    "oracle_mds",
    "oracle_mm",
    "parse_sequence",
    "realize_mds",
    "realize_mm",
    "round_bipartite_mds",
    "round_bipartite_mm",
    "verify_dominating",
    "verify_matching",
]
