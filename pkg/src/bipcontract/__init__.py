"""Bipartite Contraction: can k edge contractions make a graph bipartite?"""

from .graph import Graph, contract, is_bipartite, m_rank, parse_graph, rank
from .pipeline import BcResult, Witness, solve_bc, verify_witness

__all__ = [
    "Graph",
    "BcResult",
    "Witness",
    "contract",
    "is_bipartite",
    "m_rank",
    "parse_graph",
    "rank",
    "solve_bc",
    "verify_witness",
]
