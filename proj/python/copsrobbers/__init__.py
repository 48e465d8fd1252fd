"""Cops and robbers on the quadrant graph and on finite graphs."""

import json as _json

from ._core import (
    CoordinateOverflow,
    Graph,
    GraphParseError,
    IllegalMoveError,
    StrategyError,
    cycle_graph,
    dismantling_order,
    graph_hash,
    induced_subgraph,
    load_graph_source,
    neighbors_within,
    paper_construction_order,
    paper_cop_move,
    paper_robber_move,
    parse_graph,
    path_graph,
    predicted_bound,
    quadrant_adjacent,
    random_connected_graph,
    run_claims,
    serialize_graph,
    solve_eta,
    solve_eta_naive,
    square_truncation,
    triangular_truncation,
    verify_construction_order,
)
from ._core import play_json as _play_json


def play(cop, robber, cop_start, robber_start, convention="robberfirst", move_cap=None, seed=1, graph=None):
    """Run one game and return its transcript as a dict."""
    return _json.loads(_play_json(cop, robber, tuple(cop_start), tuple(robber_start), convention, move_cap, seed, graph))


__all__ = [name for name in dir() if not name.startswith("_")]
