"""Upward and bitonic L-drawings of planar st-graphs."""

from ._core import (
    DirectedGraph,
    GraphError,
    ParseError,
    check_bitonic,
    check_monotone,
    check_ports,
    draw,
    min_modality,
    parse_graph,
    reduce_hv,
    render_svg,
    run_cli,
    write_graph,
)

__all__ = [
    "DirectedGraph",
    "GraphError",
    "ParseError",
    "check_bitonic",
    "check_monotone",
    "check_ports",
    "draw",
    "min_modality",
    "parse_graph",
    "reduce_hv",
    "render_svg",
    "run_cli",
    "write_graph",
]
