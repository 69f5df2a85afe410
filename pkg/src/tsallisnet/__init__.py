"""Tsallis (nonextensive) and Shannon degree entropy of complex networks."""

__version__ = "0.1.0"

from .entropy import (
    EntropyPoint,
    ProbabilityVector,
    SweepResult,
    SweepSource,
    network_tsallis_entropy,
    normalized_degrees,
    q_grid,
    q_log,
    shannon_entropy,
    sweep,
    tsallis_entropy,
    tsallis_entropy_qlog_form,
)
from .generators import (
    EXAMPLE_DEGREES,
    example_network,
    gen_barabasi_albert,
    gen_erdos_renyi,
    realize_degree_sequence,
)
from .graph import Graph, build_graph, degree, degree_sequence, total_degree
from .io import (
    ParseReport,
    parse_edge_list,
    parse_pajek,
    read_graph,
    write_edge_list,
    write_pajek,
    write_sweep_csv,
    write_sweep_json,
)
