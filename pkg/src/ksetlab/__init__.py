"""
ksetlab - k-sets, dual line arrangements, k-levels and concave chains in exact rational
arithmetic, with a verifier for every inequality of the O(n k^{1/3}) k-set bound
"""

from .geometry import Line, Point, Segment, dualize_line, dualize_point
from .ksets import Instance, Side, count_directed_ksets, enumerate_directed_ksets
from .arrangement import build_arrangement, extract_k_level, level_profile
from .chains import decompose_chains
from .graph import build_graph, crossing_number
from .instances import generate_instance, parse_instance, write_instance
from .verifier import Report, SweepSummary, sweep, verify_instance
from .cli import cli, run_cli

__version__ = "0.1.0"
__all__ = [
    "Line", "Point", "Segment", "dualize_line", "dualize_point",
    "Instance", "Side", "count_directed_ksets", "enumerate_directed_ksets",
    "build_arrangement", "extract_k_level", "level_profile",
    "decompose_chains", "build_graph", "crossing_number",
    "generate_instance", "parse_instance", "write_instance",
    "Report", "SweepSummary", "sweep", "verify_instance",
    "cli", "run_cli",
]
