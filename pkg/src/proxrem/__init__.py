"""Exact proximity and remoteness bounds for graphs with given minimum degree."""

from .audit import AuditReport, audit, check_propositions
from .bounds import CATALOG
from .constructions import (chain_graph, layered_join, palindrome_graph, polarity_graph,
                            pruned_polarity_graph)
from .families import ConstraintFamily, check_family, satisfies
from .graph import (DistanceTable, Graph, parse_edge_list, proximity, read_edge_list,
                    remoteness)
from .search import maximize_g, shift_local_opt
from .sequences import construct_w, construct_x, construct_y, construct_z, delta_star, g

__version__ = "0.1.0"
