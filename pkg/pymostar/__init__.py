from .graph import GraphError, SelfLoopError, VertexOutOfRangeError, EmptyGraphError, DisconnectedError, Graph, \
    DistanceMatrix, build, is_connected, all_pairs_distances
from .edgelist import EdgeListError, parse_edge_list, format_edge_list, read_edge_list, write_edge_list
from .families import BadArityError, BadParamError, Family, FamilySpec, parse_spec, generate
from .operators import Operation
from .invariants import EdgeContribution, edge_contributions, mostar, albertson_irregularity, total_irregularity
from .formulas import FormulaError, UnknownClaimError, ClaimKind, Suite, Claim, CLAIMS, get_claim, FormulaValue, \
    FactorStats, factor_stats
