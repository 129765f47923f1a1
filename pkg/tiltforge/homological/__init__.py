from .levels import detect_levels, is_levelled, quiver_graph
from .resolution import min_proj_resolution, differentials_compose_to_zero, format_resolution, minimal_generators
from .koszul import ext_table, koszul_bound, koszul_check_levelled
from .duality import quadratic_dual
