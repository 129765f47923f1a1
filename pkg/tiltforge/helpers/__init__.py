from .arguments import get_list_as_string, get_int_list, get_vertex_list, get_degree_specs, get_positive_int
from .vectors import add_scaled, to_dense, to_sparse
from . import linalg
