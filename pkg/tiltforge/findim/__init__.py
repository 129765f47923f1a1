from .algebra import build_algebra, dimension, cartan_matrix, table_summary, is_associative, grading_of
from .radical import radical_power_slices, radical_dimensions, nilpotency_index
from .truncation import truncate
