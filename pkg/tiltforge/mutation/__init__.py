from .euler import (make_collection, is_exceptional, is_levelled, left_mutate, right_mutate,
                    left_class, right_class, restrict, collection_to_dict, pairing)
from .levelled import (levelled_mutate_right, levelled_mutate_left, left_dual, right_dual, dual_order,
                       projective_collection, shifted_simples_collection)
from .coxeter import coxeter_check, inverse_serre
