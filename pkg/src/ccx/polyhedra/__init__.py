from .sets import Constraint, HPolyhedron, Openness, VPolyhedron
from .cone import Cone
from .queries import (feasible_point, implicit_equalities, interior_point, is_empty, max_margin,
                      remove_redundant, strictly_feasible, support)
from .conversion import convert_representation, double_description, h_to_v, includes, v_to_h
from .elimination import eliminate_variables
from .operations import (affine_image, contains_point, minkowski_sum, product, same_set, same_vset,
                         sample_points, set_difference, set_includes, set_sum, to_hpolyhedron,
                         to_vpolyhedron)
