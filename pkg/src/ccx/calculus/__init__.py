from .setvalued import (SetValuedMap, coderivative, coderivative_composition, domain_of, map_compose, map_sum,
                        sum_decompositions, value_at)
from .functions import (PolyhedralFunction, Subdifferential, adjoint_image, evaluate, func_sum, precompose_linear,
                        subdifferential)
from .marginal import (argmin_set, marginal_function, marginal_subdifferential, marginal_value,
                       qualification_point)
from .intersection import IntersectionRule, intersection_rule, normal_cone_sum, shared_core_point
