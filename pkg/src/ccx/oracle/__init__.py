from .generators import (InstanceKind, InstanceSpec, flatten_through, generate_instance, halfspace, make_rng,
                         random_center, random_cut, random_function, random_int, random_map, random_matrix,
                         random_point, random_rational, random_set, random_sets_shared_core, random_sublinear,
                         random_vector, split_through)
from .checks import (bruteforce_maximum, check_core_definitional, check_subgradient_definitional,
                     enumerate_vertices_bruteforce)
