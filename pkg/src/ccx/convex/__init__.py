from .functionals import Functional, SublinearFunc
from .core import core_of, gauge_eval, is_absorbing, is_nonconstant_on, lin_of, sublevel_open
from .normal_cone import NotAMember, is_normal, normal_cone
from .separation import Inseparable, SeparationResult, properly_separate, separate_point
from .hahn_banach import check_domination, hahn_banach_extend, hahn_banach_via_separation
