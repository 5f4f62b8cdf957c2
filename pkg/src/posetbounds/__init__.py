"""Linear-extension counts and their chain/antichain factorial bounds."""

from .bounds import BoundsReport, check_bounds, lower_bound, upper_bound
from .errors import ContractError, CycleError, InternalError, PosetError, RangeError, SizeError
from .gkf import antichain_params, chain_params, order_maximal_antichain, verify_ordering
from .linext import count_extensions, enumerate_extensions, greedy_inject, greedy_recover
from .partition import Partition, conjugate
from .poset import Poset, from_covers, generate_all, random_poset

__version__ = "0.1.0"
