"""
Exact rational convex calculus on polyhedral sets, set-valued maps and extended-real functions.
"""
from pathlib import Path
from pymodaq.utils.logger import set_logger  # to be imported by other modules.

from .utils import Config, FM_BUDGET_ENV, fm_budget
config = Config()

with open(str(Path(__file__).parent.joinpath('resources', 'VERSION')), 'r') as fvers:
    __version__ = fvers.read().strip()
