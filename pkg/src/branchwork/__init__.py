"""Exact branching from GL_n to S_n, GL_2 plethysm, and two counting applications."""

from .branching import BranchingTable, branch, branch_one, contains_all, one_row_rule
from .characters import CharacterTable, character_table, mn_character
from .errors import ConsistencyError, TheoremViolation
from .kernels import BACKEND
from .partitions import CycleType, Partition, partitions_of
from .plethysm import GL2Decomposition, plethysm_graded, plethysm_sym, verify_duality, verify_theorem
from .schur_eval import schur_at

__version__ = "0.1.0"
