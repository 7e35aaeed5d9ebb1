"""1234-avoiding permutations and admissible pairs of Dyck paths."""

from .bijection import PathPair, is_admissible, lambda_map, mu_map, nu, nu_inv
from .dyckpath import AscentDescentCode, DyckPath, from_code, parse_path, to_code
from .involution import kreweras, lprime
from .permutation import Permutation
from .poset import leq

__version__ = "0.1.0"
