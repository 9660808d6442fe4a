# src\core\__init__.py
# Tree metric data model shared by the solver, the oracle and the commands.

from .errors import SolverError
from .tree import WeightedTree, validate_tree, tree_distance, all_distances_from, diameter
from .multiset import VertexMultiset, Partition, validate_multiset, check_partition, partition_from_side_a
from .normalize import NormalizedInstance, normalize
from .evaluate import cut_value_pairwise, cut_value_edge_decomposition
from .line import line_to_tree, threshold_cut, threshold_partitions
