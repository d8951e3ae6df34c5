"""Exact matroid depth parameters, matrix sparsification and Graver bases."""

__version__ = "0.1.0"

from .depth import (DecompositionTree, DepthReport, TreeNode, cdd_depth, contraction_depth, cstar_depth,
                    cstar_depth_by_trees, csdd_depth, deletion_depth, principal_cstar_tree,
                    verify_cstar_tree, verify_deletion_tree)
from .errors import GraverForgeError
from .estimators import DualSparsifier, IncidenceSparsifier, PrimalSparsifier, check_matrix
from .fields import GF, QQ, PrimeField, parse_field
from .forge import (balanced_independent_set, gn_family, hardness_instance, matroid_from_graph,
                    quotient_graph)
from .graphs import (Graph, RootedForest, dual_graph, forest_certifies, incidence_graph, primal_graph,
                     td, tree_depth)
from .graver import CircuitSet, GraverSet, graver_basis, matrix_circuits
from .linalg import (RatMatrix, entry_complexity, kernel_basis, parse_rmx, random_row_ops, rank,
                     reduce_basis_to_identity, row_space_equal)
from .matroid import LinearMatroid, matroid_equal, matroid_of
from .precondition import (PreconditionOutcome, alg_tdD, alg_tdI, alg_tdP, dual_sparsify_circuit,
                           dual_sparsify_from_tree, incidence_sparsify, kappa0_of, primal_sparsify)
