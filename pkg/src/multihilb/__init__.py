"""Exact multigraded Hilbert functions of points in products of projective spaces."""

from .combinat import Partition, conjugate, cumulative_sum, delta_tuple, first_difference
from .errors import DomainError, InconsistencyError, MalformedInputError, MultihilbError
from .exactalg import ExactMatrix, Mod, rank
from .geometry import (PointSet, alpha_beta, gen_depth_example, gen_grid, gen_random,
                       normalize, parse_pointset, format_pointset, projection)
from .hilbert import (HilbertTable, axis_sequence, dim_component, evaluation_matrix, extend,
                      hilbert_table, hilbert_value)
from .staircase import (Staircase, complement, indicator_of, is_artinian,
                        random_artinian_staircase, validate_indicator)
from .lifting import eval_lifted_monomial, lift_staircase, lifted_hilbert_expected
from .acm2 import (AcmVerdict, BettiData, Border, betti, border, corners_vertices,
                   hilbert_from_alpha, hilbert_from_resolution, is_acm, peel, row_column_sums)

__version__ = "0.1.0"
