"""Exact computations of test ideals, F-purity invariants and Frobenius actions
on graded local cohomology of hypersurfaces over prime fields."""

from .ffpoly import Poly, PrimeField, PolySyntaxError, parse_poly, poly_mul, poly_pow
from .gradedla import (Ideal, SubspaceBasis, colon_space, frobenius_power_ideal,
                       ideal_degree_piece, membership, monomials_of_degree, quotient_dim)
from .frobenius import (FrobeniusDecomposition, fedder_not_f_pure_at_m,
                        non_f_pure_ideal_estimate, peth_root_decompose, test_ideal,
                        verify_test_ideal_definition)
from .fpurity import (INFINITE, DeltaReport, DeltaStatus, IsolatedVerdict, MeReport,
                      bs_colon_formula, ci_hilbert_series, compute_delta, compute_me,
                      corollary_threshold, e0, ell_min, injectivity_bound,
                      isolated_non_f_pure_point)
from .localcoh import (LocalCohElement, frobenius_kernel_dim_colon,
                       frobenius_kernel_dim_direct, frobenius_twisted_matrix, h_top_basis,
                       hn_piece_dim, multiply_by_poly, witness_non_injectivity)
from .limits import ResourceLimitError, resource_limits

__version__ = "0.1.0"
