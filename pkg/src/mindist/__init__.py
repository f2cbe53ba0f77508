"""Minimum distance functions of graded ideals and Reed-Muller-type codes.

A small exact-arithmetic stack: finite fields GF(p^e), multivariate
polynomials with Groebner bases over them, Hilbert series of monomial
ideals, vanishing ideals of finite projective point sets, evaluation codes
with three independent minimum-distance computations, the footprint lower
bound, and the closed forms for projective nested cartesian configurations.
"""

from .gf import FieldElement, FieldSpec, field_make, subfield_elements
from .mpoly import (BlockElim, BudgetExceededError, GrevLex, GroebnerBasis,
                    Ideal, Lex, Monomial, MonomialOrder, ParseError,
                    Polynomial, buchberger, colon_ideal, divide, eliminate,
                    ideal_equal, intersect_ideals, is_zero_divisor,
                    normal_form, order_compare, parse_polynomial,
                    spolynomial)
from .hilbert import (HilbertData, MonomialIdeal, dim_degree, footprint_slice,
                      hilbert_function, hilbert_numerator, regularity_dim0,
                      regularity_points, series_coefficient)
from .points import (ParameterizedSpec, PointSet, ProjectivePoint,
                     count_zeros, enumerate_space, evaluate, normalize,
                     parameterized_points, point_ideal,
                     vanishing_ideal_parameterized, vanishing_ideal_points)
from .codes import (DEFAULT_BUDGET, DistanceReport, EvaluationCode,
                    build_code, delta_colon, delta_graded, delta_upper_subset,
                    delta_via_zeros, field_matrix_rank, fp_bound,
                    min_distance_bruteforce, params_table)
from .cartesian import (CartesianSpec, KEllDecomposition, LIdeal,
                        NestedReport, closed_degree, closed_reg,
                        conjecture_delta, deg_l_plus_monomial, ineq_oracle,
                        is_subfield_chain, k_ell_split, l_ideal,
                        max_zeros_t1_slice, t1_slice_closed_form,
                        validate_nested, zeros_upper_bound)

__version__ = "0.1.0"
