"""Exact verification of the Lewis Carroll determinant identity, its
forest-pair counterpart, and the red-hot-potato bijection between them.

All arithmetic is exact (arbitrary-precision rationals); all graph
enumeration is exhaustive at desk scale.
"""

from .bijection import (DEFAULT_CAP, ForestIdentityReport, InvolutionSuiteReport,
                        RhpStep, RhpTrace, TheoryViolation, red_hot_potato,
                        red_hot_potato_inverse, trace_to_dots, trace_to_json,
                        verify_forest_identity, verify_involution_suite)
from .enumeration import (RootSpec, count_forests, enumerate_forests, enumerate_S0,
                          enumerate_S1_signed, enumerate_S2_signed, enumerate_S3,
                          forest_weight_sum, pair_weight)
from .graphs import (BLACK, INVALID, RED, S0, S1, S2, S3, ColoredFunctionalGraph,
                     Cycle, GraphPair, PairClass, graph_from_json, graph_to_dot,
                     graph_to_json, pair_from_json, pair_to_dot, pair_to_json)
from .involutions import (CrabwalkStep, CrabwalkTrace, InvariantViolation,
                          SelectedCycle, TaggedPair, crabwalk, phi0, phi1, phi2,
                          select_cycle, tagged)
from .matrices import (RationalMatrix, WeightedDigraph, det_bareiss, det_cofactor,
                       det_condensation, laplacian, lewis_carroll_residual,
                       lewis_carroll_terms, matrix_from_json, matrix_to_json,
                       pad_to_laplacian, to_rational, weights_from_json,
                       weights_to_json)

__version__ = "0.1.0"
