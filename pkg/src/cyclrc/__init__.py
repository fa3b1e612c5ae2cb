"""Cyclic locally recoverable codes over finite fields."""

from .bounds import (KqTable, kq_upper, krawtchouk, lp_bound, shortening_bound, singleton_like)
from .cyclic import (CyclicCode, DefiningSet, bch_bound, code_from_zeros, complete_defining_set,
                     cyclotomic_cosets, irreducible_code, subfield_subcode, trace_code)
from .gf import Field, FieldElement, FieldError, SubfieldMap, field_create, field_of_order, root_of_unity, subfield_map
from .linalg import BudgetExceeded, LinearCode, dual, min_weight, rref, weight_distribution
from .lrc import (LocalityReport, LrcParams, RecoveringSet, TraceRecoverySubspace, binary_simplex_locality,
                  coset_locality_certificate, irreducible_distance_bound, irreducible_locality_bound,
                  locality_exact, multiple_recovery_partitions, optimal_cyclic_lrc, rs_like_construct,
                  support_intersection, ternary_two_weight_recovery, trace_recovery_subspace)

__version__ = "0.1.0"
