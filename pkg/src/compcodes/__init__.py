"""Prefix-free and fix-free codes with prescribed codeword compositions."""

from .approx import ApproxResult, BudgetParams, approx_optimal, build_code_for_budget, total_cost
from .code_model import (Code, Composition, CompositionMultiset, CostModel, Distribution,
                         InvalidInputError, average_cost, codeword_cost, composition_of,
                         is_distinct_code, is_fix_free, is_prefix_free, is_suffix_free,
                         is_uniquely_decodable)
from .counting import (PartialWord, binomial, merge_patterns, pattern_count,
                       prefix_extension_count, sandwich_count, suffix_extension_count,
                       word_count)
from .feasibility import FeasibilityVerdict, InequalityCheck, check_prefix_feasibility
from .fixfree_builder import available_count_fixfree, build_fix_free
from .prefix_builder import (Infeasible, NotApplicable, Success, available_count,
                             build_prefix_free)

__version__ = "0.1.0"
