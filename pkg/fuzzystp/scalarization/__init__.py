# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from fuzzystp.scalarization.fuzzy_programming import memberships, satisfaction, solve_fuzzy_programming
from fuzzystp.scalarization.global_criterion import (
	NORMALIZATIONS,
	global_criterion_value,
	solve_global_criterion,
)
from fuzzystp.scalarization.lexicographic import OBJECTIVES, payoff_table, solve_lexicographic, solve_single
from fuzzystp.scalarization.methods import (
	MethodOutcome,
	MethodRegistry,
	MethodRequest,
	get_method,
	register_method,
)
from fuzzystp.scalarization.results import (
	FuzzyProgrammingResult,
	GlobalCriterionResult,
	ParetoPoint,
	PayoffTable,
	SolveStats,
)
from fuzzystp.scalarization.weighted_sum import (
	evenly_spaced_weights,
	nondominated_filter,
	random_weights,
	weighted_sum_front,
)

__all__ = [
	"NORMALIZATIONS",
	"OBJECTIVES",
	"FuzzyProgrammingResult",
	"GlobalCriterionResult",
	"MethodOutcome",
	"MethodRegistry",
	"MethodRequest",
	"ParetoPoint",
	"PayoffTable",
	"SolveStats",
	"evenly_spaced_weights",
	"get_method",
	"global_criterion_value",
	"memberships",
	"nondominated_filter",
	"payoff_table",
	"random_weights",
	"register_method",
	"satisfaction",
	"solve_fuzzy_programming",
	"solve_global_criterion",
	"solve_lexicographic",
	"solve_single",
	"weighted_sum_front",
]
