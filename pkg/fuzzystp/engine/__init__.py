# Copyright (c) 2026, Shaqwieer and contributors
# For license information, please see license.txt

from fuzzystp.engine.branch_bound import solve_milp
from fuzzystp.engine.oracle import brute_force_oracle
from fuzzystp.engine.program import Constraint, LinearProgram, Sense, SolveResult, Status
from fuzzystp.engine.simplex import solve_lp

__all__ = [
	"Constraint",
	"LinearProgram",
	"Sense",
	"SolveResult",
	"Status",
	"brute_force_oracle",
	"solve_lp",
	"solve_milp",
]
